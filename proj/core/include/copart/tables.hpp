#pragma once

#include <optional>
#include <string>
#include <vector>

#include "copart/parity_lab.hpp"

namespace copart {

/// One column of a published density table.
struct TableColumn {
    CpParams params;
    /// Published values in thousandths, one per checkpoint. Empty for computed-only columns.
    std::vector<int> printed;
    /// Header as printed, when it differs from params.label().
    std::string printed_header;
    /// Non-empty when several columns are competing readings of one printed column.
    std::string reading_group;
};

struct TableSpec {
    int id = 0;
    std::vector<int> checkpoints;
    std::vector<TableColumn> columns;
};

/// Tables 1-3 of the published parity data, with their printed values. Table 2 carries both
/// readings of its first header (cp_{1,13,14} and cp_{1,11,14}) against the same printed
/// column.
const TableSpec& table_spec(int id);

/// Highest exponent any column of table `id` needs.
int table_extent(int id);

enum class CellStatus { match, rounding_note, mismatch };
const char* to_string(CellStatus s);

struct CellComparison {
    int n;
    std::string column;
    int computed;  // thousandths
    int printed;   // thousandths
    std::string exact;
    CellStatus status;
    /// False for cells of a competing reading that was not selected.
    bool counted = true;
};

/// Matches exactly, differs by one unit in the third decimal (reported as a rounding note),
/// or mismatches.
CellStatus classify_cell(int computed, int printed);

struct TableComparison {
    std::vector<CellComparison> cells;
    /// For each reading group, the label of the one column reproducing the printed values
    /// (within the rounding note), or nullopt when zero or several do.
    std::optional<std::string> resolved_header;

    bool all_match_within_note() const;
};

/// Compare regenerated reports (one per column, same order as table_spec(id).columns)
/// against the printed values.
TableComparison compare_table(int id, const std::vector<DensityReport>& reports);

}  // namespace copart
