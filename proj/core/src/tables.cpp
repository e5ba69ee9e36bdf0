#include "copart/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace copart {

namespace {

TableSpec make_table1()
{
    return TableSpec{1,
                     {1000, 3000, 5000, 7000, 9000, 11000, 13000, 15000},
                     {
                         {CpParams(3, 3, 4), {765, 752, 753, 749, 748, 749, 750, 749}, "", ""},
                         {CpParams(1, 1, 6), {871, 875, 874, 875, 873, 874, 875, 875}, "", ""},
                     }};
}

TableSpec make_table2()
{
    const std::vector<int> first = {535, 536, 549, 557, 568, 576};
    return TableSpec{2,
                     {1000, 2000, 4000, 8000, 16000, 32000},
                     {
                         {CpParams(1, 13, 14), first, "cp_{1,11,14}", "first-column"},
                         {CpParams(1, 11, 14), first, "cp_{1,11,14}", "first-column"},
                         {CpParams(3, 11, 14), {543, 545, 552, 553, 564, 572}, "", ""},
                         {CpParams(5, 9, 14), {530, 536, 543, 554, 565, 573}, "", ""},
                     }};
}

TableSpec make_table3()
{
    const std::vector<int> ms = {3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30, 32};
    // Rows are checkpoints 1000, 2000, 4000, 8000, 16000, 32000; columns follow `ms`.
    const int rows[6][19] = {
        {504, 602, 503, 581, 500, 632, 519, 553, 498, 535, 480, 543, 523, 540, 489, 465, 490, 484, 488},
        {495, 630, 511, 599, 505, 657, 500, 577, 495, 536, 488, 550, 502, 544, 508, 507, 498, 495, 501},
        {495, 656, 509, 623, 500, 681, 505, 593, 499, 549, 497, 547, 499, 550, 503, 517, 502, 503, 503},
        {506, 681, 509, 641, 493, 700, 497, 608, 494, 557, 501, 551, 494, 566, 496, 513, 502, 507, 504},
        {503, 701, 508, 653, 496, 719, 497, 625, 499, 568, 504, 554, 496, 566, 499, 509, 501, 509, 502},
        {507, 720, 501, 671, 496, 736, 502, 638, 498, 576, 504, 556, 498, 575, 501, 505, 500, 506, 500},
    };
    TableSpec t{3, {1000, 2000, 4000, 8000, 16000, 32000}, {}};
    for (std::size_t j = 0; j < ms.size(); ++j) {
        TableColumn col{CpParams(1, ms[j] - 1, ms[j]), {}, "", ""};
        for (const auto& row : rows) {
            col.printed.push_back(row[j]);
        }
        t.columns.push_back(std::move(col));
    }
    return t;
}

}  // namespace

const TableSpec& table_spec(int id)
{
    static const TableSpec t1 = make_table1();
    static const TableSpec t2 = make_table2();
    static const TableSpec t3 = make_table3();
    switch (id) {
    case 1:
        return t1;
    case 2:
        return t2;
    case 3:
        return t3;
    default:
        throw std::invalid_argument("no table " + std::to_string(id) + " (expected 1, 2 or 3)");
    }
}

int table_extent(int id)
{
    return table_spec(id).checkpoints.back();
}

const char* to_string(CellStatus s)
{
    switch (s) {
    case CellStatus::match:
        return "match";
    case CellStatus::rounding_note:
        return "rounding-note";
    case CellStatus::mismatch:
        return "mismatch";
    }
    return "unknown";
}

CellStatus classify_cell(int computed, int printed)
{
    const int diff = std::abs(computed - printed);
    if (diff == 0) {
        return CellStatus::match;
    }
    return diff == 1 ? CellStatus::rounding_note : CellStatus::mismatch;
}

bool TableComparison::all_match_within_note() const
{
    return std::all_of(cells.begin(), cells.end(), [](const CellComparison& c) {
        return !c.counted || c.status != CellStatus::mismatch;
    });
}

TableComparison compare_table(int id, const std::vector<DensityReport>& reports)
{
    const auto& spec = table_spec(id);
    if (reports.size() != spec.columns.size()) {
        throw std::invalid_argument("expected one report per table column");
    }
    TableComparison out;
    // Reading groups: which members reproduce the printed values.
    std::map<std::string, std::vector<std::string>> fitting;
    std::map<std::string, std::vector<std::size_t>> members;

    for (std::size_t j = 0; j < spec.columns.size(); ++j) {
        const auto& col = spec.columns[j];
        const auto& rep = reports[j];
        if (rep.params != col.params || rep.checkpoints != spec.checkpoints) {
            throw std::invalid_argument("report does not match table column " + col.params.label());
        }
        bool fits = true;
        for (std::size_t i = 0; i < col.printed.size(); ++i) {
            const int computed = rep.thousandths(i);
            const auto status = classify_cell(computed, col.printed[i]);
            fits = fits && status != CellStatus::mismatch;
            out.cells.push_back({spec.checkpoints[i], col.params.label(), computed, col.printed[i],
                                 rep.exact(i), status, true});
        }
        if (!col.reading_group.empty()) {
            members[col.reading_group].push_back(j);
            if (fits) {
                fitting[col.reading_group].push_back(col.params.label());
            }
        }
    }

    for (const auto& [group, idx] : members) {
        const auto& winners = fitting[group];
        if (winners.size() == 1) {
            out.resolved_header = winners.front();
        }
        // Cells of readings that were not selected are reported but not held against the table.
        // With no unique winner every reading stays counted, so the table fails.
        for (auto& cell : out.cells) {
            const bool in_group = std::any_of(idx.begin(), idx.end(), [&](std::size_t j) {
                return spec.columns[j].params.label() == cell.column;
            });
            if (in_group && winners.size() == 1 && cell.column != winners.front()) {
                cell.counted = false;
            }
        }
    }
    return out;
}

}  // namespace copart
