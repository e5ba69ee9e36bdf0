#pragma once

#include <compare>
#include <string>
#include <vector>

namespace copart {

/// An integer partition as a weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    /// Sorts the parts into decreasing order; rejects parts < 1.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    bool has_distinct_parts() const;

    /// k copies of the part `value`.
    static Partition rectangle(int count, int value);

    /// "{5,2^2}" style, or the empty-set symbol for the empty partition.
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

}  // namespace copart
