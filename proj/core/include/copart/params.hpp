#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace copart {

/// Names the copartition family (a, b, m): ground parts are congruent to a,
/// sky parts to b, both modulo m. All three are positive; the constructor
/// rejects anything else.
class CpParams {
public:
    CpParams(int a, int b, int m) : a_(a), b_(b), m_(m)
    {
        if (a < 1 || b < 1 || m < 1) {
            throw std::invalid_argument("copartition parameters must satisfy a, b, m >= 1 (got " +
                                        std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(m) + ")");
        }
    }

    int a() const { return a_; }
    int b() const { return b_; }
    int m() const { return m_; }

    /// Parameters of the conjugate family.
    CpParams swapped() const { return CpParams{b_, a_, m_}; }

    std::string label() const
    {
        return "cp_" + std::to_string(a_) + "_" + std::to_string(b_) + "_" + std::to_string(m_);
    }

    friend auto operator<=>(const CpParams&, const CpParams&) = default;

private:
    int a_;
    int b_;
    int m_;
};

}  // namespace copart
