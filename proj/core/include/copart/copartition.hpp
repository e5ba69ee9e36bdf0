#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "copart/params.hpp"
#include "copart/partition.hpp"

namespace copart {

/// An (a,b,m)-copartition (gamma, rho, sigma).
///
/// gamma (the ground) has parts >= a and congruent to a mod m, sigma (the sky) has parts
/// >= b and congruent to b mod m, and rho has one part per sky part, each equal to
/// m times the number of ground parts. rho is stored explicitly and checked on
/// construction.
class Copartition {
public:
    Copartition(CpParams params, Partition gamma, Partition rho, Partition sigma);

    /// Builds the copartition with the forced rho.
    static Copartition from_ground_and_sky(CpParams params, Partition gamma, Partition sigma);
    static Copartition empty(CpParams params);

    const CpParams& params() const { return params_; }
    const Partition& gamma() const { return gamma_; }
    const Partition& rho() const { return rho_; }
    const Partition& sigma() const { return sigma_; }

    int size() const { return gamma_.size() + rho_.size() + sigma_.size(); }

    std::string to_string() const;

    friend bool operator==(const Copartition&, const Copartition&) = default;

private:
    CpParams params_;
    Partition gamma_;
    Partition rho_;
    Partition sigma_;
};

/// Every (a,b,m)-copartition of size n, in canonical order: decreasing lexicographic on
/// gamma, then on sigma.
std::vector<Copartition> enumerate(const CpParams& params, int n);

/// cp_{a,b,m}(n) by exhaustive enumeration.
std::uint64_t count(const CpParams& params, int n);

/// Reflection of the diagram: (gamma, rho, sigma) under (a,b,m) becomes
/// (sigma, rho', gamma) under (b,a,m).
Copartition conjugate(const Copartition& cp);

bool is_self_conjugate(const Copartition& cp);

/// Sylvester-style hook decomposition of a self-conjugate copartition into distinct parts
/// congruent to m + 2a mod 2m.
Partition hooks_to_distinct_parts(const Copartition& cp);

/// Inverse of hooks_to_distinct_parts.
Copartition distinct_parts_to_hooks(const Partition& p, int a, int m);

/// Number of ground parts minus number of sky parts.
int crank(const Copartition& cp);

/// Histogram of crank mod `modulus` over all copartitions of size n. Residues with no
/// copartition are absent.
std::map<int, std::uint64_t> crank_distribution(const CpParams& params, int n, int modulus);

}  // namespace copart
