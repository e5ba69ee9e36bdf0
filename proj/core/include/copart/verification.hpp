#pragma once

#include "copart/check_result.hpp"
#include "copart/parity_lab.hpp"

namespace copart {

// Finite sweeps that combine the enumerator, the series and the quadratic-form predicates.

/// Enumeration count equals series coefficient for a in [1,amax], b in [1,bmax],
/// m in [1,mmax], n in [0,nmax].
CheckResult verify_oracle(int amax, int bmax, int mmax, int nmax);

/// Self-conjugate (a,a,m)-copartitions of each size n <= nmax are counted by
/// (-q^{m+2a};q^{2m}), and the hook map round-trips on each of them.
CheckResult verify_self_conjugate(int a, int m, int nmax);

/// Every n <= N carrying the quadratic-form guarantee has an even value.
CheckResult verify_guarantees(ProgressionTag family, int N);

/// Every residue of progression_family(family, p) passes verify_even_progression to N.
CheckResult verify_progressions(ProgressionTag family, std::int64_t p, int N);

/// lemma_form_equivalence_check on every N = 1 mod 6 up to Nmax.
CheckResult verify_lemma13(std::int64_t Nmax);

/// Factorization criteria agree with exhaustive search on N = 5 mod 24 (sum of two squares)
/// and N = 1 mod 6 (A^2 + 3B^2), N <= Nmax.
CheckResult verify_predicates_vs_brute(std::int64_t Nmax);

}  // namespace copart
