#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace copart {

/// Prime factorization n = prod p^e, primes strictly increasing.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, int>> factors;
};

/// Deterministic trial division. Intended for n up to about 1e12.
Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Inverse of a modulo modulus via the extended Euclidean algorithm, normalized to
/// [0, modulus). Throws if gcd(a, modulus) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t modulus);

enum class QuadraticForm {
    two_squares,       // A^2 + B^2
    x2_plus_3y2,       // A^2 + 3B^2
};

/// True iff every prime = 3 mod 4 divides N to an even power.
bool rep_pred_two_squares(std::uint64_t N);

/// True iff every prime = 2 mod 3 divides N to an even power. This is the representability
/// criterion for A^2 + 3B^2 on N = 1 mod 6.
bool rep_pred_x2_3y2(std::uint64_t N);

/// Exhaustive search for N = A^2 + c B^2 with A, B >= 0.
bool brute_rep(std::uint64_t N, QuadraticForm form);

/// For N = 1 mod 6: whether [N = A^2 + 3B^2 has a solution] agrees with
/// [4N = (6J+1)^2 + 3(6K+1)^2 has a solution], both sides by brute search.
bool lemma_form_equivalence_check(std::uint64_t N);

/// Whether 4N = X^2 + 3Y^2 with X, Y both congruent to 1 mod 6 (signs free).
bool brute_rep_shifted_form(std::uint64_t N);

}  // namespace copart
