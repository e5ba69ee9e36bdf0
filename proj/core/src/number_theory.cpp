#include "copart/number_theory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace copart {

namespace {

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

bool is_square(std::uint64_t n)
{
    const auto r = isqrt(n);
    return r * r == n;
}

/// True iff no prime p with p % mod == residue divides n to an odd power.
bool odd_exponent_free(std::uint64_t n, std::uint64_t mod, std::uint64_t residue)
{
    for (const auto& [p, e] : factorize(n).factors) {
        if (p % mod == residue && e % 2 == 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

Factorization factorize(std::uint64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("factorize needs n >= 1");
    }
    Factorization f{n, {}};
    auto take = [&](std::uint64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            f.factors.emplace_back(p, e);
        }
    };
    take(2);
    take(3);
    for (std::uint64_t p = 5; p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) {
        f.factors.emplace_back(n, 1);
    }
    return f;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    const auto f = factorize(n);
    return f.factors.size() == 1 && f.factors.front().second == 1;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t modulus)
{
    if (modulus < 2) {
        throw std::invalid_argument("mod_inverse: modulus must be > 1");
    }
    std::int64_t old_r = ((a % modulus) + modulus) % modulus;
    std::int64_t r = modulus;
    std::int64_t old_s = 1;
    std::int64_t s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) {
        throw std::invalid_argument(std::to_string(a) + " has no inverse mod " +
                                    std::to_string(modulus));
    }
    return ((old_s % modulus) + modulus) % modulus;
}

bool rep_pred_two_squares(std::uint64_t N)
{
    return odd_exponent_free(N, 4, 3);
}

bool rep_pred_x2_3y2(std::uint64_t N)
{
    return odd_exponent_free(N, 3, 2);
}

bool brute_rep(std::uint64_t N, QuadraticForm form)
{
    const std::uint64_t c = form == QuadraticForm::two_squares ? 1 : 3;
    for (std::uint64_t B = 0; c * B * B <= N; ++B) {
        if (is_square(N - c * B * B)) {
            return true;
        }
    }
    return false;
}

bool brute_rep_shifted_form(std::uint64_t N)
{
    const std::uint64_t target = 4 * N;
    // X = 6J+1 ranges over integers congruent to 1 mod 6; |X| is then 1 or 5 mod 6.
    for (std::uint64_t Y = 1; 3 * Y * Y <= target; ++Y) {
        if (Y % 6 != 1 && Y % 6 != 5) {
            continue;
        }
        const std::uint64_t rest = target - 3 * Y * Y;
        const std::uint64_t X = isqrt(rest);
        if (X * X == rest && (X % 6 == 1 || X % 6 == 5)) {
            return true;
        }
    }
    return false;
}

bool lemma_form_equivalence_check(std::uint64_t N)
{
    if (N < 1 || N % 6 != 1) {
        throw std::invalid_argument("lemma check needs N = 1 mod 6, got " + std::to_string(N));
    }
    return brute_rep(N, QuadraticForm::x2_plus_3y2) == brute_rep_shifted_form(N);
}

}  // namespace copart
