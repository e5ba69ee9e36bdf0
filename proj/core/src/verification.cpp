#include "copart/verification.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "copart/copartition.hpp"
#include "copart/number_theory.hpp"
#include "copart/series.hpp"

namespace copart {

CheckResult verify_oracle(int amax, int bmax, int mmax, int nmax)
{
    if (amax < 1 || bmax < 1 || mmax < 1 || nmax < 0) {
        throw std::invalid_argument("oracle grid needs amax, bmax, mmax >= 1 and nmax >= 0");
    }
    long long cells = 0;
    for (int a = 1; a <= amax; ++a) {
        for (int b = 1; b <= bmax; ++b) {
            for (int m = 1; m <= mmax; ++m) {
                const CpParams params(a, b, m);
                const auto series = cp_series(params, nmax);
                for (int n = 0; n <= nmax; ++n) {
                    const auto brute = count(params, n);
                    if (series[n] != brute) {
                        return CheckResult::failed(
                            n, params.label() + "(" + std::to_string(n) + "): enumeration " +
                                   std::to_string(brute) + " vs series " + series[n].str());
                    }
                    ++cells;
                }
            }
        }
    }
    return CheckResult::ok(std::to_string(cells) + " values agree");
}

CheckResult verify_self_conjugate(int a, int m, int nmax)
{
    const CpParams params(a, a, m);
    const auto series = scp_series(a, m, nmax);
    for (int n = 0; n <= nmax; ++n) {
        long long fixed = 0;
        for (const auto& cp : enumerate(params, n)) {
            if (!is_self_conjugate(cp)) {
                continue;
            }
            ++fixed;
            const auto hooks = hooks_to_distinct_parts(cp);
            if (hooks.size() != n || distinct_parts_to_hooks(hooks, a, m) != cp) {
                return CheckResult::failed(n, "hook bijection fails on " + cp.to_string());
            }
        }
        if (series[n] != fixed) {
            return CheckResult::failed(n, "size " + std::to_string(n) + ": " + std::to_string(fixed) +
                                              " self-conjugate vs coefficient " + series[n].str());
        }
    }
    return CheckResult::ok();
}

CheckResult verify_guarantees(ProgressionTag family, int N)
{
    const auto bits = cp_parity(family_params(family), N);
    long long guaranteed = 0;
    for (int n = 0; n <= N; ++n) {
        const bool g = family == ProgressionTag::cp314 ? even_guarantee_314(n) : even_guarantee_516(n);
        if (!g) {
            continue;
        }
        ++guaranteed;
        if (bits[n]) {
            return CheckResult::failed(n, "guaranteed even but odd at n=" + std::to_string(n));
        }
    }
    return CheckResult::ok(std::to_string(guaranteed) + " guaranteed values even");
}

CheckResult verify_progressions(ProgressionTag family, std::int64_t p, int N)
{
    const auto fam = progression_family(family, p);
    const auto bits = cp_parity(family_params(family), N);
    for (auto r : fam.residues) {
        auto res = verify_even_progression(bits, fam.modulus, r, N);
        if (!res.passed()) {
            res.detail = "residue " + std::to_string(r) + " mod " + std::to_string(fam.modulus) +
                         ": " + res.detail;
            return res;
        }
    }
    return CheckResult::ok(std::to_string(fam.residues.size()) + " residues mod " +
                           std::to_string(fam.modulus));
}

CheckResult verify_lemma13(std::int64_t Nmax)
{
    for (std::int64_t N = 1; N <= Nmax; N += 6) {
        if (!lemma_form_equivalence_check(static_cast<std::uint64_t>(N))) {
            return CheckResult::failed(N, "form equivalence fails at N=" + std::to_string(N));
        }
    }
    return CheckResult::ok();
}

CheckResult verify_predicates_vs_brute(std::int64_t Nmax)
{
    for (std::int64_t N = 5; N <= Nmax; N += 24) {
        const auto u = static_cast<std::uint64_t>(N);
        if (rep_pred_two_squares(u) != brute_rep(u, QuadraticForm::two_squares)) {
            return CheckResult::failed(N, "A^2+B^2 criterion disagrees at N=" + std::to_string(N));
        }
    }
    for (std::int64_t N = 1; N <= Nmax; N += 6) {
        const auto u = static_cast<std::uint64_t>(N);
        if (rep_pred_x2_3y2(u) != brute_rep(u, QuadraticForm::x2_plus_3y2)) {
            return CheckResult::failed(N, "A^2+3B^2 criterion disagrees at N=" + std::to_string(N));
        }
    }
    return CheckResult::ok();
}

}  // namespace copart
