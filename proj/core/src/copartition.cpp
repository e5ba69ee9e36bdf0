#include "copart/copartition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace copart {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_) {
        if (p < 1) {
            throw std::invalid_argument("partition parts must be >= 1");
        }
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const
{
    int total = 0;
    for (int p : parts_) {
        total += p;
    }
    return total;
}

bool Partition::has_distinct_parts() const
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

Partition Partition::rectangle(int count, int value)
{
    if (count < 0) {
        throw std::invalid_argument("rectangle needs a nonnegative part count");
    }
    if (count == 0) {
        return Partition{};
    }
    return Partition(std::vector<int>(static_cast<std::size_t>(count), value));
}

std::string Partition::to_string() const
{
    if (parts_.empty()) {
        return "∅";
    }
    std::string out = "{";
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) {
            ++j;
        }
        if (i != 0) {
            out += ",";
        }
        out += std::to_string(parts_[i]);
        if (j - i > 1) {
            out += "^" + std::to_string(j - i);
        }
        i = j;
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// Copartition

namespace {

bool in_class(const Partition& p, int residue, int m)
{
    return std::all_of(p.parts().begin(), p.parts().end(),
                       [&](int part) { return part >= residue && (part - residue) % m == 0; });
}

Partition forced_rho(int m, const Partition& gamma, const Partition& sigma)
{
    if (gamma.empty()) {
        return Partition{};
    }
    return Partition::rectangle(sigma.num_parts(), m * gamma.num_parts());
}

}  // namespace

Copartition::Copartition(CpParams params, Partition gamma, Partition rho, Partition sigma)
    : params_(params), gamma_(std::move(gamma)), rho_(std::move(rho)), sigma_(std::move(sigma))
{
    if (!in_class(gamma_, params_.a(), params_.m())) {
        throw std::invalid_argument("ground part not congruent to a mod m: " + gamma_.to_string());
    }
    if (!in_class(sigma_, params_.b(), params_.m())) {
        throw std::invalid_argument("sky part not congruent to b mod m: " + sigma_.to_string());
    }
    if (rho_ != forced_rho(params_.m(), gamma_, sigma_)) {
        throw std::invalid_argument("rho must have one part of size m*nu(gamma) per sky part");
    }
}

Copartition Copartition::from_ground_and_sky(CpParams params, Partition gamma, Partition sigma)
{
    auto rho = forced_rho(params.m(), gamma, sigma);
    return Copartition(params, std::move(gamma), std::move(rho), std::move(sigma));
}

Copartition Copartition::empty(CpParams params)
{
    return Copartition(params, Partition{}, Partition{}, Partition{});
}

std::string Copartition::to_string() const
{
    return "(" + gamma_.to_string() + "," + rho_.to_string() + "," + sigma_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

/// Partitions of exactly `total` into parts >= residue, congruent to residue mod m, each part
/// at most `max_part`. If `num_parts` >= 0, only partitions with that many parts.
void class_partitions(int residue, int m, int total, int max_part, int num_parts,
                      std::vector<int>& prefix, const std::function<void(const std::vector<int>&)>& emit)
{
    if (total == 0 && num_parts <= 0) {
        emit(prefix);
        return;
    }
    if (total <= 0 || num_parts == 0) {
        return;
    }
    if (num_parts > 0 && static_cast<long>(num_parts) * residue > total) {
        return;
    }
    const int top = std::min(max_part, total);
    // Largest admissible part <= top.
    if (top < residue) {
        return;
    }
    for (int part = residue + (top - residue) / m * m; part >= residue; part -= m) {
        prefix.push_back(part);
        class_partitions(residue, m, total - part, part, num_parts < 0 ? -1 : num_parts - 1, prefix,
                         emit);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Copartition> enumerate(const CpParams& params, int n)
{
    if (n < 0) {
        throw std::invalid_argument("copartition size must be >= 0");
    }
    const int a = params.a();
    const int b = params.b();
    const int m = params.m();
    std::vector<Copartition> out;
    std::vector<int> scratch;

    for (int ground_size = 0; ground_size <= n; ++ground_size) {
        class_partitions(a, m, ground_size, ground_size, -1, scratch, [&](const std::vector<int>& g) {
            const Partition gamma(g);
            const int rem = n - ground_size;
            const int g_parts = gamma.num_parts();
            std::vector<int> sky_scratch;
            if (g_parts == 0) {
                class_partitions(b, m, rem, rem, -1, sky_scratch, [&](const std::vector<int>& s) {
                    out.push_back(Copartition::from_ground_and_sky(params, gamma, Partition(s)));
                });
                return;
            }
            // Each sky part costs its own size plus m * nu(gamma) in rho.
            for (int k = 0; static_cast<long>(k) * (b + m * g_parts) <= rem; ++k) {
                const int sky_size = rem - k * m * g_parts;
                class_partitions(b, m, sky_size, sky_size, k, sky_scratch,
                                 [&](const std::vector<int>& s) {
                                     out.push_back(Copartition::from_ground_and_sky(
                                         params, gamma, Partition(s)));
                                 });
            }
        });
    }

    std::sort(out.begin(), out.end(), [](const Copartition& x, const Copartition& y) {
        if (x.gamma() != y.gamma()) {
            return x.gamma() > y.gamma();
        }
        return x.sigma() > y.sigma();
    });
    return out;
}

std::uint64_t count(const CpParams& params, int n)
{
    return enumerate(params, n).size();
}

// ---------------------------------------------------------------------------
// Conjugation and hooks

Copartition conjugate(const Copartition& cp)
{
    const CpParams flipped = cp.params().swapped();
    return Copartition::from_ground_and_sky(flipped, cp.sigma(), cp.gamma());
}

bool is_self_conjugate(const Copartition& cp)
{
    return cp.params().a() == cp.params().b() && conjugate(cp) == cp;
}

Partition hooks_to_distinct_parts(const Copartition& cp)
{
    if (!is_self_conjugate(cp)) {
        throw std::invalid_argument("hook decomposition needs a self-conjugate copartition");
    }
    const int a = cp.params().a();
    const int m = cp.params().m();
    const auto& sky = cp.sigma().parts();
    const int k = static_cast<int>(sky.size());
    // Diagonal cell i (i < k) sits in the m-square rho. Its arm runs through the remaining
    // k-1-i cells of rho, the a-cell of sky part i, then that part's m-cells; the leg is the
    // mirror image through the ground.
    std::vector<int> hooks;
    hooks.reserve(sky.size());
    for (int i = 0; i < k; ++i) {
        const int tail = (sky[static_cast<std::size_t>(i)] - a) / m;
        hooks.push_back(2 * a + m * (2 * (k - 1 - i) + 2 * tail + 1));
    }
    return Partition(std::move(hooks));
}

Copartition distinct_parts_to_hooks(const Partition& p, int a, int m)
{
    const CpParams params(a, a, m);
    if (!p.has_distinct_parts()) {
        throw std::invalid_argument("hook parts must be distinct: " + p.to_string());
    }
    const auto& parts = p.parts();
    const int k = p.num_parts();
    std::vector<int> sky;
    sky.reserve(parts.size());
    for (int i = 0; i < k; ++i) {
        const int h = parts[static_cast<std::size_t>(i)];
        if (h < m + 2 * a || (h - m - 2 * a) % (2 * m) != 0) {
            throw std::invalid_argument("hook part " + std::to_string(h) +
                                        " is not congruent to m+2a mod 2m");
        }
        const int arm = (h - m - 2 * a) / (2 * m);
        // Distinctness and the common residue give arm >= k-1-i.
        sky.push_back(a + m * (arm - (k - 1 - i)));
    }
    Partition side(sky);
    return Copartition::from_ground_and_sky(params, side, side);
}

// ---------------------------------------------------------------------------
// Crank

int crank(const Copartition& cp)
{
    return cp.gamma().num_parts() - cp.sigma().num_parts();
}

std::map<int, std::uint64_t> crank_distribution(const CpParams& params, int n, int modulus)
{
    if (modulus < 1) {
        throw std::invalid_argument("crank modulus must be >= 1");
    }
    std::map<int, std::uint64_t> hist;
    for (const auto& cp : enumerate(params, n)) {
        const int r = ((crank(cp) % modulus) + modulus) % modulus;
        ++hist[r];
    }
    return hist;
}

}  // namespace copart
