#pragma once

#include <filesystem>
#include <optional>

#include "copart/params.hpp"
#include "copart/series.hpp"

namespace copart::cli {

/// On-disk store of parity series keyed by (a,b,m,N).
///
/// Each file carries a format version and a CRC-32 of the payload; anything that fails
/// validation is treated as a miss and rewritten.
class ParityCache {
public:
    static constexpr std::uint32_t format_version = 1;

    explicit ParityCache(std::filesystem::path dir);

    std::optional<ParitySeries> load(const CpParams& params, int N) const;
    void store(const CpParams& params, const ParitySeries& series) const;

    /// Load, or expand and store.
    ParitySeries get(const CpParams& params, int N) const;

    std::filesystem::path path_for(const CpParams& params, int N) const;

private:
    std::filesystem::path dir_;
};

}  // namespace copart::cli
