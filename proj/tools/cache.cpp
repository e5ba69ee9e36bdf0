#include "cache.hpp"

#include <array>
#include <fstream>
#include <span>
#include <string>

#include <boost/crc.hpp>

namespace copart::cli {

namespace {

constexpr std::array<char, 8> magic = {'C', 'O', 'P', 'A', 'R', 'T', 'P', 'B'};

// Fixed little-endian-as-host header; caches are local to one machine.
struct Header {
    std::array<char, 8> magic;
    std::uint32_t version;
    std::uint32_t crc;
    std::int32_t a, b, m, N;
    std::uint64_t words;
};
static_assert(sizeof(Header) == 40, "cache header must have no padding");

std::uint32_t checksum(std::span<const std::uint64_t> words)
{
    boost::crc_32_type crc;
    crc.process_bytes(words.data(), words.size() * sizeof(std::uint64_t));
    return crc.checksum();
}

}  // namespace

ParityCache::ParityCache(std::filesystem::path dir) : dir_(std::move(dir))
{
    std::filesystem::create_directories(dir_);
}

std::filesystem::path ParityCache::path_for(const CpParams& params, int N) const
{
    return dir_ / (params.label() + "_" + std::to_string(N) + ".bits");
}

std::optional<ParitySeries> ParityCache::load(const CpParams& params, int N) const
{
    std::ifstream in(path_for(params, N), std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    Header h{};
    if (!in.read(reinterpret_cast<char*>(&h), sizeof h)) {
        return std::nullopt;
    }
    if (h.magic != magic || h.version != format_version || h.a != params.a() ||
        h.b != params.b() || h.m != params.m() || h.N != N ||
        h.words != static_cast<std::uint64_t>(N / 64 + 1)) {
        return std::nullopt;
    }
    std::vector<std::uint64_t> words(h.words);
    if (!in.read(reinterpret_cast<char*>(words.data()),
                 static_cast<std::streamsize>(words.size() * sizeof(std::uint64_t)))) {
        return std::nullopt;
    }
    if (checksum(words) != h.crc) {
        return std::nullopt;
    }
    try {
        return ParitySeries::from_words(std::move(words), N);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void ParityCache::store(const CpParams& params, const ParitySeries& series) const
{
    const auto words = series.words();
    Header h{};
    h.magic = magic;
    h.version = format_version;
    h.a = params.a();
    h.b = params.b();
    h.m = params.m();
    h.N = series.trunc();
    h.words = words.size();
    h.crc = checksum(words);

    // Write then rename so a concurrent reader never sees a partial file.
    const auto final_path = path_for(params, series.trunc());
    auto tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(reinterpret_cast<const char*>(&h), sizeof h);
        out.write(reinterpret_cast<const char*>(words.data()),
                  static_cast<std::streamsize>(words.size() * sizeof(std::uint64_t)));
        if (!out) {
            throw std::runtime_error("cannot write cache file " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, final_path);
}

ParitySeries ParityCache::get(const CpParams& params, int N) const
{
    if (auto hit = load(params, N)) {
        return std::move(*hit);
    }
    auto series = cp_parity(params, N);
    store(params, series);
    return series;
}

}  // namespace copart::cli
