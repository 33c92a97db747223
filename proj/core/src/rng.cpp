#include "typrank/rng.hpp"

namespace typrank {

namespace {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream) noexcept {
    return mix64(mix64(master_seed) ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

SeededRng::SeededRng(std::uint64_t master_seed, std::uint64_t stream)
    : master_seed_(master_seed), stream_(stream), engine_(stream_seed(master_seed, stream)),
      normal_(0.0, 1.0) {}

double SeededRng::normal() { return normal_(engine_); }

double SeededRng::uniform() { return uniform_(engine_); }

} // namespace typrank
