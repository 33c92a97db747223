#pragma once

#include <cstdint>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>

namespace typrank {

/// Mixes a master seed and a stream index into an engine seed. Streams are
/// addressed directly, so stream k is the same no matter how many workers ran
/// streams 0..k-1.
std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream) noexcept;

/// Per-(seed, stream) random source. Boost's engine and distributions are used
/// instead of <random>'s because the latter's normal distribution is
/// implementation-defined and would break cross-platform reproducibility.
class SeededRng {
public:
    SeededRng(std::uint64_t master_seed, std::uint64_t stream);

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    double normal();
    double uniform();

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_;
    boost::random::mt19937_64 engine_;
    boost::random::normal_distribution<double> normal_;
    boost::random::uniform_01<double> uniform_;
};

} // namespace typrank
