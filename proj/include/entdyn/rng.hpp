// Splittable random streams. A stream is identified by the pair
// (master_seed, stream_index); identical pairs reproduce identical draws on
// every platform, independent of how streams are distributed over workers.
// Uniform and normal variates are generated from the raw 64-bit output, so
// sequences do not depend on standard-library distribution internals.

#pragma once

#include <cstdint>
#include <random>

namespace entdyn {

class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

    std::uint64_t next_u64();

    /// Uniform double in [0, 1).
    double uniform01();

    /// Standard normal variate (Box-Muller on raw uniforms).
    double normal();

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace entdyn
