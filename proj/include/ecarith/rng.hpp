#pragma once

#include <cstdint>

namespace ecarith {

/// Deterministic 64-bit generator (SplitMix64). A stream is identified by
/// (seed, stream id); distinct ids give independent streams from one seed.
/// The algorithm is frozen: same seed and call sequence, same outputs,
/// across platforms and releases.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : state_(mix(seed ^ mix(stream_id + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Child stream; advancing the child never touches the parent.
    RngStream split(std::uint64_t salt) { return RngStream(next(), salt); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace ecarith
