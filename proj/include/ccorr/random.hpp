#pragma once

#include <cstdint>
#include <random>

namespace ccorr {

/// SplitMix64 finalizer. Stable across platforms; used to derive every
/// sub-stream seed from a master seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// seed = H(master, stream). Nest calls for multi-level streams
/// (replicate, then role within the replicate).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    return splitmix64(master ^ splitmix64(stream));
}

template <typename... Rest>
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                    Rest... rest) noexcept {
    return derive_seed(derive_seed(master, stream), static_cast<std::uint64_t>(rest)...);
}

/// Deterministic random source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The distribution transforms are implemented here rather than
/// taken from <random>, whose algorithms are implementation-defined, so that
/// a given seed yields the same variates with any standard library:
///   - uniform():  top 53 bits of one engine word, scaled into [0, 1)
///   - normal():   Marsaglia polar method on uniform() pairs, both outputs used
///   - below(n):   Lemire's multiply-shift with rejection (unbiased)
///   - sign():     successive bits of an engine word, 1 -> +1, 0 -> -1
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal();

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

    double sign() {
        if (bits_left_ == 0) {
            bits_ = engine_();
            bits_left_ = 64;
        }
        const double s = (bits_ & 1U) ? 1.0 : -1.0;
        bits_ >>= 1;
        --bits_left_;
        return s;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
    std::uint64_t bits_ = 0;
    int bits_left_ = 0;
};

}  // namespace ccorr
