#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace balloc {

// splitmix64 finalizer, used for seed mixing only
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// FNV-1a over the label bytes
constexpr std::uint64_t hash_label(std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t stream_seed(std::uint64_t seed, std::string_view label) {
    return mix64(seed ^ mix64(hash_label(label)));
}

// Seed for the k-th independent trial of a batch run.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial_index) {
    return mix64(seed ^ mix64(trial_index + 1));
}

// Deterministic labeled random stream.
//
// mt19937_64 and everything derived below are fully specified by the
// standard, so identical (seed, label, call sequence) yields identical
// outputs on every platform. std::uniform_int_distribution is
// implementation-defined and deliberately not used.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::string_view label)
        : engine_(stream_seed(seed, label)) {}

    explicit RngStream(std::uint64_t raw_seed) : engine_(raw_seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform on [0, bound), unbiased via rejection; bound >= 1
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    // uniform on [0,1) with 53-bit resolution
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

// Stream labels used by the placement processes. Keeping the labels fixed
// means toggling one feature never perturbs the draws of another.
inline constexpr std::string_view kChoicesStream = "choices";
inline constexpr std::string_view kTieBreakStream = "tie-breaks";
inline constexpr std::string_view kCouplingBranchStream = "coupling branch";
inline constexpr std::string_view kCorrectionStream = "correction sampling";

} // namespace balloc
