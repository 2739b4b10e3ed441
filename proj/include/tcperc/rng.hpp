#ifndef TCPERC_RNG_HPP
#define TCPERC_RNG_HPP

#include <cstdint>

namespace tcperc {

// SplitMix64 (Steele/Lea/Flood). Chosen for portability: the whole
// experiment stack must produce bit-identical streams on every platform,
// so we pin the generator instead of std::mt19937_64 whose seeding via
// seed_seq is awkward to document. Constants are the canonical ones.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 significant bits.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    uint64_t state_;
};

// Derives an independent stream seed from (base, stream index). Every
// source of randomness in the repo is keyed through this function, so a
// single base seed determines all experiment output. Documented in the
// README; do not change the constants or golden files break.
inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
    SplitMix64 g(base ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
    return g.next();
}

inline uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b) {
    return derive_seed(derive_seed(base, a), b);
}

// Domain tags keeping the documented sampler streams disjoint.
namespace stream_tag {
inline constexpr uint64_t kOpenSample = 0x6F70656E5F736D70ULL;   // "open_smp"
inline constexpr uint64_t kUniformField = 0x756E695F666C6400ULL; // "uni_fld"
inline constexpr uint64_t kFamily = 0x66616D5F73656564ULL;       // "fam_seed"
inline constexpr uint64_t kSlowedOrder = 0x736C6F775F6F7264ULL;  // "slow_ord"
} // namespace stream_tag

} // namespace tcperc

#endif // TCPERC_RNG_HPP
