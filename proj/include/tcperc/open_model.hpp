#ifndef TCPERC_OPEN_MODEL_HPP
#define TCPERC_OPEN_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tcperc/edge_set.hpp"

namespace tcperc {

enum class OpenMode { kUniform, kLeftRight };

struct OpenModel {
    OpenMode mode = OpenMode::kUniform;
    double p_open = 0.0;  // kUniform
    double p_left = 0.0;  // kLeftRight
    double p_right = 0.0; // kLeftRight
    uint64_t seed = 0;
};

// Per-direction thresholds for coupled sampling; uniform models use the
// same value on both sides of the diagonal.
struct Thresholds {
    double rightward = 0.0; // j > i
    double leftward = 0.0;  // j < i

    static Thresholds uniform(double p) { return {p, p}; }
};

// Opens each non-diagonal, non-e0 ordered pair independently with the
// model's probability for its direction class. One uniform is consumed
// per ordered pair in row-major order regardless of e0 membership, so
// the underlying randomness is identical across families of equal n.
EdgeSet sample_open(const EdgeSet& e0, const OpenModel& model);

// Unoriented sampling for the K_d-completion setting: one uniform per
// pair i < j in row-major order, both directions opened together.
EdgeSet sample_open_symmetric(const EdgeSet& e0, const OpenModel& model);

// The shared-uniform coupling used by monotone sweeps: u(i,j) fixed by
// (n, seed), one value per ordered pair in the same canonical order.
// The stream is domain-separated from sample_open's.
struct UniformField {
    int n = 0;
    uint64_t seed = 0;
    std::vector<double> u; // row-major, diagonal slots unused

    double at(int i, int j) const { return u[static_cast<size_t>(i - 1) * n + (j - 1)]; }
};

UniformField make_uniform_field(int n, uint64_t seed);

// Edge open iff its uniform is below its direction's threshold and it is
// not in e0; monotone in thresholds for a fixed field.
EdgeSet open_from_field(const EdgeSet& e0, const UniformField& field, const Thresholds& th);

// Streaming equivalent of make_uniform_field + open_from_field, without
// materializing the field (used by the p_c bisection at larger n).
EdgeSet open_at_thresholds(const EdgeSet& e0, uint64_t field_seed, const Thresholds& th);

Thresholds thresholds_of(const OpenModel& model);

std::string open_mode_name(OpenMode mode);
OpenMode open_mode_from_name(const std::string& name);

} // namespace tcperc

#endif // TCPERC_OPEN_MODEL_HPP
