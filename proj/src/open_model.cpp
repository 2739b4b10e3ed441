#include "tcperc/open_model.hpp"

#include <stdexcept>

#include "tcperc/rng.hpp"

namespace tcperc {

namespace {

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(name) + " must be in [0,1]");
}

} // namespace

Thresholds thresholds_of(const OpenModel& model) {
    if (model.mode == OpenMode::kUniform) {
        check_probability(model.p_open, "p_open");
        return Thresholds::uniform(model.p_open);
    }
    check_probability(model.p_left, "p_left");
    check_probability(model.p_right, "p_right");
    return {model.p_right, model.p_left};
}

EdgeSet sample_open(const EdgeSet& e0, const OpenModel& model) {
    const Thresholds th = thresholds_of(model);
    const int n = e0.n();
    EdgeSet open(n);
    SplitMix64 rng(derive_seed(model.seed, stream_tag::kOpenSample));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            double u = rng.uniform01();
            double p = j > i ? th.rightward : th.leftward;
            if (u < p && !e0.contains(i, j)) open.insert(i, j);
        }
    return open;
}

EdgeSet sample_open_symmetric(const EdgeSet& e0, const OpenModel& model) {
    if (model.mode != OpenMode::kUniform)
        throw std::invalid_argument("sample_open_symmetric: only the uniform model is unoriented");
    check_probability(model.p_open, "p_open");
    const int n = e0.n();
    EdgeSet open(n);
    SplitMix64 rng(derive_seed(model.seed, stream_tag::kOpenSample));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            double u = rng.uniform01();
            if (u < model.p_open && !e0.contains(i, j) && !e0.contains(j, i)) {
                open.insert(i, j);
                open.insert(j, i);
            }
        }
    return open;
}

UniformField make_uniform_field(int n, uint64_t seed) {
    UniformField field;
    field.n = n;
    field.seed = seed;
    field.u.assign(static_cast<size_t>(n) * n, 1.0); // diagonal slots stay 1.0
    SplitMix64 rng(derive_seed(seed, stream_tag::kUniformField));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            field.u[static_cast<size_t>(i - 1) * n + (j - 1)] = rng.uniform01();
        }
    return field;
}

EdgeSet open_from_field(const EdgeSet& e0, const UniformField& field, const Thresholds& th) {
    if (field.n != e0.n())
        throw std::invalid_argument("open_from_field: field and e0 vertex counts differ");
    const int n = e0.n();
    EdgeSet open(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            double p = j > i ? th.rightward : th.leftward;
            if (field.at(i, j) < p && !e0.contains(i, j)) open.insert(i, j);
        }
    return open;
}

EdgeSet open_at_thresholds(const EdgeSet& e0, uint64_t field_seed, const Thresholds& th) {
    const int n = e0.n();
    EdgeSet open(n);
    SplitMix64 rng(derive_seed(field_seed, stream_tag::kUniformField));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            double u = rng.uniform01();
            double p = j > i ? th.rightward : th.leftward;
            if (u < p && !e0.contains(i, j)) open.insert(i, j);
        }
    return open;
}

std::string open_mode_name(OpenMode mode) {
    return mode == OpenMode::kUniform ? "uniform" : "left-right";
}

OpenMode open_mode_from_name(const std::string& name) {
    if (name == "uniform") return OpenMode::kUniform;
    if (name == "left-right") return OpenMode::kLeftRight;
    throw std::invalid_argument("unknown open model mode: " + name);
}

} // namespace tcperc
