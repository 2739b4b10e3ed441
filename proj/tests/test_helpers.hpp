#ifndef TCPERC_TEST_HELPERS_HPP
#define TCPERC_TEST_HELPERS_HPP

#include <initializer_list>
#include <utility>

#include "tcperc/edge_set.hpp"
#include "tcperc/environment.hpp"
#include "tcperc/families.hpp"

namespace tcperc::testing {

inline EdgeSet edges(int n, std::initializer_list<std::pair<int, int>> list) {
    EdgeSet out(n);
    for (auto [i, j] : list) out.insert(i, j);
    return out;
}

inline EdgeSet oriented_chain(int n) {
    EdgeSet out(n);
    for (int i = 1; i < n; ++i) out.insert(i, i + 1);
    return out;
}

inline EdgeSet unoriented_chain(int n) {
    EdgeSet out(n);
    for (int i = 1; i < n; ++i) {
        out.insert(i, i + 1);
        out.insert(i + 1, i);
    }
    return out;
}

inline Environment env_of(EdgeSet e0, EdgeSet open) {
    return make_environment(std::move(e0), std::move(open));
}

} // namespace tcperc::testing

#endif // TCPERC_TEST_HELPERS_HPP
