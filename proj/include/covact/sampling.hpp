#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covact/basis.hpp"

namespace covact {

/// Tuple-draw policy for universally quantified checks. cap = 0 means
/// exhaustive over the window product; dense suites normally stay there.
struct Sampling {
    std::size_t cap = 0;
    std::uint64_t seed = 1;
};

/// Materialized check window: the tuples to run plus a description that
/// makes "pass" reproducible ("pass" on a rule backend means pass here).
struct TupleWindow {
    std::vector<std::vector<BasisKey>> tuples;
    std::string description;
    std::uint64_t seed = 0;
};

TupleWindow make_tuples(const std::vector<const std::vector<BasisKey>*>& lists,
                        const Sampling& s);

} // namespace covact
