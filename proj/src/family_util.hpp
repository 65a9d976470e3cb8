#pragma once

// Internal helpers shared by the index-family translation units.

#include <cmath>
#include <cstdlib>
#include <vector>

#include "partcmp/core.hpp"
#include "partcmp/index_value.hpp"

namespace partcmp::detail {

inline IndexValue int_ratio(int128 num, int128 den, const char* zero_reason) {
    if (den == 0) return IndexValue::undefined(zero_reason);
    return IndexValue::of(ratio(num, den));
}

/// |overall - sum(value * pairs / pair_total)| over the terms with
/// nonzero weight; undefined if such a term is itself undefined.
inline IndexValue weighted_mean_residual(const IndexValue& overall,
                                         const std::vector<ClusterStat>& terms,
                                         int128 pair_total) {
    if (!overall.defined()) return IndexValue::undefined(overall.reason);
    double mean = 0.0;
    for (const ClusterStat& term : terms) {
        if (term.pairs == 0) continue;
        if (!term.value.defined())
            return IndexValue::undefined("undefined term with nonzero weight: " + term.cluster);
        mean += *term.value.value * ratio(term.pairs, pair_total);
    }
    return IndexValue::of(std::abs(*overall.value - mean));
}

}  // namespace partcmp::detail
