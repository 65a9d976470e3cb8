#include "partcmp/wallace.hpp"

#include <algorithm>
#include <cmath>

#include "family_util.hpp"

namespace partcmp {

using detail::int_ratio;
using detail::weighted_mean_residual;

namespace {

std::vector<ClusterStat> cluster_stats(const std::vector<std::string>& labels,
                                       const std::vector<std::int64_t>& joined,
                                       const std::vector<std::int64_t>& pairs,
                                       std::int64_t pair_total, const char* total_zero_reason) {
    std::vector<ClusterStat> stats(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
        ClusterStat& stat = stats[k];
        stat.cluster = labels[k];
        stat.pairs = pairs[k];
        stat.value = pairs[k] > 0 ? IndexValue::of(ratio(joined[k], pairs[k]))
                                  : IndexValue::undefined("singleton");
        stat.adjusted = IndexValue::undefined("not computed");
        stat.weight = pair_total > 0 ? IndexValue::of(ratio(pairs[k], pair_total))
                                     : IndexValue::undefined(total_zero_reason);
    }
    return stats;
}

}  // namespace

IndexValue wallace_w(const PairCounts& pc) { return int_ratio(pc.T, pc.P, "P = 0"); }

IndexValue wallace_v(const PairCounts& pc) { return int_ratio(pc.T, pc.Q, "Q = 0"); }

std::vector<ClusterStat> per_cluster_w(const MatchingTable& m) {
    ClusterWeights cw = cluster_weights(m);
    return cluster_stats(m.row_labels, row_pair_sums(m), cw.row_pairs, cw.P, "P = 0");
}

std::vector<ClusterStat> per_cluster_v(const MatchingTable& m) {
    ClusterWeights cw = cluster_weights(m);
    return cluster_stats(m.col_labels, col_pair_sums(m), cw.col_pairs, cw.Q, "Q = 0");
}

WallaceDecompositions wallace_decompositions(const MatchingTable& m) {
    const PairCounts pc = pair_counts(m);
    WallaceDecompositions out;
    out.w.overall = wallace_w(pc);
    out.w.per_cluster = per_cluster_w(m);
    out.w.residual = weighted_mean_residual(out.w.overall, out.w.per_cluster, pc.P);
    out.v.overall = wallace_v(pc);
    out.v.per_cluster = per_cluster_v(m);
    out.v.residual = weighted_mean_residual(out.v.overall, out.v.per_cluster, pc.Q);
    return out;
}

Decomposition dice_decomposition(const MatchingTable& m) {
    const PairCounts pc = pair_counts(m);
    Decomposition out;
    out.overall = int_ratio(2 * pc.T, static_cast<int128>(pc.P) + pc.Q, "P + Q = 0");
    out.per_cluster = per_cluster_w(m);
    std::vector<ClusterStat> cols = per_cluster_v(m);
    out.per_cluster.insert(out.per_cluster.end(), cols.begin(), cols.end());
    out.residual = weighted_mean_residual(out.overall, out.per_cluster,
                                          static_cast<int128>(pc.P) + pc.Q);
    return out;
}

std::map<std::string, IndexForms> wallace_family_forms(const PairCounts& pc) {
    const std::int64_t a = pc.a, b = pc.b, c = pc.c;
    const IndexValue w = wallace_w(pc);
    const IndexValue v = wallace_v(pc);

    // formula-2 route: a function of W and V, undefined when either is or
    // when its own denominator vanishes.
    auto from_wv = [&](auto&& fn) -> IndexValue {
        if (!w.defined()) return IndexValue::undefined(w.reason);
        if (!v.defined()) return IndexValue::undefined(v.reason);
        return fn(*w.value, *v.value);
    };
    auto guarded = [](double num, double den, const char* zero_reason) {
        if (den == 0.0) return IndexValue::undefined(zero_reason);
        return IndexValue::of(num / den);
    };

    std::map<std::string, IndexForms> out;

    // 1/J = 1/W + 1/V - 1, so J = WV / (W + V - WV)
    out["jaccard"] = {
        int_ratio(a, static_cast<int128>(a) + b + c, "a + b + c = 0"),
        from_wv([&](double W, double V) {
            return guarded(W * V, W + V - W * V, "W + V - WV = 0");
        })};

    out["dice"] = {
        int_ratio(2 * a, 2 * static_cast<int128>(a) + b + c, "2a + b + c = 0"),
        from_wv([&](double W, double V) { return guarded(2 * W * V, W + V, "W + V = 0"); })};

    IndexValue kulczynski1 = (pc.P > 0 && pc.Q > 0)
                                 ? IndexValue::of(0.5 * ratio(a, pc.P) + 0.5 * ratio(a, pc.Q))
                                 : IndexValue::undefined("P = 0 or Q = 0");
    out["kulczynski"] = {kulczynski1,
                         from_wv([&](double W, double V) { return IndexValue::of((W + V) / 2); })};

    out["braun_blanquet"] = {
        int_ratio(a, static_cast<int128>(a) + std::max(b, c), "a + max(b, c) = 0"),
        from_wv([&](double W, double V) { return IndexValue::of(std::min(W, V)); })};

    out["simpson"] = {
        int_ratio(a, static_cast<int128>(a) + std::min(b, c), "a + min(b, c) = 0"),
        from_wv([&](double W, double V) { return IndexValue::of(std::max(W, V)); })};

    IndexValue ochiai1 =
        (pc.P > 0 && pc.Q > 0)
            ? IndexValue::of(static_cast<double>(a) /
                             std::sqrt(static_cast<double>(static_cast<int128>(pc.P) * pc.Q)))
            : IndexValue::undefined("P = 0 or Q = 0");
    out["ochiai_fowlkes_mallows"] = {
        ochiai1, from_wv([&](double W, double V) { return IndexValue::of(std::sqrt(W * V)); })};

    out["sorgenfrei"] = {
        int_ratio(static_cast<int128>(a) * a, static_cast<int128>(pc.P) * pc.Q, "P = 0 or Q = 0"),
        from_wv([&](double W, double V) { return IndexValue::of(W * V); })};

    out["sokal_sneath_1"] = {
        int_ratio(a, static_cast<int128>(a) + 2 * (static_cast<int128>(b) + c), "a + 2b + 2c = 0"),
        from_wv([&](double W, double V) {
            return guarded(W * V, 2 * (W + V) - 3 * W * V, "2(W + V) - 3WV = 0");
        })};

    out["mcconnaughey"] = {
        int_ratio(static_cast<int128>(a) * a - static_cast<int128>(b) * c,
                  static_cast<int128>(pc.P) * pc.Q, "P = 0 or Q = 0"),
        from_wv([&](double W, double V) { return IndexValue::of(W + V - 1); })};

    IndexValue johnson1 = (pc.P > 0 && pc.Q > 0)
                              ? IndexValue::of(ratio(a, pc.P) + ratio(a, pc.Q))
                              : IndexValue::undefined("P = 0 or Q = 0");
    out["johnson"] = {johnson1,
                      from_wv([&](double W, double V) { return IndexValue::of(W + V); })};

    out["van_der_maarel"] = {
        int_ratio(2 * static_cast<int128>(a) - b - c, 2 * static_cast<int128>(a) + b + c,
                  "2a + b + c = 0"),
        from_wv([&](double W, double V) {
            if (W + V == 0.0) return IndexValue::undefined("W + V = 0");
            return IndexValue::of(4 * W * V / (W + V) - 1);
        })};

    out["legendre"] = {
        int_ratio(3 * static_cast<int128>(a), 3 * static_cast<int128>(a) + b + c,
                  "3a + b + c = 0"),
        from_wv([&](double W, double V) {
            return guarded(3 * W * V, W + V + W * V, "W + V + WV = 0");
        })};

    return out;
}

std::map<std::string, IndexValue> wallace_family_indices(const PairCounts& pc) {
    std::map<std::string, IndexValue> out;
    for (auto& [name, forms] : wallace_family_forms(pc)) {
        if (forms.formula1.defined())
            out.emplace(name, forms.formula1);
        else if (forms.formula2.defined())
            out.emplace(name, forms.formula2);
        else
            out.emplace(name, IndexValue::undefined(forms.formula1.reason));
    }
    return out;
}

}  // namespace partcmp
