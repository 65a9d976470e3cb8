#include "partcmp/adjusted.hpp"

#include <algorithm>
#include <cmath>

#include "partcmp/wallace.hpp"
#include "family_util.hpp"

namespace partcmp {

using detail::int_ratio;
using detail::weighted_mean_residual;

Expectation expectation(const MatchingTable& m) {
    const PairCounts pc = pair_counts(m);
    const ClusterWeights cw = cluster_weights(m);
    Expectation e;
    e.rows = m.rows;
    e.cols = m.cols;
    e.per_cell.reserve(m.rows * m.cols);
    if (pc.N == 0) {
        // no pairs at all: every expectation is trivially 0
        e.expected_t = Rational{0, 1};
        e.per_cell.assign(m.rows * m.cols, Rational{0, 1});
        return e;
    }
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            e.per_cell.push_back(Rational::make(
                static_cast<int128>(cw.row_pairs[i]) * cw.col_pairs[j], pc.N));
    e.expected_t = expected_t(pc);
    return e;
}

Rational expected_t(const PairCounts& pc) {
    if (pc.N == 0) return Rational{0, 1};
    return Rational::make(static_cast<int128>(pc.P) * pc.Q, pc.N);
}

Rational expected_rand(const PairCounts& pc) {
    if (pc.N == 0) return Rational{0, 1};
    const int128 n = pc.N;
    return Rational::make(n * n + 2 * static_cast<int128>(pc.P) * pc.Q - n * (pc.P + pc.Q), n * n);
}

Rational expected_dice(const PairCounts& pc) {
    const int128 den = static_cast<int128>(pc.N) * (pc.P + pc.Q);
    if (den == 0) return Rational{0, 1};
    return Rational::make(2 * static_cast<int128>(pc.P) * pc.Q, den);
}

IndexValue chance_correct(const IndexValue& s, const Rational& expected) {
    if (!s.defined()) return s;
    if (expected.is_one()) return IndexValue::undefined("E(S) = 1");
    const double e = expected.to_double();
    return IndexValue::of((*s.value - e) / (1 - e));
}

namespace {

// NT - PQ, the shared numerator of the adjusted family, exact in 128 bits.
int128 adjusted_numerator(const PairCounts& pc) {
    return static_cast<int128>(pc.N) * pc.T - static_cast<int128>(pc.P) * pc.Q;
}

}  // namespace

IndexValue adjusted_w(const PairCounts& pc) {
    if (pc.P == 0) return IndexValue::undefined("P = 0");
    if (pc.Q == pc.N) return IndexValue::undefined("N = Q");
    return IndexValue::of(ratio(adjusted_numerator(pc), static_cast<int128>(pc.P) * (pc.N - pc.Q)));
}

IndexValue adjusted_v(const PairCounts& pc) {
    if (pc.Q == 0) return IndexValue::undefined("Q = 0");
    if (pc.P == pc.N) return IndexValue::undefined("N = P");
    return IndexValue::of(ratio(adjusted_numerator(pc), static_cast<int128>(pc.Q) * (pc.N - pc.P)));
}

IndexValue adjusted_rand(const PairCounts& pc) {
    const int128 den = static_cast<int128>(pc.P) * (pc.N - pc.Q) +
                       static_cast<int128>(pc.Q) * (pc.N - pc.P);
    if (den == 0) return IndexValue::undefined("N(P + Q) - 2PQ = 0");
    return IndexValue::of(ratio(2 * adjusted_numerator(pc), den));
}

namespace {

// Fills the `adjusted` field of per-cluster stats: the chance-corrected
// cluster index (N * T_i - P_i * other_total) / (P_i * (N - other_total)).
void fill_adjusted(std::vector<ClusterStat>& stats, const std::vector<std::int64_t>& joined,
                   std::int64_t N, std::int64_t other_total, const char* saturated_reason) {
    for (std::size_t k = 0; k < stats.size(); ++k) {
        ClusterStat& stat = stats[k];
        if (stat.pairs == 0) {
            stat.adjusted = IndexValue::undefined("singleton");
        } else if (other_total == N) {
            stat.adjusted = IndexValue::undefined(saturated_reason);
        } else {
            const int128 num = static_cast<int128>(N) * joined[k] -
                               static_cast<int128>(stat.pairs) * other_total;
            stat.adjusted = IndexValue::of(
                ratio(num, static_cast<int128>(stat.pairs) * (N - other_total)));
        }
    }
}

}  // namespace

std::vector<ClusterStat> per_cluster_aw(const MatchingTable& m) {
    const PairCounts pc = pair_counts(m);
    std::vector<ClusterStat> stats = per_cluster_w(m);
    fill_adjusted(stats, row_pair_sums(m), pc.N, pc.Q, "N = Q");
    return stats;
}

std::vector<ClusterStat> per_cluster_av(const MatchingTable& m) {
    const PairCounts pc = pair_counts(m);
    std::vector<ClusterStat> stats = per_cluster_v(m);
    fill_adjusted(stats, col_pair_sums(m), pc.N, pc.P, "N = P");
    return stats;
}

namespace {

// Promotes the adjusted field to `value` so the shared residual helper
// can average it.
std::vector<ClusterStat> as_adjusted_terms(std::vector<ClusterStat> stats) {
    for (ClusterStat& stat : stats) stat.value = stat.adjusted;
    return stats;
}

}  // namespace

AdjustedDecompositions adjusted_decompositions(const MatchingTable& m) {
    const PairCounts pc = pair_counts(m);
    AdjustedDecompositions out;

    out.aw.overall = adjusted_w(pc);
    out.aw.per_cluster = per_cluster_aw(m);
    out.aw.residual =
        weighted_mean_residual(out.aw.overall, as_adjusted_terms(out.aw.per_cluster), pc.P);

    out.av.overall = adjusted_v(pc);
    out.av.per_cluster = per_cluster_av(m);
    out.av.residual =
        weighted_mean_residual(out.av.overall, as_adjusted_terms(out.av.per_cluster), pc.Q);

    out.ar.overall = adjusted_rand(pc);
    out.ar.per_cluster = out.aw.per_cluster;
    out.ar.per_cluster.insert(out.ar.per_cluster.end(), out.av.per_cluster.begin(),
                              out.av.per_cluster.end());
    if (!out.ar.overall.defined()) {
        out.ar.residual = IndexValue::undefined(out.ar.overall.reason);
        return out;
    }
    // AR averages the per-cluster terms with their own chance-correction
    // denominators as weights: P_i(N - Q) for rows, Q_j(N - P) for columns.
    const int128 total = static_cast<int128>(pc.P) * (pc.N - pc.Q) +
                         static_cast<int128>(pc.Q) * (pc.N - pc.P);
    double mean = 0.0;
    const std::size_t rows = out.aw.per_cluster.size();
    for (std::size_t k = 0; k < out.ar.per_cluster.size(); ++k) {
        const ClusterStat& stat = out.ar.per_cluster[k];
        const int128 other = k < rows ? pc.N - pc.Q : pc.N - pc.P;
        const int128 weight = static_cast<int128>(stat.pairs) * other;
        if (weight == 0) continue;
        if (!stat.adjusted.defined()) {
            out.ar.residual =
                IndexValue::undefined("undefined term with nonzero weight: " + stat.cluster);
            return out;
        }
        mean += *stat.adjusted.value * ratio(weight, total);
    }
    out.ar.residual = IndexValue::of(std::abs(*out.ar.overall.value - mean));
    return out;
}

std::map<std::string, IndexForms> adjusted_family_forms(const PairCounts& pc) {
    const IndexValue aw = adjusted_w(pc);
    const IndexValue av = adjusted_v(pc);
    const int128 num = adjusted_numerator(pc);  // equals ad - bc
    const int128 row_den = static_cast<int128>(pc.P) * (pc.N - pc.Q);
    const int128 col_den = static_cast<int128>(pc.Q) * (pc.N - pc.P);
    const bool dens = row_den > 0 && col_den > 0;
    const char* den_reason = "zero marginal pair total";

    auto from_awav = [&](auto&& fn) -> IndexValue {
        if (!aw.defined()) return IndexValue::undefined("AW undefined: " + aw.reason);
        if (!av.defined()) return IndexValue::undefined("AV undefined: " + av.reason);
        return fn(*aw.value, *av.value);
    };

    std::map<std::string, IndexForms> out;

    out["doolittle"] = {
        dens ? IndexValue::of(static_cast<double>(num) * static_cast<double>(num) /
                              (static_cast<double>(row_den) * static_cast<double>(col_den)))
             : IndexValue::undefined(den_reason),
        from_awav([](double AW, double AV) { return IndexValue::of(AW * AV); })};

    out["yule_phi"] = {
        dens ? IndexValue::of(static_cast<double>(num) /
                              std::sqrt(static_cast<double>(row_den) * static_cast<double>(col_den)))
             : IndexValue::undefined(den_reason),
        from_awav([](double AW, double AV) {
            if (AW * AV < 0) return IndexValue::undefined("AW * AV < 0");
            return IndexValue::of(std::sqrt(AW * AV));
        })};

    out["loevinger"] = {
        dens ? IndexValue::of(ratio(num, std::min(row_den, col_den)))
             : IndexValue::undefined(den_reason),
        from_awav([](double AW, double AV) { return IndexValue::of(std::max(AW, AV)); })};

    out["adjusted_rand"] = {
        adjusted_rand(pc), from_awav([](double AW, double AV) {
            if (AW + AV == 0.0) return IndexValue::undefined("AW + AV = 0");
            return IndexValue::of(2 * AW * AV / (AW + AV));
        })};

    out["fleiss"] = {
        dens ? IndexValue::of(0.5 * ratio(num, row_den) + 0.5 * ratio(num, col_den))
             : IndexValue::undefined(den_reason),
        from_awav([](double AW, double AV) { return IndexValue::of((AW + AV) / 2); })};

    return out;
}

std::map<std::string, IndexValue> adjusted_family_indices(const PairCounts& pc) {
    const IndexValue aw = adjusted_w(pc);
    const IndexValue av = adjusted_v(pc);
    std::map<std::string, IndexForms> forms = adjusted_family_forms(pc);
    std::map<std::string, IndexValue> out;
    if (!aw.defined() || !av.defined()) {
        const std::string reason = !aw.defined() ? "AW undefined: " + aw.reason
                                                 : "AV undefined: " + av.reason;
        for (auto& [name, unused] : forms) out.emplace(name, IndexValue::undefined(reason));
        return out;
    }
    // AW and AV are both defined, so every denominator below is nonzero.
    out.emplace("doolittle", forms.at("doolittle").formula2);
    out.emplace("yule_phi", forms.at("yule_phi").formula1);    // signed form
    out.emplace("loevinger", forms.at("loevinger").formula2);  // max(AW, AV)
    out.emplace("adjusted_rand", forms.at("adjusted_rand").formula1);
    out.emplace("fleiss", forms.at("fleiss").formula2);
    return out;
}

}  // namespace partcmp
