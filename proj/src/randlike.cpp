#include "partcmp/randlike.hpp"

#include <cmath>

#include "partcmp/wallace.hpp"
#include "family_util.hpp"

namespace partcmp {

using detail::int_ratio;

IndexValue wallace_w_star(const PairCounts& pc) { return int_ratio(pc.d, pc.N - pc.P, "N = P"); }

IndexValue wallace_v_star(const PairCounts& pc) { return int_ratio(pc.d, pc.N - pc.Q, "N = Q"); }

IndexValue rand_index(const PairCounts& pc) {
    return int_ratio(static_cast<int128>(pc.a) + pc.d, pc.N, "N = 0");
}

RandDecomposition rand_decomposition(const MatchingTable& m) {
    const PairCounts pc = pair_counts(m);
    RandDecomposition out;
    out.parts = {RandPart{"wallace_w", wallace_w(pc), pc.P, 0.0},
                 RandPart{"wallace_v", wallace_v(pc), pc.Q, 0.0},
                 RandPart{"wallace_w_star", wallace_w_star(pc), pc.N - pc.P, 0.0},
                 RandPart{"wallace_v_star", wallace_v_star(pc), pc.N - pc.Q, 0.0}};
    if (pc.N > 0)
        for (RandPart& part : out.parts) part.share = ratio(part.weight, pc.N);
    out.overall = rand_index(pc);
    out.row_terms = per_cluster_w(m);
    out.col_terms = per_cluster_v(m);

    if (!out.overall.defined()) {
        out.residual = IndexValue::undefined(out.overall.reason);
        return out;
    }
    double sum = 0.0;
    for (const RandPart& part : out.parts) {
        if (part.weight == 0) continue;  // zero weight: the term drops out
        if (!part.value.defined()) {
            out.residual = IndexValue::undefined("undefined part with nonzero weight: " + part.name);
            return out;
        }
        sum += *part.value.value * ratio(part.weight, 2 * static_cast<int128>(pc.N));
    }
    out.residual = IndexValue::of(std::abs(*out.overall.value - sum));
    return out;
}

std::map<std::string, IndexForms> rand_family_forms(const PairCounts& pc) {
    const std::int64_t a = pc.a, b = pc.b, c = pc.c, d = pc.d;
    const IndexValue r = rand_index(pc);
    const IndexValue w = wallace_w(pc);
    const IndexValue v = wallace_v(pc);
    const IndexValue ws = wallace_w_star(pc);
    const IndexValue vs = wallace_v_star(pc);

    auto from_r = [&](auto&& fn) -> IndexValue {
        if (!r.defined()) return IndexValue::undefined(r.reason);
        return IndexValue::of(fn(*r.value));
    };
    // formula-2 route over all four asymmetric indices.
    auto from_four = [&](auto&& fn) -> IndexValue {
        for (const IndexValue* part : {&w, &v, &ws, &vs})
            if (!part->defined()) return IndexValue::undefined(part->reason);
        return fn(*w.value, *v.value, *ws.value, *vs.value);
    };

    std::map<std::string, IndexForms> out;

    out["rand"] = {int_ratio(static_cast<int128>(a) + d, pc.N, "N = 0"),
                   int_ratio(static_cast<int128>(pc.N) + 2 * pc.T - pc.P - pc.Q, pc.N, "N = 0")};

    out["rogers_tanimoto"] = {
        int_ratio(static_cast<int128>(a) + d,
                  static_cast<int128>(a) + 2 * (static_cast<int128>(b) + c) + d,
                  "a + 2b + 2c + d = 0"),
        from_r([](double R) { return R / (2 - R); })};

    out["hamann"] = {
        int_ratio(static_cast<int128>(a) - b - c + d, pc.N, "N = 0"),
        from_r([](double R) { return 2 * R - 1; })};

    out["sokal_sneath_2"] = {
        int_ratio(2 * (static_cast<int128>(a) + d),
                  2 * static_cast<int128>(a) + b + c + 2 * static_cast<int128>(d),
                  "2a + b + c + 2d = 0"),
        from_r([](double R) { return 2 * R / (R + 1); })};

    // The four marginal pair totals P, Q, N-P, N-Q are the denominators of
    // W, V, V*, W*; the next three indices need all of them nonzero along
    // the pair-count route as well.
    const bool marginals = pc.P > 0 && pc.Q > 0 && pc.N - pc.P > 0 && pc.N - pc.Q > 0;
    const char* marginal_reason = "zero marginal pair total";
    const double joined_product = static_cast<double>(static_cast<int128>(pc.P) * pc.Q);
    const double separated_product =
        static_cast<double>(static_cast<int128>(pc.N - pc.P) * (pc.N - pc.Q));

    out["sokal_sneath_geometric"] = {
        marginals ? IndexValue::of(static_cast<double>(static_cast<int128>(a) * d) /
                                   std::sqrt(joined_product * separated_product))
                  : IndexValue::undefined(marginal_reason),
        from_four([](double W, double V, double Ws, double Vs) {
            return IndexValue::of(std::sqrt(W * V * Ws * Vs));
        })};

    out["sokal_sneath_arithmetic"] = {
        marginals ? IndexValue::of(0.25 * (ratio(a, pc.P) + ratio(a, pc.Q) +
                                           ratio(d, pc.N - pc.Q) + ratio(d, pc.N - pc.P)))
                  : IndexValue::undefined(marginal_reason),
        from_four([](double W, double V, double Ws, double Vs) {
            return IndexValue::of((W + V + Ws + Vs) / 4);
        })};

    // 2a + b + c = P + Q and b + c + 2d = 2N - P - Q.
    IndexValue rogot1;
    if (pc.P + pc.Q == 0)
        rogot1 = IndexValue::undefined("2a + b + c = 0");
    else if (2 * pc.N - pc.P - pc.Q == 0)
        rogot1 = IndexValue::undefined("b + c + 2d = 0");
    else
        rogot1 = IndexValue::of(ratio(a, static_cast<int128>(pc.P) + pc.Q) +
                                ratio(d, 2 * static_cast<int128>(pc.N) - pc.P - pc.Q));
    out["rogot_goldberg"] = {
        rogot1, from_four([](double W, double V, double Ws, double Vs) {
            if (W + V == 0.0) return IndexValue::undefined("W + V = 0");
            if (Ws + Vs == 0.0) return IndexValue::undefined("W* + V* = 0");
            return IndexValue::of(W * V / (W + V) + Ws * Vs / (Ws + Vs));
        })};

    const int128 harmonic_den =
        4 * static_cast<int128>(a) * d + (static_cast<int128>(a) + d) * (static_cast<int128>(b) + c);
    out["warrens_harmonic"] = {
        int_ratio(4 * static_cast<int128>(a) * d, harmonic_den, "4ad + (a + d)(b + c) = 0"),
        from_four([](double W, double V, double Ws, double Vs) {
            if (W == 0.0 || V == 0.0 || Ws == 0.0 || Vs == 0.0)
                return IndexValue::undefined("zero constituent in harmonic mean");
            return IndexValue::of(4 / (1 / W + 1 / V + 1 / Ws + 1 / Vs));
        })};

    return out;
}

std::map<std::string, IndexValue> rand_family_indices(const PairCounts& pc) {
    std::map<std::string, IndexValue> out;
    for (auto& [name, forms] : rand_family_forms(pc)) {
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
