#include "partcmp/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "partcmp/adjusted.hpp"
#include "partcmp/randlike.hpp"
#include "partcmp/wallace.hpp"

namespace partcmp {

namespace {

const std::vector<std::string> kIndexNames = {
    // asymmetric base indices
    "wallace_w", "wallace_v", "wallace_w_star", "wallace_v_star",
    // functions of W and V
    "jaccard", "dice", "kulczynski", "braun_blanquet", "simpson", "ochiai_fowlkes_mallows",
    "sorgenfrei", "sokal_sneath_1", "mcconnaughey", "johnson", "van_der_maarel", "legendre",
    // functions of W, V, W*, V*
    "rand", "rogers_tanimoto", "hamann", "sokal_sneath_2", "sokal_sneath_geometric",
    "sokal_sneath_arithmetic", "rogot_goldberg", "warrens_harmonic",
    // chance-corrected family
    "adjusted_wallace_w", "adjusted_wallace_v", "adjusted_rand", "doolittle", "yule_phi",
    "loevinger", "fleiss"};

std::string format_double(double value, const char* spec) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), spec, value);
    return buffer;
}

std::string full_precision(double value) { return format_double(value, "%.17g"); }

std::string fixed(double value, int precision) {
    char spec[16];
    std::snprintf(spec, sizeof(spec), "%%.%df", precision);
    return format_double(value, spec);
}

}  // namespace

const std::vector<std::string>& all_index_names() { return kIndexNames; }

const IndexValue* find_value(const NamedValues& values, const std::string& name) {
    for (const auto& [key, value] : values)
        if (key == name) return &value;
    return nullptr;
}

IndexReport build_report(const MatchingTable& m) {
    IndexReport report;
    report.n = m.n;
    report.rows = m.rows;
    report.cols = m.cols;
    report.counts = pair_counts(m);
    const PairCounts& pc = report.counts;

    std::map<std::string, IndexValue> values;
    values.emplace("wallace_w", wallace_w(pc));
    values.emplace("wallace_v", wallace_v(pc));
    values.emplace("wallace_w_star", wallace_w_star(pc));
    values.emplace("wallace_v_star", wallace_v_star(pc));
    values.merge(wallace_family_indices(pc));
    values.merge(rand_family_indices(pc));
    values.emplace("adjusted_wallace_w", adjusted_w(pc));
    values.emplace("adjusted_wallace_v", adjusted_v(pc));
    std::map<std::string, IndexValue> adjusted = adjusted_family_indices(pc);
    // the chance-corrected Rand index stays defined whenever its own
    // denominator is nonzero, even if AW or AV alone is not
    adjusted.insert_or_assign("adjusted_rand", adjusted_rand(pc));
    values.merge(adjusted);
    for (const std::string& name : kIndexNames) report.overall.emplace_back(name, values.at(name));

    report.row_stats = per_cluster_aw(m);
    report.col_stats = per_cluster_av(m);

    report.weights.P = pc.P;
    report.weights.Q = pc.Q;
    report.weights.N_minus_P = pc.N - pc.P;
    report.weights.N_minus_Q = pc.N - pc.Q;
    report.weights.shares_defined = pc.N > 0;
    if (report.weights.shares_defined) {
        report.weights.p_share = ratio(pc.P, pc.N);
        report.weights.q_share = ratio(pc.Q, pc.N);
        report.weights.np_share = ratio(pc.N - pc.P, pc.N);
        report.weights.nq_share = ratio(pc.N - pc.Q, pc.N);
    }

    const WallaceDecompositions wd = wallace_decompositions(m);
    const Decomposition dice = dice_decomposition(m);
    const RandDecomposition rd = rand_decomposition(m);
    const AdjustedDecompositions ad = adjusted_decompositions(m);
    report.residuals = {{"wallace_w", wd.w.residual},
                        {"wallace_v", wd.v.residual},
                        {"dice", dice.residual},
                        {"rand", rd.residual},
                        {"adjusted_wallace_w", ad.aw.residual},
                        {"adjusted_wallace_v", ad.av.residual},
                        {"adjusted_rand", ad.ar.residual}};
    return report;
}

IndexReport compare_labels(const std::vector<std::string>& u_labels,
                           const std::vector<std::string>& z_labels) {
    const Partition u = partition_from_labels(u_labels);
    const Partition z = partition_from_labels(z_labels);
    return build_report(build_matching_table(u, z));
}

namespace {

NamedValues filter_overall(const IndexReport& report, const RenderOptions& options) {
    if (options.indices.empty()) return report.overall;
    NamedValues out;
    for (const std::string& name : options.indices) {
        const IndexValue* value = find_value(report.overall, name);
        if (value == nullptr) throw std::invalid_argument("unknown index name: " + name);
        out.emplace_back(name, *value);
    }
    return out;
}

}  // namespace

std::string render_text(const IndexReport& report, const RenderOptions& options) {
    const int prec = options.precision;
    std::string out;
    std::set<std::string> reasons;

    auto cell = [&](const IndexValue& v) -> std::string {
        if (!v.defined()) {
            reasons.insert(v.reason);
            return "—";
        }
        return fixed(*v.value, prec);
    };
    auto pad = [](std::string s, std::size_t width) {
        if (s.size() < width) s.insert(0, width - s.size(), ' ');
        return s;
    };
    // the em dash is 3 bytes of UTF-8; pad by display width
    auto pad_cell = [&](const IndexValue& v, std::size_t width) {
        std::string s = cell(v);
        const std::size_t display = v.defined() ? s.size() : 1;
        if (display < width) s.insert(0, width - display, ' ');
        return s;
    };

    const std::size_t value_width = static_cast<std::size_t>(prec) + 5;
    out += "n = " + std::to_string(report.n) + "   clusters: " + std::to_string(report.rows) +
           " x " + std::to_string(report.cols) + "\n";
    out += "pair counts: N = " + std::to_string(report.counts.N) +
           "  T = " + std::to_string(report.counts.T) + "  P = " + std::to_string(report.counts.P) +
           "  Q = " + std::to_string(report.counts.Q) + "\n";
    out += "             a = " + std::to_string(report.counts.a) +
           "  b = " + std::to_string(report.counts.b) + "  c = " + std::to_string(report.counts.c) +
           "  d = " + std::to_string(report.counts.d) + "\n";

    if (options.per_cluster) {
        auto panel = [&](const char* title, const std::vector<ClusterStat>& stats,
                         const char* value_name, const char* adjusted_name,
                         const char* weight_name) {
            out += "\n";
            out += title;
            out += "\n";
            std::size_t label_width = 7;
            for (const ClusterStat& stat : stats)
                label_width = std::max(label_width, stat.cluster.size());
            out += "  " + std::string(label_width, ' ') + pad(value_name, value_width) +
                   pad(adjusted_name, value_width) + pad(weight_name, value_width) + "\n";
            for (const ClusterStat& stat : stats) {
                std::string label = stat.cluster;
                label.resize(label_width, ' ');
                out += "  " + label + pad_cell(stat.value, value_width) +
                       pad_cell(stat.adjusted, value_width) + pad_cell(stat.weight, value_width) +
                       "\n";
            }
        };
        panel("row statistics", report.row_stats, "w", "Aw", "p");
        panel("column statistics", report.col_stats, "v", "Av", "q");
    }

    out += "\noverall indices\n";
    std::size_t name_width = 0;
    const NamedValues overall = filter_overall(report, options);
    for (const auto& [name, value] : overall) name_width = std::max(name_width, name.size());
    for (const auto& [name, value] : overall) {
        std::string label = name;
        label.resize(name_width, ' ');
        out += "  " + label + pad_cell(value, value_width) + "\n";
    }

    out += "\nweight shares\n";
    if (report.weights.shares_defined) {
        out += "  P/N = " + fixed(report.weights.p_share, prec) +
               "   Q/N = " + fixed(report.weights.q_share, prec) +
               "   (N-P)/N = " + fixed(report.weights.np_share, prec) +
               "   (N-Q)/N = " + fixed(report.weights.nq_share, prec) + "\n";
    } else {
        out += "  undefined (N = 0)\n";
        reasons.insert("N = 0");
    }

    out += "\ndecomposition residuals\n";
    for (const auto& [name, value] : report.residuals) {
        std::string label = name;
        label.resize(19, ' ');
        if (value.defined())
            out += "  " + label + "  " + format_double(*value.value, "%.2e") + "\n";
        else {
            out += "  " + label + "  —\n";
            reasons.insert(value.reason);
        }
    }

    if (!reasons.empty()) {
        out += "\nundefined (—) reasons seen: ";
        bool first = true;
        for (const std::string& reason : reasons) {
            if (!first) out += "; ";
            out += reason;
            first = false;
        }
        out += "\n";
    }
    return out;
}

namespace {

nlohmann::ordered_json value_json(const IndexValue& v) {
    nlohmann::ordered_json j;
    if (v.defined()) {
        j["value"] = *v.value;
    } else {
        j["value"] = nullptr;
        j["reason"] = v.reason;
    }
    return j;
}

nlohmann::ordered_json stats_json(const std::vector<ClusterStat>& stats) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const ClusterStat& stat : stats) {
        nlohmann::ordered_json j;
        j["cluster"] = stat.cluster;
        j["value"] = value_json(stat.value);
        j["adjusted"] = value_json(stat.adjusted);
        j["pairs"] = stat.pairs;
        j["weight"] = value_json(stat.weight);
        array.push_back(std::move(j));
    }
    return array;
}

}  // namespace

std::string render_json(const IndexReport& report, const RenderOptions& options) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["rows"] = report.rows;
    j["cols"] = report.cols;
    j["counts"] = {{"N", report.counts.N}, {"T", report.counts.T}, {"P", report.counts.P},
                   {"Q", report.counts.Q}, {"a", report.counts.a}, {"b", report.counts.b},
                   {"c", report.counts.c}, {"d", report.counts.d}};
    nlohmann::ordered_json overall;
    for (const auto& [name, value] : filter_overall(report, options))
        overall[name] = value_json(value);
    j["overall"] = std::move(overall);
    if (options.per_cluster) {
        j["row_stats"] = stats_json(report.row_stats);
        j["col_stats"] = stats_json(report.col_stats);
    }
    nlohmann::ordered_json weights;
    weights["P"] = report.weights.P;
    weights["Q"] = report.weights.Q;
    weights["N_minus_P"] = report.weights.N_minus_P;
    weights["N_minus_Q"] = report.weights.N_minus_Q;
    if (report.weights.shares_defined) {
        weights["P_over_N"] = report.weights.p_share;
        weights["Q_over_N"] = report.weights.q_share;
        weights["N_minus_P_over_N"] = report.weights.np_share;
        weights["N_minus_Q_over_N"] = report.weights.nq_share;
    } else {
        weights["P_over_N"] = nullptr;
        weights["Q_over_N"] = nullptr;
        weights["N_minus_P_over_N"] = nullptr;
        weights["N_minus_Q_over_N"] = nullptr;
        weights["reason"] = "N = 0";
    }
    j["weight_summary"] = std::move(weights);
    nlohmann::ordered_json residuals;
    for (const auto& [name, value] : report.residuals) residuals[name] = value_json(value);
    j["residuals"] = std::move(residuals);
    return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string csv_value(const IndexValue& v) { return v.defined() ? full_precision(*v.value) : ""; }

std::string csv_reason(const IndexValue& v) { return v.defined() ? "" : csv_escape(v.reason); }

}  // namespace

std::string render_csv(const IndexReport& report, const RenderOptions& options) {
    std::string out = "scope,name,value,adjusted,pairs,weight,reason\n";
    for (const auto& [name, value] : filter_overall(report, options))
        out += "overall," + name + "," + csv_value(value) + ",,,," + csv_reason(value) + "\n";
    if (options.per_cluster) {
        auto stats_rows = [&](const char* scope, const std::vector<ClusterStat>& stats) {
            for (const ClusterStat& stat : stats) {
                std::string reason = csv_reason(stat.value);
                if (reason.empty()) reason = csv_reason(stat.adjusted);
                if (reason.empty()) reason = csv_reason(stat.weight);
                out += std::string(scope) + "," + csv_escape(stat.cluster) + "," +
                       csv_value(stat.value) + "," + csv_value(stat.adjusted) + "," +
                       std::to_string(stat.pairs) + "," + csv_value(stat.weight) + "," + reason +
                       "\n";
            }
        };
        stats_rows("row", report.row_stats);
        stats_rows("col", report.col_stats);
    }
    auto weight_row = [&](const char* name, std::int64_t pairs, double share) {
        out += std::string("weight,") + name + "," +
               (report.weights.shares_defined ? full_precision(share) : "") + ",," +
               std::to_string(pairs) + ",," + (report.weights.shares_defined ? "" : "N = 0") + "\n";
    };
    weight_row("P_over_N", report.weights.P, report.weights.p_share);
    weight_row("Q_over_N", report.weights.Q, report.weights.q_share);
    weight_row("N_minus_P_over_N", report.weights.N_minus_P, report.weights.np_share);
    weight_row("N_minus_Q_over_N", report.weights.N_minus_Q, report.weights.nq_share);
    for (const auto& [name, value] : report.residuals)
        out += "residual," + name + "," + csv_value(value) + ",,,," + csv_reason(value) + "\n";
    return out;
}

std::string render(const IndexReport& report, const RenderOptions& options) {
    if (options.format == "text") return render_text(report, options);
    if (options.format == "json") return render_json(report, options);
    if (options.format == "csv") return render_csv(report, options);
    throw std::invalid_argument("unknown format: " + options.format);
}

}  // namespace partcmp
