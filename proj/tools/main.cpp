// partcmp: pair-counting agreement indices for comparing two partitions.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "partcmp/core.hpp"
#include "partcmp/io.hpp"
#include "partcmp/report.hpp"
#include "partcmp/synth.hpp"

namespace {

struct Options {
    std::string format = "text";
    int precision = 2;
    bool per_cluster = true;
    std::string indices;
};

partcmp::RenderOptions render_options(const Options& opt) {
    partcmp::RenderOptions render;
    render.format = opt.format;
    render.precision = opt.precision;
    render.per_cluster = opt.per_cluster;
    if (!opt.indices.empty()) {
        std::size_t start = 0;
        while (start <= opt.indices.size()) {
            std::size_t comma = opt.indices.find(',', start);
            if (comma == std::string::npos) comma = opt.indices.size();
            std::string name = opt.indices.substr(start, comma - start);
            if (!name.empty()) render.indices.push_back(name);
            start = comma + 1;
        }
    }
    return render;
}

void add_output_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--precision", opt.precision, "Decimal places in text output")
        ->check(CLI::Range(0, 15))
        ->capture_default_str();
    cmd->add_flag("--per-cluster,!--no-per-cluster", opt.per_cluster,
                  "Include the per-cluster row/column panels (default on)");
    cmd->add_option("--indices", opt.indices, "Comma-separated subset of overall index names");
}

std::pair<std::vector<std::string>, std::vector<std::string>> load_label_pair(
    const std::string& u_path, const std::string& z_path) {
    const partcmp::LabelFile u = partcmp::parse_label_file(partcmp::read_file(u_path), u_path);
    const partcmp::LabelFile z = partcmp::parse_label_file(partcmp::read_file(z_path), z_path);
    return partcmp::join_label_files(u, z);
}

partcmp::MatchingTable synth_table(const std::string& what) {
    if (what == "ecoli") return partcmp::ecoli_table();
    if (what.size() == 4 && what.rfind("toy", 0) == 0 && what[3] >= '1' && what[3] <= '4')
        return partcmp::toy_example(what[3] - '0');
    return partcmp::generate_block_pair(partcmp::parse_block_spec(what));
}

int run_verify(const std::string& u_path, const std::string& z_path) {
    auto [u_labels, z_labels] = load_label_pair(u_path, z_path);
    const partcmp::Partition u = partcmp::partition_from_labels(u_labels);
    const partcmp::Partition z = partcmp::partition_from_labels(z_labels);
    const partcmp::PairCounts fast = partcmp::pair_counts(partcmp::build_matching_table(u, z));
    const partcmp::PairCounts slow = partcmp::oracle_pair_counts(u, z);
    auto line = [](const char* name, std::int64_t fast_value, std::int64_t slow_value) {
        std::printf("%-2s fast = %-14lld oracle = %-14lld %s\n", name,
                    static_cast<long long>(fast_value), static_cast<long long>(slow_value),
                    fast_value == slow_value ? "ok" : "MISMATCH");
        return fast_value == slow_value;
    };
    bool ok = true;
    ok &= line("N", fast.N, slow.N);
    ok &= line("T", fast.T, slow.T);
    ok &= line("P", fast.P, slow.P);
    ok &= line("Q", fast.Q, slow.Q);
    ok &= line("a", fast.a, slow.a);
    ok &= line("b", fast.b, slow.b);
    ok &= line("c", fast.c, slow.c);
    ok &= line("d", fast.d, slow.d);
    std::printf("%s\n", ok ? "MATCH" : "MISMATCH");
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pair-counting agreement indices for comparing two partitions"};
    app.require_subcommand(1);

    Options opt;
    std::string u_path, z_path, table_path, synth_arg;

    CLI::App* compare = app.add_subcommand(
        "compare", "Compare two label files (one label per line, or object_id,label pairs)");
    compare->add_option("u-file", u_path, "Labels of the first partition")->required();
    compare->add_option("z-file", z_path, "Labels of the second partition")->required();
    add_output_flags(compare, opt);

    CLI::App* table = app.add_subcommand("table", "Report on a matching-table CSV");
    table->add_option("csv-file", table_path, "Matching table CSV")->required();
    add_output_flags(table, opt);

    CLI::App* synth = app.add_subcommand(
        "synth", "Report on a generated table: toy1..toy4, ecoli, or <count>x<size>:<mode> groups");
    synth->add_option("spec", synth_arg, "toy1..toy4 | ecoli | block spec")->required();
    add_output_flags(synth, opt);

    CLI::App* verify = app.add_subcommand(
        "verify", "Check the fast pair counts against the brute-force pair enumeration");
    verify->add_option("u-file", u_path, "Labels of the first partition")->required();
    verify->add_option("z-file", z_path, "Labels of the second partition")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(u_path, z_path);
        partcmp::IndexReport report;
        if (compare->parsed()) {
            auto [u_labels, z_labels] = load_label_pair(u_path, z_path);
            report = partcmp::compare_labels(u_labels, z_labels);
        } else if (table->parsed()) {
            report = partcmp::build_report(
                partcmp::parse_table_csv(partcmp::read_file(table_path), table_path));
        } else {
            report = partcmp::build_report(synth_table(synth_arg));
        }
        std::cout << partcmp::render(report, render_options(opt));
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
