#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "partcmp/core.hpp"
#include "partcmp/report.hpp"
#include "partcmp/synth.hpp"

namespace py = pybind11;

namespace {

partcmp::MatchingTable table_from_python(const std::vector<std::vector<std::int64_t>>& cells,
                                         std::vector<std::string> row_labels,
                                         std::vector<std::string> col_labels) {
    return partcmp::table_from_cells(cells, std::move(row_labels), std::move(col_labels));
}

// reports cross the boundary as plain dicts, via the stable json schema
py::object report_dict(const partcmp::IndexReport& report) {
    partcmp::RenderOptions options;
    options.format = "json";
    const std::string text = partcmp::render_json(report, options);
    return py::module_::import("json").attr("loads")(text);
}

py::dict table_dict(const partcmp::MatchingTable& m) {
    std::vector<std::vector<std::int64_t>> cells(m.rows, std::vector<std::int64_t>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) cells[i][j] = m.cell(i, j);
    py::dict out;
    out["cells"] = cells;
    out["row_labels"] = m.row_labels;
    out["col_labels"] = m.col_labels;
    out["n"] = m.n;
    return out;
}

partcmp::PairCounts counts_from_labels(const std::vector<std::string>& u,
                                       const std::vector<std::string>& z) {
    return partcmp::pair_counts(partcmp::build_matching_table(
        partcmp::partition_from_labels(u), partcmp::partition_from_labels(z)));
}

partcmp::PairCounts oracle_from_labels(const std::vector<std::string>& u,
                                       const std::vector<std::string>& z) {
    return partcmp::oracle_pair_counts(partcmp::partition_from_labels(u),
                                       partcmp::partition_from_labels(z));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pair-counting agreement indices for comparing two partitions";

    py::class_<partcmp::PairCounts>(m, "PairCounts")
        .def_readonly("N", &partcmp::PairCounts::N)
        .def_readonly("T", &partcmp::PairCounts::T)
        .def_readonly("P", &partcmp::PairCounts::P)
        .def_readonly("Q", &partcmp::PairCounts::Q)
        .def_readonly("a", &partcmp::PairCounts::a)
        .def_readonly("b", &partcmp::PairCounts::b)
        .def_readonly("c", &partcmp::PairCounts::c)
        .def_readonly("d", &partcmp::PairCounts::d)
        .def("__repr__", [](const partcmp::PairCounts& pc) {
            return "PairCounts(N=" + std::to_string(pc.N) + ", T=" + std::to_string(pc.T) +
                   ", P=" + std::to_string(pc.P) + ", Q=" + std::to_string(pc.Q) + ")";
        });

    m.def("pair_counts", &counts_from_labels, py::arg("u_labels"), py::arg("z_labels"),
          "Exact pair counts for two same-length label sequences.");
    m.def("oracle_pair_counts", &oracle_from_labels, py::arg("u_labels"), py::arg("z_labels"),
          "Pair counts by direct O(n^2) enumeration of all object pairs.");

    m.def(
        "compare_labels",
        [](const std::vector<std::string>& u, const std::vector<std::string>& z) {
            return report_dict(partcmp::compare_labels(u, z));
        },
        py::arg("u_labels"), py::arg("z_labels"),
        "Full index report (overall indices, per-cluster statistics, weights, residuals).");

    m.def(
        "compare_table",
        [](const std::vector<std::vector<std::int64_t>>& cells,
           std::vector<std::string> row_labels, std::vector<std::string> col_labels) {
            return report_dict(partcmp::build_report(
                table_from_python(cells, std::move(row_labels), std::move(col_labels))));
        },
        py::arg("cells"), py::arg("row_labels") = std::vector<std::string>{},
        py::arg("col_labels") = std::vector<std::string>{},
        "Full index report for a matching table given as nested lists.");

    m.def(
        "toy_example", [](int id) { return table_dict(partcmp::toy_example(id)); }, py::arg("id"),
        "One of the four built-in block-structured example tables (1..4).");
    m.def(
        "ecoli_table", [] { return table_dict(partcmp::ecoli_table()); },
        "The embedded 8x4 E. coli protein-localization table (n = 336).");
    m.def(
        "block_pair",
        [](const std::string& spec) {
            return table_dict(partcmp::generate_block_pair(partcmp::parse_block_spec(spec)));
        },
        py::arg("spec"),
        "Table for a block spec such as '2x20:aligned,2x8:uniform_mixed'.");
    m.def(
        "labels_from_table",
        [](const std::vector<std::vector<std::int64_t>>& cells,
           std::vector<std::string> row_labels, std::vector<std::string> col_labels) {
            return partcmp::labels_from_table(
                table_from_python(cells, std::move(row_labels), std::move(col_labels)));
        },
        py::arg("cells"), py::arg("row_labels") = std::vector<std::string>{},
        py::arg("col_labels") = std::vector<std::string>{},
        "A (u_labels, z_labels) pair that reproduces the given table.");
    m.def("index_names", [] { return partcmp::all_index_names(); },
          "Stable overall-index names in canonical order.");

    m.attr("__version__") = "0.1.0";
}
