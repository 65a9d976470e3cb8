#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partcmp/core.hpp"

namespace partcmp {

/// Input errors carry "<source>:<line>: <what>" messages.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

/// A parsed label file: either positional (one label per line, line i =
/// object i) or keyed (two-column CSV "object_id,label", any order).
struct LabelFile {
    bool keyed = false;
    std::vector<std::string> ids;  // empty for positional files
    std::vector<std::string> labels;
};

LabelFile parse_label_file(const std::string& content, const std::string& source);

/// Aligns two label files into one (u, z) label-vector pair. Positional
/// files pair up line by line; keyed files are joined on object_id in the
/// first file's order. Mixing the two forms is an error.
std::pair<std::vector<std::string>, std::vector<std::string>> join_label_files(
    const LabelFile& u, const LabelFile& z);

/// Parses a matching-table CSV: integer cells, with an optional header
/// row of column labels and an optional first column of row labels
/// (detected by non-numeric fields). Throws ParseError with line numbers
/// on ragged rows or negative/non-integer cells.
MatchingTable parse_table_csv(const std::string& content, const std::string& source);

/// Writes a table as CSV with a label header row and label column;
/// parse_table_csv reads it back exactly.
std::string table_to_csv(const MatchingTable& m);

}  // namespace partcmp
