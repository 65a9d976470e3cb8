#include "partcmp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace partcmp {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_lines(const std::string& content) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(content);
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

bool parse_int64(const std::string& token, std::int64_t& value) {
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

LabelFile parse_label_file(const std::string& content, const std::string& source) {
    std::vector<std::string> lines = split_lines(content);
    // trailing blank lines are padding, interior ones are errors
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(source + ": empty partition");

    LabelFile file;
    file.keyed = trim(lines.front()).find(',') != std::string::npos;
    std::unordered_set<std::string> seen;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const std::string line = trim(lines[k]);
        if (line.empty()) fail(source, k + 1, "empty label");
        if (file.keyed) {
            const std::size_t comma = line.find(',');
            if (comma == std::string::npos) fail(source, k + 1, "expected object_id,label");
            const std::string id = trim(line.substr(0, comma));
            const std::string label = trim(line.substr(comma + 1));
            if (id.empty()) fail(source, k + 1, "empty object_id");
            if (label.empty()) fail(source, k + 1, "empty label");
            if (!seen.insert(id).second) fail(source, k + 1, "duplicate object_id '" + id + "'");
            file.ids.push_back(id);
            file.labels.push_back(label);
        } else {
            file.labels.push_back(line);
        }
    }
    return file;
}

std::pair<std::vector<std::string>, std::vector<std::string>> join_label_files(
    const LabelFile& u, const LabelFile& z) {
    if (u.keyed != z.keyed)
        throw ParseError("cannot join: one file is keyed by object_id, the other is positional");
    if (!u.keyed) {
        if (u.labels.size() != z.labels.size()) throw ParseError("partition length mismatch");
        return {u.labels, z.labels};
    }
    if (u.ids.size() != z.ids.size()) throw ParseError("partition length mismatch");
    std::unordered_map<std::string, std::size_t> z_index;
    z_index.reserve(z.ids.size());
    for (std::size_t k = 0; k < z.ids.size(); ++k) z_index.emplace(z.ids[k], k);
    std::vector<std::string> u_labels, z_labels;
    u_labels.reserve(u.ids.size());
    z_labels.reserve(u.ids.size());
    for (std::size_t k = 0; k < u.ids.size(); ++k) {
        auto it = z_index.find(u.ids[k]);
        if (it == z_index.end())
            throw ParseError("object_id '" + u.ids[k] + "' missing from second file");
        u_labels.push_back(u.labels[k]);
        z_labels.push_back(z.labels[it->second]);
    }
    return {std::move(u_labels), std::move(z_labels)};
}

MatchingTable parse_table_csv(const std::string& content, const std::string& source) {
    std::vector<std::string> raw_lines = split_lines(content);
    struct Row {
        std::size_t line;
        std::vector<std::string> fields;
    };
    std::vector<Row> table_rows;
    for (std::size_t k = 0; k < raw_lines.size(); ++k) {
        if (trim(raw_lines[k]).empty()) continue;
        table_rows.push_back({k + 1, split_csv(raw_lines[k])});
    }
    if (table_rows.empty()) throw ParseError(source + ": empty table");

    auto is_int = [](const std::string& token) {
        std::int64_t unused;
        return parse_int64(token, unused);
    };

    // a header row is all labels: every field non-integer (a leading stub
    // over the row-label column may be empty)
    bool header_row = true;
    for (const std::string& field : table_rows.front().fields)
        if (is_int(field)) header_row = false;
    std::vector<std::string> col_labels;
    if (header_row) {
        col_labels = table_rows.front().fields;
        table_rows.erase(table_rows.begin());
        if (table_rows.empty()) throw ParseError(source + ": table has a header but no rows");
    }

    bool label_column = false;
    for (const Row& row : table_rows)
        if (!row.fields.empty() && !is_int(row.fields.front())) label_column = true;

    std::vector<std::string> row_labels;
    std::vector<std::vector<std::int64_t>> cells;
    for (const Row& row : table_rows) {
        std::vector<std::string> fields = row.fields;
        if (label_column) {
            row_labels.push_back(fields.front());
            fields.erase(fields.begin());
        }
        std::vector<std::int64_t> parsed;
        parsed.reserve(fields.size());
        for (const std::string& field : fields) {
            std::int64_t value = 0;
            if (!parse_int64(field, value) || value < 0)
                fail(source, row.line, "invalid cell '" + field + "' (expected nonnegative integer)");
            parsed.push_back(value);
        }
        if (!cells.empty() && parsed.size() != cells.front().size())
            fail(source, row.line,
                 "ragged row: expected " + std::to_string(cells.front().size()) + " cells, got " +
                     std::to_string(parsed.size()));
        cells.push_back(std::move(parsed));
    }

    if (!col_labels.empty()) {
        // the header may carry a stub over the row-label column
        if (col_labels.size() == cells.front().size() + 1 &&
            (label_column || col_labels.front().empty()))
            col_labels.erase(col_labels.begin());
        if (col_labels.size() != cells.front().size())
            fail(source, 1, "header has " + std::to_string(col_labels.size()) + " labels for " +
                                std::to_string(cells.front().size()) + " columns");
    }

    try {
        return table_from_cells(cells, std::move(row_labels), std::move(col_labels));
    } catch (const std::invalid_argument& e) {
        throw ParseError(source + ": " + e.what());
    }
}

std::string table_to_csv(const MatchingTable& m) {
    std::string out;
    for (std::size_t j = 0; j < m.cols; ++j) {
        out += ",";
        out += m.col_labels[j];
    }
    out += "\n";
    for (std::size_t i = 0; i < m.rows; ++i) {
        out += m.row_labels[i];
        for (std::size_t j = 0; j < m.cols; ++j) {
            out += ",";
            out += std::to_string(m.cell(i, j));
        }
        out += "\n";
    }
    return out;
}

}  // namespace partcmp
