#pragma once

// System file loading. Two formats are accepted: a JSON document
// {"modulus": n, "matrix": [[...], ...]} and a whitespace text format whose
// first line is "n m" followed by m rows of m integers. Entries may be any
// signed 64-bit integers; they are reduced mod n on load.

#include "lfds/errors.hpp"
#include "lfds/system.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <istream>
#include <sstream>
#include <string>

namespace lfds {

inline SystemSpec system_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("system document must be a JSON object");
    if (!doc.contains("modulus") || !doc["modulus"].is_number_integer())
        throw ParseError("system document needs an integer \"modulus\"");
    long long n = doc["modulus"].get<long long>();
    if (n < 2 || static_cast<uint64_t>(n) > kMaxModulus)
        throw ParseError("modulus must be in [2, 2^62]");
    if (!doc.contains("matrix") || !doc["matrix"].is_array() || doc["matrix"].empty())
        throw ParseError("system document needs a non-empty \"matrix\" array");

    std::vector<std::vector<long long>> rows;
    for (const auto& row : doc["matrix"]) {
        if (!row.is_array()) throw ParseError("matrix rows must be arrays");
        std::vector<long long> r;
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw ParseError("matrix entries must be integers");
            if (e.is_number_unsigned() && e.get<uint64_t>() > uint64_t(INT64_MAX))
                throw ParseError("matrix entries must fit signed 64 bits");
            r.push_back(e.get<long long>());
        }
        rows.push_back(std::move(r));
    }
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw ParseError("matrix must be square");
    return SystemSpec(MatrixModN::from_rows(static_cast<uint64_t>(n), rows));
}

inline SystemSpec parse_system_text(std::istream& in) {
    long long n = 0;
    long long m = 0;
    if (!(in >> n >> m)) throw ParseError("text system: expected \"n m\" on the first line");
    if (n < 2 || static_cast<uint64_t>(n) > kMaxModulus)
        throw ParseError("modulus must be in [2, 2^62]");
    if (m < 1 || m > 4096) throw ParseError("dimension must be in [1, 4096]");
    std::vector<std::vector<long long>> rows(m, std::vector<long long>(m));
    for (long long i = 0; i < m; ++i)
        for (long long j = 0; j < m; ++j)
            if (!(in >> rows[i][j]))
                throw ParseError("text system: expected " + std::to_string(m * m) + " entries");
    return SystemSpec(MatrixModN::from_rows(static_cast<uint64_t>(n), rows));
}

/// Auto-detects the format: documents starting with '{' parse as JSON.
inline SystemSpec load_system(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty system document");
    if (text[first] == '{') {
        nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
        if (doc.is_discarded()) throw ParseError("malformed JSON system document");
        return system_from_json(doc);
    }
    std::istringstream is(text);
    return parse_system_text(is);
}

inline SystemSpec load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open system file: " + path);
    return load_system(in);
}

inline nlohmann::json system_to_json(const SystemSpec& sys) {
    nlohmann::json matrix = nlohmann::json::array();
    for (size_t i = 0; i < sys.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < sys.dim(); ++j) row.push_back(sys.a(i, j));
        matrix.push_back(std::move(row));
    }
    return nlohmann::json{{"modulus", sys.modulus()}, {"matrix", std::move(matrix)}};
}

} // namespace lfds
