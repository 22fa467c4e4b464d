// csv.hpp
// Flat key-value report rows and their CSV / plot-data serialization.
// CSV output is UTF-8, comma separated, header row, RFC 4180 quoting;
// plot files are '#'-headed whitespace-separated projections of the
// same rows. The CSV is the source of truth, plot files are derived.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gbl/errors.hpp"

namespace gbl {

struct ReportRow {
    std::vector<std::pair<std::string, std::string>> fields; // insertion order

    void set(const std::string& key, const std::string& value) {
        for (auto& [k, v] : fields)
            if (k == key) { v = value; return; }
        fields.emplace_back(key, value);
    }
    void set(const std::string& key, std::uint64_t value) { set(key, std::to_string(value)); }
    void set(const std::string& key, std::int64_t value) { set(key, std::to_string(value)); }
    void set(const std::string& key, bool value) { set(key, std::string(value ? "true" : "false")); }
    void set(const std::string& key, double value) {
        if (!std::isfinite(value))
            throw data_error("ReportRow: non-finite value for field " + key);
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", value);
        set(key, std::string(buf));
    }

    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : fields)
            if (k == key) return &v;
        return nullptr;
    }
};

// RFC 4180: quote a field iff it holds a comma, quote, CR or LF.
inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

inline std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += csv_escape(cells[i]);
    }
    line += '\n';
    return line;
}

// Render one row against a fixed header (missing fields are empty).
inline std::string csv_row_line(const std::vector<std::string>& header, const ReportRow& row) {
    std::vector<std::string> cells;
    cells.reserve(header.size());
    for (const std::string& key : header) {
        const std::string* v = row.find(key);
        cells.push_back(v ? *v : std::string());
    }
    return csv_line(cells);
}

// Minimal RFC 4180 reader: header + rows.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<ReportRow> rows;
};

inline CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open CSV: " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    std::vector<std::vector<std::string>> records;
    std::vector<std::string> cur;
    std::string field;
    bool in_quotes = false;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const char c = data[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < data.size() && data[i + 1] == '"') { field += '"'; ++i; }
                else in_quotes = false;
            } else field += c;
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            cur.push_back(std::move(field));
            field.clear();
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < data.size() && data[i + 1] == '\n') ++i;
            cur.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(cur));
            cur.clear();
        } else {
            field += c;
        }
    }
    if (!field.empty() || !cur.empty()) {
        cur.push_back(std::move(field));
        records.push_back(std::move(cur));
    }
    if (records.empty()) throw data_error("CSV has no header: " + path);

    CsvTable table;
    table.header = records.front();
    for (std::size_t r = 1; r < records.size(); ++r) {
        ReportRow row;
        for (std::size_t c2 = 0; c2 < records[r].size() && c2 < table.header.size(); ++c2)
            row.set(table.header[c2], records[r][c2]);
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Plot-data projection: '#'-prefixed header naming the columns, then
// one whitespace-separated line per row. Missing fields are an error.
inline void emit_plot_data(const std::vector<ReportRow>& rows, const std::string& x_field,
                           const std::vector<std::string>& y_fields, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open plot file for writing: " + path);
    out << "# " << x_field;
    for (const std::string& y : y_fields) out << ' ' << y;
    out << '\n';
    for (const ReportRow& row : rows) {
        const std::string* x = row.find(x_field);
        if (!x) throw data_error("emit_plot_data: missing field " + x_field);
        out << *x;
        for (const std::string& y : y_fields) {
            const std::string* v = row.find(y);
            if (!v) throw data_error("emit_plot_data: missing field " + y);
            out << ' ' << *v;
        }
        out << '\n';
    }
    if (!out) throw io_error("plot file write failed: " + path);
}

} // namespace gbl
