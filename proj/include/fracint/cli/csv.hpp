#pragma once

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracint/process/export.hpp"

namespace fracint::cli {

/// A table cell: numbers are written in shortest round-trip form.
class CsvCell {
public:
    CsvCell(double v) : text_(format_double(v)) {}
    CsvCell(int v) : text_(std::to_string(v)) {}
    CsvCell(long long v) : text_(std::to_string(v)) {}
    CsvCell(std::size_t v) : text_(std::to_string(v)) {}
    CsvCell(bool v) : text_(v ? "1" : "0") {}
    CsvCell(std::string v) : text_(std::move(v)) {}
    CsvCell(const char* v) : text_(v) {}

    [[nodiscard]] const std::string& text() const noexcept { return text_; }

private:
    std::string text_;
};

/// RFC 4180 table: CRLF line ends, fields quoted only when they contain a
/// comma, a quote or a line break.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<CsvCell> row) {
        if (row.size() != header_.size()) throw std::invalid_argument("CsvTable: row width does not match header");
        std::vector<std::string> r;
        r.reserve(row.size());
        for (auto& c : row) r.push_back(c.text());
        rows_.push_back(std::move(r));
    }

    [[nodiscard]] const std::vector<std::string>& header() const noexcept { return header_; }
    [[nodiscard]] const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

    void write(std::ostream& os) const {
        write_line(os, header_);
        for (const auto& r : rows_) write_line(os, r);
    }

    void save(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path);
        write(out);
    }

    [[nodiscard]] static std::string quote(const std::string& field) {
        if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
        std::string out = "\"";
        for (char c : field) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    }

private:
    static void write_line(std::ostream& os, const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << quote(fields[i]);
        os << "\r\n";
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace fracint::cli
