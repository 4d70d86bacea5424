#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "sotmem/common.hpp"

namespace sotmem {

/// Column-typed result table with deterministic CSV/JSON rendering. Column
/// names carry their units ("read_bw_bytes_per_cycle") so every emitted
/// header is self-describing. Provenance lines echo the effective
/// configuration and are emitted as comments (CSV) or a string list (JSON).
class Table {
public:
    using Cell = std::variant<std::string, double, std::int64_t>;

    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void provenance(const std::string& key, const std::string& value) {
        provenance_.push_back(key + "=" + value);
    }

    void add_row(std::vector<Cell> row) {
        if (row.size() != columns_.size())
            throw config_error("table row width does not match header");
        rows_.push_back(std::move(row));
    }

    const std::vector<std::string>& columns() const { return columns_; }
    std::size_t row_count() const { return rows_.size(); }

    void write_csv(std::ostream& os) const {
        for (const auto& p : provenance_) os << "# " << p << "\n";
        for (std::size_t c = 0; c < columns_.size(); ++c)
            os << (c ? "," : "") << columns_[c];
        os << "\n";
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) os << ",";
                os << cell_text(row[c]);
            }
            os << "\n";
        }
    }

    void write_json(std::ostream& os) const {
        os << "{\n  \"provenance\": [";
        for (std::size_t i = 0; i < provenance_.size(); ++i)
            os << (i ? ", " : "") << "\"" << provenance_[i] << "\"";
        os << "],\n  \"columns\": [";
        for (std::size_t c = 0; c < columns_.size(); ++c)
            os << (c ? ", " : "") << "\"" << columns_[c] << "\"";
        os << "],\n  \"rows\": [\n";
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            os << "    [";
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c) os << ", ";
                if (std::holds_alternative<std::string>(rows_[r][c]))
                    os << "\"" << std::get<std::string>(rows_[r][c]) << "\"";
                else
                    os << cell_text(rows_[r][c]);
            }
            os << "]" << (r + 1 < rows_.size() ? "," : "") << "\n";
        }
        os << "  ]\n}\n";
    }

    void write_file(const std::string& path, const std::string& format) const {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw config_error("cannot open output file: " + path);
        if (format == "csv")
            write_csv(os);
        else if (format == "json")
            write_json(os);
        else
            throw config_error("unknown output format: " + format);
    }

private:
    static std::string cell_text(const Cell& cell) {
        if (const auto* s = std::get_if<std::string>(&cell)) return *s;
        if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
        return std::to_string(std::get<std::int64_t>(cell));
    }

    std::vector<std::string> columns_;
    std::vector<std::string> provenance_;
    std::vector<std::vector<Cell>> rows_;
};

} // namespace sotmem
