#ifndef CHEMFRONT_CSV_HPP
#define CHEMFRONT_CSV_HPP

/// Plain-text CSV output: header row, 17 significant digits via to_chars
/// (locale-free), LF line endings. Deterministic byte-for-byte.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chemfront {

/// Full-precision, locale-independent decimal rendering.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

struct CsvWriter {
    explicit CsvWriter(const std::string& path, const std::vector<std::string>& columns)
        : path_(path), n_cols_(columns.size()) {
        out_.open(path, std::ios::binary);
        if (!out_) throw std::runtime_error("csv: cannot open " + path);
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out_ << ',';
            out_ << columns[i];
        }
        out_ << '\n';
    }

    void row(const std::vector<double>& values) {
        if (values.size() != n_cols_)
            throw std::invalid_argument("csv: row width does not match schema (" + path_ + ")");
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out_ << ',';
            out_ << format_double(values[i]);
        }
        out_ << '\n';
    }

    void close() {
        out_.flush();
        if (!out_) throw std::runtime_error("csv: write failure on " + path_);
        out_.close();
    }

private:
    std::string path_;
    std::size_t n_cols_;
    std::ofstream out_;
};

inline void write_csv(const std::string& path, const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows) {
    CsvWriter w(path, columns);
    for (const auto& r : rows) w.row(r);
    w.close();
}

}  // namespace chemfront

#endif  // CHEMFRONT_CSV_HPP
