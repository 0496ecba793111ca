#pragma once

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace devrank::cli {

// Shortest round-trip decimal form; reloading the text recovers the exact
// double, which keeps re-ranking from files equal to in-memory ranking.
inline std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw std::runtime_error("double formatting failed");
    return std::string(buf, ptr);
}

class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path, const std::string& header) : path_(path) {
        out_.open(path, std::ios::binary);
        if (!out_) throw std::runtime_error("cannot write " + path.string());
        out_ << header << '\n';
    }

    template <typename... Fields>
    void row(const Fields&... fields) {
        bool first = true;
        ((out_ << (first ? "" : ","), first = false, write_field(fields)), ...);
        out_ << '\n';
    }

    const std::filesystem::path& path() const { return path_; }

  private:
    void write_field(const std::string& s) { out_ << s; }
    void write_field(const char* s) { out_ << s; }
    void write_field(double v) { out_ << format_double(v); }
    template <typename T>
    void write_field(const T& v) {
        out_ << v;
    }

    std::filesystem::path path_;
    std::ofstream out_;
};

}  // namespace devrank::cli
