#include "spdc/csv.hpp"

#include <cstdio>

#include "spdc/error.hpp"

namespace spdc {

CsvWriter::CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) fail(Errc::config, "cannot open output file '" + path + "'");
}

std::string CsvWriter::format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void CsvWriter::comment(const std::string& line) { out_ << "# " << line << "\n"; }

void CsvWriter::key_value(const std::string& key, const std::string& value) {
    out_ << "# " << key << ": " << value << "\n";
}

void CsvWriter::key_value(const std::string& key, double value) {
    out_ << "# " << key << ": " << format(value) << "\n";
}

void CsvWriter::columns(const std::vector<std::string>& names) {
    out_ << "# columns:";
    for (const auto& n : names) out_ << " " << n;
    out_ << "\n";
}

void CsvWriter::row(std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out_ << ",";
        out_ << format(values[i]);
    }
    out_ << "\n";
}

} // namespace spdc
