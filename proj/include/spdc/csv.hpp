#pragma once

#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace spdc {

// CSV with '#' comment headers and fixed "%.12g" number formatting so reruns
// are byte-identical.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path);

    void comment(const std::string& line);
    void key_value(const std::string& key, const std::string& value);
    void key_value(const std::string& key, double value);
    void columns(const std::vector<std::string>& names);
    void row(std::span<const double> values);

    static std::string format(double v);

  private:
    std::ofstream out_;
};

} // namespace spdc
