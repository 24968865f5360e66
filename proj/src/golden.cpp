#include "mstd/golden.hpp"

#include <sstream>
#include <stdexcept>

#include "mstd/golden_data.hpp"

namespace mstd {

int GoldenRatio::digits() const {
  const auto dot = decimal.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(decimal.size() - dot - 1);
}

std::vector<std::pair<std::int64_t, std::string>> parse_golden_csv(const std::string& text) {
  std::vector<std::pair<std::int64_t, std::string>> rows;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("golden csv: malformed row '" + line + "'");
    rows.emplace_back(std::stoll(line.substr(0, comma)), line.substr(comma + 1));
  }
  return rows;
}

const std::vector<GoldenCount>& golden_table1() {
  static const std::vector<GoldenCount> table = [] {
    std::vector<GoldenCount> out;
    for (auto& [n, value] : parse_golden_csv(golden_data::kTable1Csv)) {
      out.push_back({n, BigCount(value, 10)});
    }
    return out;
  }();
  return table;
}

const std::vector<GoldenRatio>& golden_table2() {
  static const std::vector<GoldenRatio> table = [] {
    std::vector<GoldenRatio> out;
    for (auto& [n, value] : parse_golden_csv(golden_data::kTable2Csv)) out.push_back({n, value});
    return out;
  }();
  return table;
}

}  // namespace mstd
