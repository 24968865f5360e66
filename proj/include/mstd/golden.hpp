#pragma once

// Reference values compiled in from data/table1.csv and data/table2.csv.

#include <cstdint>
#include <string>
#include <vector>

#include "mstd/bigcount.hpp"

namespace mstd {

struct GoldenCount {
  std::int64_t n;
  BigCount value;
};

struct GoldenRatio {
  std::int64_t n;
  std::string decimal;  // as printed, e.g. "1.00066729"

  int digits() const;
};

/// B(n) for n = 1..24.
const std::vector<GoldenCount>& golden_table1();

/// Decimal values of n B(n) / 2^(n-2).
const std::vector<GoldenRatio>& golden_table2();

/// Parses "n,value" rows; '#' lines and the header row are skipped.
std::vector<std::pair<std::int64_t, std::string>> parse_golden_csv(const std::string& text);

}  // namespace mstd
