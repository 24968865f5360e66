#include "mstd/reference.hpp"

#include <set>

namespace mstd {

SumDiffSizes naive_sum_diff_sizes(std::span<const int> members) {
  std::set<int> sums;
  std::set<int> diffs;
  for (int a : members) {
    for (int b : members) {
      sums.insert(a + b);
      diffs.insert(a - b);
    }
  }
  return {static_cast<int>(sums.size()), static_cast<int>(diffs.size())};
}

}  // namespace mstd
