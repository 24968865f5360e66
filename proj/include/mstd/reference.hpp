#pragma once

// Slow reference paths kept separate from the bit-vector kernel, for
// verification from the CLI.

#include <span>

#include "mstd/intset.hpp"

namespace mstd {

/// |S + S| and |S - S| by a double loop over ordered pairs into std::set.
SumDiffSizes naive_sum_diff_sizes(std::span<const int> members);

}  // namespace mstd
