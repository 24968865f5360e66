#include "mstd/construction.hpp"

#include "mstd/error.hpp"

namespace mstd {

ConstructionParams::ConstructionParams(int window_size) : n(window_size) {
  if (window_size < kMinWindow) {
    throw Error(ErrorCode::kBadWindow,
                "construction requires n >= 24, got n = " + std::to_string(window_size));
  }
}

// ------------------------------------------------------------- MiddleSet

MiddleSet::MiddleSet(int lo, int hi) : lo_(lo), hi_(hi) {
  if (lo > hi) throw Error(ErrorCode::kBadArgument, "MiddleSet: empty base interval");
  present_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
}

MiddleSet::MiddleSet(int lo, int hi, std::initializer_list<int> members) : MiddleSet(lo, hi) {
  for (int x : members) insert(x);
}

MiddleSet MiddleSet::from_bits(int lo, const BitSeq& bits) {
  MiddleSet out(lo, lo + bits.length() - 1);
  out.present_ = bits.bits();
  return out;
}

bool MiddleSet::contains(int x) const {
  return x >= lo_ && x <= hi_ && present_[static_cast<std::size_t>(x - lo_)] != 0;
}

std::vector<int> MiddleSet::members() const {
  std::vector<int> out;
  for (int x = lo_; x <= hi_; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

BitSeq MiddleSet::to_bits() const { return BitSeq(present_); }

void MiddleSet::insert(int x) {
  if (x < lo_ || x > hi_) {
    throw Error(ErrorCode::kMiddleOutOfRange,
                "MiddleSet: " + std::to_string(x) + " outside [" + std::to_string(lo_) + ", " +
                    std::to_string(hi_) + "]");
  }
  present_[static_cast<std::size_t>(x - lo_)] = 1;
}

// -------------------------------------------------------------- fixtures

IntSet left_fixture() {
  return IntSet::from_members(ConstructionParams::kLeft, {0, 2, 3, 7, 8, 9, 10});
}

IntSet right_fixture(int n) {
  ConstructionParams params(n);
  return IntSet::from_members(params.n, {n - 11, n - 10, n - 9, n - 8, n - 6, n - 3, n - 2, n - 1});
}

// ------------------------------------------------------------- predicates

bool has_majority_prefixes_suffixes(const MiddleSet& m) {
  const int len = m.length();
  int prefix = 0;
  int suffix = 0;
  for (int k = 1; k <= len; ++k) {
    prefix += m.contains(m.lo() + k - 1) ? 1 : 0;
    suffix += m.contains(m.hi() - k + 1) ? 1 : 0;
    // |M n first k| > k/2 and |M n last k| > k/2
    if (2 * prefix <= k || 2 * suffix <= k) return false;
  }
  return true;
}

bool middle_sum_complete(const MiddleSet& m) {
  // Re-index [lo, hi] to [1, len]; membership in [0, len] keeps 0 unused.
  const int len = m.length();
  IntSet shifted(len + 1);
  for (int x : m.members()) shifted.insert(x - m.lo() + 1);
  const IntSet sums = sumset(shifted);
  for (int x = 2; x <= 2 * len; ++x) {
    if (!sums.contains(x)) return false;
  }
  return sums.size() == 2 * len - 1;
}

// ----------------------------------------------------------- construction

namespace {

IntSet end_blocks(const ConstructionParams& params) {
  IntSet ends(params.n);
  for (int x : left_fixture().members()) ends.insert(x);
  return ends.united(right_fixture(params.n));
}

}  // namespace

IntSet construct(int n, const MiddleSet& m) {
  const ConstructionParams params(n);
  for (int x : m.members()) {
    if (x < params.middle_lo() || x > params.middle_hi()) {
      throw Error(ErrorCode::kMiddleOutOfRange,
                  "construct: middle member " + std::to_string(x) + " outside [11, " +
                      std::to_string(params.middle_hi()) + "]");
    }
  }
  MiddleSet canonical(params.middle_lo(), params.middle_hi());
  for (int x : m.members()) canonical.insert(x);
  if (!has_majority_prefixes_suffixes(canonical)) {
    throw Error(ErrorCode::kMajorityViolated,
                "construct: middle block fails the prefix/suffix majority condition");
  }
  IntSet s = end_blocks(params);
  for (int x : canonical.members()) s.insert(x);
  return s;
}

FamilyStream::FamilyStream(int n)
    : params_(n), ends_(end_blocks(params_)), middles_(params_.middle_length()) {}

std::optional<IntSet> FamilyStream::next() {
  auto bits = middles_.next();
  if (!bits) return std::nullopt;
  IntSet s = ends_;
  for (int i = 0; i < bits->length(); ++i) {
    if ((*bits)[i]) s.insert(params_.middle_lo() + i);
  }
  return s;
}

std::vector<IntSet> enumerate_family(int n) {
  std::vector<IntSet> out;
  FamilyStream stream(n);
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace mstd
