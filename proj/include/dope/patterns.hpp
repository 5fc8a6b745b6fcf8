#ifndef DOPE_PATTERNS_HPP
#define DOPE_PATTERNS_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dope/error.hpp"
#include "dope/rational.hpp"
#include "dope/types.hpp"

namespace dope {

namespace detail {

// True when every block of trailing k+1 columns holds at most k + slack ones.
inline bool suffix_budget_holds(const DopePattern& m, std::size_t slack) {
  const std::size_t n = m.degree();
  std::size_t running = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    running += m.column_ones(n - k);
    if (running > k + slack) return false;
  }
  return true;
}

}  // namespace detail

/// Every block of trailing k+1 columns holds at most k ones.
inline bool is_safe(const DopePattern& m) { return detail::suffix_budget_holds(m, 0); }

/// Every block of trailing k+1 columns holds at most k+1 ones.
inline bool is_almost_safe(const DopePattern& m) { return detail::suffix_budget_holds(m, 1); }

/// Safe with exactly n ones in total.
inline bool is_saturated(const DopePattern& m) { return is_safe(m) && m.ones() == m.degree(); }

/// No row has more than `limit` ones.
inline bool is_t_limited(const DopePattern& m, std::size_t limit) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.row_ones(i) > limit) return false;
  return true;
}

/**
 * Streams every safe rows x (n+1) pattern exactly once.
 *
 * Depth-first over columns from j = n down to j = 0; inside a column the row
 * subsets are visited in increasing mask value (row i <-> bit i). A column
 * whose addition would break the suffix budget is never entered, so the
 * stream does no work on unsafe prefixes. With a ones filter, branches that
 * can no longer reach the requested total are cut as well.
 */
class SafeEnumerator {
 public:
  static constexpr std::size_t kMaxRows = 63;

  SafeEnumerator(std::size_t rows, std::size_t n, std::optional<std::size_t> ones_filter = std::nullopt)
      : rows_(rows), n_(n), filter_(ones_filter), masks_(n + 1, 0), started_(n + 1, false), before_(n + 2, 0) {
    if (rows == 0) throw Error(ErrorCode::OutOfDomain, "enumeration needs at least one row");
    if (rows > kMaxRows) throw Error(ErrorCode::OutOfDomain, "enumeration supports at most 63 rows");
    limit_ = std::uint64_t{1} << rows;
  }

  /// Next pattern, or nullopt once the stream is exhausted.
  std::optional<DopePattern> next() {
    if (done_) return std::nullopt;
    if (filter_ && *filter_ > n_) {
      done_ = true;
      return std::nullopt;
    }
    while (true) {
      if (advance(depth_)) {
        if (depth_ == n_) return materialize();
        before_[depth_ + 1] = before_[depth_] + static_cast<std::size_t>(std::popcount(masks_[depth_]));
        ++depth_;
        started_[depth_] = false;
      } else {
        if (depth_ == 0) {
          done_ = true;
          return std::nullopt;
        }
        --depth_;
      }
    }
  }

 private:
  // Advances the mask at `depth` (column n - depth) to the next admissible value.
  bool advance(std::size_t depth) {
    std::size_t cap = depth;  // ones allowed in the last depth+1 columns
    if (filter_ && *filter_ < cap) cap = *filter_;
    const std::size_t used = before_[depth];
    if (used > cap) return false;
    const std::size_t room = cap - used;

    std::uint64_t y = started_[depth] ? masks_[depth] + 1 : 0;
    started_[depth] = true;
    while (y < limit_) {
      const auto pc = static_cast<std::size_t>(std::popcount(y));
      if (pc > room) {
        // smallest larger value whose popcount can fit: clear the lowest run
        y += y & (~y + 1);
        continue;
      }
      if (filter_ && !reachable(depth, used + pc)) {
        ++y;
        continue;
      }
      masks_[depth] = y;
      return true;
    }
    return false;
  }

  // Can the ones total still reach the filter from `total` after this column?
  bool reachable(std::size_t depth, std::size_t total) const {
    const std::size_t remaining_cols = n_ - depth;
    const std::size_t best = total + rows_ * remaining_cols;
    return std::min(best, n_) >= *filter_;
  }

  DopePattern materialize() const {
    DopePattern out(rows_, n_ + 1);
    for (std::size_t d = 0; d <= n_; ++d) {
      const std::size_t col = n_ - d;
      for (std::size_t i = 0; i < rows_; ++i)
        if ((masks_[d] >> i) & 1U) out.set(i, col);
    }
    return out;
  }

  std::size_t rows_;
  std::size_t n_;
  std::optional<std::size_t> filter_;
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<bool> started_;
  std::vector<std::size_t> before_;
  std::size_t depth_ = 0;
  bool done_ = false;
};

/// Calls visit(pattern) for every safe pattern in enumeration order.
template <class Visitor>
void for_each_safe(std::size_t rows, std::size_t n, std::optional<std::size_t> ones_filter, Visitor&& visit) {
  SafeEnumerator e(rows, n, ones_filter);
  while (auto p = e.next()) visit(*p);
}

inline std::vector<DopePattern> enumerate_safe(std::size_t rows, std::size_t n,
                                               std::optional<std::size_t> ones_filter = std::nullopt) {
  std::vector<DopePattern> out;
  for_each_safe(rows, n, ones_filter, [&](const DopePattern& p) { out.push_back(p); });
  return out;
}

inline constexpr std::uint64_t kDefaultEnumerationBudget = 20'000'000;

/// C(a, n, T): safe, T-limited, saturated a x (n+1) patterns, counted by
/// filtered enumeration. Throws BudgetExceeded once more than `budget`
/// saturated candidates have been visited.
inline BigInt count_limited_saturated(std::size_t a, std::size_t n, std::size_t limit,
                                      std::uint64_t budget = kDefaultEnumerationBudget) {
  if (a == 0) return n == 0 ? 1 : 0;
  if (a > SafeEnumerator::kMaxRows) throw Error(ErrorCode::BudgetExceeded, "too many rows to enumerate");
  BigInt count = 0;
  std::uint64_t visited = 0;
  SafeEnumerator e(a, n, n);
  while (auto p = e.next()) {
    if (++visited > budget) throw Error(ErrorCode::BudgetExceeded, "enumeration budget exhausted");
    if (is_t_limited(*p, limit)) ++count;
  }
  return count;
}

/// Column-major read from the rightmost column, top row first:
/// entry (i, j) lands at position m*(n-j) + i.
inline BinarySequence matrix_to_sequence(const DopePattern& m) {
  const std::size_t rows = m.rows();
  const std::size_t n = m.degree();
  std::vector<std::uint8_t> seq(rows * (n + 1));
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i < rows; ++i) seq[rows * (n - j) + i] = m.at(i, j) ? 1 : 0;
  return BinarySequence(std::move(seq));
}

inline DopePattern sequence_to_matrix(const BinarySequence& s, std::size_t rows, std::size_t n) {
  if (rows == 0 || s.size() != rows * (n + 1))
    throw Error(ErrorCode::DimensionMismatch, "sequence length must equal m*(n+1)");
  DopePattern out(rows, n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (s.entries()[rows * (n - j) + i]) out.set(i, j);
  return out;
}

/// Every prefix has more zeros than t times its ones.
inline bool is_t_dominating(const BinarySequence& s, std::uint64_t t) {
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;
  for (auto e : s.entries()) {
    (e ? ones : zeros) += 1;
    if (zeros <= t * ones) return false;
  }
  return true;
}

/// Number of t-dominating cyclic shifts, by brute force. When the sequence
/// has a zeros and b ones with a >= t*b the count must be a - t*b; a
/// mismatch is an internal error.
inline std::size_t count_dominating_shifts(const BinarySequence& s, std::uint64_t t) {
  const auto& e = s.entries();
  const std::size_t len = e.size();
  std::size_t count = 0;
  std::vector<std::uint8_t> shifted(len);
  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t i = 0; i < len; ++i) shifted[i] = e[(r + i) % len];
    if (is_t_dominating(BinarySequence(shifted), t)) ++count;
  }
  const std::uint64_t a = s.zeros();
  const std::uint64_t b = s.ones();
  if (a >= t * b && count != a - t * b) throw std::logic_error("cycle lemma count mismatch");
  return count;
}

namespace detail {

inline void check_rowset_bound(const RowSet& s, std::size_t n) {
  if (!s.members().empty() && s.members().back() > n)
    throw Error(ErrorCode::InvalidInput, "row set member exceeds n");
}

}  // namespace detail

/// s belongs to the result iff some window [t, s] holds at least s-t+1 ones
/// across the two rows.
inline RowSet combine_rows(const RowSet& s1, const RowSet& s2, std::size_t n) {
  detail::check_rowset_bound(s1, n);
  detail::check_rowset_bound(s2, n);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s <= n; ++s) {
    for (std::size_t t = 0; t <= s; ++t) {
      if (s1.count_in(t, s) + s2.count_in(t, s) >= s - t + 1) {
        out.push_back(s);
        break;
      }
    }
  }
  return RowSet(n, std::move(out));
}

struct FirstCarry {
  std::size_t operator()(const std::vector<std::size_t>&) const noexcept { return 0; }
};

/**
 * Adds the two indicator rows, then repeatedly moves one unit from any
 * component >= 2 into the next column until every component is 0 or 1.
 * `pick` selects which overfull column to carry next (index into the
 * candidate list); the terminal vector does not depend on it.
 *
 * Throws CarryOverflow when column n becomes overfull: no order of carries
 * can then finish inside [0, n].
 */
template <class Pick = FirstCarry>
RowSet combine_rows_carry(const RowSet& s1, const RowSet& s2, std::size_t n, Pick&& pick = {}) {
  detail::check_rowset_bound(s1, n);
  detail::check_rowset_bound(s2, n);
  std::vector<std::size_t> v(n + 1, 0);
  for (auto s : s1.members()) ++v[s];
  for (auto s : s2.members()) ++v[s];

  std::vector<std::size_t> candidates;
  while (true) {
    if (v[n] >= 2) throw Error(ErrorCode::CarryOverflow, "carry would pass column n");
    candidates.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (v[j] >= 2) candidates.push_back(j);
    if (candidates.empty()) break;
    const std::size_t j = candidates.at(pick(candidates));
    --v[j];
    ++v[j + 1];
  }
  std::vector<std::size_t> members;
  for (std::size_t j = 0; j <= n; ++j)
    if (v[j]) members.push_back(j);
  return RowSet(n, std::move(members));
}

}  // namespace dope

#endif  // DOPE_PATTERNS_HPP
