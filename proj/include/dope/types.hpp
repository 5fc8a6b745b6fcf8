#ifndef DOPE_TYPES_HPP
#define DOPE_TYPES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dope/error.hpp"
#include "dope/rational.hpp"

namespace dope {

/// m x (n+1) 0/1 matrix; entry (i, j) marks "j-th derivative vanishes at point i".
class DopePattern {
 public:
  DopePattern() = default;
  DopePattern(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {
    if (cols == 0) throw Error(ErrorCode::DimensionMismatch, "pattern needs at least one column");
  }

  /// One '0'/'1' string per row.
  static DopePattern from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw Error(ErrorCode::DimensionMismatch, "pattern needs at least one row");
    DopePattern out(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != out.cols_)
        throw Error(ErrorCode::DimensionMismatch, "rows of unequal length");
      for (std::size_t j = 0; j < out.cols_; ++j) {
        const char ch = rows[i][j];
        if (ch != '0' && ch != '1') throw Error(ErrorCode::InvalidInput, "pattern entries must be '0' or '1'");
        out.set(i, j, ch == '1');
      }
    }
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  /// n, the polynomial degree this shape belongs to.
  std::size_t degree() const noexcept { return cols_ - 1; }

  bool at(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v = true) { bits_[i * cols_ + j] = v ? 1 : 0; }

  std::size_t ones() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }
  std::size_t row_ones(std::size_t i) const {
    return static_cast<std::size_t>(std::count(bits_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                               bits_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_), 1));
  }
  std::size_t column_ones(std::size_t j) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < rows_; ++i) c += bits_[i * cols_ + j];
    return c;
  }

  std::string row_string(std::size_t i) const {
    std::string s(cols_, '0');
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j)) s[j] = '1';
    return s;
  }
  std::vector<std::string> row_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_string(i));
    return out;
  }

  friend bool operator==(const DopePattern&, const DopePattern&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Ordered tuple of pairwise-distinct rationals.
class PointTuple {
 public:
  PointTuple() = default;
  explicit PointTuple(std::vector<Rational> points) : points_(std::move(points)) {
    auto sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::InvalidInput, "points must be pairwise distinct");
  }

  const std::vector<Rational>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Rational& operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const PointTuple&, const PointTuple&) = default;

 private:
  std::vector<Rational> points_;
};

/// Subset of [0, n], kept sorted.
class RowSet {
 public:
  RowSet() = default;
  RowSet(std::size_t n, std::vector<std::size_t> members) : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() > n_)
      throw Error(ErrorCode::InvalidInput, "row set member exceeds column bound");
  }

  static RowSet from_indicator(const std::vector<std::uint8_t>& v) {
    std::vector<std::size_t> m;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j]) m.push_back(j);
    return RowSet(v.empty() ? 0 : v.size() - 1, std::move(m));
  }

  std::size_t bound() const noexcept { return n_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::size_t s) const { return std::binary_search(members_.begin(), members_.end(), s); }

  /// |S ∩ [lo, hi]|
  std::size_t count_in(std::size_t lo, std::size_t hi) const {
    if (lo > hi) return 0;
    auto a = std::lower_bound(members_.begin(), members_.end(), lo);
    auto b = std::upper_bound(members_.begin(), members_.end(), hi);
    return static_cast<std::size_t>(b - a);
  }

  std::vector<std::uint8_t> indicator() const {
    std::vector<std::uint8_t> v(n_ + 1, 0);
    for (auto s : members_) v[s] = 1;
    return v;
  }

  friend bool operator==(const RowSet&, const RowSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> members_;
};

/// Nonempty sequence of 0/1 entries.
class BinarySequence {
 public:
  BinarySequence() = default;
  explicit BinarySequence(std::vector<std::uint8_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorCode::InvalidInput, "binary sequence must be nonempty");
    for (auto e : entries_)
      if (e > 1) throw Error(ErrorCode::InvalidInput, "binary sequence entries must be 0 or 1");
  }

  static BinarySequence from_string(const std::string& s) {
    std::vector<std::uint8_t> v;
    v.reserve(s.size());
    for (char ch : s) {
      if (ch != '0' && ch != '1') throw Error(ErrorCode::InvalidInput, "sequence characters must be '0' or '1'");
      v.push_back(ch == '1');
    }
    return BinarySequence(std::move(v));
  }

  const std::vector<std::uint8_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t zeros() const { return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), 0)); }
  std::size_t ones() const { return entries_.size() - zeros(); }

  std::string to_string() const {
    std::string s;
    s.reserve(entries_.size());
    for (auto e : entries_) s.push_back(e ? '1' : '0');
    return s;
  }

  friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

 private:
  std::vector<std::uint8_t> entries_;
};

}  // namespace dope

#endif  // DOPE_TYPES_HPP
