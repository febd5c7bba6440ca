#pragma once

// Row-strict tableaux, the encoding of saturated chains as tableaux, and the
// full-set / plus-full-set classification of maximal chains.
//
// A saturated chain  null = Y_0 > Y_1 > ... > Y_l  (each Y_{r-1} covering
// Y_r) is encoded by labelling the boxes of Y_r \ Y_{r-1} with r.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tamari/errors.hpp"
#include "tamari/shapes.hpp"

#ifndef TAMARI_CHECK_OUTPUTS
#ifdef NDEBUG
#define TAMARI_CHECK_OUTPUTS 0
#else
#define TAMARI_CHECK_OUTPUTS 1
#endif
#endif

namespace tamari {

/// Diagram filled with positive labels, with ambient lattice index n (the
/// shape fits inside the staircase (n-1, ..., 1)). Construction checks only
/// the shape; label constraints are checked by `validate_tableau`.
class Tableau {
 public:
  Tableau() = default;

  Tableau(int n, std::vector<std::vector<int>> rows)
      : n_(n), rows_(std::move(rows)) {
    if (n_ < 1) throw ArgumentError("lattice index n must be positive");
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t x = 0; x < rows_.size(); ++x) {
      if (rows_[x].empty()) {
        throw ValidationError("tableau has an empty row above a nonempty one");
      }
      if (x > 0 && rows_[x].size() > rows_[x - 1].size()) {
        throw ValidationError("tableau row lengths must weakly decrease");
      }
      if (static_cast<int>(rows_[x].size()) > n_ - 1 - static_cast<int>(x)) {
        throw ContainmentError("tableau shape does not fit inside T_" +
                               std::to_string(n_));
      }
      for (int v : rows_[x]) {
        if (v <= 0) throw ValidationError("tableau labels must be positive");
        max_label_ = std::max(max_label_, v);
      }
    }
    by_label_.assign(static_cast<std::size_t>(max_label_) + 1, {});
    for (std::size_t x = 0; x < rows_.size(); ++x) {
      for (std::size_t y = 0; y < rows_[x].size(); ++y) {
        by_label_[static_cast<std::size_t>(rows_[x][y])].push_back(
            {static_cast<int>(x) + 1, static_cast<int>(y) + 1});
      }
    }
    for (int r = 1; r <= max_label_; ++r) {
      if (!by_label_[static_cast<std::size_t>(r)].empty()) ++length_;
    }
  }

  int n() const noexcept { return n_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  bool empty() const noexcept { return rows_.empty(); }

  int row_length(int x) const noexcept {
    return (x >= 1 && x <= num_rows())
               ? static_cast<int>(rows_[static_cast<std::size_t>(x - 1)].size())
               : 0;
  }

  /// Label at (x, y), or 0 when there is no such box.
  int at(int x, int y) const noexcept {
    return (y >= 1 && y <= row_length(x))
               ? rows_[static_cast<std::size_t>(x - 1)]
                      [static_cast<std::size_t>(y - 1)]
               : 0;
  }
  int at(Box b) const noexcept { return at(b.row, b.col); }

  Partition shape() const {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
  }

  /// Number of distinct labels.
  int length() const noexcept { return length_; }
  int max_label() const noexcept { return max_label_; }

  /// Boxes labelled r, ordered by row (English reading order).
  const std::vector<Box>& label_set(int r) const {
    static const std::vector<Box> kNone;
    return (r >= 1 && r <= max_label_) ? by_label_[static_cast<std::size_t>(r)]
                                       : kNone;
  }

  /// Same labels, different ambient lattice index.
  Tableau with_ambient(int n) const { return Tableau(n, rows_); }

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  int n_ = 1;
  std::vector<std::vector<int>> rows_;
  int max_label_ = 0;
  int length_ = 0;
  std::vector<std::vector<Box>> by_label_;
};

/// Rows strictly increase, columns weakly increase, labels are exactly [l].
inline bool validate_tableau(const Tableau& t) {
  if (t.max_label() != t.length()) return false;
  for (int x = 1; x <= t.num_rows(); ++x) {
    for (int y = 1; y <= t.row_length(x); ++y) {
      if (y > 1 && t.at(x, y - 1) >= t.at(x, y)) return false;
      if (x > 1 && t.at(x - 1, y) > t.at(x, y)) return false;
    }
  }
  return true;
}

/// The subtableau of labels <= r.
inline Tableau truncate(const Tableau& t, int r) {
  if (r < 0 || r > t.length()) {
    throw RangeError("truncation level " + std::to_string(r) +
                     " outside [0," + std::to_string(t.length()) + "]");
  }
  std::vector<std::vector<int>> rows;
  for (const auto& row : t.rows()) {
    std::vector<int> kept;
    for (int v : row) {
      if (v <= r) kept.push_back(v);
    }
    rows.push_back(std::move(kept));
  }
  return Tableau(t.n(), std::move(rows));
}

namespace detail {

// True iff, after placing the label set `rows_of_set` (one box per listed
// row, each at the end of its row in `lengths`), that set is the strip of
// its lowest box. `lengths[x]` is the length of row x after placement;
// index 0 is unused and the vector must extend one row past the diagram.
inline bool set_is_last_strip(const std::vector<int>& lengths, int n,
                              const std::vector<Box>& set) {
  if (set.empty()) return false;
  const int end_row = set.back().row;
  auto len = [&lengths](int j) {
    return j < static_cast<int>(lengths.size())
               ? lengths[static_cast<std::size_t>(j)]
               : 0;
  };
  const int h = prime_height_of_row(len, n, end_row);
  if (static_cast<int>(set.size()) != h) return false;
  for (int k = 0; k < h; ++k) {
    const Box& b = set[static_cast<std::size_t>(k)];
    if (b.row != end_row - h + 1 + k || b.col != len(b.row)) return false;
  }
  return true;
}

}  // namespace detail

/// True iff `t` encodes a saturated chain ending at the null diagram: for
/// every k the k-set is the strip of its end-box in the truncation at k.
/// Checked level by level, so each step costs O(rows).
inline bool is_psi_tableau(const Tableau& t) {
  if (!validate_tableau(t)) return false;
  std::vector<int> lengths(static_cast<std::size_t>(t.num_rows()) + 2, 0);
  for (int k = 1; k <= t.length(); ++k) {
    const std::vector<Box>& set = t.label_set(k);
    for (const Box& b : set) {
      if (b.col != lengths[static_cast<std::size_t>(b.row)] + 1) return false;
      ++lengths[static_cast<std::size_t>(b.row)];
    }
    if (!detail::set_is_last_strip(lengths, t.n(), set)) return false;
  }
  return true;
}

/// Encodes the chain (null = Y_0, Y_1, ..., Y_l), each Y_{r-1} an upper
/// cover of Y_r in T_n.
inline Tableau psi(const std::vector<Partition>& chain, int n) {
  if (chain.empty() || !chain.front().empty()) {
    throw ChainError("a chain must start at the null diagram");
  }
  require_contained(chain.back(), n);
  for (std::size_t r = 1; r < chain.size(); ++r) {
    const auto covers = upper_covers(chain[r], n);
    if (std::find(covers.begin(), covers.end(), chain[r - 1]) ==
        covers.end()) {
      throw ChainError(to_string(chain[r - 1]) + " does not cover " +
                       to_string(chain[r]));
    }
  }
  const Partition& bottom = chain.back();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(bottom.num_rows()));
  for (std::size_t r = 1; r < chain.size(); ++r) {
    for (int x = 1; x <= bottom.num_rows(); ++x) {
      for (int y = chain[r - 1].row(x) + 1; y <= chain[r].row(x); ++y) {
        rows[static_cast<std::size_t>(x - 1)].push_back(static_cast<int>(r));
      }
    }
  }
  return Tableau(n, std::move(rows));
}

/// The unique chain encoded by a psi-tableau.
inline std::vector<Partition> psi_inverse(const Tableau& t) {
  if (!is_psi_tableau(t)) {
    throw EncodingError("tableau does not encode a saturated chain");
  }
  std::vector<Partition> chain;
  for (int r = 0; r <= t.length(); ++r) chain.push_back(truncate(t, r).shape());
  return chain;
}

/// Boxes of maximal x + y, ordered by row.
inline std::vector<Box> outer_diagonal(const Tableau& t) {
  int m = 0;
  for (int x = 1; x <= t.num_rows(); ++x) m = std::max(m, x + t.row_length(x));
  std::vector<Box> diag;
  if (m == 0) return diag;
  for (int x = 1; x <= t.num_rows(); ++x) {
    if (x + t.row_length(x) == m) diag.push_back({x, t.row_length(x)});
  }
  return diag;
}

/// A psi-tableau of staircase shape (n-1, ..., 1): a maximal chain of T_n.
class MaximalChain {
 public:
  explicit MaximalChain(Tableau t) : t_(std::move(t)) {
    if (t_.shape() != Partition::staircase(t_.n() - 1)) {
      throw EncodingError("a maximal chain of T_" + std::to_string(t_.n()) +
                          " must have staircase shape");
    }
    if (!is_psi_tableau(t_)) {
      throw EncodingError("tableau does not encode a saturated chain");
    }
  }

  /// For tableaux produced by a map proven to land on maximal chains.
  /// Re-validated only when TAMARI_CHECK_OUTPUTS is on.
  static MaximalChain from_construction(Tableau t) {
    if constexpr (TAMARI_CHECK_OUTPUTS) {
      return MaximalChain(std::move(t));
    } else {
      MaximalChain c;
      c.t_ = std::move(t);
      return c;
    }
  }

  const Tableau& tableau() const noexcept { return t_; }
  int n() const noexcept { return t_.n(); }
  int length() const noexcept { return t_.length(); }
  /// The chain lies in C_i(n) with length n + i.
  int i() const noexcept { return t_.length() - t_.n(); }
  int at(int x, int y) const noexcept { return t_.at(x, y); }

  friend bool operator==(const MaximalChain&, const MaximalChain&) = default;

 private:
  MaximalChain() = default;
  Tableau t_;
};

enum class RSetClass { NotFull, Full, PlusFull };

inline const char* to_string(RSetClass c) {
  switch (c) {
    case RSetClass::NotFull:
      return "not-full";
    case RSetClass::Full:
      return "full";
    case RSetClass::PlusFull:
      return "plus-full";
  }
  return "?";
}

/// Full: the r-set begins in row 1 and ends on the outer diagonal, at some
/// (k, n-k). Plus-full additionally: k = n-1, or the southwest neighbour
/// (k+1, n-k-1) carries a smaller label.
inline RSetClass classify_r_set(const MaximalChain& c, int r) {
  if (r < 1 || r > c.length()) {
    throw RangeError("label " + std::to_string(r) + " outside [1," +
                     std::to_string(c.length()) + "]");
  }
  const std::vector<Box>& set = c.tableau().label_set(r);
  const int n = c.n();
  const Box end = set.back();
  if (set.front().row != 1 || end.row + end.col != n) return RSetClass::NotFull;
  const int k = end.row;
  if (k == n - 1) return RSetClass::PlusFull;
  return c.at(k + 1, n - k - 1) < r ? RSetClass::PlusFull : RSetClass::Full;
}

/// Labels r whose r-set is a plus-full-set, ascending.
inline std::vector<int> plus_full_set_labels(const MaximalChain& c) {
  std::vector<int> labels;
  for (int r = 1; r <= c.length(); ++r) {
    if (classify_r_set(c, r) == RSetClass::PlusFull) labels.push_back(r);
  }
  return labels;
}

// Text form:
//   n=<n> l=<l>
//   one line per nonempty row; labels right-aligned to the width of the
//   largest label, separated by single spaces.

inline std::string to_text(const Tableau& t) {
  std::ostringstream out;
  out << "n=" << t.n() << " l=" << t.length() << '\n';
  const std::size_t width = std::to_string(std::max(1, t.max_label())).size();
  for (const auto& row : t.rows()) {
    for (std::size_t y = 0; y < row.size(); ++y) {
      std::string cell = std::to_string(row[y]);
      if (y > 0) out << ' ';
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline bool parse_header(const std::string& line, int& n, int& l) {
  std::istringstream in(line);
  std::string a, b, rest;
  if (!(in >> a >> b) || (in >> rest)) return false;
  if (a.rfind("n=", 0) != 0 || b.rfind("l=", 0) != 0) return false;
  try {
    std::size_t used = 0;
    n = std::stoi(a.substr(2), &used);
    if (used != a.size() - 2) return false;
    l = std::stoi(b.substr(2), &used);
    return used == b.size() - 2;
  } catch (const std::exception&) {
    return false;
  }
}

inline std::vector<int> parse_row(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> row;
  std::string field;
  while (in >> field) {
    if (field.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("bad tableau label: '" + field + "'");
    }
    row.push_back(std::stoi(field));
  }
  return row;
}

}  // namespace detail

/// Reads every tableau in a stream of text-form tableaux. A header line
/// starts a new tableau; blank lines are ignored.
inline std::vector<Tableau> parse_tableaux(std::istream& in) {
  std::vector<Tableau> out;
  bool open = false;
  int n = 0, l = 0;
  std::vector<std::vector<int>> rows;
  auto close = [&] {
    if (!open) return;
    Tableau t(n, std::move(rows));
    if (t.length() != l) {
      throw ValidationError("header length l=" + std::to_string(l) +
                            " disagrees with the labels");
    }
    out.push_back(std::move(t));
    rows.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    int hn = 0, hl = 0;
    if (detail::parse_header(line, hn, hl)) {
      close();
      open = true;
      n = hn;
      l = hl;
      continue;
    }
    if (!open) throw ValidationError("tableau text must start with n=<n> l=<l>");
    rows.push_back(detail::parse_row(line));
  }
  close();
  return out;
}

inline Tableau parse_tableau(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto all = parse_tableaux(in);
  if (all.size() != 1) {
    throw ValidationError("expected exactly one tableau, found " +
                          std::to_string(all.size()));
  }
  return std::move(all.front());
}

}  // namespace tamari
