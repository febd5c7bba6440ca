#pragma once

// Row duplication (alpha), strip appending (beta), the lifting map that
// sends a maximal chain of T_n to one of T_{n+1} with a chosen minimal
// plus-full-set (phi), its inverse, and the unique decomposition of a
// maximal chain into a plus-full-set-free base and lifting parameters.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tamari/errors.hpp"
#include "tamari/tableau.hpp"

namespace tamari {

namespace detail {

// Keeps the ambient index if the rows fit, otherwise grows it by one.
inline Tableau fit_ambient(int n, std::vector<std::vector<int>> rows) {
  bool fits = true;
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (static_cast<int>(rows[x].size()) > n - 1 - static_cast<int>(x)) {
      fits = false;
    }
  }
  return Tableau(fits ? n : n + 1, std::move(rows));
}

}  // namespace detail

/// Shifts rows below d down one row and repeats row d in row d+1. A
/// tableau with empty row d is returned unchanged.
inline Tableau alpha(const Tableau& t, int d) {
  if (d < 1) throw ArgumentError("alpha needs d >= 1");
  if (t.row_length(d) == 0) return t;
  auto rows = t.rows();
  rows.insert(rows.begin() + d, rows[static_cast<std::size_t>(d - 1)]);
  return detail::fit_ambient(t.n(), std::move(rows));
}

/// Deletes row d+1, which must repeat row d, and shifts lower rows up. The
/// ambient index is kept.
inline Tableau alpha_inv(const Tableau& t, int d) {
  if (d < 1) throw ArgumentError("alpha_inv needs d >= 1");
  if (t.row_length(d) == 0 && t.row_length(d + 1) == 0) return t;
  const auto& rows = t.rows();
  if (t.row_length(d) != t.row_length(d + 1) ||
      rows[static_cast<std::size_t>(d - 1)] != rows[static_cast<std::size_t>(d)]) {
    throw DomainError("rows " + std::to_string(d) + " and " +
                      std::to_string(d + 1) + " are not identical");
  }
  auto out = rows;
  out.erase(out.begin() + d);
  return Tableau(t.n(), std::move(out));
}

/// Appends a box labelled l+1 to each of rows 1..d.
inline Tableau beta(const Tableau& t, int d) {
  if (d < 1) throw ArgumentError("beta needs d >= 1");
  auto rows = t.rows();
  if (static_cast<int>(rows.size()) < d) rows.resize(static_cast<std::size_t>(d));
  for (int x = 0; x < d; ++x) {
    rows[static_cast<std::size_t>(x)].push_back(t.length() + 1);
  }
  for (std::size_t x = 1; x < rows.size(); ++x) {
    if (rows[x].size() > rows[x - 1].size()) {
      throw DomainError("appended boxes do not form a diagram");
    }
  }
  Tableau out = detail::fit_ambient(t.n(), std::move(rows));
  if (!validate_tableau(out)) {
    throw DomainError("appending label " + std::to_string(t.length() + 1) +
                      " breaks row/column monotonicity");
  }
  return out;
}

/// The minimal k in [n-1] whose outer-diagonal label C(k, n-k) is <= r, or n
/// when there is none.
inline int choose_d(const MaximalChain& c, int r) {
  const int n = c.n();
  for (int k = 1; k <= n - 1; ++k) {
    if (c.at(k, n - k) <= r) return k;
  }
  return n;
}

/// Lifts C in C_i(n) to a chain of C_i(n+1) whose (r+1)-set is a
/// plus-full-set ending at (d, n-d+1):
///   1. duplicate row d of the truncation at r,
///   2. append r+1 to rows 1..d,
///   3. move labels > r of rows above d one column right and below d one
///      row down, adding one to each.
inline MaximalChain phi_hat(const MaximalChain& c, int r) {
  const int n = c.n();
  if (r < 0 || r > c.length()) {
    throw RangeError("lifting parameter r=" + std::to_string(r) +
                     " outside [0," + std::to_string(c.length()) + "]");
  }
  const int d = choose_d(c, r);
  const Tableau& t = c.tableau();

  auto kept = [&](int x) {
    std::vector<int> row;
    for (int y = 1; y <= t.row_length(x); ++y) {
      if (t.at(x, y) <= r) row.push_back(t.at(x, y));
    }
    return row;
  };

  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    auto& row = rows[static_cast<std::size_t>(x - 1)];
    if (x <= d) {
      row = kept(x);
      row.push_back(r + 1);
    } else {
      row = kept(x - 1);
    }
  }
  for (int x = 1; x <= n - 1; ++x) {
    for (int y = 1; y <= t.row_length(x); ++y) {
      const int v = t.at(x, y);
      if (v <= r) continue;
      if (x == d) {
        throw std::logic_error("row d carries a label above r");
      }
      rows[static_cast<std::size_t>(x < d ? x - 1 : x)].push_back(v + 1);
    }
  }
  return MaximalChain::from_construction(Tableau(n + 1, std::move(rows)));
}

struct PhiParams {
  int i = -1;
  int n = 1;
  int r = 0;
};

inline void validate_phi_params(const PhiParams& p) {
  if (p.i < -1 || p.n < 1 || p.r < 0 || p.r > p.n + p.i) {
    throw RangeError("need i >= -1, n >= 1 and 0 <= r <= n+i; got i=" +
                     std::to_string(p.i) + " n=" + std::to_string(p.n) +
                     " r=" + std::to_string(p.r));
  }
}

/// The bijection from chains of C_i(n) with no j-plus-full-set for j <= r
/// onto the chains of C_i(n+1) whose minimal plus-full-set label is r+1.
inline MaximalChain phi(const MaximalChain& c, int r) {
  validate_phi_params({c.i(), c.n(), r});
  for (int j = 1; j <= r; ++j) {
    if (classify_r_set(c, j) == RSetClass::PlusFull) {
      throw DomainError("chain has a " + std::to_string(j) +
                            "-plus-full-set, outside the domain for r=" +
                            std::to_string(r),
                        j);
    }
  }
  return phi_hat(c, r);
}

inline MaximalChain phi(const MaximalChain& c, const PhiParams& p) {
  validate_phi_params(p);
  if (c.n() != p.n || c.i() != p.i) {
    throw ArgumentError("chain is not in C_" + std::to_string(p.i) + "(" +
                        std::to_string(p.n) + ")");
  }
  return phi(c, p.r);
}

struct PhiInverse {
  int r = 0;
  MaximalChain chain;
};

/// Undoes phi: r+1 is the minimal plus-full-set label of `lifted`.
inline PhiInverse phi_inv(const MaximalChain& lifted) {
  const std::vector<int> labels = plus_full_set_labels(lifted);
  if (labels.empty()) {
    throw NotInImageError("chain has no plus-full-set, so it is not a lift");
  }
  const int r = labels.front() - 1;
  const int m = lifted.n();
  const int n = m - 1;
  const int d = lifted.tableau().label_set(r + 1).back().row;
  const Tableau& t = lifted.tableau();

  auto kept = [&](int x) {
    std::vector<int> row;
    for (int y = 1; y <= t.row_length(x); ++y) {
      if (t.at(x, y) <= r) row.push_back(t.at(x, y));
    }
    return row;
  };
  if (kept(d) != kept(d + 1)) {
    throw std::logic_error("rows d and d+1 below the full-set differ");
  }

  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    rows[static_cast<std::size_t>(x - 1)] = kept(x <= d ? x : x + 1);
  }
  for (int x = 1; x <= m - 1; ++x) {
    for (int y = 1; y <= t.row_length(x); ++y) {
      const int v = t.at(x, y);
      if (v <= r + 1) continue;
      if (x == d || x == d + 1) {
        throw std::logic_error("full rows carry a label above r+1");
      }
      rows[static_cast<std::size_t>(x < d ? x - 1 : x - 2)].push_back(v - 1);
    }
  }
  return {r, MaximalChain::from_construction(Tableau(n, std::move(rows)))};
}

/// base (no plus-full-sets, in T_{n-t}) and parameters r_1 <= ... <= r_t
/// such that the chain equals phi^{r_1}(phi^{r_2}(... phi^{r_t}(base))).
struct ChainDecomposition {
  MaximalChain base;
  std::vector<int> params;

  int n() const { return base.n() + static_cast<int>(params.size()); }
  friend bool operator==(const ChainDecomposition&,
                         const ChainDecomposition&) = default;
};

inline ChainDecomposition decompose(const MaximalChain& c) {
  ChainDecomposition dec{c, {}};
  while (!plus_full_set_labels(dec.base).empty()) {
    PhiInverse step = phi_inv(dec.base);
    dec.params.push_back(step.r);
    dec.base = std::move(step.chain);
  }
  return dec;
}

inline MaximalChain recompose(const ChainDecomposition& dec) {
  if (!plus_full_set_labels(dec.base).empty()) {
    throw DomainError("decomposition base has a plus-full-set");
  }
  const auto& p = dec.params;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const int upper = (k + 1 < p.size()) ? p[k + 1] : dec.base.length();
    if (p[k] < 0 || p[k] > upper) {
      throw RangeError("parameters must satisfy 0 <= r_1 <= ... <= r_t <= " +
                       std::to_string(dec.base.length()));
    }
  }
  MaximalChain c = dec.base;
  for (std::size_t k = p.size(); k-- > 0;) c = phi(c, p[k]);
  return c;
}

/// A chain of C_i(2i+3) with no plus-full-sets: single outer-diagonal boxes
/// (n-2k-1, 2k+1) get labels n+i-k for 0 <= k <= i, and every other box is
/// labelled by its column.
inline MaximalChain witness_no_pfs(int i) {
  if (i < -1) throw ArgumentError("witness needs i >= -1");
  if (i == -1) return MaximalChain(Tableau(1, {}));
  const int n = 2 * i + 3;
  std::vector<std::vector<int>> rows;
  for (int x = 1; x <= n - 1; ++x) {
    std::vector<int> row;
    for (int y = 1; y <= n - x; ++y) row.push_back(y);
    rows.push_back(std::move(row));
  }
  for (int k = 0; k <= i; ++k) {
    rows[static_cast<std::size_t>(n - (2 * k + 1) - 1)]
        [static_cast<std::size_t>(2 * k)] = n + i - k;
  }
  return MaximalChain::from_construction(Tableau(n, std::move(rows)));
}

inline std::string format_params(const std::vector<int>& params) {
  std::string out;
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(params[k]);
  }
  return out;
}

inline std::vector<int> parse_params(std::string_view text) {
  std::vector<int> out;
  if (text.empty() || text == "-") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string field(text.substr(pos, comma - pos));
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("bad parameter list: '" + std::string(text) + "'");
    }
    out.push_back(std::stoi(field));
    pos = comma + 1;
  }
  return out;
}

}  // namespace tamari
