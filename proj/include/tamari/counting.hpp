#pragma once

// Exact counts of maximal chains of T_n by length, brute-force
// plus-full-set profiles, the counting recursion with its inclusion-
// exclusion inverse, closed formulas and the numerical checks built on them.

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamari/count.hpp"
#include "tamari/enumerate.hpp"
#include "tamari/errors.hpp"
#include "tamari/tableau.hpp"

namespace tamari {

/// Length -> number of maximal chains of T_n with that length.
struct LengthHistogram {
  int n = 1;
  std::map<int, Count> counts;

  Count at(int length) const {
    auto it = counts.find(length);
    return it == counts.end() ? Count(0) : it->second;
  }
  Count total() const {
    Count sum = 0;
    for (const auto& [len, c] : counts) sum += c;
    return sum;
  }
  friend bool operator==(const LengthHistogram&, const LengthHistogram&) = default;
};

namespace detail {

template <class Int>
struct LengthPoly {
  int lo = 0;
  std::vector<Int> coeff;  // coeff[k] counts paths of length lo + k
};

// Counts saturated chains from each vertex up to the null diagram, by
// length, in one pass over the vertices (covers point to lower indices).
template <class Int>
LengthHistogram dp_histogram(const TamariGraph& g, bool avoid_plus_full,
                             std::optional<int> max_length) {
  std::vector<LengthPoly<Int>> dp(g.size());
  dp[g.top()] = {0, {Int(1)}};
  for (std::size_t v = g.top() + 1; v < g.size(); ++v) {
    int lo = INT_MAX;
    int hi = -1;
    for (const auto& e : g.covers(v)) {
      if (avoid_plus_full && e.plus_full) continue;
      const auto& p = dp[e.target];
      if (p.coeff.empty()) continue;
      lo = std::min(lo, p.lo + 1);
      hi = std::max(hi, p.lo + static_cast<int>(p.coeff.size()));
    }
    if (max_length) hi = std::min(hi, *max_length);
    if (lo > hi) continue;
    LengthPoly<Int> out{lo, std::vector<Int>(static_cast<std::size_t>(hi - lo + 1))};
    for (const auto& e : g.covers(v)) {
      if (avoid_plus_full && e.plus_full) continue;
      const auto& p = dp[e.target];
      for (std::size_t k = 0; k < p.coeff.size(); ++k) {
        const int len = p.lo + 1 + static_cast<int>(k);
        if (len > hi) break;
        checked_add(out.coeff[static_cast<std::size_t>(len - lo)], p.coeff[k]);
      }
    }
    dp[v] = std::move(out);
  }
  LengthHistogram h;
  h.n = g.n();
  const auto& root = dp[g.bottom()];
  for (std::size_t k = 0; k < root.coeff.size(); ++k) {
    if (root.coeff[k] != 0) h.counts[root.lo + static_cast<int>(k)] = Count(root.coeff[k]);
  }
  return h;
}

inline LengthHistogram dp_histogram_exact(const TamariGraph& g, bool avoid_plus_full,
                                          std::optional<int> max_length) {
  try {
    return dp_histogram<std::uint64_t>(g, avoid_plus_full, max_length);
  } catch (const Overflow&) {
    return dp_histogram<Count>(g, avoid_plus_full, max_length);
  }
}

}  // namespace detail

/// Maximal chains of T_n by length, optionally only lengths <= max_length.
inline LengthHistogram count_by_length(const TamariGraph& g,
                                       std::optional<int> max_length = std::nullopt) {
  return detail::dp_histogram_exact(g, false, max_length);
}

inline LengthHistogram count_by_length(int n, std::optional<int> max_length = std::nullopt) {
  return count_by_length(TamariGraph(n), max_length);
}

/// Maximal chains of T_n with no plus-full-sets, by length.
inline LengthHistogram nofull_by_length(const TamariGraph& g,
                                        std::optional<int> max_length = std::nullopt) {
  return detail::dp_histogram_exact(g, true, max_length);
}

inline LengthHistogram nofull_by_length(int n, std::optional<int> max_length = std::nullopt) {
  return nofull_by_length(TamariGraph(n), max_length);
}

/// Same histogram by walking every maximal chain.
inline LengthHistogram count_by_length_brute(const TamariGraph& g, unsigned threads = 1) {
  struct Worker {
    std::vector<std::uint64_t> by_len;
    void operator()(std::span<const ChainStep> path) {
      if (by_len.size() <= path.size()) by_len.resize(path.size() + 1);
      ++by_len[path.size()];
    }
  };
  auto workers = parallel_chain_paths(g, threads, [] { return Worker{}; });
  LengthHistogram h;
  h.n = g.n();
  for (const Worker& w : workers) {
    for (std::size_t len = 0; len < w.by_len.size(); ++len) {
      if (w.by_len[len] != 0) h.counts[static_cast<int>(len)] += w.by_len[len];
    }
  }
  return h;
}

inline LengthHistogram count_by_length_brute(int n, unsigned threads = 1) {
  return count_by_length_brute(TamariGraph(n), threads);
}

/// Chains of C_i(n) grouped by their set of plus-full-set labels; bit j-1 of
/// a mask stands for label j.
struct PlusFullProfile {
  int i = -1;
  int n = 1;
  std::map<std::uint64_t, std::uint64_t> by_mask;

  Count total() const {
    Count sum = 0;
    for (const auto& [m, c] : by_mask) sum += c;
    return sum;
  }
  Count nofull() const {
    auto it = by_mask.find(0);
    return it == by_mask.end() ? Count(0) : Count(it->second);
  }
  Count exact(std::uint64_t mask) const {
    auto it = by_mask.find(mask);
    return it == by_mask.end() ? Count(0) : Count(it->second);
  }
  /// Sizes of F_i^j(n): chains whose minimal plus-full-set label is j.
  std::vector<Count> min_label_sizes() const {
    std::vector<Count> f(static_cast<std::size_t>(std::max(n + i, 0)));
    for (const auto& [m, c] : by_mask) {
      if (m != 0) f[static_cast<std::size_t>(std::countr_zero(m))] += c;
    }
    return f;
  }
};

/// Enumerates T_n once and classifies every chain's r-sets from its
/// tableau. Keyed by chain length.
inline std::map<int, PlusFullProfile> plus_full_profiles(int n, unsigned threads = 1) {
  const TamariGraph g(n);
  using ByLength = std::map<int, std::map<std::uint64_t, std::uint64_t>>;
  struct Worker {
    const TamariGraph* g;
    ByLength seen;
    void operator()(std::span<const ChainStep> path) {
      const MaximalChain c = MaximalChain::from_construction(chain_tableau(*g, path));
      std::uint64_t mask = 0;
      for (int j : plus_full_set_labels(c)) mask |= std::uint64_t{1} << (j - 1);
      ++seen[c.length()][mask];
    }
  };
  auto workers = parallel_chain_paths(g, threads, [&g] { return Worker{&g, {}}; });
  std::map<int, PlusFullProfile> out;
  for (const Worker& w : workers) {
    for (const auto& [len, masks] : w.seen) {
      PlusFullProfile& p = out[len];
      p.i = len - n;
      p.n = n;
      for (const auto& [m, c] : masks) p.by_mask[m] += c;
    }
  }
  return out;
}

/// Number of chains of C_i(n) with no plus-full-set, by classification of
/// every enumerated chain.
inline Count count_nofull_brute(int i, int n, unsigned threads = 1) {
  const auto profiles = plus_full_profiles(n, threads);
  auto it = profiles.find(n + i);
  return it == profiles.end() ? Count(0) : it->second.nofull();
}

/// N_i(t) for t in [2i+3]; larger t are zero.
class NoFullTable {
 public:
  void set(int i, int t, Count value) {
    if (i < -1 || t < 1 || t > 2 * i + 3) {
      throw ArgumentError("no-full table holds 1 <= t <= 2i+3; got i=" + std::to_string(i) +
                          " t=" + std::to_string(t));
    }
    entries_[{i, t}] = std::move(value);
  }
  bool has(int i, int t) const { return t > 2 * i + 3 || entries_.count({i, t}) > 0; }
  Count get(int i, int t) const {
    if (t > 2 * i + 3) return 0;
    auto it = entries_.find({i, t});
    if (it == entries_.end()) {
      throw CacheMissError("N_" + std::to_string(i) + "(" + std::to_string(t) +
                           ") is not available");
    }
    return it->second;
  }
  bool complete(int i) const {
    for (int t = 1; t <= 2 * i + 3; ++t) {
      if (!has(i, t)) return false;
    }
    return true;
  }
  void merge(const NoFullTable& other) {
    for (const auto& [key, v] : other.entries_) entries_[key] = v;
  }
  const std::map<std::pair<int, int>, Count>& entries() const { return entries_; }
  friend bool operator==(const NoFullTable&, const NoFullTable&) = default;

 private:
  std::map<std::pair<int, int>, Count> entries_;
};

/// sum_{t=1}^{n} (-1)^{n-t} C(n+i, t+i) #C_i(t).
inline Count nofull_by_inclusion_exclusion(int i, int n,
                                           const std::function<Count(int)>& chains) {
  Count sum = 0;
  for (int t = 1; t <= n; ++t) {
    const Count term = binomial(n + i, t + i) * chains(t);
    if ((n - t) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

/// sum_{t=1}^{n} C(n+i, t+i) N_i(t).
inline Count chains_by_direct_sum(int i, int n, const std::function<Count(int)>& nofull) {
  Count sum = 0;
  for (int t = 1; t <= n; ++t) sum += binomial(n + i, t + i) * nofull(t);
  return sum;
}

/// Supplies the length histogram of T_t; may throw CacheMissError.
using HistogramSource = std::function<LengthHistogram(int)>;

/// N_i(1..max_t) by inclusion-exclusion over #C_i(t); max_t defaults to
/// 2i+3, the full slice.
inline NoFullTable nofull_initial_values(int i, const HistogramSource& histograms,
                                         std::optional<int> max_t = std::nullopt) {
  if (i < -1) throw ArgumentError("need i >= -1");
  const int last = std::min(max_t.value_or(2 * i + 3), 2 * i + 3);
  std::map<int, Count> chains;
  for (int t = 1; t <= last; ++t) chains[t] = histograms(t).at(t + i);
  NoFullTable table;
  for (int n = 1; n <= last; ++n) {
    table.set(i, n, nofull_by_inclusion_exclusion(i, n, [&](int t) { return chains.at(t); }));
  }
  return table;
}

inline NoFullTable nofull_initial_values(int i, const std::map<int, LengthHistogram>& known,
                                         std::optional<int> max_t = std::nullopt) {
  return nofull_initial_values(i, [&known](int t) {
    auto it = known.find(t);
    if (it == known.end()) {
      throw CacheMissError("no chain counts for T_" + std::to_string(t));
    }
    return it->second;
  }, max_t);
}

/// #C_i(n) = sum_{t=1}^{2i+3} C(n+i, t+i) N_i(t). Terms with t > n vanish
/// and need no table entry.
inline Count chains_count(int i, int n, const NoFullTable& table) {
  if (i < -1 || n < 1) throw ArgumentError("need i >= -1 and n >= 1");
  Count sum = 0;
  for (int t = 1; t <= std::min(n, 2 * i + 3); ++t) sum += binomial(n + i, t + i) * table.get(i, t);
  return sum;
}

/// C(n,2)! prod_{k=1}^{n-2} k! / prod_{k=1}^{n-1} (2k-1)!.
inline Count longest_chain_count(int n) {
  if (n < 1) throw ArgumentError("need n >= 1");
  Count num = factorial(static_cast<std::int64_t>(n) * (n - 1) / 2);
  for (int k = 1; k <= n - 2; ++k) num *= factorial(k);
  Count den = 1;
  for (int k = 1; k <= n - 1; ++k) den *= factorial(2 * k - 1);
  return num / den;
}

struct ConjectureValues {
  Count top;                   // conjectured N_i(2i+3)
  std::optional<Count> below;  // conjectured N_i(2i+2), i >= 0
  bool integral = true;        // whether 5 divides i * prod
};

inline ConjectureValues conjecture_values(int i) {
  if (i < -1) throw ArgumentError("need i >= -1");
  Count prod = 1;
  for (int j = 1; j <= i + 1; ++j) prod *= binomial(3 * j - 1, 2);
  ConjectureValues v{prod, std::nullopt, true};
  if (i >= 0) {
    const Count scaled = prod * i;
    v.integral = scaled % 5 == 0;
    v.below = scaled / 5;
  }
  return v;
}

struct CheckResult {
  bool ok = true;
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// Supplies the brute profiles of T_t keyed by length.
using ProfileSource = std::function<const std::map<int, PlusFullProfile>&(int)>;

/// For every U in [n+i] with |U| = t <= n-1: the chains whose plus-full-set
/// labels are exactly U number N_i(n-t), and those containing U number
/// #C_i(n-t).
inline CheckResult equal_representation_check(int i, int n, const ProfileSource& profiles) {
  const int labels = n + i;
  if (labels < 0 || labels > 26) throw ArgumentError("equal representation needs 0 <= n+i <= 26");
  const std::size_t size = std::size_t{1} << labels;
  std::vector<std::uint64_t> exact(size, 0);
  {
    const auto& at_n = profiles(n);
    auto it = at_n.find(labels);
    if (it != at_n.end()) {
      for (const auto& [m, c] : it->second.by_mask) exact[m] = c;
    }
  }
  std::vector<std::uint64_t> superset = exact;
  for (int b = 0; b < labels; ++b) {
    for (std::size_t m = 0; m < size; ++m) {
      if (!(m & (std::size_t{1} << b))) superset[m] += superset[m | (std::size_t{1} << b)];
    }
  }
  std::vector<std::pair<Count, Count>> expected;  // by t: (N_i(n-t), #C_i(n-t))
  for (int t = 0; t <= n - 1; ++t) {
    const auto& below = profiles(n - t);
    auto it = below.find(n - t + i);
    if (it == below.end()) {
      expected.emplace_back(0, 0);
    } else {
      expected.emplace_back(it->second.nofull(), it->second.total());
    }
  }
  for (std::size_t m = 0; m < size; ++m) {
    const int t = std::popcount(m);
    if (t > n - 1) continue;
    const auto& [want_exact, want_super] = expected[static_cast<std::size_t>(t)];
    if (Count(exact[m]) != want_exact || Count(superset[m]) != want_super) {
      std::string u;
      for (int j = 1; j <= labels; ++j) {
        if (m & (std::size_t{1} << (j - 1))) u += (u.empty() ? "" : ",") + std::to_string(j);
      }
      return {false, "i=" + std::to_string(i) + " n=" + std::to_string(n) + " U={" + u +
                         "}: exact " + std::to_string(exact[m]) + " vs " +
                         to_decimal(want_exact) + ", superset " + std::to_string(superset[m]) +
                         " vs " + to_decimal(want_super)};
    }
  }
  return {true, {}};
}

/// Memoized brute profiles for T_1..T_max.
class ProfileCache {
 public:
  explicit ProfileCache(unsigned threads = 1) : threads_(threads) {}
  const std::map<int, PlusFullProfile>& operator()(int n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, plus_full_profiles(n, threads_)).first;
    return it->second;
  }
  ProfileSource source() {
    return [this](int n) -> const std::map<int, PlusFullProfile>& { return (*this)(n); };
  }

 private:
  unsigned threads_;
  std::map<int, std::map<int, PlusFullProfile>> cache_;
};

inline CheckResult equal_representation_check(int i, int n) {
  ProfileCache cache;
  return equal_representation_check(i, n, cache.source());
}

struct VanishingReport {
  Count nofull;
  Count total;
  std::vector<Count> family_sizes;  // |F_i^j(n)| at index j-1
  bool holds = false;
  std::string detail;
};

/// For n >= 2i+4: no chain of C_i(n) avoids plus-full-sets, and the classes
/// F_i^j(n), j in [3i+4], are nonempty and partition C_i(n). `expected_total`
/// is an independent count of C_i(n), when available.
inline VanishingReport vanishing_check(int i, int n, const PlusFullProfile& profile,
                                       std::optional<Count> expected_total = std::nullopt) {
  if (n < 2 * i + 4) {
    throw ArgumentError("vanishing applies for n >= 2i+4; got i=" + std::to_string(i) +
                        " n=" + std::to_string(n));
  }
  VanishingReport r;
  r.nofull = profile.nofull();
  r.total = profile.total();
  r.family_sizes = profile.min_label_sizes();
  r.family_sizes.resize(static_cast<std::size_t>(std::max(n + i, 0)));
  Count sum = r.nofull;
  for (const Count& f : r.family_sizes) sum += f;
  const int last = 3 * i + 4;
  r.holds = true;
  auto fail = [&r](std::string why) {
    if (r.holds) r.detail = std::move(why);
    r.holds = false;
  };
  if (r.nofull != 0) fail("N=" + to_decimal(r.nofull) + " is not zero");
  for (int j = 1; j <= static_cast<int>(r.family_sizes.size()); ++j) {
    const Count& f = r.family_sizes[static_cast<std::size_t>(j - 1)];
    if (j <= last && f == 0) fail("F^" + std::to_string(j) + " is empty");
    if (j > last && f != 0) fail("F^" + std::to_string(j) + " is not empty");
  }
  if (sum != r.total) fail("classes do not sum to the total");
  if (expected_total && *expected_total != r.total) {
    fail("enumerated " + to_decimal(r.total) + " chains, expected " +
         to_decimal(*expected_total));
  }
  return r;
}

inline VanishingReport vanishing_check(int i, int n) {
  if (n < 2 * i + 4) {
    throw ArgumentError("vanishing applies for n >= 2i+4; got i=" + std::to_string(i) +
                        " n=" + std::to_string(n));
  }
  const auto profiles = plus_full_profiles(n);
  auto it = profiles.find(n + i);
  PlusFullProfile empty{i, n, {}};
  return vanishing_check(i, n, it == profiles.end() ? empty : it->second,
                         count_by_length(n).at(n + i));
}

struct DegreeReport {
  std::vector<Count> values;  // #C_i(n) for n = first, first+1, ...
  Count leading_difference;   // the (3i+3)-th difference
  bool holds = false;
};

/// Evaluates the recursion at 3i+5 consecutive n and checks that the
/// (3i+3)-th differences are constant, equal to N_i(2i+3), and the
/// (3i+4)-th vanishes.
inline DegreeReport degree_check(int i, const NoFullTable& table, int first = 1) {
  const int degree = 3 * i + 3;
  DegreeReport r;
  for (int n = first; n < first + degree + 2; ++n) r.values.push_back(chains_count(i, n, table));
  std::vector<Count> diff = r.values;
  for (int k = 0; k < degree; ++k) {
    for (std::size_t j = 0; j + 1 < diff.size(); ++j) diff[j] = diff[j + 1] - diff[j];
    diff.pop_back();
  }
  r.leading_difference = diff.front();
  r.holds = diff.size() == 2 && diff[0] == diff[1] && diff[0] == table.get(i, 2 * i + 3);
  return r;
}

}  // namespace tamari
