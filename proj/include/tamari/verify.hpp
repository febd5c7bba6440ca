#pragma once

// Exhaustive and randomized property suites over small Tamari lattices.
// Each suite stops at the first counterexample and serializes it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tamari/bijections.hpp"
#include "tamari/counting.hpp"
#include "tamari/enumerate.hpp"
#include "tamari/errors.hpp"
#include "tamari/shapes.hpp"
#include "tamari/tableau.hpp"

namespace tamari {

struct SuiteLimits {
  int max_n = 6;
  int max_i = 2;
  int random_cases = 10000;
  int random_n = 7;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct SuiteReport {
  std::string name;
  bool ok = true;
  std::uint64_t checked = 0;
  std::string counterexample;

  void fail(std::string what) {
    if (ok) counterexample = std::move(what);
    ok = false;
  }
};

/// A maximal chain of T_n built by taking uniformly random covers upward
/// from the staircase.
template <class Rng>
MaximalChain random_maximal_chain(const TamariGraph& g, Rng& rng) {
  std::vector<ChainStep> path;
  std::size_t v = g.bottom();
  while (v != g.top()) {
    const auto covers = g.covers(v);
    std::uniform_int_distribution<std::size_t> pick(0, covers.size() - 1);
    const auto& e = covers[pick(rng)];
    path.push_back({static_cast<std::uint32_t>(v), e});
    v = e.target;
  }
  return MaximalChain::from_construction(chain_tableau(g, path));
}

namespace detail {

inline std::string chain_text(const MaximalChain& c) { return to_text(c.tableau()); }

inline bool heights_dominate(const std::vector<int>& up, const std::vector<int>& down) {
  for (std::size_t k = 0; k < up.size(); ++k) {
    if (up[k] < down[k]) return false;
  }
  return true;
}

// Checks phi at (c, r) and returns the image.
inline std::optional<MaximalChain> check_phi_at(const MaximalChain& c, int r, SuiteReport& rep) {
  const MaximalChain img = phi(c, r);
  ++rep.checked;
  const auto before = plus_full_set_labels(c);
  const auto after = plus_full_set_labels(img);
  auto where = [&] { return "r=" + std::to_string(r) + "\n" + chain_text(c); };
  if (after.size() != before.size() + 1) {
    rep.fail("plus-full-set count did not grow by one at " + where());
    return std::nullopt;
  }
  if (after.front() != r + 1 || img.n() != c.n() + 1 || img.i() != c.i()) {
    rep.fail("image is not in F^{r+1} at " + where());
    return std::nullopt;
  }
  for (int j = 1; j <= c.length(); ++j) {
    const int k = j <= r ? j : j + 1;
    if (classify_r_set(c, j) != classify_r_set(img, k)) {
      rep.fail("label shift broken for j=" + std::to_string(j) + " at " + where());
      return std::nullopt;
    }
  }
  const PhiInverse back = phi_inv(img);
  if (back.r != r || !(back.chain == c)) {
    rep.fail("phi_inv does not undo phi at " + where());
    return std::nullopt;
  }
  return img;
}

}  // namespace detail

/// Path/diagram round trip, cover equivalence in both representations,
/// strip shape and monotone prime-subpath heights along covers.
inline SuiteReport verify_covers(const SuiteLimits& lim) {
  SuiteReport rep{"covers", true, 0, {}};
  for (int n = 1; n <= lim.max_n && rep.ok; ++n) {
    const auto vertices = tamari_vertices(n);
    for (const Partition& y : vertices) {
      ++rep.checked;
      const DyckPath p = to_dyck_path(y, n);
      if (!(from_dyck_path(p) == y)) rep.fail("round trip fails for " + to_string(y));
      std::vector<Partition> via_paths;
      for (const DyckPath& q : upper_covers_dyck(p)) via_paths.push_back(from_dyck_path(q));
      auto direct = upper_covers(y, n);
      std::sort(via_paths.begin(), via_paths.end());
      std::sort(direct.begin(), direct.end());
      if (via_paths != direct) rep.fail("cover sets differ at " + to_string(y));
      for (const Box& b : corner_boxes(y)) {
        const auto strip = strip_of_box(y, n, b);
        const int h = static_cast<int>(strip.size());
        for (int k = 0; k < h; ++k) {
          const Box s = strip[static_cast<std::size_t>(k)];
          if (s.row != b.row - h + 1 + k || s.col != y.row(s.row)) {
            rep.fail("strip of " + to_string(b) + " in " + to_string(y) + " is not rows of last boxes");
          }
        }
      }
      const auto heights = prime_subpath_heights(p);
      for (const Partition& z : direct) {
        if (!detail::heights_dominate(prime_subpath_heights(to_dyck_path(z, n)), heights)) {
          rep.fail("heights drop from " + to_string(y) + " to " + to_string(z));
        }
      }
      if (!rep.ok) break;
    }
    if (rep.ok && static_cast<int>(upper_covers(Partition::staircase(n - 1), n).size()) != n - 1) {
      rep.fail("staircase of T_" + std::to_string(n) + " lacks n-1 covers");
    }
  }
  return rep;
}

/// psi round trip and structural facts of every psi-tableau of T_n.
inline SuiteReport verify_psi(const SuiteLimits& lim) {
  SuiteReport rep{"psi", true, 0, {}};
  for (int n = 1; n <= lim.max_n && rep.ok; ++n) {
    const TamariGraph g(n);
    for_each_maximal_chain(g, [&](const MaximalChain& c) {
      if (!rep.ok) return;
      ++rep.checked;
      const Tableau& t = c.tableau();
      const auto chain = psi_inverse(t);
      if (!(psi(chain, n) == t)) rep.fail("psi round trip\n" + to_text(t));
      std::set<int> diag;
      for (const Box& b : outer_diagonal(t)) diag.insert(t.at(b));
      if (static_cast<int>(diag.size()) != n - 1) rep.fail("repeated outer-diagonal label\n" + to_text(t));
      for (int cut = 1; cut <= c.length(); ++cut) {
        const Tableau tr = truncate(t, cut);
        const auto& rows = tr.rows();
        for (int d = 1; d < tr.num_rows(); ++d) {
          if (tr.row_length(d) == tr.row_length(d + 1) &&
              rows[static_cast<std::size_t>(d - 1)] != rows[static_cast<std::size_t>(d)]) {
            rep.fail("equal-length rows differ\n" + to_text(tr));
          }
        }
      }
      if (static_cast<int>(plus_full_set_labels(c).size()) > n - 1) {
        rep.fail("more than n-1 plus-full-sets\n" + to_text(t));
      }
    });
  }
  return rep;
}

/// phi round trips, plus-full-set increment, label shift, image counts
/// against F^{r+1}, and decompose/recompose over all chains; then the same
/// pointwise checks on random chains of T_{random_n}.
inline SuiteReport verify_phi(const SuiteLimits& lim) {
  SuiteReport rep{"phi", true, 0, {}};
  std::map<int, std::map<int, std::map<int, std::uint64_t>>> family;  // n -> length -> min label
  auto families = [&](int n) -> std::map<int, std::map<int, std::uint64_t>>& {
    auto it = family.find(n);
    if (it != family.end()) return it->second;
    auto& f = family[n];
    for_each_maximal_chain(TamariGraph(n), [&](const MaximalChain& c) {
      const auto labels = plus_full_set_labels(c);
      ++f[c.length()][labels.empty() ? 0 : labels.front()];
    });
    return f;
  };

  for (int n = 1; n <= lim.max_n && rep.ok; ++n) {
    const TamariGraph g(n);
    std::map<int, std::map<int, std::set<std::string>>> images;  // length -> r -> images
    for_each_maximal_chain(g, [&](const MaximalChain& c) {
      if (!rep.ok) return;
      const auto dec = decompose(c);
      ++rep.checked;
      if (!(recompose(dec) == c)) rep.fail("recompose(decompose) differs\n" + detail::chain_text(c));
      if (dec.params.size() != plus_full_set_labels(c).size()) {
        rep.fail("decomposition length differs from plus-full-set count\n" + detail::chain_text(c));
      }
      if (!(decompose(recompose(dec)) == dec)) rep.fail("decompose(recompose) differs\n" + detail::chain_text(c));
      const auto pfs = plus_full_set_labels(c);
      const int top = pfs.empty() ? c.length() : std::min(c.length(), pfs.front() - 1);
      for (int r = 0; r <= top && rep.ok; ++r) {
        if (auto img = detail::check_phi_at(c, r, rep)) images[c.length()][r].insert(to_text(img->tableau()));
      }
    });
    if (!rep.ok) continue;
    auto& f = families(n + 1);
    for (const auto& [len, by_r] : images) {
      for (const auto& [r, set] : by_r) {
        if (set.size() != f[len + 1][r + 1]) {
          rep.fail("phi image size " + std::to_string(set.size()) + " differs from |F^" +
                   std::to_string(r + 1) + "| in T_" + std::to_string(n + 1));
        }
      }
      for (const auto& [label, count] : f[len + 1]) {
        if (label > 0 && !by_r.count(label - 1) && count > 0) {
          rep.fail("F^" + std::to_string(label) + " of T_" + std::to_string(n + 1) + " is not hit");
        }
      }
    }
  }

  // Every plus-full-free base of T_{n-t} with every weakly increasing
  // parameter list in [0, length]^t occurs exactly once.
  for (int n = 1; n <= lim.max_n && rep.ok; ++n) {
    std::map<int, Count> predicted;
    for (int t = 0; t < n; ++t) {
      for (const auto& [len, by_label] : families(n - t)) {
        auto it = by_label.find(0);
        if (it != by_label.end()) predicted[len + t] += binomial(len + t, t) * Count(it->second);
      }
    }
    for (const auto& [len, by_label] : families(n)) {
      Count total = 0;
      for (const auto& [label, count] : by_label) total += count;
      ++rep.checked;
      if (predicted[len] != total) {
        rep.fail("T_" + std::to_string(n) + " length " + std::to_string(len) + ": " +
                 to_decimal(predicted[len]) + " decompositions for " + to_decimal(total) + " chains");
      }
    }
  }

  if (rep.ok && lim.random_cases > 0) {
    const TamariGraph g(lim.random_n);
    std::mt19937_64 rng(lim.seed);
    for (int k = 0; k < lim.random_cases && rep.ok; ++k) {
      const MaximalChain c = random_maximal_chain(g, rng);
      const auto dec = decompose(c);
      if (!(recompose(dec) == c)) rep.fail("recompose(decompose) differs\n" + detail::chain_text(c));
      const auto pfs = plus_full_set_labels(c);
      const int top = pfs.empty() ? c.length() : std::min(c.length(), pfs.front() - 1);
      std::uniform_int_distribution<int> pick(0, top);
      detail::check_phi_at(c, pick(rng), rep);
    }
  }
  return rep;
}

/// Brute histograms against the lattice count, the recursion against brute
/// counts, longest and shortest chains, and three routes to N_i(n).
inline SuiteReport verify_formulas(const SuiteLimits& lim) {
  SuiteReport rep{"formulas", true, 0, {}};
  std::map<int, LengthHistogram> brute;
  for (int n = 1; n <= lim.max_n; ++n) {
    const TamariGraph g(n);
    brute[n] = count_by_length_brute(g, lim.threads);
    ++rep.checked;
    if (!(brute[n] == count_by_length(g))) rep.fail("lattice histogram differs at n=" + std::to_string(n));
    if (brute[n].at(n - 1) != 1) rep.fail("shortest chain not unique at n=" + std::to_string(n));
    const int longest = n * (n - 1) / 2;
    if (longest_chain_count(n) != brute[n].at(longest) || brute[n].counts.rbegin()->first != longest) {
      rep.fail("longest-chain formula fails at n=" + std::to_string(n));
    }
  }
  const int max_i = lim.max_n * (lim.max_n - 1) / 2 - lim.max_n;
  for (int i = -1; i <= max_i && rep.ok; ++i) {
    const NoFullTable table = nofull_initial_values(i, brute, std::min(2 * i + 3, lim.max_n));
    for (int n = 1; n <= lim.max_n; ++n) {
      ++rep.checked;
      if (chains_count(i, n, table) != brute[n].at(n + i)) {
        rep.fail("recursion gives " + to_decimal(chains_count(i, n, table)) + " for C_" +
                 std::to_string(i) + "(" + std::to_string(n) + "), brute " + to_decimal(brute[n].at(n + i)));
      }
    }
  }
  for (int n = 1; n <= std::min(lim.max_n, 7) && rep.ok; ++n) {
    const auto profiles = plus_full_profiles(n, lim.threads);
    const auto lattice = nofull_by_length(n);
    for (int len = n - 1; len <= n * (n - 1) / 2; ++len) {
      ++rep.checked;
      auto it = profiles.find(len);
      const Count b = it == profiles.end() ? Count(0) : it->second.nofull();
      const int i = len - n;
      const Count ie = nofull_by_inclusion_exclusion(i, n, [&](int t) { return brute[t].at(t + i); });
      if (b != lattice.at(len) || b != ie) {
        rep.fail("N_" + std::to_string(i) + "(" + std::to_string(n) + "): brute " + to_decimal(b) +
                 ", lattice " + to_decimal(lattice.at(len)) + ", inclusion-exclusion " + to_decimal(ie));
      }
    }
  }
  return rep;
}

/// The conjectured N_i(2i+3) and N_i(2i+2) against counted values; brute
/// classification while T_{2i+3} is small, the lattice count beyond.
inline SuiteReport verify_conjecture(const SuiteLimits& lim) {
  SuiteReport rep{"conjecture", true, 0, {}};
  for (int i = -1; i <= lim.max_i && rep.ok; ++i) {
    const ConjectureValues v = conjecture_values(i);
    auto counted = [&](int n) -> Count {
      if (n <= 7) return count_nofull_brute(i, n, lim.threads);
      return nofull_by_length(n, n + i).at(n + i);
    };
    ++rep.checked;
    if (counted(2 * i + 3) != v.top) {
      rep.fail("N_" + std::to_string(i) + "(" + std::to_string(2 * i + 3) + ") = " +
               to_decimal(counted(2 * i + 3)) + ", conjectured " + to_decimal(v.top));
    }
    if (v.below) {
      ++rep.checked;
      if (!v.integral) rep.fail("i*prod/5 is not an integer for i=" + std::to_string(i));
      if (counted(2 * i + 2) != *v.below) {
        rep.fail("N_" + std::to_string(i) + "(" + std::to_string(2 * i + 2) + ") = " +
                 to_decimal(counted(2 * i + 2)) + ", conjectured " + to_decimal(*v.below));
      }
    }
  }
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"covers", "psi", "phi", "formulas", "conjecture"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteLimits& lim) {
  if (name == "covers") return verify_covers(lim);
  if (name == "psi") return verify_psi(lim);
  if (name == "phi") return verify_phi(lim);
  if (name == "formulas") return verify_formulas(lim);
  if (name == "conjecture") return verify_conjecture(lim);
  throw ArgumentError("unknown suite '" + name + "'");
}

}  // namespace tamari
