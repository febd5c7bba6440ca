#pragma once

// The Hasse diagram of T_n as an indexed graph, and depth-first enumeration
// of its maximal chains, optionally split across worker threads.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <thread>
#include <unordered_map>
#include <vector>

#include "tamari/errors.hpp"
#include "tamari/shapes.hpp"
#include "tamari/tableau.hpp"

namespace tamari {

/// Largest n for which the whole lattice is materialized (C_14 ~ 2.7e6).
inline constexpr int kMaxGraphN = 14;

class TamariGraph {
 public:
  /// An upward cover: remove the strip spanning rows [first_row, last_row].
  /// `plus_full` is set when, inside a maximal chain, the removed strip is
  /// a plus-full-set. That is decided by the cover alone: the strip starts
  /// in row 1 and ends at an outer-diagonal box (k, n-k), and k = n-1 or the
  /// box (k+1, n-k-1) is still present (so it is removed later and gets a
  /// smaller label).
  struct Edge {
    std::uint32_t target = 0;
    std::uint8_t first_row = 0;
    std::uint8_t last_row = 0;
    bool plus_full = false;
  };

  explicit TamariGraph(int n) : n_(n) {
    if (n < 1 || n > kMaxGraphN) {
      throw ArgumentError("lattice graph supports 1 <= n <= " +
                          std::to_string(kMaxGraphN));
    }
    vertices_ = tamari_vertices(n);
    std::stable_sort(vertices_.begin(), vertices_.end(),
                     [](const Partition& a, const Partition& b) {
                       return a.size() < b.size();
                     });
    index_.reserve(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      index_.emplace(vertices_[v], static_cast<std::uint32_t>(v));
    }
    offsets_.reserve(vertices_.size() + 1);
    offsets_.push_back(0);
    for (const Partition& y : vertices_) {
      for (const CoverMove& m : upper_cover_moves(y, n)) {
        Edge e;
        e.target = index_.at(m.target);
        e.first_row = static_cast<std::uint8_t>(m.first_row);
        e.last_row = static_cast<std::uint8_t>(m.last_row);
        const int k = m.last_row;
        e.plus_full = m.first_row == 1 && k + y.row(k) == n &&
                      (k == n - 1 || y.row(k + 1) == n - k - 1);
        edges_.push_back(e);
      }
      offsets_.push_back(static_cast<std::uint32_t>(edges_.size()));
    }
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Partition& vertex(std::size_t v) const { return vertices_[v]; }

  /// The null diagram (maximum of the lattice).
  std::size_t top() const noexcept { return 0; }
  /// The staircase (minimum of the lattice).
  std::size_t bottom() const noexcept { return vertices_.size() - 1; }

  std::span<const Edge> covers(std::size_t v) const {
    return {edges_.data() + offsets_[v], edges_.data() + offsets_[v + 1]};
  }

  std::optional<std::size_t> index_of(const Partition& y) const {
    auto it = index_.find(y);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  int n_;
  std::vector<Partition> vertices_;  // by size, so covers point backwards
  std::unordered_map<Partition, std::uint32_t> index_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Edge> edges_;
};

/// One step of a chain walked upward from the staircase.
struct ChainStep {
  std::uint32_t from = 0;
  TamariGraph::Edge edge;
};

namespace detail {

template <class Visitor>
void walk_from(const TamariGraph& g, std::size_t v, std::vector<ChainStep>& path,
               Visitor& visit) {
  if (v == g.top()) {
    visit(std::span<const ChainStep>(path));
    return;
  }
  for (const auto& e : g.covers(v)) {
    path.push_back({static_cast<std::uint32_t>(v), e});
    walk_from(g, e.target, path, visit);
    path.pop_back();
  }
}

}  // namespace detail

/// Calls `visit(std::span<const ChainStep>)` once per maximal chain, in the
/// depth-first order given by the cover ordering (corner row ascending).
template <class Visitor>
void for_each_chain_path(const TamariGraph& g, Visitor&& visit) {
  std::vector<ChainStep> path;
  detail::walk_from(g, g.bottom(), path, visit);
}

/// Splits the depth-first forest at the covers of the staircase, handing
/// first-level subtree j to worker j mod threads. `make()` builds one
/// visitor per worker; the visitors are returned in worker order so the
/// caller can merge them. Worker-local visiting order stays deterministic.
template <class MakeVisitor>
auto parallel_chain_paths(const TamariGraph& g, unsigned threads,
                          MakeVisitor make) {
  using Visitor = decltype(make());
  if (threads == 0) threads = 1;
  std::vector<Visitor> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) workers.push_back(make());

  const auto first = g.covers(g.bottom());
  if (first.empty()) {  // T_1: the single chain has no steps
    workers[0](std::span<const ChainStep>());
    return workers;
  }
  auto run = [&](unsigned w) {
    std::vector<ChainStep> path;
    for (std::size_t j = w; j < first.size(); j += threads) {
      path.push_back({static_cast<std::uint32_t>(g.bottom()), first[j]});
      detail::walk_from(g, first[j].target, path, workers[w]);
      path.pop_back();
    }
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(run, w);
  }
  return workers;
}

/// The psi-tableau of a walked chain: the box removed at step s of L gets
/// label L - s + 1.
inline Tableau chain_tableau(const TamariGraph& g,
                             std::span<const ChainStep> path) {
  const int n = g.n();
  std::vector<std::vector<int>> rows;
  for (int x = 1; x <= n - 1; ++x) {
    rows.emplace_back(static_cast<std::size_t>(n - x), 0);
  }
  const int length = static_cast<int>(path.size());
  for (int s = 0; s < length; ++s) {
    const ChainStep& step = path[static_cast<std::size_t>(s)];
    const Partition& from = g.vertex(step.from);
    for (int x = step.edge.first_row; x <= step.edge.last_row; ++x) {
      rows[static_cast<std::size_t>(x - 1)]
          [static_cast<std::size_t>(from.row(x) - 1)] = length - s;
    }
  }
  return Tableau(n, std::move(rows));
}

/// Every maximal chain of T_n exactly once, as psi-tableaux, in depth-first
/// order. With `length`, only chains of that length are passed on.
template <class Visitor>
void for_each_maximal_chain(const TamariGraph& g, Visitor&& visit,
                            std::optional<int> length = std::nullopt) {
  for_each_chain_path(g, [&](std::span<const ChainStep> path) {
    if (length && static_cast<int>(path.size()) != *length) return;
    visit(MaximalChain::from_construction(chain_tableau(g, path)));
  });
}

inline std::vector<MaximalChain> enumerate_maximal_chains(
    int n, std::optional<int> length = std::nullopt) {
  const TamariGraph g(n);
  std::vector<MaximalChain> out;
  for_each_maximal_chain(
      g, [&out](MaximalChain c) { out.push_back(std::move(c)); }, length);
  return out;
}

}  // namespace tamari
