#pragma once

// Young diagrams inside the staircase, their Dyck paths, prime paths,
// strips, enclosures, and the Tamari covering relation in both pictures.
//
// Conventions: rows and columns are 1-based (English notation). A diagram
// Y inside the staircase (n-1, n-2, ..., 1) is a vertex of the n-th Tamari
// lattice; the null diagram is its maximum and the staircase its minimum.
// The k-th north step of the length-2n path ends row n-k+1, and is preceded
// by exactly Y.row(n-k+1) east steps. So the null diagram is N^n E^n and the
// staircase is (NE)^n.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamari/errors.hpp"

namespace tamari {

struct Box {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

inline std::string to_string(Box b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

/// Weakly decreasing sequence of positive parts, stored without trailing
/// zeros. Rows past the last part are empty.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (parts_[j] <= 0) {
        throw ValidationError("partition parts must be positive");
      }
      if (j > 0 && parts_[j] > parts_[j - 1]) {
        throw ValidationError("partition parts must be weakly decreasing");
      }
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// The staircase (k, k-1, ..., 1); null for k <= 0.
  static Partition staircase(int k) {
    std::vector<int> parts;
    for (int v = k; v >= 1; --v) parts.push_back(v);
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }

  /// Length of row j (1-based); 0 for empty or nonexistent rows.
  int row(int j) const noexcept {
    return (j >= 1 && j <= num_rows()) ? parts_[j - 1] : 0;
  }

  int num_rows() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  int size() const noexcept {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  bool contains(Box b) const noexcept {
    return b.row >= 1 && b.col >= 1 && b.col <= row(b.row);
  }

  /// True iff the diagram fits inside the staircase (n-1, ..., 1).
  bool contained_in_staircase(int n) const noexcept {
    for (int j = 1; j <= num_rows(); ++j) {
      if (row(j) > n - j) return false;
    }
    return true;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Comma-separated parts, `-` for the null diagram.
inline std::string to_string(const Partition& y) {
  if (y.empty()) return "-";
  std::string out;
  for (int j = 1; j <= y.num_rows(); ++j) {
    if (j > 1) out += ',';
    out += std::to_string(y.row(j));
  }
  return out;
}

inline Partition parse_partition(std::string_view text) {
  if (text == "-" || text.empty()) return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    if (field.empty() ||
        field.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ValidationError("bad partition text: '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(std::string(field)));
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

inline void require_contained(const Partition& y, int n) {
  if (n < 1) throw ArgumentError("lattice index n must be positive");
  if (!y.contained_in_staircase(n)) {
    throw ContainmentError("diagram " + to_string(y) +
                           " is not contained in the staircase of T_" +
                           std::to_string(n));
  }
}

/// Balanced sequence of north (`N`) and east (`E`) steps that never goes
/// below the diagonal.
class DyckPath {
 public:
  DyckPath() = default;

  explicit DyckPath(std::string steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw ValidationError("empty Dyck path");
    int level = 0;
    for (char c : steps_) {
      if (c == 'N') {
        ++level;
      } else if (c == 'E') {
        if (--level < 0) {
          throw ValidationError("Dyck path goes below the diagonal: " +
                                steps_);
        }
      } else {
        throw ValidationError("Dyck path steps must be N or E: " + steps_);
      }
    }
    if (level != 0) throw ValidationError("unbalanced Dyck path: " + steps_);
  }

  const std::string& str() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  int n() const noexcept { return static_cast<int>(steps_.size() / 2); }
  char operator[](std::size_t i) const { return steps_[i]; }

  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::string steps_;
};

/// Half-open step range [begin, end) of a prime subpath, and its number of
/// north steps.
struct Subpath {
  std::size_t begin = 0;
  std::size_t end = 0;
  int height = 0;
  friend bool operator==(const Subpath&, const Subpath&) = default;
};

/// The prime Dyck subpath that starts with the north step at `pos`.
inline Subpath prime_subpath_at(const DyckPath& p, std::size_t pos) {
  if (pos >= p.size() || p[pos] != 'N') {
    throw ArgumentError("prime subpath must start at a north step");
  }
  Subpath s{pos, pos, 0};
  int level = 0;
  do {
    if (p[s.end] == 'N') {
      ++level;
      ++s.height;
    } else {
      --level;
    }
    ++s.end;
  } while (level > 0);
  return s;
}

/// Position of the k-th north step (1-based k).
inline std::size_t north_step_position(const DyckPath& p, int k) {
  int seen = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 'N' && ++seen == k) return i;
  }
  throw IndexError("path has fewer than " + std::to_string(k) +
                   " north steps");
}

inline DyckPath to_dyck_path(const Partition& y, int n) {
  require_contained(y, n);
  std::string steps;
  steps.reserve(2 * static_cast<std::size_t>(n));
  int east = 0;
  for (int k = 1; k <= n; ++k) {
    const int before = y.row(n - k + 1);
    steps.append(static_cast<std::size_t>(before - east), 'E');
    steps.push_back('N');
    east = before;
  }
  steps.append(static_cast<std::size_t>(n - east), 'E');
  return DyckPath(std::move(steps));
}

inline Partition from_dyck_path(const DyckPath& p) {
  const int n = p.n();
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  int east = 0;
  int k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 'E') {
      ++east;
    } else {
      ++k;
      parts[static_cast<std::size_t>(n - k)] = east;
    }
  }
  return Partition(std::move(parts));
}

/// Heights of the n prime subpaths, indexed by their starting north step.
inline std::vector<int> prime_subpath_heights(const DyckPath& p) {
  std::vector<int> heights;
  heights.reserve(static_cast<std::size_t>(p.n()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 'N') heights.push_back(prime_subpath_at(p, i).height);
  }
  return heights;
}

struct PrimePathInfo {
  int start_row = 0;
  int height = 0;
  std::size_t begin = 0;  // offset of the first step in the ambient path
  std::string steps;
  friend bool operator==(const PrimePathInfo&, const PrimePathInfo&) = default;
};

namespace detail {

// Height of the prime path of row d, walking the silhouette upward from the
// north edge that ends row d. `len(j)` is the length of row j; rows past the
// diagram must report 0. No path is materialized.
template <class RowLength>
int prime_height_of_row(const RowLength& len, int n, int d) {
  int level = 1;
  int height = 1;
  for (int j = d - 1; j >= 0; --j) {
    const int east = (j == 0 ? n : len(j)) - len(j + 1);
    if (east >= level) return height;
    level -= east;
    ++level;
    ++height;
  }
  return height;
}

inline int prime_height_of_row(const Partition& y, int n, int d) {
  return prime_height_of_row([&y](int j) { return y.row(j); }, n, d);
}

}  // namespace detail

inline PrimePathInfo prime_path_of_row(const Partition& y, int n, int d) {
  require_contained(y, n);
  if (d < 1 || d > n) {
    throw IndexError("row " + std::to_string(d) + " outside [1," +
                     std::to_string(n) + "]");
  }
  const DyckPath path = to_dyck_path(y, n);
  const Subpath s = prime_subpath_at(path, north_step_position(path, n - d + 1));
  return PrimePathInfo{d, s.height, s.begin,
                       path.str().substr(s.begin, s.end - s.begin)};
}

inline void require_last_in_row(const Partition& y, Box b) {
  if (!y.contains(b) || b.col != y.row(b.row)) {
    throw ArgumentError("box " + to_string(b) +
                        " is not the last box of its row in " + to_string(y));
  }
}

/// Boxes whose right vertical edge lies on the prime path of `b`, ordered by
/// row. `b` must be the last box of its row.
inline std::vector<Box> strip_of_box(const Partition& y, int n, Box b) {
  require_contained(y, n);
  require_last_in_row(y, b);
  const DyckPath path = to_dyck_path(y, n);
  const Subpath s =
      prime_subpath_at(path, north_step_position(path, n - b.row + 1));
  std::vector<Box> strip;
  for (int x = 1; x <= y.num_rows(); ++x) {
    const std::size_t edge = north_step_position(path, n - x + 1);
    if (edge >= s.begin && edge < s.end) strip.push_back({x, y.row(x)});
  }
  return strip;
}

/// Boxes that are last in their row and lowest in their column, by row.
inline std::vector<Box> corner_boxes(const Partition& y) {
  std::vector<Box> corners;
  for (int x = 1; x <= y.num_rows(); ++x) {
    if (y.row(x) > y.row(x + 1)) corners.push_back({x, y.row(x)});
  }
  return corners;
}

/// One upward cover: removing the strip of the corner in `last_row`, which
/// spans rows [first_row, last_row].
struct CoverMove {
  Partition target;
  int first_row = 0;
  int last_row = 0;
};

inline std::vector<CoverMove> upper_cover_moves(const Partition& y, int n) {
  require_contained(y, n);
  std::vector<CoverMove> moves;
  for (const Box& corner : corner_boxes(y)) {
    const int h = detail::prime_height_of_row(y, n, corner.row);
    std::vector<int> parts = y.parts();
    for (int x = corner.row - h + 1; x <= corner.row; ++x) {
      --parts[static_cast<std::size_t>(x - 1)];
    }
    moves.push_back({Partition(std::move(parts)), corner.row - h + 1,
                     corner.row});
  }
  return moves;
}

/// Diagrams covering `y` in T_n, ordered by the row of the removed corner.
inline std::vector<Partition> upper_covers(const Partition& y, int n) {
  std::vector<Partition> covers;
  for (CoverMove& m : upper_cover_moves(y, n)) {
    covers.push_back(std::move(m.target));
  }
  return covers;
}

/// Paths covering `p`: for each east step followed by a north step, swap the
/// east step with the prime subpath after it. Ordered by east-step position.
inline std::vector<DyckPath> upper_covers_dyck(const DyckPath& p) {
  std::vector<DyckPath> covers;
  const std::string& s = p.str();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] != 'E' || s[i + 1] != 'N') continue;
    const Subpath prime = prime_subpath_at(p, i + 1);
    std::string next = s.substr(0, i);
    next += s.substr(prime.begin, prime.end - prime.begin);
    next += 'E';
    next += s.substr(prime.end);
    covers.emplace_back(std::move(next));
  }
  return covers;
}

/// Bounding region of a strip. Row 0 is an unbounded virtual row above the
/// diagram; `boxes` may therefore contain boxes with row 0.
struct Enclosure {
  int top_row = 0;
  int left_col = 0;
  int height = 0;      // height of the prime path of the strip's box
  Partition shape;     // row lengths from top_row downward
  std::vector<Box> boxes;
};

inline Enclosure enclosure(const Partition& y, int n, Box b) {
  require_contained(y, n);
  require_last_in_row(y, b);
  const int h = detail::prime_height_of_row(y, n, b.row);
  Enclosure e;
  e.top_row = b.row - h;
  e.left_col = b.col;
  e.height = h;
  std::vector<int> lengths;
  for (int x = b.row - h; x <= b.row; ++x) {
    const int last = (x == 0) ? b.col + h : std::min(y.row(x), b.col + h);
    for (int c = b.col; c <= last; ++c) e.boxes.push_back({x, c});
    lengths.push_back(std::max(0, last - b.col + 1));
  }
  e.shape = Partition(std::move(lengths));
  return e;
}

/// If `to` is `from` shifted by a constant (drow, dcol), that offset.
inline std::optional<std::pair<int, int>> translation_between(
    std::vector<Box> from, std::vector<Box> to) {
  if (from.size() != to.size()) return std::nullopt;
  if (from.empty()) return std::pair{0, 0};
  std::sort(from.begin(), from.end());
  std::sort(to.begin(), to.end());
  const int dr = to[0].row - from[0].row;
  const int dc = to[0].col - from[0].col;
  for (std::size_t i = 1; i < from.size(); ++i) {
    if (to[i].row - from[i].row != dr || to[i].col - from[i].col != dc) {
      return std::nullopt;
    }
  }
  return std::pair{dr, dc};
}

/// All vertices of T_n (diagrams inside the staircase (n-1, ..., 1)),
/// in lexicographic order of their parts.
inline std::vector<Partition> tamari_vertices(int n) {
  if (n < 1) throw ArgumentError("lattice index n must be positive");
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> extend = [&](int j, int cap) {
    out.emplace_back(parts);
    if (j > n - 1) return;
    for (int v = 1; v <= std::min(cap, n - j); ++v) {
      parts.push_back(v);
      extend(j + 1, v);
      parts.pop_back();
    }
  };
  extend(1, n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tamari

template <>
struct std::hash<tamari::Partition> {
  std::size_t operator()(const tamari::Partition& y) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int p : y.parts()) {
      h ^= static_cast<std::size_t>(p) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};
