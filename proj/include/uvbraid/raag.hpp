#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "uvbraid/words.hpp"

namespace uvbraid {

/// Signed generator delta_{i,j,t}^{sign} of the kernel RAAG KUV_n(c).
/// As a vertex of the commutation graph the sign is +1.
struct Delta {
  int i = 1;
  int j = 2;
  int t = 1;
  int sign = 1;

  Delta inverse() const noexcept { return {i, j, t, -sign}; }
  Delta unsigned_vertex() const noexcept { return {i, j, t, 1}; }

  /// Lexicographic on (i, j, t), then + before -.
  friend auto operator<=>(const Delta &a, const Delta &b) {
    if (auto c = std::tie(a.i, a.j, a.t) <=> std::tie(b.i, b.j, b.t); c != 0)
      return c;
    return b.sign <=> a.sign;
  }
  friend bool operator==(const Delta &, const Delta &) = default;
};

void check_delta(const Delta &d, const Params &params);

/// True iff {a.i, a.j} and {b.i, b.j} are disjoint; the crossing type plays no role.
inline bool deltas_commute(const Delta &a, const Delta &b) noexcept {
  return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
}

/// `d<i>.<j>.<t>` for sign +1, `D<i>.<j>.<t>` for sign -1.
std::string to_token(const Delta &d);
Delta parse_delta(std::string_view token, const Params &params);

class DeltaWord {
public:
  explicit DeltaWord(Params params) : params_(params) { params_.validate(); }
  DeltaWord(Params params, std::vector<Delta> letters);

  const Params &params() const noexcept { return params_; }
  std::span<const Delta> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(const Delta &d);
  DeltaWord inverse() const;

  friend bool operator==(const DeltaWord &, const DeltaWord &) = default;

private:
  Params params_;
  std::vector<Delta> letters_;
};

DeltaWord operator*(const DeltaWord &a, const DeltaWord &b);
std::string to_string(const DeltaWord &w);

/// The commutation graph Gamma_{n,c}: vertices delta_{i,j,t} (i != j), adjacent
/// iff the index pairs are disjoint. Vertices are numbered in (i, j, t) order.
class CommGraph {
public:
  explicit CommGraph(Params params);

  const Params &params() const noexcept { return params_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  const Delta &vertex(std::size_t v) const { return vertices_[v]; }
  std::span<const Delta> vertices() const noexcept { return vertices_; }
  /// Index of the vertex delta_{i,j,t}; throws Error if it is not a vertex.
  std::size_t index_of(const Delta &d) const;
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u][v]; }
  const boost::dynamic_bitset<> &neighbours(std::size_t v) const { return adjacency_[v]; }

  /// Graphviz rendering with vertex labels `d<i>.<j>.<t>`.
  std::string to_dot() const;

private:
  Params params_;
  std::vector<Delta> vertices_;
  std::vector<boost::dynamic_bitset<>> adjacency_;
  std::size_t edges_ = 0;
};

/// Throws Error for n < 2.
CommGraph build_graph(const Params &params);

/// Canonical representative of `w` in the RAAG of `g`: cancels every pair
/// separated only by commuting letters, then takes the lexicographically least
/// ordering reachable by commuting adjacent letters. Equal elements have
/// letter-for-letter equal normal forms.
DeltaWord normal_form(const DeltaWord &w, const CommGraph &g);

/// Same algorithm without an explicit graph; commutation is index disjointness.
std::vector<Delta> normal_form_letters(std::span<const Delta> letters);

struct CliqueResult {
  std::size_t size = 0;
  std::vector<Delta> clique;
};

/// Exact maximum clique by branch and bound with a greedy colouring bound.
CliqueResult maximum_clique(const CommGraph &g);
inline std::size_t clique_number(const CommGraph &g) { return maximum_clique(g).size; }

struct P3Result {
  bool p3_free = true;
  /// v1 - v2 - v3 with v1 ~ v2, v2 ~ v3, v1 !~ v3.
  std::optional<std::array<Delta, 3>> witness;
};

P3Result is_p3_free(const CommGraph &g);

/// (X1, X2, Y1, Y2): X1 !~ X2, Y1 !~ Y2, every X adjacent to every Y; such a
/// quadruple generates F2 x F2 in the RAAG.
std::optional<std::array<Delta, 4>> f2xf2_witness(const CommGraph &g);

/// True iff the quadruple has the adjacency pattern required of f2xf2_witness.
bool valid_f2xf2(const CommGraph &g, const std::array<Delta, 4> &q);
/// True iff the triple is an induced path of length two.
bool valid_p3(const CommGraph &g, const std::array<Delta, 3> &p);

/// Vertices adjacent to every other vertex.
std::vector<Delta> dominating_vertices(const CommGraph &g);

} // namespace uvbraid
