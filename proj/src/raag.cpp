#include "uvbraid/raag.hpp"

#include <algorithm>
#include <charconv>

namespace uvbraid {

void check_delta(const Delta &d, const Params &params) {
  const int n = params.n;
  if (d.i < 1 || d.i > n || d.j < 1 || d.j > n || d.i == d.j)
    throw Error("delta indices (" + std::to_string(d.i) + "," + std::to_string(d.j) +
                ") must be distinct and lie in 1.." + std::to_string(n));
  if (d.t < 1 || d.t > params.c)
    throw Error("delta crossing type " + std::to_string(d.t) + " outside 1.." +
                std::to_string(params.c));
  if (d.sign != 1 && d.sign != -1)
    throw Error("delta sign must be +1 or -1");
}

std::string to_token(const Delta &d) {
  return (d.sign > 0 ? "d" : "D") + std::to_string(d.i) + "." + std::to_string(d.j) + "." +
         std::to_string(d.t);
}

Delta parse_delta(std::string_view token, const Params &params) {
  if (token.size() < 2 || (token[0] != 'd' && token[0] != 'D'))
    throw Error("malformed delta token '" + std::string(token) + "'");
  int fields[3] = {0, 0, 0};
  const char *p = token.data() + 1;
  const char *end = token.data() + token.size();
  for (int k = 0; k < 3; ++k) {
    auto [next, ec] = std::from_chars(p, end, fields[k]);
    if (ec != std::errc() || (k < 2 && (next == end || *next != '.')) || (k == 2 && next != end))
      throw Error("malformed delta token '" + std::string(token) + "'");
    p = next + 1;
  }
  Delta d{fields[0], fields[1], fields[2], token[0] == 'd' ? 1 : -1};
  check_delta(d, params);
  return d;
}

DeltaWord::DeltaWord(Params params, std::vector<Delta> letters)
    : params_(params), letters_(std::move(letters)) {
  params_.validate();
  for (const auto &d : letters_)
    check_delta(d, params_);
}

void DeltaWord::push_back(const Delta &d) {
  check_delta(d, params_);
  letters_.push_back(d);
}

DeltaWord DeltaWord::inverse() const {
  std::vector<Delta> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(it->inverse());
  return DeltaWord(params_, std::move(out));
}

DeltaWord operator*(const DeltaWord &a, const DeltaWord &b) {
  if (!(a.params() == b.params()))
    throw Error("cannot concatenate delta words with different (n, c)");
  std::vector<Delta> out(a.letters().begin(), a.letters().end());
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return DeltaWord(a.params(), std::move(out));
}

std::string to_string(const DeltaWord &w) {
  std::string out;
  for (const auto &d : w.letters()) {
    if (!out.empty())
      out += ' ';
    out += to_token(d);
  }
  return out;
}

CommGraph::CommGraph(Params params) : params_(params) {
  params_.validate();
  if (params_.n < 2)
    throw Error("the commutation graph needs n >= 2");
  for (int i = 1; i <= params_.n; ++i)
    for (int j = 1; j <= params_.n; ++j)
      if (i != j)
        for (int t = 1; t <= params_.c; ++t)
          vertices_.push_back({i, j, t, 1});
  const auto count = vertices_.size();
  adjacency_.assign(count, boost::dynamic_bitset<>(count));
  for (std::size_t u = 0; u < count; ++u)
    for (std::size_t v = u + 1; v < count; ++v)
      if (deltas_commute(vertices_[u], vertices_[v])) {
        adjacency_[u].set(v);
        adjacency_[v].set(u);
        ++edges_;
      }
}

std::size_t CommGraph::index_of(const Delta &d) const {
  check_delta(d, params_);
  const auto n = static_cast<std::size_t>(params_.n);
  const auto c = static_cast<std::size_t>(params_.c);
  const auto i = static_cast<std::size_t>(d.i - 1);
  const auto j = static_cast<std::size_t>(d.j - 1);
  // Row i holds (n - 1) partner indices, skipping i itself.
  const auto partner = j < i ? j : j - 1;
  return (i * (n - 1) + partner) * c + static_cast<std::size_t>(d.t - 1);
}

std::string CommGraph::to_dot() const {
  std::string out = "graph Gamma_" + std::to_string(params_.n) + "_" + std::to_string(params_.c) +
                    " {\n";
  for (const auto &v : vertices_)
    out += "  \"" + to_token(v) + "\";\n";
  for (std::size_t u = 0; u < vertices_.size(); ++u)
    for (auto v = adjacency_[u].find_next(u); v != boost::dynamic_bitset<>::npos;
         v = adjacency_[u].find_next(v))
      out += "  \"" + to_token(vertices_[u]) + "\" -- \"" + to_token(vertices_[v]) + "\";\n";
  out += "}\n";
  return out;
}

CommGraph build_graph(const Params &params) { return CommGraph(params); }

std::vector<Delta> normal_form_letters(std::span<const Delta> letters) {
  // Free cancellation across commuting letters. Keeping the stack reduced after
  // every push leaves it reduced overall: a new cancellable pair would have to
  // straddle the removed letter, and both its members commute with it.
  std::vector<Delta> stack;
  stack.reserve(letters.size());
  for (const auto &x : letters) {
    bool cancelled = false;
    for (auto k = stack.size(); k-- > 0;) {
      if (stack[k] == x.inverse()) {
        stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(k));
        cancelled = true;
        break;
      }
      if (!deltas_commute(stack[k], x))
        break;
    }
    if (!cancelled)
      stack.push_back(x);
  }

  // Lexicographically least linearisation of the trace: repeatedly emit the
  // smallest letter that commutes with everything still in front of it.
  const auto size = stack.size();
  std::vector<std::size_t> blockers(size, 0);
  for (std::size_t b = 0; b < size; ++b)
    for (std::size_t a = 0; a < b; ++a)
      if (!deltas_commute(stack[a], stack[b]))
        ++blockers[b];
  std::vector<bool> used(size, false);
  std::vector<Delta> out;
  out.reserve(size);
  for (std::size_t step = 0; step < size; ++step) {
    std::size_t pick = size;
    for (std::size_t k = 0; k < size; ++k)
      if (!used[k] && blockers[k] == 0 && (pick == size || stack[k] < stack[pick]))
        pick = k;
    used[pick] = true;
    out.push_back(stack[pick]);
    for (std::size_t k = pick + 1; k < size; ++k)
      if (!used[k] && !deltas_commute(stack[pick], stack[k]))
        --blockers[k];
  }
  return out;
}

DeltaWord normal_form(const DeltaWord &w, const CommGraph &g) {
  if (!(w.params() == g.params()))
    throw Error("delta word and graph have different (n, c)");
  for (const auto &d : w.letters())
    g.index_of(d);
  return DeltaWord(w.params(), normal_form_letters(w.letters()));
}

namespace {

using Bits = boost::dynamic_bitset<>;

class CliqueSearch {
public:
  explicit CliqueSearch(const CommGraph &g) : g_(g) {}

  std::vector<std::size_t> run() {
    Bits all(g_.vertex_count());
    all.set();
    expand(all);
    return best_;
  }

private:
  // Greedy sequential colouring of `candidates`; vertices come out in
  // non-decreasing colour order so the last one has the largest bound.
  void colour(const Bits &candidates, std::vector<std::size_t> &order,
              std::vector<std::size_t> &colours) const {
    Bits uncoloured = candidates;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Bits available = uncoloured;
      for (auto v = available.find_first(); v != Bits::npos; v = available.find_next(v)) {
        available -= g_.neighbours(v);
        uncoloured.reset(v);
        order.push_back(v);
        colours.push_back(colour);
      }
    }
  }

  void expand(Bits candidates) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colours;
    colour(candidates, order, colours);
    for (auto k = order.size(); k-- > 0;) {
      if (current_.size() + colours[k] <= best_.size())
        return;
      const auto v = order[k];
      current_.push_back(v);
      Bits next = candidates & g_.neighbours(v);
      if (next.none()) {
        if (current_.size() > best_.size())
          best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  const CommGraph &g_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

} // namespace

CliqueResult maximum_clique(const CommGraph &g) {
  auto members = CliqueSearch(g).run();
  std::sort(members.begin(), members.end());
  CliqueResult out;
  out.size = members.size();
  for (auto v : members)
    out.clique.push_back(g.vertex(v));
  return out;
}

P3Result is_p3_free(const CommGraph &g) {
  const auto count = g.vertex_count();
  for (std::size_t a = 0; a < count; ++a) {
    const auto &na = g.neighbours(a);
    for (auto b = na.find_first(); b != Bits::npos; b = na.find_next(b)) {
      // Third vertex: a neighbour of b, distinct from a and not adjacent to it.
      Bits ends = g.neighbours(b) - na;
      ends.reset(a);
      if (auto e = ends.find_first(); e != Bits::npos)
        return {false, std::array<Delta, 3>{g.vertex(a), g.vertex(b), g.vertex(e)}};
    }
  }
  return {true, std::nullopt};
}

std::optional<std::array<Delta, 4>> f2xf2_witness(const CommGraph &g) {
  const auto count = g.vertex_count();
  for (std::size_t x1 = 0; x1 < count; ++x1) {
    for (std::size_t x2 = x1 + 1; x2 < count; ++x2) {
      if (g.adjacent(x1, x2))
        continue;
      const Bits common = g.neighbours(x1) & g.neighbours(x2);
      for (auto y1 = common.find_first(); y1 != Bits::npos; y1 = common.find_next(y1)) {
        const Bits partners = common - g.neighbours(y1);
        if (auto y2 = partners.find_next(y1); y2 != Bits::npos)
          return std::array<Delta, 4>{g.vertex(x1), g.vertex(x2), g.vertex(y1), g.vertex(y2)};
      }
    }
  }
  return std::nullopt;
}

bool valid_f2xf2(const CommGraph &g, const std::array<Delta, 4> &q) {
  std::array<std::size_t, 4> v{};
  for (std::size_t k = 0; k < 4; ++k)
    v[k] = g.index_of(q[k].unsigned_vertex());
  if (v[0] == v[1] || v[2] == v[3])
    return false;
  return !g.adjacent(v[0], v[1]) && !g.adjacent(v[2], v[3]) && g.adjacent(v[0], v[2]) &&
         g.adjacent(v[0], v[3]) && g.adjacent(v[1], v[2]) && g.adjacent(v[1], v[3]);
}

bool valid_p3(const CommGraph &g, const std::array<Delta, 3> &p) {
  const auto a = g.index_of(p[0].unsigned_vertex());
  const auto b = g.index_of(p[1].unsigned_vertex());
  const auto c = g.index_of(p[2].unsigned_vertex());
  return a != c && g.adjacent(a, b) && g.adjacent(b, c) && !g.adjacent(a, c);
}

std::vector<Delta> dominating_vertices(const CommGraph &g) {
  std::vector<Delta> out;
  const auto count = g.vertex_count();
  for (std::size_t v = 0; v < count; ++v)
    if (g.neighbours(v).count() + 1 == count)
      out.push_back(g.vertex(v));
  return out;
}

} // namespace uvbraid
