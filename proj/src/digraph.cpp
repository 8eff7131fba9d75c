#include "raag/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace raag {

Digraph::Digraph(std::vector<VertexId> vertices,
                 const std::vector<std::pair<VertexId, VertexId>>& edges) {
  vertices_ = std::move(vertices);
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      if (vertices_[i] == vertices_[j])
        throw std::invalid_argument("duplicate vertex id: " + vertices_[i]);
  const int n = size();
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [a, b] : edges) {
    int ia = index_of(a), ib = index_of(b);
    if (ia == ib) throw std::invalid_argument("loop at vertex " + a);
    adj_[ia * n + ib] = 1;
  }
  for (uint8_t x : adj_) arc_count_ += x;
}

Digraph Digraph::from_indices(std::vector<VertexId> vertices,
                              const std::vector<std::pair<int, int>>& edges) {
  Digraph g;
  g.vertices_ = std::move(vertices);
  const int n = g.size();
  g.adj_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("loop");
    g.adj_[a * n + b] = 1;
  }
  for (uint8_t x : g.adj_) g.arc_count_ += x;
  return g;
}

int Digraph::index_of(const VertexId& v) const {
  for (int i = 0; i < size(); ++i)
    if (vertices_[i] == v) return i;
  throw std::invalid_argument("unknown vertex id: " + v);
}

bool Digraph::contains(const VertexId& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (adj_[a * n + b]) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> Digraph::edge_classes() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adjacent(a, b)) out.emplace_back(a, b);
  return out;
}

bool Digraph::has_one_way_arcs() const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (adj_[a * n + b] && !adj_[b * n + a]) return true;
  return false;
}

namespace {

bool special_at(const Digraph& g, int w) {
  for (int v = 0; v < g.size(); ++v)
    if (v != w && g.one_way(v, w)) return true;
  return false;
}

// Every incident edge of w is an incoming one-way edge.
bool sinkhole_at(const Digraph& g, int w) {
  if (!special_at(g, w)) return false;
  for (int v = 0; v < g.size(); ++v) {
    if (v == w || !g.adjacent(v, w)) continue;
    if (!g.one_way(v, w)) return false;
  }
  return true;
}

}  // namespace

std::optional<EdgeKind> edge_kind(const Digraph& g, const VertexId& x,
                                  const VertexId& y) {
  int a = g.index_of(x), b = g.index_of(y);
  if (a == b) throw std::invalid_argument("edge_kind needs distinct vertices");
  if (g.undirected(a, b)) {
    if (a > b) std::swap(a, b);
    return EdgeKind{EdgeKind::Tag::Undirected, g.name(a), g.name(b)};
  }
  if (g.one_way(a, b)) return EdgeKind{EdgeKind::Tag::Directed, x, y};
  if (g.one_way(b, a)) return EdgeKind{EdgeKind::Tag::Directed, y, x};
  return std::nullopt;
}

VertexClass vertex_class(const Digraph& g, const VertexId& v) {
  int i = g.index_of(v);
  VertexClass c;
  c.special = special_at(g, i);
  c.sinkhole = c.special && sinkhole_at(g, i);
  return c;
}

bool sinkhole_literal(const Digraph& g, const VertexId& v) {
  int w = g.index_of(v);
  if (!special_at(g, w)) return false;
  for (int u = 0; u < g.size(); ++u)
    if (u != w && g.has_arc(u, w) && g.has_arc(w, u)) return false;
  return true;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Undigraph: return "Undigraph";
    case Verdict::SpecialClique: return "SpecialClique";
    case Verdict::SpecialNotClique: return "SpecialNotClique";
    case Verdict::NotSpecial: return "NotSpecial";
  }
  return "?";
}

const char* to_string(PatternViolation::Kind k) {
  switch (k) {
    case PatternViolation::Kind::SpecialWithOutEdge: return "SpecialWithOutEdge";
    case PatternViolation::Kind::SpecialOnUndirectedEdge:
      return "SpecialOnUndirectedEdge";
    case PatternViolation::Kind::NonCliqueStar: return "NonCliqueStar";
  }
  return "?";
}

std::vector<PatternViolation> scan_forbidden(const Digraph& g) {
  std::vector<PatternViolation> out;
  const int n = g.size();
  for (int w = 0; w < n; ++w) {
    for (int v = 0; v < n; ++v) {
      if (v == w || !g.one_way(v, w)) continue;
      // w is special, witnessed by v; look for a disqualifying second edge.
      for (int x = 0; x < n; ++x) {
        if (x == w || x == v) continue;
        if (g.one_way(w, x))
          out.push_back({PatternViolation::Kind::SpecialWithOutEdge,
                         {g.name(v), g.name(w), g.name(x)}});
        if (g.undirected(w, x))
          out.push_back({PatternViolation::Kind::SpecialOnUndirectedEdge,
                         {g.name(v), g.name(w), g.name(x)}});
      }
    }
    // Two non-adjacent one-way in-neighbours of w.
    for (int u = 0; u < n; ++u) {
      if (u == w || !g.one_way(u, w)) continue;
      for (int v = u + 1; v < n; ++v) {
        if (v == w || !g.one_way(v, w)) continue;
        if (!g.adjacent(u, v))
          out.push_back({PatternViolation::Kind::NonCliqueStar,
                         {g.name(u), g.name(v), g.name(w)}});
      }
    }
  }
  return out;
}

std::vector<NotSpecialCliqueWitness> scan_not_special_clique(const Digraph& g) {
  std::vector<NotSpecialCliqueWitness> out;
  const int n = g.size();
  for (int w = 0; w < n; ++w) {
    for (int u = 0; u < n; ++u) {
      if (u == w || !g.one_way(u, w)) continue;
      for (int v = 0; v < n; ++v) {
        if (v == w || v == u) continue;
        if (g.has_arc(w, v))
          out.push_back({false, {g.name(u), g.name(v), g.name(w)}});
      }
      for (int v = u + 1; v < n; ++v) {
        if (v == w || !g.one_way(v, w)) continue;
        if (!g.adjacent(u, v))
          out.push_back({true, {g.name(u), g.name(v), g.name(w)}});
      }
    }
  }
  return out;
}

ClassifyResult classify(const Digraph& g) {
  ClassifyResult r;
  r.violations = scan_forbidden(g);

  const int n = g.size();
  bool any_special = false, all_sinkholes = true, stars_are_cliques = true;
  for (int w = 0; w < n; ++w) {
    if (!special_at(g, w)) continue;
    any_special = true;
    if (!sinkhole_at(g, w)) all_sinkholes = false;
    std::vector<VertexId> st;
    st.push_back(g.name(w));
    for (int v = 0; v < n; ++v)
      if (v != w && g.adjacent(v, w)) st.push_back(g.name(v));
    std::sort(st.begin(), st.end(), [&](const VertexId& a, const VertexId& b) {
      return g.index_of(a) < g.index_of(b);
    });
    if (!is_clique(g, st)) stars_are_cliques = false;
  }

  if (!any_special)
    r.verdict = Verdict::Undigraph;
  else if (!all_sinkholes)
    r.verdict = Verdict::NotSpecial;
  else if (!stars_are_cliques)
    r.verdict = Verdict::SpecialNotClique;
  else
    r.verdict = Verdict::SpecialClique;
  return r;
}

Digraph star(const Digraph& g, const VertexId& v) {
  int i = g.index_of(v);
  std::vector<VertexId> sub;
  for (int u = 0; u < g.size(); ++u)
    if (u == i || g.adjacent(u, i)) sub.push_back(g.name(u));
  return induced(g, sub);
}

Digraph induced(const Digraph& g, const std::vector<VertexId>& sub) {
  std::vector<int> idx;
  for (const auto& v : sub) idx.push_back(g.index_of(v));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<VertexId> names;
  for (int i : idx) names.push_back(g.name(i));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (a != b && g.has_arc(idx[a], idx[b]))
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Digraph::from_indices(std::move(names), edges);
}

Digraph underlying(const Digraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.arcs()) {
    edges.emplace_back(a, b);
    edges.emplace_back(b, a);
  }
  return Digraph::from_indices(g.vertices(), edges);
}

bool is_clique(const Digraph& g, const std::vector<VertexId>& sub) {
  std::vector<int> idx;
  for (const auto& v : sub) idx.push_back(g.index_of(v));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (!g.adjacent(idx[a], idx[b])) return false;
  return true;
}

namespace {

void extend_cliques(const Digraph& g, std::vector<int>& cur, int next, int k,
                    std::vector<std::vector<VertexId>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    std::vector<VertexId> c;
    for (int i : cur) c.push_back(g.name(i));
    out.push_back(std::move(c));
    return;
  }
  for (int v = next; v < g.size(); ++v) {
    bool ok = true;
    for (int u : cur)
      if (!g.adjacent(u, v)) { ok = false; break; }
    if (!ok) continue;
    cur.push_back(v);
    extend_cliques(g, cur, v + 1, k, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<VertexId>> cliques(const Digraph& g, int k) {
  if (k < 0) throw std::invalid_argument("clique size must be >= 0");
  std::vector<std::vector<VertexId>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur;
  extend_cliques(g, cur, 0, k, out);
  return out;
}

PatchingDecomposition patching_decomposition(const Digraph& g) {
  auto cr = classify(g);
  if (cr.verdict != Verdict::Undigraph && cr.verdict != Verdict::SpecialClique) {
    std::string msg = "digraph is not special-clique";
    if (!cr.violations.empty()) {
      const auto& v = cr.violations.front();
      msg += std::string(": ") + to_string(v.kind) + " at (" + v.witness[0] +
             ", " + v.witness[1] + ", " + v.witness[2] + ")";
    }
    throw std::invalid_argument(msg);
  }
  PatchingDecomposition d;
  const int n = g.size();
  for (int v = 0; v < n; ++v)
    if (!special_at(g, v)) d.core.push_back(g.name(v));
  for (int w = 0; w < n; ++w) {
    if (!special_at(g, w)) continue;
    PatchPiece piece;
    piece.special = g.name(w);
    piece.star_vertices.push_back(g.name(w));
    for (int v = 0; v < n; ++v)
      if (v != w && g.adjacent(v, w)) {
        piece.star_vertices.push_back(g.name(v));
        piece.overlap.push_back(g.name(v));
      }
    auto by_order = [&](const VertexId& a, const VertexId& b) {
      return g.index_of(a) < g.index_of(b);
    };
    std::sort(piece.star_vertices.begin(), piece.star_vertices.end(), by_order);
    std::sort(piece.overlap.begin(), piece.overlap.end(), by_order);
    d.pieces.push_back(std::move(piece));
  }
  return d;
}

namespace {

// Check E = E1 u E2 for the split given by the two index sets.
bool patching_covers(const Digraph& g, const std::vector<char>& in1,
                     const std::vector<char>& in2) {
  for (const auto& [a, b] : g.arcs())
    if (!((in1[a] && in1[b]) || (in2[a] && in2[b]))) return false;
  return true;
}

}  // namespace

std::optional<Patching> find_patching(const Digraph& g) {
  const int n = g.size();
  if (n < 2) return std::nullopt;
  // Overlaps by increasing size, lexicographic within a size; remaining
  // vertices split with the least one pinned to side 1.
  std::vector<int> overlap_idx;
  for (int s = 0; s <= n - 2; ++s) {
    std::vector<int> comb(s);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      std::vector<char> in_overlap(n, 0);
      for (int i : comb) in_overlap[i] = 1;
      std::vector<int> rest;
      for (int v = 0; v < n; ++v)
        if (!in_overlap[v]) rest.push_back(v);
      const int m = static_cast<int>(rest.size());
      // rest[0] -> side 1; enumerate assignments of rest[1..] (bit = side 2).
      for (std::uint64_t mask = 1; mask < (1ULL << (m - 1)); ++mask) {
        std::vector<char> in1(n, 0), in2(n, 0);
        for (int i : comb) in1[i] = in2[i] = 1;
        in1[rest[0]] = 1;
        for (int j = 1; j < m; ++j) {
          if (mask & (1ULL << (j - 1)))
            in2[rest[j]] = 1;
          else
            in1[rest[j]] = 1;
        }
        if (patching_covers(g, in1, in2)) {
          Patching p;
          for (int v = 0; v < n; ++v) {
            if (in1[v]) p.part1.push_back(g.name(v));
            if (in2[v]) p.part2.push_back(g.name(v));
            if (in1[v] && in2[v]) p.overlap.push_back(g.name(v));
          }
          return p;
        }
      }
      // next combination
      int i = s - 1;
      while (i >= 0 && comb[i] == n - s + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::uint64_t digraph_count(int n) {
  if (n < 0 || n > 6)
    throw std::length_error("labeled enumeration supported for n <= 6");
  int pairs = n * (n - 1) / 2;
  return 1ULL << (2 * pairs);
}

Digraph digraph_at(int n, std::uint64_t index) {
  if (index >= digraph_count(n)) throw std::out_of_range("digraph index");
  std::vector<VertexId> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int state = index & 3;
      index >>= 2;
      if (state == 1 || state == 3) edges.emplace_back(a, b);
      if (state == 2 || state == 3) edges.emplace_back(b, a);
    }
  return Digraph::from_indices(std::move(names), edges);
}

Digraph canonicalize(const Digraph& g) {
  const int n = g.size();
  if (n > 8) throw std::length_error("canonicalize supports <= 8 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  bool have = false;
  do {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.arcs()) edges.emplace_back(perm[a], perm[b]);
    std::sort(edges.begin(), edges.end());
    if (!have || edges < best) {
      best = std::move(edges);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Digraph::from_indices(g.vertices(), best);
}

}  // namespace raag
