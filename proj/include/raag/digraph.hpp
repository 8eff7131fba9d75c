#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace raag {

using VertexId = std::string;

// Finite loop-free directed graph. The vertex list fixes a total order used
// for every deterministic output (sorted sets, basis orders, witness order).
// A pair of opposite directed edges is treated as one undirected edge; a
// directed edge whose reverse is absent is a one-way edge.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<VertexId> vertices,
          const std::vector<std::pair<VertexId, VertexId>>& edges);
  static Digraph from_indices(std::vector<VertexId> vertices,
                              const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const VertexId& name(int i) const { return vertices_.at(i); }
  int index_of(const VertexId& v) const;  // throws on unknown id
  bool contains(const VertexId& v) const;

  bool has_arc(int a, int b) const { return adj_[a * size() + b] != 0; }
  bool adjacent(int a, int b) const { return has_arc(a, b) || has_arc(b, a); }
  bool undirected(int a, int b) const { return has_arc(a, b) && has_arc(b, a); }
  bool one_way(int a, int b) const { return has_arc(a, b) && !has_arc(b, a); }

  // Ordered pairs, sorted; undirected edges appear as both pairs.
  std::vector<std::pair<int, int>> arcs() const;
  // Unordered adjacency classes {a < b}, sorted: the edge set of the
  // underlying graph. Its cardinality is card(|E|).
  std::vector<std::pair<int, int>> edge_classes() const;
  int arc_count() const { return arc_count_; }
  bool has_one_way_arcs() const;

  bool operator==(const Digraph& o) const = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<uint8_t> adj_;  // row-major size() x size()
  int arc_count_ = 0;
};

// Adjacency class of a vertex pair: one undirected edge (both arcs
// present) or a one-way edge (exactly one arc).
struct EdgeKind {
  enum class Tag { Undirected, Directed };
  Tag tag;
  VertexId a, b;  // Directed: a = tail, b = head; Undirected: vertex order
};
std::optional<EdgeKind> edge_kind(const Digraph& g, const VertexId& x,
                                  const VertexId& y);

struct VertexClass {
  bool special = false;
  bool sinkhole = false;  // meaningful only when special
};

// A vertex is special when it is the head of at least one one-way edge.
// A sinkhole is a special vertex all of whose incident edges are incoming
// one-way edges. (The weaker reading, "no in-neighbour is also an
// out-neighbour", is exposed separately for audit; it disagrees with the
// operational one exactly on special vertices carrying out-edges that are
// not reversals of in-edges.)
VertexClass vertex_class(const Digraph& g, const VertexId& v);
bool sinkhole_literal(const Digraph& g, const VertexId& v);

enum class Verdict { Undigraph, SpecialClique, SpecialNotClique, NotSpecial };
const char* to_string(Verdict v);

struct PatternViolation {
  enum class Kind { SpecialWithOutEdge, SpecialOnUndirectedEdge, NonCliqueStar };
  Kind kind;
  // SpecialWithOutEdge:      (v, w, x) with v -> w one-way and w -> x one-way
  // SpecialOnUndirectedEdge: (v, w, x) with v -> w one-way and w -- x undirected
  // NonCliqueStar:           (u, v, w) with u -> w, v -> w one-way, u, v not
  //                          joined, u < v
  std::array<VertexId, 3> witness;
};
const char* to_string(PatternViolation::Kind k);

struct ClassifyResult {
  Verdict verdict;
  std::vector<PatternViolation> violations;
};

// Verdict from the definitions; violations from the independent triple scan.
ClassifyResult classify(const Digraph& g);
std::vector<PatternViolation> scan_forbidden(const Digraph& g);

// Second, independent reformulation of "not special-clique": an induced
// triple (u, v, w) with u -> w one-way and either an edge leaving w
// (one-way out or undirected), or a second one-way edge v -> w with u, v
// not joined. Nonempty exactly when classify is SpecialNotClique/NotSpecial.
struct NotSpecialCliqueWitness {
  bool two_in_edges;  // true: the two-one-way-in-edges, sources disjoint form
  std::array<VertexId, 3> witness;  // (u, v, w)
};
std::vector<NotSpecialCliqueWitness> scan_not_special_clique(const Digraph& g);

Digraph star(const Digraph& g, const VertexId& v);
Digraph induced(const Digraph& g, const std::vector<VertexId>& sub);
Digraph underlying(const Digraph& g);

// All k-subsets inducing a complete subdigraph (an edge in at least one
// direction between every pair), in lexicographic vertex order.
std::vector<std::vector<VertexId>> cliques(const Digraph& g, int k);
bool is_clique(const Digraph& g, const std::vector<VertexId>& sub);

struct PatchPiece {
  VertexId special;
  std::vector<VertexId> star_vertices;  // the special vertex and its neighbours
  std::vector<VertexId> overlap;        // star minus the special vertex
};
struct PatchingDecomposition {
  std::vector<VertexId> core;  // all ordinary vertices
  std::vector<PatchPiece> pieces;
};
// Requires classify(g) in {Undigraph, SpecialClique}; otherwise throws
// naming one violation.
PatchingDecomposition patching_decomposition(const Digraph& g);

struct Patching {
  std::vector<VertexId> part1, part2, overlap;
};
// Some decomposition of g as a patching of two proper induced subdigraphs,
// searched smallest-overlap-first; the least non-overlap vertex goes to
// part1. nullopt when no proper patching exists.
std::optional<Patching> find_patching(const Digraph& g);

// Labeled enumeration: every unordered vertex pair independently carries
// none / -> / <- / both, so there are 4^(n choose 2) digraphs on n named
// vertices v1..vn. The generator is stateless: digraph_at(n, i) is digraph
// number i in a fixed order.
std::uint64_t digraph_count(int n);          // n <= 6
Digraph digraph_at(int n, std::uint64_t i);  // i < digraph_count(n)

// Lexicographically least isomorph on the same vertex list, by brute-force
// permutation; <= 8 vertices.
Digraph canonicalize(const Digraph& g);

}  // namespace raag
