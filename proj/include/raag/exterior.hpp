#pragma once

#include <map>
#include <string>
#include <vector>

#include "raag/digraph.hpp"
#include "raag/fp.hpp"

namespace raag {

// Degree-1 class: one residue mod p per vertex, indexed by the digraph's
// vertex order. The coefficient vector always covers the full vertex set.
struct Cochain1 {
  std::vector<int> c;

  bool is_zero() const {
    for (int x : c)
      if (x != 0) return false;
    return true;
  }
  bool operator==(const Cochain1&) const = default;
};

// Homogeneous element with clique-indexed support. Keys are sorted vertex
// index tuples that must be cliques of the parent digraph; values nonzero.
struct ExteriorElement {
  int degree = 0;
  int n_vertices = 0;
  int p = 0;
  std::map<std::vector<int>, int> coeff;

  bool is_zero() const { return coeff.empty(); }
  bool operator==(const ExteriorElement&) const = default;
};

// The exterior Stanley-Reisner F_p-algebra of a digraph: the exterior
// algebra on the dual vertex basis modulo wedges of non-adjacent pairs.
// The degree-k basis is the set of k-cliques; products of basis elements
// are signed unions or zero.
class ExteriorAlgebra {
 public:
  ExteriorAlgebra(Digraph g, Prime pr);

  const Digraph& digraph() const { return g_; }
  const Prime& prime() const { return pr_; }

  // Hilbert series coefficients: dims()[k] = number of k-cliques.
  std::vector<int> dims() const;
  const std::vector<std::vector<int>>& basis(int degree) const;
  int top_degree() const { return static_cast<int>(basis_.size()) - 1; }

  Cochain1 zero_cochain() const;
  Cochain1 dual_vertex(const VertexId& v) const;  // v* basis cochain
  Cochain1 add(const Cochain1& a, const Cochain1& b) const;
  Cochain1 scale(int k, const Cochain1& a) const;

  ExteriorElement zero_element(int degree) const;
  ExteriorElement from_cochain(const Cochain1& a) const;  // degree 1
  ExteriorElement basis_element(const std::vector<VertexId>& clique) const;

  ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) const;
  // Degree-(1+1) cup product: coefficient a(v)b(w) - a(w)b(v) on each edge
  // class {v, w}, v < w; non-edge components are killed by the quotient.
  ExteriorElement cup(const Cochain1& a, const Cochain1& b) const;
  bool consecutive_cups_vanish(const std::vector<Cochain1>& seq) const;

  // Restriction to the induced subdigraph on `sub` (a ring map in degrees
  // <= 2): degree 1 drops coordinates outside sub, degree 2 drops basis
  // cliques not inside sub. Results live on induced(digraph, sub).
  Cochain1 restrict1(const Cochain1& a, const std::vector<VertexId>& sub) const;
  ExteriorElement restrict2(const ExteriorElement& x,
                            const std::vector<VertexId>& sub) const;
  std::vector<VertexId> restriction_kernel1(const std::vector<VertexId>& sub) const;
  // Basis wedges v* ^ w* with {v, w} not an edge of the subdigraph.
  std::vector<std::pair<VertexId, VertexId>> restriction_kernel2(
      const std::vector<VertexId>& sub) const;

  // The two kernel bases bundled with their target.
  struct RestrictionMap {
    std::vector<VertexId> sub;
    std::vector<VertexId> kernel1;
    std::vector<std::pair<VertexId, VertexId>> kernel2;
  };
  RestrictionMap restriction_map(const std::vector<VertexId>& sub) const {
    return {sub, restriction_kernel1(sub), restriction_kernel2(sub)};
  }

  // Degree-2 basis element {v, w} (v < w) <-> presentation relator, with
  // sign -1 on one-way edges (their relator carries the reversed
  // commutator) and +1 on undirected edges.
  struct RelatorRef {
    std::string id;
    int sign;
  };
  std::vector<std::pair<std::pair<VertexId, VertexId>, RelatorRef>>
  relator_correspondence() const;

 private:
  void check_element(const ExteriorElement& x) const;
  void check_cochain(const Cochain1& a) const;

  Digraph g_;
  Prime pr_;
  std::vector<std::vector<std::vector<int>>> basis_;  // [degree] -> cliques
};

std::string relator_id(const Digraph& g, int a, int b);

}  // namespace raag
