#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raag/digraph.hpp"
#include "raag/fp.hpp"
#include "raag/unitri.hpp"

namespace raag {

// One defining relation per adjacency class. An undirected edge {u, v}
// contributes [u, v] = 1; a one-way edge (tail, head) contributes
// head * tail * head^-1 = tail^(1+q), i.e. the head conjugates the tail
// onto its (1+q)-th power.
struct Relator {
  enum class Kind { Commute, Conjugate };
  Kind kind;
  int u = -1, v = -1;   // Commute: u < v
  int tail = -1, head = -1;  // Conjugate
  long exponent = 0;         // 1 + q for Conjugate relators
  std::string id;

  bool operator==(const Relator&) const = default;
};

struct RaagPresentation {
  Digraph g;
  Prime pr;
  std::vector<VertexId> generators;  // = vertices, in order
  std::vector<Relator> relators;     // one per adjacency class, sorted
};

RaagPresentation presentation(const Digraph& g, Prime pr);

// Generator images in one U_(n+1)(F_p); with mod_center set, matrices are
// read as classes modulo the center and relator defects only have to be
// central.
struct GeneratorAssignment {
  std::vector<UniTri> images;  // by generator index
  bool mod_center = false;
};

// Relator defect LHS * RHS^-1: the identity exactly when the relation
// holds. Commute: [A_u, A_v]. Conjugate: (A_h A_t A_h^-1) * (A_t^(1+q))^-1.
UniTri evaluate_relator(const Relator& r, const GeneratorAssignment& a);

struct VerifyResult {
  bool ok = false;
  int failing_relator = -1;  // index into relators when !ok
  std::optional<UniTri> defect;
};

// First-failure verification in relator order; defects are reported as
// whole matrices so a failure is an auditable certificate.
VerifyResult verify_assignment(const RaagPresentation& p,
                               const GeneratorAssignment& a);

// Presentation of the induced subdigraph on a clique of a special digraph;
// its generators may be read as generators of a subgroup of the ambient
// group.
RaagPresentation clique_subgroup_presentation(const RaagPresentation& p,
                                              const std::vector<VertexId>& sub);

}  // namespace raag
