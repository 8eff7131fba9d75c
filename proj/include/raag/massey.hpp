#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "raag/exterior.hpp"
#include "raag/presentation.hpp"

namespace raag {

// An n-fold Massey decision problem: the group presentation plus the
// sequence of degree-1 classes, n >= 2. Decisions go through unitriangular
// representations: the product is defined iff some homomorphism into
// U_(n+1) mod center reads the sequence off its superdiagonals, and
// vanishes iff a full homomorphism into U_(n+1) does.
struct MasseyQuery {
  RaagPresentation pres;
  std::vector<Cochain1> seq;

  int n() const { return static_cast<int>(seq.size()); }
  int dim() const { return n() + 1; }
};

struct SearchBudget {
  std::uint64_t max_space = 100'000'000;  // exhaustive claims need space <= this
  int jobs = 1;
  bool deterministic = true;
};

// Certificate attached to every search outcome. `space` is the logical
// size of the pinned assignment space (product over generators of p^(free
// entries)); `visited` counts candidates actually constructed. A None
// claim is exhaustive when the whole space was covered, by enumeration or
// by the linear solves that parameterize it.
struct Exhaustion {
  std::uint64_t space = 0;
  std::uint64_t visited = 0;
  bool exhaustive = false;
};

enum class SearchOutcome { Found, ExhaustedNone, Indeterminate };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Indeterminate;
  std::optional<GeneratorAssignment> witness;
  Exhaustion cert;
};

// Depth-first search over generator images with the superdiagonals pinned
// to the query sequence. Generators are processed tails-before-heads when
// the one-way edges allow it, so every relator to an already-assigned
// generator is linear in the current one and is consumed by a linear
// solve; relators that stay nonlinear (one-way cycles) are checked by
// evaluation. Witnesses are re-verified before being returned and, under
// the deterministic flag, are the lexicographically least solution in
// processing order.
SearchResult search_bar_representation(const MasseyQuery& q, const SearchBudget& b);
SearchResult search_representation(const MasseyQuery& q, const SearchBudget& b);

enum class MasseyStatus { NotDefined, Vanishes, Essential, Indeterminate };
const char* to_string(MasseyStatus s);

struct MasseyVerdict {
  MasseyStatus status = MasseyStatus::Indeterminate;
  std::optional<GeneratorAssignment> bar_witness;   // when defined
  std::optional<GeneratorAssignment> full_witness;  // when vanishing
  Exhaustion bar_cert, full_cert;
};

// Essential iff the bar search succeeds and the full search exhausts.
// Whenever the bar search succeeds, vanishing of the consecutive cup
// products is asserted; a violation would be a bug, not a discovery.
MasseyVerdict massey_status(const MasseyQuery& q, const SearchBudget& b);

// The two explicit essential-product witnesses on a forbidden triple
// (u, v, w) where w gains a one-way edge from u. With u, v not joined the
// q-fold sequence (a, b, ..., b, a), a = u* + v*, b = u*, gets the bar
// witness u -> all-ones Jordan, v -> I + E(0,1) + E(q-1,q), rest -> I.
// With u, v joined the sequence (a, ..., a) gets u, v -> Jordan, rest -> I.
// Both are validated mod center before being returned.
GeneratorAssignment essential_witness_disjoint_pair(const Digraph& g,
                                                    const VertexId& u,
                                                    const VertexId& v,
                                                    const VertexId& w, Prime pr);
GeneratorAssignment essential_witness_joined_pair(const Digraph& g,
                                                  const VertexId& u,
                                                  const VertexId& v,
                                                  const VertexId& w, Prime pr);

// The q-fold sequence the two witnesses above realize, padded with zeros
// on the remaining vertices.
std::vector<Cochain1> designated_sequence(const Digraph& g, Prime pr,
                                          const NotSpecialCliqueWitness& wit);

// Raised when the special-clique vanishing construction falls back to an
// exhaustive search and that search proves no witness exists: at desk
// scale this would be a counterexample certificate, and it is never
// swallowed.
struct CounterexampleError : std::runtime_error {
  Exhaustion cert;
  explicit CounterexampleError(const Exhaustion& c)
      : std::runtime_error(
            "strong-vanishing construction failed and the exhaustive search "
            "found no representation; this certifies a counterexample"),
        cert(c) {}
};

struct ConstructResult {
  enum class Route { Direct, Fallback };
  Route route = Route::Direct;
  GeneratorAssignment assignment;
};

// Explicit vanishing homomorphism for a special-clique digraph and a
// sequence with vanishing consecutive cups. Ordinary vertices get
// Jordan-type matrices; per special vertex the star restrictions are
// rescaled to powers of one base matrix and the special vertex gets
// B * base^k with [B, base] = base^q. Zeros in the sequence split the
// construction into diagonal blocks. Rank > 1 star restrictions or
// conflicting rescalings of shared star vertices fall back to the search.
ConstructResult construct_vanishing_hom(const Digraph& g, Prime pr,
                                        const std::vector<Cochain1>& seq,
                                        const SearchBudget& b = {});

struct StrongVanishingFailure {
  std::uint64_t seq_index;  // position in the full sequence enumeration
  std::vector<Cochain1> seq;
  Exhaustion cert;  // exhausted full search
};

struct StrongVanishingReport {
  std::uint64_t total = 0;       // sequences considered
  std::uint64_t qualifying = 0;  // consecutive cups vanish
  std::uint64_t vanished = 0;
  std::uint64_t undecided = 0;  // budget-bound, makes the report partial
  std::vector<StrongVanishingFailure> failures;
  bool exhaustive = false;  // full sequence space, all searches exhaustive
  std::uint64_t sampled = 0;  // 0 = exhaustive enumeration
};

// Every length-n sequence with vanishing consecutive cups must vanish;
// failures carry certificates. Exhaustive when p^(|V| n) sequences fit the
// budget, else a declared seeded sample.
StrongVanishingReport strong_vanishing_report(const Digraph& g, Prime pr, int n,
                                              const SearchBudget& b,
                                              std::uint64_t sample = 0,
                                              std::uint64_t seed = 0);

// One digraph's worth of the main equivalence: the classification, the
// strong-vanishing report, and (for non-special-clique inputs) the
// designated essential product.
struct TheoremCheck {
  Verdict verdict = Verdict::Undigraph;
  bool special_clique = false;
  StrongVanishingReport report;
  std::optional<MasseyVerdict> designated;
  bool consistent = false;
};
TheoremCheck check_theorem_for(const Digraph& g, Prime pr, int n,
                               const SearchBudget& b, std::uint64_t sample = 0,
                               std::uint64_t seed = 0);

}  // namespace raag
