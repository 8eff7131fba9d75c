#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "raag/digraph.hpp"
#include "raag/exterior.hpp"
#include "raag/massey.hpp"
#include "raag/presentation.hpp"

namespace raag {

using nlohmann::json;

// {"vertices": ["v1", ...], "edges": [["tail","head"], ...]} with
// undirected edges written as both ordered pairs.
json digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const json& j);

// One-way edges as arcs, undirected classes as a single edge with
// dir=none; special vertices filled.
std::string digraph_to_dot(const Digraph& g);

// {"n": dim-1, "p": p, "rows": [[...]]} with full rows including the
// diagonal.
json matrix_to_json(const UniTri& m);
UniTri matrix_from_json(const json& j);

// Cochains as sparse {vertex: coefficient} objects; degree-2 elements as
// {"{v,w}": coefficient}.
json cochain_to_json(const Digraph& g, const Cochain1& a);
Cochain1 cochain_from_json(const Digraph& g, int p, const json& j);
json element2_to_json(const Digraph& g, const ExteriorElement& x);

// Comma-separated linear combinations of vertex names with integer
// coefficients, e.g. "u+2v, u, u+2v"; "0" is the zero class. Coefficients
// reduce mod p at parse time.
std::vector<Cochain1> parse_sequence(const Digraph& g, int p,
                                     const std::string& text);
std::string sequence_to_text(const Digraph& g, const std::vector<Cochain1>& seq);

json presentation_to_json(const RaagPresentation& p);
json assignment_to_json(const RaagPresentation& p, const GeneratorAssignment& a);
GeneratorAssignment assignment_from_json(const RaagPresentation& p, const json& j);

json exhaustion_to_json(const Exhaustion& e);
json budget_to_json(const SearchBudget& b);

// Self-contained verdict/witness bundle: digraph, prime, sequence, status,
// witnesses with per-relator defect status, exhaustion certificates and
// the budget echo. verify_witness_bundle re-checks every embedded witness
// independently of the search that produced it.
json verdict_to_json(const MasseyQuery& q, const MasseyVerdict& v,
                     const SearchBudget& b);
struct WitnessCheck {
  bool ok = false;
  std::string detail;
};
WitnessCheck verify_witness_bundle(const json& bundle);

json strong_report_to_json(const Digraph& g, const StrongVanishingReport& r);

// Classification report: verdict, violations, both sinkhole readings per
// special vertex, and the patching decomposition when one exists.
json classify_report_to_json(const Digraph& g);

// Hilbert series, per-degree clique bases, and the degree-2 relator
// correspondence with signs.
json algebra_report_to_json(const ExteriorAlgebra& alg, int max_degree);

json theorem_check_to_json(const Digraph& g, const TheoremCheck& tc);

}  // namespace raag
