#include "raag/presentation.hpp"

#include <stdexcept>

#include "raag/exterior.hpp"

namespace raag {

RaagPresentation presentation(const Digraph& g, Prime pr) {
  RaagPresentation p{g, pr, g.vertices(), {}};
  for (const auto& [a, b] : g.edge_classes()) {
    Relator r;
    r.id = relator_id(g, a, b);
    if (g.undirected(a, b)) {
      r.kind = Relator::Kind::Commute;
      r.u = a;
      r.v = b;
    } else {
      r.kind = Relator::Kind::Conjugate;
      r.tail = g.one_way(a, b) ? a : b;
      r.head = g.one_way(a, b) ? b : a;
      r.exponent = 1 + pr.q;
    }
    p.relators.push_back(std::move(r));
  }
  return p;
}

UniTri evaluate_relator(const Relator& r, const GeneratorAssignment& a) {
  auto image = [&](int idx) -> const UniTri& {
    if (idx < 0 || idx >= static_cast<int>(a.images.size()))
      throw std::invalid_argument("relator references an unassigned generator");
    return a.images[idx];
  };
  if (r.kind == Relator::Kind::Commute)
    return image(r.u).commutator(image(r.v));
  const UniTri& h = image(r.head);
  const UniTri& t = image(r.tail);
  return h.mul(t).mul(h.inv()).mul(t.pow(r.exponent).inv());
}

VerifyResult verify_assignment(const RaagPresentation& p,
                               const GeneratorAssignment& a) {
  if (a.images.size() != p.generators.size())
    throw std::invalid_argument("assignment size does not match generators");
  for (std::size_t i = 1; i < a.images.size(); ++i)
    if (a.images[i].dim() != a.images[0].dim() ||
        a.images[i].p() != a.images[0].p())
      throw std::invalid_argument("assignment matrices disagree in size/field");
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    UniTri defect = evaluate_relator(p.relators[i], a);
    bool ok = a.mod_center ? defect.is_central() : defect.is_identity();
    if (!ok) return {false, static_cast<int>(i), defect};
  }
  return {true, -1, std::nullopt};
}

RaagPresentation clique_subgroup_presentation(const RaagPresentation& p,
                                              const std::vector<VertexId>& sub) {
  auto verdict = classify(p.g).verdict;
  if (verdict == Verdict::NotSpecial)
    throw std::invalid_argument(
        "ambient digraph is not special; clique subgroups need not embed");
  if (!is_clique(p.g, sub))
    throw std::invalid_argument("vertex set is not a clique");
  return presentation(induced(p.g, sub), p.pr);
}

}  // namespace raag
