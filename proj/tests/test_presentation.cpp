#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "raag/corpus.hpp"
#include "raag/exterior.hpp"
#include "raag/presentation.hpp"

using namespace raag;

namespace {

UniTri random_unitri(int dim, int p, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, p - 1);
  UniTri m(dim, p);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) m.set(i, j, d(rng));
  return m;
}

}  // namespace

TEST_CASE("presentation of a complete special digraph") {
  // two ordinary generators commuting, one special vertex conjugating both
  Digraph g({"w", "v1", "v2"},
            {{"v1", "w"}, {"v2", "w"}, {"v1", "v2"}, {"v2", "v1"}});
  auto pr = Prime::make(3, 1);
  auto p = presentation(g, pr);
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0].kind == Relator::Kind::Conjugate);
  CHECK(p.g.name(p.relators[0].tail) == "v1");
  CHECK(p.g.name(p.relators[0].head) == "w");
  CHECK(p.relators[0].exponent == 1 + pr.q);
  CHECK(p.relators[1].kind == Relator::Kind::Conjugate);
  CHECK(p.g.name(p.relators[1].tail) == "v2");
  CHECK(p.relators[2].kind == Relator::Kind::Commute);
  CHECK(p.g.name(p.relators[2].u) == "v1");
  CHECK(p.g.name(p.relators[2].v) == "v2");
}

TEST_CASE("presentation: edgeless digraph is free, q-hypothesis enforced") {
  Digraph g({"a", "b", "c"}, {});
  auto p = presentation(g, Prime::make(3, 1));
  CHECK(p.relators.empty());
  CHECK(p.generators.size() == 3);
  CHECK_THROWS_AS(Prime::make(2, 1), std::invalid_argument);
}

TEST_CASE("presentation of the forbidden triples") {
  const Digraph& g61 = corpus_find("display-6.1")->digraph;
  auto p = presentation(g61, Prime::make(3, 1));
  // both relators conjugate a tail onto its (1+q)-th power by the sinkhole
  REQUIRE(p.relators.size() == 2);
  for (const auto& r : p.relators) {
    CHECK(r.kind == Relator::Kind::Conjugate);
    CHECK(p.g.name(r.head) == "w");
    CHECK(r.exponent == 4);
  }
}

TEST_CASE("evaluate_relator defects") {
  auto pr = Prime::make(3, 1);
  const int q = 3, dim = q + 1;
  const Digraph& g61 = corpus_find("display-6.1")->digraph;
  auto p = presentation(g61, pr);

  // identity assignment: every defect is the identity
  GeneratorAssignment idassign{{UniTri::identity(dim, 3), UniTri::identity(dim, 3),
                                UniTri::identity(dim, 3)},
                               false};
  for (const auto& r : p.relators)
    CHECK(evaluate_relator(r, idassign).is_identity());

  // the essential-product matrices: defects central but not trivial
  UniTri a = UniTri::jordan(dim, 3);
  UniTri c(dim, 3);
  c.set(0, 1, 1);
  c.set(dim - 2, dim - 1, 1);
  GeneratorAssignment bar{{a, c, UniTri::identity(dim, 3)}, true};
  for (const auto& r : p.relators) {
    UniTri defect = evaluate_relator(r, bar);
    CHECK(defect.is_central());
  }
  CHECK(verify_assignment(p, bar).ok);

  // perturb one entry: the verdict names the broken relator
  GeneratorAssignment broken = bar;
  broken.mod_center = false;
  auto vr = verify_assignment(p, broken);
  CHECK_FALSE(vr.ok);
  CHECK(vr.failing_relator == 0);  // r(u,w) in relator order
  CHECK_FALSE(vr.defect->is_identity());

  // perturbing a single matrix entry flips a previously satisfied relator
  Digraph e({"x", "y"}, {{"x", "y"}, {"y", "x"}});
  auto pe = presentation(e, pr);
  GeneratorAssignment good{{UniTri::jordan(dim, 3), UniTri::jordan(dim, 3)},
                           false};
  REQUIRE(verify_assignment(pe, good).ok);
  GeneratorAssignment tweaked = good;
  tweaked.images[1].set(0, 2, 1);
  auto vr2 = verify_assignment(pe, tweaked);
  CHECK_FALSE(vr2.ok);
  CHECK(pe.relators[vr2.failing_relator].id == "r(x,y)");
}

TEST_CASE("verify_assignment on the joined-pair witness") {
  auto pr = Prime::make(3, 1);
  const int dim = 4;
  const Digraph& g62 = corpus_find("display-6.2")->digraph;
  auto p = presentation(g62, pr);
  UniTri a = UniTri::jordan(dim, 3);
  GeneratorAssignment bar{{a, a, UniTri::identity(dim, 3)}, true};
  CHECK(verify_assignment(p, bar).ok);

  GeneratorAssignment idassign{{UniTri::identity(dim, 3), UniTri::identity(dim, 3),
                                UniTri::identity(dim, 3)},
                               false};
  CHECK(verify_assignment(p, idassign).ok);

  // without the central quotient the conjugation relator at w fails, with
  // defect A^(-q) whose corner entry is -1
  GeneratorAssignment full = bar;
  full.mod_center = false;
  auto vr = verify_assignment(p, full);
  REQUIRE_FALSE(vr.ok);
  CHECK(p.relators[vr.failing_relator].id == "r(u,w)");
  CHECK(vr.defect->corner() == 2);
}

TEST_CASE("verify_assignment at q = 4 over F_2") {
  auto pr = Prime::make(2, 2);
  const int dim = 5;
  const Digraph& g62 = corpus_find("display-6.2")->digraph;
  auto p = presentation(g62, pr);
  UniTri a = UniTri::jordan(dim, 2);
  GeneratorAssignment bar{{a, a, UniTri::identity(dim, 2)}, true};
  CHECK(verify_assignment(p, bar).ok);
}

TEST_CASE("clique subgroup presentations") {
  auto pr = Prime::make(3, 1);
  const Digraph& ex26 = corpus_find("example-2.6")->digraph;
  auto p = presentation(ex26, pr);

  // the 3-clique {u1, u3, u4}: free abelian on three generators
  auto delta1 = clique_subgroup_presentation(p, {"u1", "u3", "u4"});
  CHECK(delta1.generators.size() == 3);
  CHECK(delta1.relators.size() == 3);
  for (const auto& r : delta1.relators) CHECK(r.kind == Relator::Kind::Commute);

  // singleton clique: one generator, no relators
  auto single = clique_subgroup_presentation(p, {"u5"});
  CHECK(single.generators.size() == 1);
  CHECK(single.relators.empty());

  // the star of w1: three commuting generators conjugated by w1
  auto st = clique_subgroup_presentation(p, {"w1", "u1", "u3", "u4"});
  CHECK(st.generators.size() == 4);
  int commute = 0, conj = 0;
  for (const auto& r : st.relators) {
    if (r.kind == Relator::Kind::Commute) ++commute;
    if (r.kind == Relator::Kind::Conjugate) {
      ++conj;
      CHECK(st.g.name(r.head) == "w1");
    }
  }
  CHECK(commute == 3);
  CHECK(conj == 3);

  CHECK_THROWS_AS(clique_subgroup_presentation(p, {"u1", "u5"}),
                  std::invalid_argument);  // not a clique
  auto bad = presentation(corpus_find("display-1.2")->digraph, pr);
  CHECK_THROWS_AS(clique_subgroup_presentation(bad, {"v1", "v3"}),
                  std::invalid_argument);  // ambient is not special
}

TEST_CASE("relator count equals the degree-2 dimension (exhaustive n <= 4)") {
  auto pr = Prime::make(3, 1);
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t i = 0; i < digraph_count(n); ++i) {
      Digraph g = digraph_at(n, i);
      auto p = presentation(g, pr);
      ExteriorAlgebra alg(g, pr);
      auto dims = alg.dims();
      int dim2 = dims.size() > 2 ? dims[2] : 0;
      CHECK(static_cast<int>(p.relators.size()) == dim2);
      CHECK(static_cast<int>(p.relators.size()) == oracle::count_edge_classes(g));
    }
}

TEST_CASE("verdict invariant under global conjugation") {
  std::mt19937 rng(37);
  auto pr = Prime::make(3, 1);
  const int dim = 4;
  for (int trial = 0; trial < 60; ++trial) {
    Digraph g = digraph_at(3, std::uniform_int_distribution<std::uint64_t>(
                                  0, digraph_count(3) - 1)(rng));
    auto p = presentation(g, pr);
    GeneratorAssignment a{{random_unitri(dim, 3, rng), random_unitri(dim, 3, rng),
                           random_unitri(dim, 3, rng)},
                          false};
    UniTri m = random_unitri(dim, 3, rng);
    GeneratorAssignment conj = a;
    for (auto& x : conj.images) x = x.conjugate_by(m);
    CHECK(verify_assignment(p, a).ok == verify_assignment(p, conj).ok);
    for (std::size_t t = 0; t < a.images.size(); ++t)
      CHECK(a.images[t].superdiag() == conj.images[t].superdiag());
  }
}

TEST_CASE("commute relators hold on powers of a single matrix") {
  std::mt19937 rng(41);
  Digraph g({"x", "y"}, {{"x", "y"}, {"y", "x"}});
  auto p = presentation(g, Prime::make(5, 1));
  for (int trial = 0; trial < 40; ++trial) {
    UniTri base = random_unitri(5, 5, rng);
    GeneratorAssignment a{{base.pow(2), base.pow(3)}, false};
    CHECK(evaluate_relator(p.relators[0], a).is_identity());
  }
}

TEST_CASE("conjugate relator with identity tail always holds") {
  std::mt19937 rng(43);
  Digraph g({"v", "w"}, {{"v", "w"}});
  auto p = presentation(g, Prime::make(3, 2));
  for (int trial = 0; trial < 40; ++trial) {
    GeneratorAssignment a{{UniTri::identity(5, 3), random_unitri(5, 3, rng)},
                          false};
    CHECK(verify_assignment(p, a).ok);
  }
}
