#include "raag/io.hpp"

#include <cctype>
#include <sstream>

namespace raag {

json digraph_to_json(const Digraph& g) {
  json j;
  j["vertices"] = g.vertices();
  json edges = json::array();
  for (const auto& [a, b] : g.arcs())
    edges.push_back(json::array({g.name(a), g.name(b)}));
  j["edges"] = std::move(edges);
  return j;
}

Digraph digraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("digraph JSON needs a \"vertices\" array");
  std::vector<VertexId> vs;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw std::invalid_argument("vertex ids must be strings");
    vs.push_back(v.get<std::string>());
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array())
      throw std::invalid_argument("\"edges\" must be an array of pairs");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw std::invalid_argument("each edge must be a [tail, head] pair");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return Digraph(std::move(vs), edges);
}

std::string digraph_to_dot(const Digraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (int v = 0; v < g.size(); ++v) {
    os << "  \"" << g.name(v) << "\"";
    if (vertex_class(g, g.name(v)).special) os << " [style=filled]";
    os << ";\n";
  }
  for (const auto& [a, b] : g.arcs()) {
    if (g.undirected(a, b)) {
      if (a < b)
        os << "  \"" << g.name(a) << "\" -> \"" << g.name(b)
           << "\" [dir=none];\n";
    } else {
      os << "  \"" << g.name(a) << "\" -> \"" << g.name(b) << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

json matrix_to_json(const UniTri& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j)
      row.push_back(i == j ? 1 : (j > i ? m.at(i, j) : 0));
    rows.push_back(std::move(row));
  }
  return json{{"n", m.dim() - 1}, {"p", m.p()}, {"rows", std::move(rows)}};
}

UniTri matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("p") || !j.contains("rows"))
    throw std::invalid_argument("matrix JSON needs n, p and rows");
  int dim = j["n"].get<int>() + 1;
  int p = j["p"].get<int>();
  UniTri m(dim, p);
  const auto& rows = j["rows"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw std::invalid_argument("matrix rows have the wrong shape");
  for (int i = 0; i < dim; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("matrix rows have the wrong shape");
    for (int k = 0; k < dim; ++k) {
      int v = row[k].get<int>();
      if (k < i && v != 0)
        throw std::invalid_argument("matrix is not upper triangular");
      if (k == i && mod_norm(v, p) != 1)
        throw std::invalid_argument("matrix diagonal must be 1");
      if (k > i) m.set(i, k, v);
    }
  }
  return m;
}

json cochain_to_json(const Digraph& g, const Cochain1& a) {
  json j = json::object();
  for (int v = 0; v < g.size(); ++v)
    if (v < static_cast<int>(a.c.size()) && a.c[v] != 0) j[g.name(v)] = a.c[v];
  return j;
}

Cochain1 cochain_from_json(const Digraph& g, int p, const json& j) {
  Cochain1 a{std::vector<int>(g.size(), 0)};
  if (!j.is_object()) throw std::invalid_argument("cochain JSON must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    a.c[g.index_of(it.key())] = mod_norm(it.value().get<int>(), p);
  return a;
}

json element2_to_json(const Digraph& g, const ExteriorElement& x) {
  json j = json::object();
  for (const auto& [key, c] : x.coeff)
    j["{" + g.name(key[0]) + "," + g.name(key[1]) + "}"] = c;
  return j;
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

}  // namespace

std::vector<Cochain1> parse_sequence(const Digraph& g, int p,
                                     const std::string& text) {
  std::vector<Cochain1> seq;
  std::size_t i = 0;
  while (i <= text.size()) {
    Cochain1 a{std::vector<int>(g.size(), 0)};
    bool any_term = false;
    skip_ws(text, i);
    for (;;) {
      skip_ws(text, i);
      if (i >= text.size() || text[i] == ',') break;
      int sign = 1;
      if (text[i] == '+' || text[i] == '-') {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
        skip_ws(text, i);
      } else if (any_term) {
        throw std::invalid_argument("expected '+', '-' or ',' in sequence");
      }
      long coeff = 1;
      bool have_digits = false;
      std::size_t d0 = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i > d0) {
        coeff = std::stol(text.substr(d0, i - d0));
        have_digits = true;
      }
      skip_ws(text, i);
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws(text, i);
      }
      std::size_t n0 = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        ++i;
      if (i == n0) {
        if (have_digits && coeff == 0) {
          any_term = true;  // a literal 0 term
          continue;
        }
        throw std::invalid_argument("expected a vertex name in sequence");
      }
      std::string name = text.substr(n0, i - n0);
      int idx = g.index_of(name);  // throws on unknown vertex
      a.c[idx] = mod_norm(a.c[idx] + sign * coeff, p);
      any_term = true;
    }
    if (!any_term) throw std::invalid_argument("empty class in sequence");
    seq.push_back(std::move(a));
    if (i >= text.size()) break;
    ++i;  // consume ','
  }
  return seq;
}

std::string sequence_to_text(const Digraph& g, const std::vector<Cochain1>& seq) {
  std::ostringstream os;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    if (t) os << ", ";
    bool first = true;
    for (int v = 0; v < g.size(); ++v) {
      int c = v < static_cast<int>(seq[t].c.size()) ? seq[t].c[v] : 0;
      if (c == 0) continue;
      if (!first) os << "+";
      if (c != 1) os << c << "*";
      os << g.name(v);
      first = false;
    }
    if (first) os << "0";
  }
  return os.str();
}

json presentation_to_json(const RaagPresentation& p) {
  json j;
  j["digraph"] = digraph_to_json(p.g);
  j["p"] = p.pr.p;
  j["f"] = p.pr.f;
  j["q"] = p.pr.q;
  j["generators"] = p.generators;
  json rel = json::array();
  for (const auto& r : p.relators) {
    json e;
    e["id"] = r.id;
    if (r.kind == Relator::Kind::Commute) {
      e["kind"] = "commute";
      e["u"] = p.g.name(r.u);
      e["v"] = p.g.name(r.v);
    } else {
      e["kind"] = "conjugate";
      e["tail"] = p.g.name(r.tail);
      e["head"] = p.g.name(r.head);
      e["exponent"] = r.exponent;
    }
    rel.push_back(std::move(e));
  }
  j["relators"] = std::move(rel);
  return j;
}

json assignment_to_json(const RaagPresentation& p, const GeneratorAssignment& a) {
  json j;
  j["mod_center"] = a.mod_center;
  json images = json::object();
  for (std::size_t i = 0; i < a.images.size(); ++i)
    images[p.generators[i]] = matrix_to_json(a.images[i]);
  j["images"] = std::move(images);
  json rel = json::array();
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    UniTri defect = evaluate_relator(p.relators[i], a);
    bool ok = a.mod_center ? defect.is_central() : defect.is_identity();
    rel.push_back(json{{"id", p.relators[i].id}, {"ok", ok}});
  }
  j["relators"] = std::move(rel);
  return j;
}

GeneratorAssignment assignment_from_json(const RaagPresentation& p,
                                         const json& j) {
  GeneratorAssignment a;
  a.mod_center = j.value("mod_center", false);
  const auto& images = j.at("images");
  for (const auto& gen : p.generators) {
    if (!images.contains(gen))
      throw std::invalid_argument("assignment misses generator " + gen);
    a.images.push_back(matrix_from_json(images[gen]));
  }
  return a;
}

json exhaustion_to_json(const Exhaustion& e) {
  return json{{"space", e.space}, {"visited", e.visited},
              {"exhaustive", e.exhaustive}};
}

json budget_to_json(const SearchBudget& b) {
  return json{{"max_space", b.max_space}, {"jobs", b.jobs},
              {"deterministic", b.deterministic}};
}

json verdict_to_json(const MasseyQuery& q, const MasseyVerdict& v,
                     const SearchBudget& b) {
  json j;
  j["kind"] = "massey-verdict";
  j["digraph"] = digraph_to_json(q.pres.g);
  j["p"] = q.pres.pr.p;
  j["f"] = q.pres.pr.f;
  json seq = json::array();
  for (const auto& a : q.seq) seq.push_back(cochain_to_json(q.pres.g, a));
  j["sequence"] = std::move(seq);
  j["status"] = to_string(v.status);
  if (q.n() == 2) {
    // the 2-fold product is the cup product; report its value
    ExteriorAlgebra alg(q.pres.g, q.pres.pr);
    j["cup"] = element2_to_json(q.pres.g, alg.cup(q.seq[0], q.seq[1]));
  }
  j["bar_witness"] =
      v.bar_witness ? assignment_to_json(q.pres, *v.bar_witness) : json();
  j["full_witness"] =
      v.full_witness ? assignment_to_json(q.pres, *v.full_witness) : json();
  j["bar_exhaustion"] = exhaustion_to_json(v.bar_cert);
  j["full_exhaustion"] = exhaustion_to_json(v.full_cert);
  j["budget"] = budget_to_json(b);
  return j;
}

namespace {

WitnessCheck check_one_witness(const RaagPresentation& pres,
                               const std::vector<Cochain1>& seq, const json& jw,
                               bool expect_bar) {
  GeneratorAssignment a = assignment_from_json(pres, jw);
  if (a.mod_center != expect_bar)
    return {false, "witness level does not match its slot"};
  auto vr = verify_assignment(pres, a);
  if (!vr.ok)
    return {false, "relator " + pres.relators[vr.failing_relator].id +
                       " has a nontrivial defect"};
  for (std::size_t g = 0; g < a.images.size(); ++g) {
    auto sd = a.images[g].superdiag();
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (sd[i] != mod_norm(seq[i].c[g], pres.pr.p))
        return {false, "superdiagonal readout disagrees with the sequence"};
  }
  return {true, ""};
}

}  // namespace

WitnessCheck verify_witness_bundle(const json& bundle) {
  try {
    if (bundle.value("kind", "") != "massey-verdict")
      return {false, "not a massey-verdict bundle"};
    Digraph g = digraph_from_json(bundle.at("digraph"));
    Prime pr = Prime::make(bundle.at("p").get<int>(), bundle.at("f").get<int>());
    RaagPresentation pres = presentation(g, pr);
    std::vector<Cochain1> seq;
    for (const auto& jc : bundle.at("sequence"))
      seq.push_back(cochain_from_json(g, pr.p, jc));
    if (seq.size() < 2) return {false, "sequence shorter than 2"};
    std::string status = bundle.at("status").get<std::string>();

    bool checked_any = false;
    if (!bundle.value("bar_witness", json()).is_null()) {
      auto r = check_one_witness(pres, seq, bundle["bar_witness"], true);
      if (!r.ok) return r;
      checked_any = true;
    }
    if (!bundle.value("full_witness", json()).is_null()) {
      auto r = check_one_witness(pres, seq, bundle["full_witness"], false);
      if (!r.ok) return r;
      checked_any = true;
    }
    if (status == "Vanishes" && bundle.value("full_witness", json()).is_null())
      return {false, "Vanishes without a full witness"};
    if (status == "Essential") {
      if (bundle.value("bar_witness", json()).is_null())
        return {false, "Essential without a bar witness"};
      if (!bundle.at("full_exhaustion").value("exhaustive", false))
        return {false, "Essential without an exhaustive full search"};
    }
    if (status == "NotDefined" &&
        !bundle.at("bar_exhaustion").value("exhaustive", false))
      return {false, "NotDefined without an exhaustive bar search"};
    if (!checked_any && status != "NotDefined")
      return {false, "nothing checkable in the bundle"};
    return {true, status};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

json classify_report_to_json(const Digraph& g) {
  auto cr = classify(g);
  json j;
  j["kind"] = "classification";
  j["digraph"] = digraph_to_json(g);
  j["verdict"] = to_string(cr.verdict);
  json viol = json::array();
  for (const auto& v : cr.violations)
    viol.push_back(json{{"pattern", to_string(v.kind)},
                        {"witness", {v.witness[0], v.witness[1], v.witness[2]}}});
  j["violations"] = std::move(viol);
  json verts = json::array();
  for (const auto& name : g.vertices()) {
    auto c = vertex_class(g, name);
    verts.push_back(json{{"id", name},
                         {"special", c.special},
                         {"sinkhole", c.sinkhole},
                         {"sinkhole_weak_reading", sinkhole_literal(g, name)}});
  }
  j["vertices"] = std::move(verts);
  if (cr.verdict == Verdict::Undigraph || cr.verdict == Verdict::SpecialClique) {
    auto d = patching_decomposition(g);
    json pieces = json::array();
    for (const auto& p : d.pieces)
      pieces.push_back(json{{"special", p.special},
                            {"star", p.star_vertices},
                            {"overlap", p.overlap}});
    j["patching"] = json{{"core", d.core}, {"pieces", std::move(pieces)}};
  }
  return j;
}

json algebra_report_to_json(const ExteriorAlgebra& alg, int max_degree) {
  const Digraph& g = alg.digraph();
  json j;
  j["kind"] = "algebra";
  j["digraph"] = digraph_to_json(g);
  j["p"] = alg.prime().p;
  auto dims = alg.dims();
  if (max_degree >= 0 && max_degree + 1 < static_cast<int>(dims.size()))
    dims.resize(max_degree + 1);
  j["hilbert_series"] = dims;
  json basis = json::array();
  for (int k = 0; k < static_cast<int>(dims.size()); ++k) {
    json level = json::array();
    for (const auto& clique : alg.basis(k)) {
      json names = json::array();
      for (int idx : clique) names.push_back(g.name(idx));
      level.push_back(std::move(names));
    }
    basis.push_back(std::move(level));
  }
  j["basis"] = std::move(basis);
  json corr = json::array();
  for (const auto& [edge, ref] : alg.relator_correspondence())
    corr.push_back(json{{"edge", {edge.first, edge.second}},
                        {"relator", ref.id},
                        {"sign", ref.sign}});
  j["relator_correspondence"] = std::move(corr);
  auto verdict = classify(g).verdict;
  bool sc = verdict == Verdict::Undigraph || verdict == Verdict::SpecialClique;
  j["cohomology_note"] =
      sc ? "special-clique: the group cohomology algebra agrees with this "
           "exterior algebra in all degrees"
         : "degrees 1 and 2 describe group cohomology; higher degrees are "
           "algebra-side only";
  return j;
}

json theorem_check_to_json(const Digraph& g, const TheoremCheck& tc) {
  json j;
  j["kind"] = "theorem-check";
  j["verdict"] = to_string(tc.verdict);
  j["special_clique"] = tc.special_clique;
  j["consistent"] = tc.consistent;
  j["report"] = strong_report_to_json(g, tc.report);
  if (tc.designated)
    j["designated_status"] = to_string(tc.designated->status);
  return j;
}

json strong_report_to_json(const Digraph& g, const StrongVanishingReport& r) {
  json j;
  j["kind"] = "strong-vanishing-report";
  j["total"] = r.total;
  j["qualifying"] = r.qualifying;
  j["vanished"] = r.vanished;
  j["undecided"] = r.undecided;
  j["exhaustive"] = r.exhaustive;
  j["sampled"] = r.sampled;
  json fails = json::array();
  for (const auto& f : r.failures) {
    json seq = json::array();
    for (const auto& a : f.seq) seq.push_back(cochain_to_json(g, a));
    fails.push_back(json{{"seq_index", f.seq_index},
                         {"sequence", std::move(seq)},
                         {"exhaustion", exhaustion_to_json(f.cert)}});
  }
  j["failures"] = std::move(fails);
  return j;
}

}  // namespace raag
