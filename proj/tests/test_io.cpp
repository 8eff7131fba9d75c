#include <doctest.h>

#include <fstream>

#include "raag/corpus.hpp"
#include "raag/io.hpp"

using namespace raag;

namespace {

// Minimal structural validator for the subset of JSON Schema the shipped
// schemas use: type, properties, required, items, enum, $ref, min/maxItems.
class SchemaChecker {
 public:
  explicit SchemaChecker(const std::string& dir) : dir_(dir) {}

  const json& load(const std::string& name) {
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
    std::ifstream in(dir_ + "/" + name);
    REQUIRE_MESSAGE(in.good(), "missing schema " << name);
    json s = json::parse(in);
    return cache_.emplace(name, std::move(s)).first->second;
  }

  bool validate(const json& value, const json& schema, std::string* why) {
    if (schema.contains("$ref"))
      return validate(value, load(schema["$ref"].get<std::string>()), why);
    if (schema.contains("enum")) {
      for (const auto& e : schema["enum"])
        if (value == e) return true;
      *why = "value not in enum";
      return false;
    }
    if (schema.contains("type") && !type_ok(value, schema["type"])) {
      *why = "wrong type: " + value.dump().substr(0, 40);
      return false;
    }
    if (value.is_object()) {
      if (schema.contains("required"))
        for (const auto& k : schema["required"])
          if (!value.contains(k.get<std::string>())) {
            *why = "missing key " + k.get<std::string>();
            return false;
          }
      if (schema.contains("properties"))
        for (auto it = schema["properties"].begin();
             it != schema["properties"].end(); ++it)
          if (value.contains(it.key()) &&
              !validate(value[it.key()], it.value(), why)) {
            *why = it.key() + ": " + *why;
            return false;
          }
    }
    if (value.is_array()) {
      if (schema.contains("minItems") &&
          value.size() < schema["minItems"].get<std::size_t>()) {
        *why = "too few items";
        return false;
      }
      if (schema.contains("maxItems") &&
          value.size() > schema["maxItems"].get<std::size_t>()) {
        *why = "too many items";
        return false;
      }
      if (schema.contains("items"))
        for (const auto& e : value)
          if (!validate(e, schema["items"], why)) return false;
    }
    return true;
  }

  void check(const json& value, const std::string& schema_name) {
    std::string why;
    bool ok = validate(value, load(schema_name), &why);
    CHECK_MESSAGE(ok, schema_name << ": " << why);
  }

 private:
  static bool type_ok(const json& v, const json& t) {
    if (t.is_array()) {
      for (const auto& x : t)
        if (type_ok(v, x)) return true;
      return false;
    }
    std::string s = t.get<std::string>();
    if (s == "object") return v.is_object();
    if (s == "array") return v.is_array();
    if (s == "string") return v.is_string();
    if (s == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (s == "number") return v.is_number();
    if (s == "boolean") return v.is_boolean();
    if (s == "null") return v.is_null();
    return false;
  }

  std::string dir_;
  std::map<std::string, json> cache_;
};

SchemaChecker& schemas() {
  static SchemaChecker c(SCHEMA_DIR);
  return c;
}

}  // namespace

TEST_CASE("digraph JSON round-trip on the corpus") {
  for (const auto& e : corpus()) {
    json j = digraph_to_json(e.digraph);
    schemas().check(j, "digraph.schema.json");
    Digraph back = digraph_from_json(j);
    CHECK(back == e.digraph);
    // parse -> serialize -> parse is the identity
    CHECK(digraph_to_json(back) == j);
  }
}

TEST_CASE("digraph JSON rejects malformed input") {
  CHECK_THROWS_AS(digraph_from_json(json::parse("{}")), std::invalid_argument);
  CHECK_THROWS_AS(digraph_from_json(json::parse(R"({"vertices":[1]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      digraph_from_json(json::parse(R"({"vertices":["a"],"edges":[["a"]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      digraph_from_json(json::parse(R"({"vertices":["a"],"edges":[["a","a"]]})")),
      std::invalid_argument);
}

TEST_CASE("DOT export styles special vertices and undirected edges") {
  const Digraph& g = corpus_find("display-6.2")->digraph;
  std::string dot = digraph_to_dot(g);
  CHECK(dot.find("\"w\" [style=filled]") != std::string::npos);
  CHECK(dot.find("\"u\" -> \"v\" [dir=none]") != std::string::npos);
  CHECK(dot.find("\"u\" -> \"w\";") != std::string::npos);
  // one-way edge is not doubled
  CHECK(dot.find("\"w\" -> \"u\"") == std::string::npos);
}

TEST_CASE("matrix JSON round-trip and validation") {
  UniTri m(4, 3);
  m.set(0, 1, 2);
  m.set(1, 3, 1);
  json j = matrix_to_json(m);
  schemas().check(j, "matrix.schema.json");
  CHECK(matrix_from_json(j) == m);
  j["rows"][2][0] = 1;  // below the diagonal
  CHECK_THROWS_AS(matrix_from_json(j), std::invalid_argument);
}

TEST_CASE("sequence mini-language") {
  const Digraph& g = corpus_find("display-6.1")->digraph;
  auto seq = parse_sequence(g, 3, "u+2v, u, u+2*v");
  REQUIRE(seq.size() == 3);
  CHECK(seq[0].c == std::vector<int>{1, 2, 0});
  CHECK(seq[1].c == std::vector<int>{1, 0, 0});
  CHECK(seq[2].c == std::vector<int>{1, 2, 0});

  // reduction mod p at parse time and the zero class
  auto seq2 = parse_sequence(g, 3, "3u - v, 0");
  CHECK(seq2[0].c == std::vector<int>{0, 2, 0});
  CHECK(seq2[1].is_zero());

  CHECK_THROWS_AS(parse_sequence(g, 3, "u + "), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence(g, 3, "nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence(g, 3, ""), std::invalid_argument);

  // round trip through the printer
  auto printed = sequence_to_text(g, seq);
  auto reparsed = parse_sequence(g, 3, printed);
  CHECK(reparsed.size() == seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) CHECK(reparsed[i].c == seq[i].c);
}

TEST_CASE("verdict bundle: emit, validate, verify") {
  auto pr = Prime::make(3, 1);
  const Digraph& g = corpus_find("display-6.1")->digraph;
  ExteriorAlgebra alg(g, pr);
  auto alpha = alg.add(alg.dual_vertex("u"), alg.dual_vertex("v"));
  auto beta = alg.dual_vertex("u");
  MasseyQuery q{presentation(g, pr), {alpha, beta, alpha}};
  SearchBudget b;
  auto verdict = massey_status(q, b);
  REQUIRE(verdict.status == MasseyStatus::Essential);
  json bundle = verdict_to_json(q, verdict, b);
  schemas().check(bundle, "massey-verdict.schema.json");

  auto check = verify_witness_bundle(bundle);
  CHECK(check.ok);

  // tamper with the witness: verification must fail
  json broken = bundle;
  broken["bar_witness"]["images"]["u"]["rows"][0][1] = 2;
  CHECK_FALSE(verify_witness_bundle(broken).ok);

  // tamper with the claimed status
  json wrong = bundle;
  wrong["status"] = "Vanishes";
  CHECK_FALSE(verify_witness_bundle(wrong).ok);
}

TEST_CASE("vanishing verdict bundle carries a full witness") {
  auto pr = Prime::make(3, 1);
  Digraph path({"a", "b", "c"},
               {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}});
  ExteriorAlgebra alg(path, pr);
  MasseyQuery q{presentation(path, pr),
                {alg.dual_vertex("a"), alg.dual_vertex("c"), alg.dual_vertex("a")}};
  SearchBudget b;
  auto verdict = massey_status(q, b);
  REQUIRE(verdict.status == MasseyStatus::Vanishes);
  json bundle = verdict_to_json(q, verdict, b);
  schemas().check(bundle, "massey-verdict.schema.json");
  CHECK(verify_witness_bundle(bundle).ok);
}

TEST_CASE("not-defined verdict bundle validates and re-checks") {
  // nonvanishing consecutive cups: the product cannot be defined
  auto pr = Prime::make(3, 1);
  Digraph k2({"v", "w"}, {{"v", "w"}, {"w", "v"}});
  ExteriorAlgebra alg(k2, pr);
  MasseyQuery q{presentation(k2, pr),
                {alg.dual_vertex("v"), alg.dual_vertex("w"), alg.dual_vertex("v")}};
  SearchBudget b;
  auto verdict = massey_status(q, b);
  REQUIRE(verdict.status == MasseyStatus::NotDefined);
  CHECK(verdict.bar_cert.exhaustive);
  json bundle = verdict_to_json(q, verdict, b);
  schemas().check(bundle, "massey-verdict.schema.json");
  CHECK(verify_witness_bundle(bundle).ok);
}

TEST_CASE("classification and algebra reports validate") {
  for (const char* name : {"display-1.2", "example-2.4-right", "example-2.6"}) {
    const Digraph& g = corpus_find(name)->digraph;
    json cj = classify_report_to_json(g);
    schemas().check(cj, "classification.schema.json");
    json aj = algebra_report_to_json(ExteriorAlgebra(g, Prime::make(3, 1)), -1);
    schemas().check(aj, "algebra.schema.json");
  }
  // patching present exactly for special-clique inputs
  CHECK(classify_report_to_json(corpus_find("example-2.6")->digraph)
            .contains("patching"));
  CHECK_FALSE(classify_report_to_json(corpus_find("display-1.2")->digraph)
                  .contains("patching"));
}

TEST_CASE("strong vanishing report JSON validates") {
  auto pr = Prime::make(3, 1);
  const Digraph& g = corpus_find("display-6.1")->digraph;
  auto rep = strong_vanishing_report(g, pr, 3, {});
  json j = strong_report_to_json(g, rep);
  schemas().check(j, "strong-vanishing-report.schema.json");
  CHECK(j["failures"].size() == rep.failures.size());
}

TEST_CASE("presentation JSON shape") {
  auto pr = Prime::make(3, 1);
  json j = presentation_to_json(presentation(corpus_find("display-6.2")->digraph, pr));
  CHECK(j["generators"].size() == 3);
  CHECK(j["relators"].size() == 3);
  bool saw_commute = false, saw_conj = false;
  for (const auto& r : j["relators"]) {
    if (r["kind"] == "commute") saw_commute = true;
    if (r["kind"] == "conjugate") {
      saw_conj = true;
      CHECK(r["exponent"] == 4);
    }
  }
  CHECK(saw_commute);
  CHECK(saw_conj);
}
