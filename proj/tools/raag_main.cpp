// Command-line front end: classification, algebra reports, presentations,
// Massey decisions, strong-vanishing sweeps, equivalence verification, and
// witness re-checking.
//
// Exit codes: 0 success/consistent, 2 parse error, 3 indeterminate
// (budget-bound), 4 mathematical inconsistency.

#include <cstdlib>
#include <fstream>
#include <set>
#include <iostream>

#include <CLI11.hpp>

#include "raag/corpus.hpp"
#include "raag/io.hpp"

using namespace raag;

namespace {

constexpr int kOk = 0, kParseError = 2, kIndeterminate = 3, kInconsistent = 4;

struct InputSpec {
  std::string path;
  std::string corpus_name;
};

Digraph load_digraph(const InputSpec& in) {
  if (!in.corpus_name.empty()) {
    if (const char* dir = std::getenv("RAAG_CORPUS_DIR")) {
      std::string candidate = std::string(dir) + "/" + in.corpus_name + ".json";
      std::ifstream f(candidate);
      if (f.good()) return digraph_from_json(json::parse(f));
    }
    const CorpusEntry* e = corpus_find(in.corpus_name);
    if (!e) throw std::invalid_argument("unknown corpus entry: " + in.corpus_name);
    return e->digraph;
  }
  std::ifstream f(in.path);
  if (!f.good()) throw std::invalid_argument("cannot open " + in.path);
  try {
    return digraph_from_json(json::parse(f));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error in ") + in.path +
                                ": " + e.what());
  }
}

void add_input(CLI::App* cmd, InputSpec& in, bool required = true) {
  auto* pos = cmd->add_option("input", in.path, "digraph JSON file");
  auto* cor = cmd->add_option("--corpus", in.corpus_name, "built-in corpus entry");
  pos->excludes(cor);
  if (required) {
    // one of the two must be given; checked at run time for a clean message
    (void)pos;
  }
}

Digraph require_input(const InputSpec& in) {
  if (in.path.empty() && in.corpus_name.empty())
    throw std::invalid_argument("need a digraph file or --corpus NAME");
  return load_digraph(in);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_classify(const InputSpec& in, const std::string& format) {
  Digraph g = require_input(in);
  if (format == "dot") {
    std::cout << digraph_to_dot(g);
    return kOk;
  }
  json j = classify_report_to_json(g);
  if (format == "json") {
    emit(j);
    return kOk;
  }
  std::cout << "verdict: " << j["verdict"].get<std::string>() << "\n";
  for (const auto& v : j["vertices"]) {
    std::cout << "  " << v["id"].get<std::string>() << ": "
              << (v["special"].get<bool>()
                      ? (v["sinkhole"].get<bool>() ? "sinkhole" : "special")
                      : "ordinary")
              << "\n";
  }
  if (!j["violations"].empty()) {
    std::cout << "violations:\n";
    for (const auto& v : j["violations"])
      std::cout << "  " << v["pattern"].get<std::string>() << " at ("
                << v["witness"][0].get<std::string>() << ", "
                << v["witness"][1].get<std::string>() << ", "
                << v["witness"][2].get<std::string>() << ")\n";
  }
  if (j.contains("patching")) {
    std::cout << "patching core:";
    for (const auto& c : j["patching"]["core"])
      std::cout << " " << c.get<std::string>();
    std::cout << "\n";
    for (const auto& p : j["patching"]["pieces"]) {
      std::cout << "  star(" << p["special"].get<std::string>() << ") overlap:";
      for (const auto& o : p["overlap"]) std::cout << " " << o.get<std::string>();
      std::cout << "\n";
    }
  }
  return kOk;
}

int run_algebra(const InputSpec& in, int p, int f, int maxdeg,
                const std::string& format) {
  Digraph g = require_input(in);
  ExteriorAlgebra alg(g, Prime::make(p, f));
  json j = algebra_report_to_json(alg, maxdeg);
  if (format == "json") {
    emit(j);
    return kOk;
  }
  std::cout << "hilbert series:";
  for (const auto& d : j["hilbert_series"]) std::cout << " " << d.get<int>();
  std::cout << "\nrelator correspondence:\n";
  for (const auto& r : j["relator_correspondence"])
    std::cout << "  {" << r["edge"][0].get<std::string>() << ","
              << r["edge"][1].get<std::string>() << "} -> "
              << (r["sign"].get<int>() > 0 ? "+" : "-")
              << r["relator"].get<std::string>() << "\n";
  std::cout << j["cohomology_note"].get<std::string>() << "\n";
  return kOk;
}

int run_presentation(const InputSpec& in, int p, int f) {
  Digraph g = require_input(in);
  emit(presentation_to_json(presentation(g, Prime::make(p, f))));
  return kOk;
}

int run_massey(const InputSpec& in, int p, int f, const std::string& seqtext,
               SearchBudget budget, const std::string& out_path) {
  Digraph g = require_input(in);
  Prime pr = Prime::make(p, f);
  auto seq = parse_sequence(g, pr.p, seqtext);
  if (seq.size() < 2)
    throw std::invalid_argument("need a sequence of length >= 2");
  MasseyQuery q{presentation(g, pr), seq};
  auto verdict = massey_status(q, budget);
  json bundle = verdict_to_json(q, verdict, budget);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << bundle.dump(2) << "\n";
  }
  emit(bundle);
  return verdict.status == MasseyStatus::Indeterminate ? kIndeterminate : kOk;
}

int run_strong_vanishing(const InputSpec& in, int p, int f, int n,
                         SearchBudget budget, std::uint64_t sample,
                         std::uint64_t seed) {
  Digraph g = require_input(in);
  Prime pr = Prime::make(p, f);
  auto rep = strong_vanishing_report(g, pr, n, budget, sample, seed);
  emit(strong_report_to_json(g, rep));
  if (rep.undecided > 0) return kIndeterminate;
  return kOk;
}

int run_verify_theorem(const std::string& scope, const InputSpec& in, int p,
                       int f, int n, SearchBudget budget, std::uint64_t sample,
                       std::uint64_t seed) {
  Prime pr = Prime::make(p, f);
  if (pr.q > 5 || n > pr.q)
    throw std::invalid_argument("desk scale means q in {3,4,5} and n <= q");
  bool all_consistent = true;
  bool any_partial = false;
  json results = json::array();

  auto run_one = [&](const std::string& name, const Digraph& g,
                     std::uint64_t use_sample) {
    auto tc = check_theorem_for(g, pr, n, budget, use_sample, seed);
    json j = theorem_check_to_json(g, tc);
    j["name"] = name;
    results.push_back(j);
    if (!tc.consistent) all_consistent = false;
    if (!tc.report.exhaustive) any_partial = true;
    std::cout << (tc.consistent ? "[ OK ] " : "[FAIL] ") << name << ": "
              << to_string(tc.verdict) << ", failures "
              << tc.report.failures.size()
              << (tc.report.exhaustive ? "" : " (partial)") << "\n";
  };

  if (scope == "3-vertex-exhaustive") {
    for (std::uint64_t i = 0; i < digraph_count(3); ++i)
      run_one("digraph#" + std::to_string(i), digraph_at(3, i), 0);
  } else if (scope == "corpus") {
    for (const auto& e : corpus()) {
      std::uint64_t space = 1;
      bool overflow = false;
      for (int t = 0; t < e.digraph.size() * n; ++t) {
        if (space > budget.max_space) { overflow = true; break; }
        space *= pr.p;
      }
      std::uint64_t use_sample = sample;
      if (use_sample == 0 && (overflow || space > budget.max_space))
        use_sample = 20000;  // declared sample on oversized entries
      run_one(e.name, e.digraph, use_sample);
    }
  } else if (scope == "file") {
    Digraph g = require_input(in);
    if (g.size() > 5)
      throw std::invalid_argument("file scope is limited to <= 5 vertices");
    run_one(in.path.empty() ? in.corpus_name : in.path, g, sample);
  } else {
    throw std::invalid_argument("scope must be 3-vertex-exhaustive, corpus or file");
  }
  if (!all_consistent) return kInconsistent;
  if (any_partial) return kIndeterminate;
  return kOk;
}

int run_verify_witness(const std::string& path) {
  std::ifstream f(path);
  if (!f.good()) throw std::invalid_argument("cannot open " + path);
  json bundle;
  try {
    bundle = json::parse(f);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
  auto check = verify_witness_bundle(bundle);
  std::cout << (check.ok ? "witness ok" : "witness INVALID") << ": "
            << check.detail << "\n";
  return check.ok ? kOk : kInconsistent;
}

int run_enumerate(int n, bool canonical, const std::string& format) {
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < digraph_count(n); ++i) {
    Digraph g = digraph_at(n, i);
    if (canonical) {
      Digraph c = canonicalize(g);
      std::string key = digraph_to_json(c).dump();
      if (!seen.insert(key).second) continue;
      g = c;
    }
    if (format == "dot")
      std::cout << digraph_to_dot(g);
    else
      std::cout << digraph_to_json(g).dump() << "\n";
  }
  return kOk;
}

int run_export_dot(const InputSpec& in, const std::string& out_path) {
  Digraph g = require_input(in);
  if (out_path.empty()) {
    std::cout << digraph_to_dot(g);
  } else {
    std::ofstream out(out_path);
    out << digraph_to_dot(g);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented pro-p RAAG toolkit: digraph classification, "
               "Stanley-Reisner algebra, Massey product decisions"};
  app.require_subcommand(1);

  int p = 3, f = 1, n = 3, maxdeg = -1;
  SearchBudget budget;
  std::uint64_t sample = 0, seed = 0;
  std::string format = "text", seqtext, out_path, scope = "corpus";
  bool canonical = false;
  InputSpec in;

  auto add_prime = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "prime p")->capture_default_str();
    cmd->add_option("--f", f, "exponent f, q = p^f (f >= 2 when p = 2)")
        ->capture_default_str();
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget.max_space,
                    "largest search space an exhaustive claim may cover")
        ->capture_default_str();
    cmd->add_option("--jobs", budget.jobs, "parallel worker hint")
        ->capture_default_str();
  };

  auto* c_classify = app.add_subcommand("classify", "classify a digraph");
  add_input(c_classify, in);
  c_classify->add_option("--format", format, "text | json | dot");

  auto* c_algebra = app.add_subcommand("algebra", "graded algebra report");
  add_input(c_algebra, in);
  add_prime(c_algebra);
  c_algebra->add_option("--max-degree", maxdeg, "truncate the report");
  c_algebra->add_option("--format", format, "text | json");

  auto* c_pres = app.add_subcommand("presentation", "group presentation JSON");
  add_input(c_pres, in);
  add_prime(c_pres);

  auto* c_massey = app.add_subcommand("massey", "decide an n-fold Massey product");
  add_input(c_massey, in);
  add_prime(c_massey);
  c_massey->add_option("--sequence", seqtext, "comma-separated classes, e.g. 'u+v, u, u+v'")
      ->required();
  add_budget(c_massey);
  c_massey->add_option("--out", out_path, "write the verdict bundle to a file");

  auto* c_strong = app.add_subcommand("strong-vanishing",
                                      "sweep all qualifying sequences");
  add_input(c_strong, in);
  add_prime(c_strong);
  c_strong->add_option("--n", n, "sequence length")->capture_default_str();
  add_budget(c_strong);
  c_strong->add_option("--sample", sample, "sample size instead of exhaustion");
  c_strong->add_option("--seed", seed, "sampling seed");

  auto* c_thm = app.add_subcommand("verify-theorem",
                                   "cross-check classification against Massey behavior");
  c_thm->add_option("--scope", scope, "3-vertex-exhaustive | corpus | file")
      ->capture_default_str();
  add_input(c_thm, in, false);
  add_prime(c_thm);
  c_thm->add_option("--n", n, "sequence length")->capture_default_str();
  add_budget(c_thm);
  c_thm->add_option("--sample", sample, "sample size for oversized entries");
  c_thm->add_option("--seed", seed, "sampling seed");

  auto* c_verify = app.add_subcommand("verify-witness", "re-check a verdict bundle");
  c_verify->add_option("file", out_path, "verdict bundle JSON")->required();

  auto* c_enum = app.add_subcommand("enumerate", "stream labeled digraphs");
  c_enum->add_option("--n", n, "vertex count (<= 6)")->required();
  c_enum->add_flag("--canonical", canonical, "deduplicate up to isomorphism");
  c_enum->add_option("--format", format, "json | dot");

  auto* c_dot = app.add_subcommand("export-dot", "write DOT");
  add_input(c_dot, in);
  c_dot->add_option("-o,--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParseError;
  }

  try {
    if (*c_classify) return run_classify(in, format);
    if (*c_algebra) return run_algebra(in, p, f, maxdeg, format);
    if (*c_pres) return run_presentation(in, p, f);
    if (*c_massey) return run_massey(in, p, f, seqtext, budget, out_path);
    if (*c_strong) return run_strong_vanishing(in, p, f, n, budget, sample, seed);
    if (*c_thm) return run_verify_theorem(scope, in, p, f, n, budget, sample, seed);
    if (*c_verify) return run_verify_witness(out_path);
    if (*c_enum) return run_enumerate(n, canonical, format);
    if (*c_dot) return run_export_dot(in, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const CounterexampleError& e) {
    std::cerr << "COUNTEREXAMPLE CERTIFICATE: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIndeterminate;
  }
  return kOk;
}
