#pragma once

#include <string>
#include <vector>

#include "raag/digraph.hpp"

namespace raag {

// Built-in digraph corpus: the standard worked examples this tool is
// exercised against, each with its expected classification. Entries are
// embedded so runs are reproducible; RAAG_CORPUS_DIR can shadow or extend
// them with JSON files at runtime.
struct CorpusEntry {
  std::string name;
  Digraph digraph;
  Verdict expected;
  std::string note;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* corpus_find(const std::string& name);

}  // namespace raag
