#include "raag/corpus.hpp"

namespace raag {

namespace {

Digraph make(std::vector<VertexId> vs,
             std::vector<std::pair<VertexId, VertexId>> one_way,
             std::vector<std::pair<VertexId, VertexId>> undirected) {
  std::vector<std::pair<VertexId, VertexId>> edges = std::move(one_way);
  for (auto& [a, b] : undirected) {
    edges.emplace_back(a, b);
    edges.emplace_back(b, a);
  }
  return Digraph(std::move(vs), edges);
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;

  c.push_back({"display-1.2",
               make({"v1", "v2", "v3", "v4"},
                    {{"v2", "v1"}, {"v3", "v1"}, {"v4", "v1"}, {"v3", "v2"}},
                    {{"v3", "v4"}}),
               Verdict::NotSpecial,
               "four vertices; v1 is a sinkhole, v2 is special but has an "
               "out-edge, and v2, v4 both point at v1 without being joined"});

  c.push_back({"display-2.1-first",
               make({"v1", "v2", "v3"}, {{"v2", "v1"}},
                    {{"v1", "v3"}, {"v2", "v3"}}),
               Verdict::NotSpecial,
               "special vertex sitting on an undirected edge"});

  c.push_back({"display-2.1-second",
               make({"v1", "v2", "v3", "v4"},
                    {{"v1", "v2"}, {"v3", "v2"}, {"v3", "v1"}, {"v4", "v1"}},
                    {{"v3", "v4"}, {"v2", "v4"}}),
               Verdict::NotSpecial,
               "complete digraph whose special vertex v1 has an out-edge"});

  c.push_back({"display-2.1-third",
               make({"v1", "v2", "v3", "v4", "v5", "w"},
                    {{"v1", "w"}, {"v2", "w"}, {"v3", "w"}, {"v4", "w"}, {"v5", "w"}},
                    {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}}),
               Verdict::SpecialNotClique,
               "sinkhole whose star is the whole six-vertex digraph, which "
               "is not complete"});

  c.push_back({"example-2.4-left",
               make({"a", "b", "c", "d"},
                    {{"a", "b"}, {"a", "c"}, {"c", "b"}, {"d", "b"}, {"d", "c"}},
                    {}),
               Verdict::NotSpecial,
               "oriented square; the special vertex c is not a sinkhole"});

  c.push_back({"example-2.4-center",
               make({"a", "b", "c", "d"},
                    {{"a", "b"}, {"c", "b"}, {"d", "b"}},
                    {{"c", "d"}, {"a", "c"}}),
               Verdict::SpecialNotClique,
               "special square; the sinkhole's star misses the a-d edge"});

  c.push_back({"example-2.4-right",
               make({"a", "b", "c", "d"},
                    {{"a", "b"}, {"a", "c"}, {"d", "b"}, {"d", "c"}},
                    {{"a", "d"}}),
               Verdict::SpecialClique,
               "special-clique square with the a-d diagonal"});

  c.push_back({"example-2.6",
               make({"u1", "u2", "u3", "u4", "u5", "w1", "w2", "w3"},
                    {{"u1", "w1"},
                     {"u3", "w1"},
                     {"u4", "w1"},
                     {"u2", "w2"},
                     {"u5", "w2"},
                     {"u5", "w3"}},
                    {{"u1", "u2"},
                     {"u1", "u3"},
                     {"u1", "u4"},
                     {"u3", "u4"},
                     {"u4", "u5"},
                     {"u2", "u5"}}),
               Verdict::SpecialClique,
               "three sinkholes patched onto a five-vertex ordinary core "
               "along cliques {u1,u3,u4}, {u2,u5}, {u5}"});

  c.push_back({"example-3.3",
               make({"v1", "v2", "v3"},
                    {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v1"}}, {}),
               Verdict::NotSpecial,
               "one-way triangle; the associated group is a finite p-group"});

  c.push_back({"example-3.4",
               make({"v1", "v2", "v3"},
                    {{"v2", "v1"}, {"v3", "v1"}, {"v3", "v2"}}, {}),
               Verdict::NotSpecial,
               "special vertex with an out-edge; the associated group has "
               "torsion"});

  c.push_back({"display-6.1",
               make({"u", "v", "w"}, {{"u", "w"}, {"v", "w"}}, {}),
               Verdict::SpecialNotClique,
               "two one-way edges into a sinkhole, sources not joined"});

  c.push_back({"display-6.2",
               make({"u", "v", "w"}, {{"u", "w"}, {"w", "v"}},
                    {{"u", "v"}}),
               Verdict::NotSpecial,
               "one-way path u -> w -> v with u, v joined"});

  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry* corpus_find(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace raag
