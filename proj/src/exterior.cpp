#include "raag/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace raag {

namespace {

// Sign of the permutation sorting `v`, or 0 on a repeated entry.
int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) {
        std::swap(v[i], v[j]);
        sign = -sign;
      }
    }
  return sign;
}

}  // namespace

ExteriorAlgebra::ExteriorAlgebra(Digraph g, Prime pr)
    : g_(std::move(g)), pr_(pr) {
  const int n = g_.size();
  basis_.resize(n + 1);
  basis_[0].push_back({});
  for (int k = 1; k <= n; ++k) {
    for (const auto& c : cliques(g_, k)) {
      std::vector<int> idx;
      idx.reserve(c.size());
      for (const auto& v : c) idx.push_back(g_.index_of(v));
      basis_[k].push_back(std::move(idx));
    }
    if (basis_[k].empty()) {
      basis_.resize(k);  // no larger cliques can exist
      break;
    }
  }
}

std::vector<int> ExteriorAlgebra::dims() const {
  std::vector<int> d;
  for (const auto& b : basis_) d.push_back(static_cast<int>(b.size()));
  return d;
}

const std::vector<std::vector<int>>& ExteriorAlgebra::basis(int degree) const {
  static const std::vector<std::vector<int>> empty;
  if (degree < 0 || degree >= static_cast<int>(basis_.size())) return empty;
  return basis_[degree];
}

Cochain1 ExteriorAlgebra::zero_cochain() const {
  return Cochain1{std::vector<int>(g_.size(), 0)};
}

Cochain1 ExteriorAlgebra::dual_vertex(const VertexId& v) const {
  Cochain1 a = zero_cochain();
  a.c[g_.index_of(v)] = 1;
  return a;
}

Cochain1 ExteriorAlgebra::add(const Cochain1& a, const Cochain1& b) const {
  check_cochain(a);
  check_cochain(b);
  Cochain1 r = zero_cochain();
  for (int i = 0; i < g_.size(); ++i) r.c[i] = mod_norm(a.c[i] + b.c[i], pr_.p);
  return r;
}

Cochain1 ExteriorAlgebra::scale(int k, const Cochain1& a) const {
  check_cochain(a);
  Cochain1 r = zero_cochain();
  for (int i = 0; i < g_.size(); ++i) r.c[i] = mod_norm(long(k) * a.c[i], pr_.p);
  return r;
}

ExteriorElement ExteriorAlgebra::zero_element(int degree) const {
  return ExteriorElement{degree, g_.size(), pr_.p, {}};
}

ExteriorElement ExteriorAlgebra::from_cochain(const Cochain1& a) const {
  check_cochain(a);
  ExteriorElement x = zero_element(1);
  for (int i = 0; i < g_.size(); ++i) {
    int v = mod_norm(a.c[i], pr_.p);
    if (v != 0) x.coeff[{i}] = v;
  }
  return x;
}

ExteriorElement ExteriorAlgebra::basis_element(
    const std::vector<VertexId>& clique) const {
  std::vector<int> idx;
  for (const auto& v : clique) idx.push_back(g_.index_of(v));
  std::sort(idx.begin(), idx.end());
  if (!is_clique(g_, clique))
    throw std::invalid_argument("vertex set is not a clique");
  ExteriorElement x = zero_element(static_cast<int>(idx.size()));
  x.coeff[idx] = 1;
  return x;
}

void ExteriorAlgebra::check_cochain(const Cochain1& a) const {
  if (static_cast<int>(a.c.size()) != g_.size())
    throw std::invalid_argument("cochain does not match the vertex set");
}

void ExteriorAlgebra::check_element(const ExteriorElement& x) const {
  if (x.n_vertices != g_.size() || x.p != pr_.p)
    throw std::invalid_argument("element belongs to a different algebra");
}

ExteriorElement ExteriorAlgebra::wedge(const ExteriorElement& x,
                                       const ExteriorElement& y) const {
  check_element(x);
  check_element(y);
  ExteriorElement r = zero_element(x.degree + y.degree);
  for (const auto& [sx, cx] : x.coeff)
    for (const auto& [sy, cy] : y.coeff) {
      std::vector<int> merged = sx;
      merged.insert(merged.end(), sy.begin(), sy.end());
      int sign = sort_sign(merged);
      if (sign == 0) continue;  // repeated vertex
      bool clique = true;
      for (std::size_t a = 0; a < merged.size() && clique; ++a)
        for (std::size_t b = a + 1; b < merged.size(); ++b)
          if (!g_.adjacent(merged[a], merged[b])) {
            clique = false;
            break;
          }
      if (!clique) continue;  // killed by the quotient ideal
      long add = long(sign) * cx * cy;
      int& slot = r.coeff[merged];
      slot = mod_norm(slot + add, pr_.p);
      if (slot == 0) r.coeff.erase(merged);
    }
  return r;
}

ExteriorElement ExteriorAlgebra::cup(const Cochain1& a, const Cochain1& b) const {
  check_cochain(a);
  check_cochain(b);
  ExteriorElement r = zero_element(2);
  for (const auto& [v, w] : g_.edge_classes()) {
    int c = mod_norm(long(a.c[v]) * b.c[w] - long(a.c[w]) * b.c[v], pr_.p);
    if (c != 0) r.coeff[{v, w}] = c;
  }
  return r;
}

bool ExteriorAlgebra::consecutive_cups_vanish(
    const std::vector<Cochain1>& seq) const {
  if (seq.size() < 2)
    throw std::invalid_argument("need a sequence of length >= 2");
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!cup(seq[i], seq[i + 1]).is_zero()) return false;
  return true;
}

Cochain1 ExteriorAlgebra::restrict1(const Cochain1& a,
                                    const std::vector<VertexId>& sub) const {
  check_cochain(a);
  Digraph h = induced(g_, sub);
  Cochain1 r{std::vector<int>(h.size(), 0)};
  for (int i = 0; i < h.size(); ++i)
    r.c[i] = mod_norm(a.c[g_.index_of(h.name(i))], pr_.p);
  return r;
}

ExteriorElement ExteriorAlgebra::restrict2(
    const ExteriorElement& x, const std::vector<VertexId>& sub) const {
  check_element(x);
  if (x.degree != 2) throw std::invalid_argument("restrict2 wants degree 2");
  Digraph h = induced(g_, sub);
  ExteriorElement r{2, h.size(), pr_.p, {}};
  for (const auto& [key, c] : x.coeff) {
    const VertexId& a = g_.name(key[0]);
    const VertexId& b = g_.name(key[1]);
    if (!h.contains(a) || !h.contains(b)) continue;
    std::vector<int> k2{h.index_of(a), h.index_of(b)};
    std::sort(k2.begin(), k2.end());
    r.coeff[k2] = c;
  }
  return r;
}

std::vector<VertexId> ExteriorAlgebra::restriction_kernel1(
    const std::vector<VertexId>& sub) const {
  std::vector<VertexId> out;
  for (int i = 0; i < g_.size(); ++i) {
    bool inside = false;
    for (const auto& v : sub)
      if (g_.name(i) == v) inside = true;
    if (!inside) out.push_back(g_.name(i));
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> ExteriorAlgebra::restriction_kernel2(
    const std::vector<VertexId>& sub) const {
  Digraph h = induced(g_, sub);
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& [a, b] : g_.edge_classes()) {
    const VertexId& va = g_.name(a);
    const VertexId& vb = g_.name(b);
    if (h.contains(va) && h.contains(vb)) continue;  // edge survives
    out.emplace_back(va, vb);
  }
  return out;
}

std::string relator_id(const Digraph& g, int a, int b) {
  // Tail first for one-way edges, vertex order for undirected ones.
  if (g.one_way(b, a)) std::swap(a, b);
  return "r(" + g.name(a) + "," + g.name(b) + ")";
}

std::vector<std::pair<std::pair<VertexId, VertexId>, ExteriorAlgebra::RelatorRef>>
ExteriorAlgebra::relator_correspondence() const {
  std::vector<std::pair<std::pair<VertexId, VertexId>, RelatorRef>> out;
  for (const auto& [a, b] : g_.edge_classes()) {
    RelatorRef ref;
    ref.id = relator_id(g_, a, b);
    ref.sign = g_.undirected(a, b) ? 1 : -1;
    out.push_back({{g_.name(a), g_.name(b)}, ref});
  }
  return out;
}

}  // namespace raag
