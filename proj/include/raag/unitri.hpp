#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "raag/fp.hpp"

namespace raag {

// Upper unitriangular matrix over F_p, dimension (n+1) <= 16, entries mod
// p <= 251. The diagonal is implicitly 1 and everything below is 0; only
// strictly-upper entries are mutable. Indices are 0-based.
class UniTri {
 public:
  static constexpr int kMaxDim = 16;

  UniTri() = default;
  UniTri(int dim, int p);  // identity
  static UniTri identity(int dim, int p) { return UniTri(dim, p); }
  // I + value * E(i, j)
  static UniTri elementary(int dim, int p, int i, int j, int value);
  // Identity plus the given superdiagonal (paper's Jordan-type shape).
  static UniTri with_superdiag(int dim, int p, const std::vector<int>& sd);
  // All-ones superdiagonal: I + E(0,1) + ... + E(dim-2, dim-1).
  static UniTri jordan(int dim, int p);

  int dim() const { return dim_; }
  int p() const { return p_; }
  int at(int i, int j) const;
  void set(int i, int j, int value);  // requires i < j

  UniTri mul(const UniTri& o) const;
  UniTri inv() const;
  UniTri pow(long e) const;  // e >= 0
  UniTri commutator(const UniTri& o) const;  // [this, o] = t o t^-1 o^-1
  UniTri conjugate_by(const UniTri& m) const;  // m^-1 * this * m

  std::vector<int> superdiag() const;
  bool is_identity() const;
  // Central elements are I + a E(0, dim-1).
  bool is_central() const;
  int corner() const { return at(0, dim_ - 1); }
  UniTri center_project() const;  // corner entry zeroed
  bool equal_mod_center(const UniTri& o) const;

  bool operator==(const UniTri& o) const;

 private:
  void check_pos(int i, int j) const;
  int dim_ = 0;
  int p_ = 0;
  std::array<uint8_t, kMaxDim * kMaxDim> e_{};
};

// Class of U mod its center, kept as the representative with corner 0.
struct BarElement {
  UniTri rep;
  explicit BarElement(const UniTri& a) : rep(a.center_project()) {}
  bool operator==(const BarElement& o) const { return rep == o.rep; }
};
inline BarElement center_project(const UniTri& a) { return BarElement(a); }
inline bool equal_mod_center(const UniTri& a, const UniTri& b) {
  return a.equal_mod_center(b);
}

// --- dense linear solving over F_p (shared by conjugation solving and the
// representation searches) ------------------------------------------------

struct AffineSolutions {
  bool consistent = false;
  int nvars = 0;
  std::vector<int> particular;            // free parameters set to 0
  std::vector<std::vector<int>> kernel;   // basis of the homogeneous space
  std::uint64_t count(int p) const;       // p^kernel.size(), saturating
};

class LinearSystem {
 public:
  LinearSystem(int nvars, int p) : nvars_(nvars), p_(p) {}
  // coeffs has nvars entries; equation is coeffs . x = rhs (mod p).
  void add(std::vector<int> coeffs, int rhs);
  AffineSolutions solve() const;
  int nvars() const { return nvars_; }

 private:
  int nvars_, p_;
  std::vector<std::vector<int>> rows_;  // coeffs with rhs appended
};

// Materialize solution vectors in lexicographic order of the free
// parameters, at most `limit` of them. The all-zero parameter choice (the
// particular solution) always comes first.
std::vector<std::vector<int>> enumerate_solutions(const AffineSolutions& s,
                                                  int p, std::size_t limit);

// --- the matrix lemmata ---------------------------------------------------

// Given generator images and a distinguished generator x whose image has
// every superdiagonal entry equal to 1, produce M in U with
// M^-1 * images[x] * M = jordan(dim), and conjugate every image by M.
// Conjugation by a unitriangular matrix never changes superdiagonals, so
// the readouts survive. The back-substitution sets each free coordinate to
// 0 and the leading coordinate of each new basis vector to 1; the result
// is validated by multiplication. Requires dim >= 4.
struct JordanNormalization {
  UniTri conjugator;
  std::vector<UniTri> images;
};
JordanNormalization jordan_normalize(const std::vector<UniTri>& images,
                                     std::size_t x_index);
UniTri jordan_conjugator(const UniTri& a);

// If [A, B] is central for A = jordan(dim), B is constant along its k-th
// upper diagonals for k = 1..n-2 (n = dim-1); the two entries of diagonal
// n-1 and the corner stay free. Returns nullopt when the centrality
// hypothesis fails.
struct BandedProfile {
  std::vector<int> band;          // band[k-1] = common value of diagonal k
  std::array<int, 2> high_band;   // entries (0, n-1) and (1, n)
  int corner;
};
std::optional<BandedProfile> check_banded(const UniTri& b, const UniTri& a);

// Shape checks for the zero-band lemma: B banded as above, C with
// superdiagonal (1, 0, ..., 0, 1) and free entries above it. When [C, B]
// is central the telescoping entry identities force the whole band of B
// to vanish; returns whether they do. Shape or centrality violations throw.
bool force_zero_band(const UniTri& b, const UniTri& c);

// All B with B * A = A^e * B subject to entry constraints, i.e. all
// solutions of [B, A] = A^(e-1) in the linear formulation. Enumerated in
// lexicographic free-parameter order, truncated at max_solutions.
struct EntryConstraint {
  int i, j, value;
};
std::vector<UniTri> solve_conjugation(const UniTri& a, long e,
                                      const std::vector<EntryConstraint>& constraints,
                                      std::size_t max_solutions = 1u << 20);

// Decompose a matrix supported on diagonal + superdiagonal into Jordan-type
// blocks along maximal runs of nonzero superdiagonal entries.
struct JordanBlock {
  int offset;  // first row of the block
  UniTri mat;
};
std::vector<JordanBlock> block_decompose(const UniTri& a);

}  // namespace raag
