#include "raag/unitri.hpp"

#include <algorithm>
#include <stdexcept>

namespace raag {

UniTri::UniTri(int dim, int p) : dim_(dim), p_(p) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dim out of range");
  if (p < 2 || p > 251 || !is_prime(p)) throw std::invalid_argument("bad p");
  e_.fill(0);
  for (int i = 0; i < dim; ++i) e_[i * kMaxDim + i] = 1;
}

UniTri UniTri::elementary(int dim, int p, int i, int j, int value) {
  UniTri m(dim, p);
  m.set(i, j, value);
  return m;
}

UniTri UniTri::with_superdiag(int dim, int p, const std::vector<int>& sd) {
  if (static_cast<int>(sd.size()) != dim - 1)
    throw std::invalid_argument("superdiagonal length mismatch");
  UniTri m(dim, p);
  for (int i = 0; i + 1 < dim; ++i) m.set(i, i + 1, sd[i]);
  return m;
}

UniTri UniTri::jordan(int dim, int p) {
  UniTri m(dim, p);
  for (int i = 0; i + 1 < dim; ++i) m.set(i, i + 1, 1);
  return m;
}

void UniTri::check_pos(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw std::out_of_range("matrix index");
}

int UniTri::at(int i, int j) const {
  check_pos(i, j);
  return e_[i * kMaxDim + j];
}

void UniTri::set(int i, int j, int value) {
  check_pos(i, j);
  if (i >= j) throw std::invalid_argument("only strictly-upper entries are settable");
  e_[i * kMaxDim + j] = static_cast<uint8_t>(mod_norm(value, p_));
}

UniTri UniTri::mul(const UniTri& o) const {
  if (dim_ != o.dim_ || p_ != o.p_)
    throw std::invalid_argument("matrix size/field mismatch");
  UniTri r(dim_, p_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      long acc = 0;
      for (int k = i; k <= j; ++k)
        acc += long(e_[i * kMaxDim + k]) * o.e_[k * kMaxDim + j];
      r.e_[i * kMaxDim + j] = static_cast<uint8_t>(acc % p_);
    }
  return r;
}

UniTri UniTri::inv() const {
  // Back-substitution on A * X = I, column by column.
  UniTri x(dim_, p_);
  for (int j = 0; j < dim_; ++j)
    for (int i = j - 1; i >= 0; --i) {
      long acc = 0;
      for (int k = i + 1; k <= j; ++k)
        acc += long(e_[i * kMaxDim + k]) * x.e_[k * kMaxDim + j];
      x.e_[i * kMaxDim + j] = static_cast<uint8_t>(mod_norm(-acc, p_));
    }
  return x;
}

UniTri UniTri::pow(long e) const {
  if (e < 0) throw std::invalid_argument("pow wants e >= 0");
  UniTri base = *this, r(dim_, p_);
  while (e > 0) {
    if (e & 1) r = r.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return r;
}

UniTri UniTri::commutator(const UniTri& o) const {
  return mul(o).mul(inv()).mul(o.inv());
}

UniTri UniTri::conjugate_by(const UniTri& m) const {
  return m.inv().mul(*this).mul(m);
}

std::vector<int> UniTri::superdiag() const {
  std::vector<int> sd(dim_ - 1);
  for (int i = 0; i + 1 < dim_; ++i) sd[i] = e_[i * kMaxDim + i + 1];
  return sd;
}

bool UniTri::is_identity() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (e_[i * kMaxDim + j] != 0) return false;
  return true;
}

bool UniTri::is_central() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (e_[i * kMaxDim + j] != 0 && !(i == 0 && j == dim_ - 1)) return false;
  return true;
}

UniTri UniTri::center_project() const {
  UniTri r = *this;
  if (dim_ >= 2) r.e_[0 * kMaxDim + dim_ - 1] = 0;
  return r;
}

bool UniTri::equal_mod_center(const UniTri& o) const {
  if (dim_ != o.dim_ || p_ != o.p_) return false;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      if (i == 0 && j == dim_ - 1) continue;
      if (e_[i * kMaxDim + j] != o.e_[i * kMaxDim + j]) return false;
    }
  return true;
}

bool UniTri::operator==(const UniTri& o) const {
  if (dim_ != o.dim_ || p_ != o.p_) return false;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (e_[i * kMaxDim + j] != o.e_[i * kMaxDim + j]) return false;
  return true;
}

// --- linear solving --------------------------------------------------------

void LinearSystem::add(std::vector<int> coeffs, int rhs) {
  if (static_cast<int>(coeffs.size()) != nvars_)
    throw std::invalid_argument("equation arity mismatch");
  for (int& c : coeffs) c = mod_norm(c, p_);
  coeffs.push_back(mod_norm(rhs, p_));
  rows_.push_back(std::move(coeffs));
}

AffineSolutions LinearSystem::solve() const {
  std::vector<std::vector<int>> m = rows_;
  const int n = nvars_;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < static_cast<int>(m.size()); ++col) {
    int pr = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r)
      if (m[r][col] != 0) { pr = r; break; }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    int inv = mod_inv(m[row][col], p_);
    for (int c = col; c <= n; ++c) m[row][c] = mod_norm(long(m[row][c]) * inv, p_);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][col] == 0) continue;
      int f = m[r][col];
      for (int c = col; c <= n; ++c)
        m[r][c] = mod_norm(m[r][c] - long(f) * m[row][c], p_);
    }
    pivot_col.push_back(col);
    ++row;
  }
  AffineSolutions out;
  out.nvars = n;
  for (int r = row; r < static_cast<int>(m.size()); ++r)
    if (m[r][n] != 0) return out;  // 0 = nonzero: inconsistent
  out.consistent = true;
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  out.particular.assign(n, 0);
  for (int r = 0; r < row; ++r) out.particular[pivot_col[r]] = m[r][n];
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<int> k(n, 0);
    k[c] = 1;
    for (int r = 0; r < row; ++r)
      k[pivot_col[r]] = mod_norm(-m[r][c], p_);
    out.kernel.push_back(std::move(k));
  }
  return out;
}

std::uint64_t AffineSolutions::count(int p) const {
  if (!consistent) return 0;
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    if (c > (~0ULL) / p) return ~0ULL;
    c *= p;
  }
  return c;
}

std::vector<std::vector<int>> enumerate_solutions(const AffineSolutions& s,
                                                  int p, std::size_t limit) {
  std::vector<std::vector<int>> out;
  if (!s.consistent || limit == 0) return out;
  const std::size_t k = s.kernel.size();
  std::vector<int> params(k, 0);
  while (true) {
    std::vector<int> v = s.particular;
    for (std::size_t t = 0; t < k; ++t) {
      if (params[t] == 0) continue;
      for (int i = 0; i < s.nvars; ++i)
        v[i] = mod_norm(v[i] + long(params[t]) * s.kernel[t][i], p);
    }
    out.push_back(std::move(v));
    if (out.size() >= limit) break;
    // increment the parameter vector, last coordinate fastest
    std::size_t t = k;
    while (t > 0) {
      --t;
      if (++params[t] < p) break;
      params[t] = 0;
      if (t == 0) return out;
    }
    if (k == 0) break;
  }
  return out;
}

// --- Jordan normalization ---------------------------------------------------

UniTri jordan_conjugator(const UniTri& a) {
  const int dim = a.dim(), p = a.p();
  for (int i = 0; i + 1 < dim; ++i)
    if (a.at(i, i + 1) != 1)
      throw std::invalid_argument("superdiagonal must be all ones");
  // Columns of M: basis vectors with (A - I) v_{m+1} = v_m, built by
  // back-substitution; coordinate m+1 of v_{m+1} is 1, coordinate 0 free -> 0.
  std::vector<std::vector<int>> cols(dim, std::vector<int>(dim, 0));
  cols[0][0] = 1;
  if (dim >= 2) cols[1][1] = 1;
  for (int m = 1; m + 1 < dim; ++m) {
    std::vector<int> w(dim, 0);
    w[m + 1] = 1;
    for (int i = m - 1; i >= 0; --i) {
      long acc = 0;
      for (int j = i + 2; j <= m + 1; ++j) acc += long(a.at(i, j)) * w[j];
      w[i + 1] = mod_norm(cols[m][i] - acc, p);
    }
    cols[m + 1] = std::move(w);
  }
  UniTri mtx(dim, p);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < j; ++i) mtx.set(i, j, cols[j][i]);
  if (!(a.conjugate_by(mtx) == UniTri::jordan(dim, p)))
    throw std::logic_error("jordan conjugator failed post-hoc validation");
  return mtx;
}

JordanNormalization jordan_normalize(const std::vector<UniTri>& images,
                                     std::size_t x_index) {
  if (x_index >= images.size()) throw std::invalid_argument("bad generator index");
  const UniTri& ax = images[x_index];
  if (ax.dim() < 4)
    throw std::invalid_argument("jordan_normalize wants dimension >= 4");
  JordanNormalization out{jordan_conjugator(ax), {}};
  for (const auto& m : images) {
    UniTri c = m.conjugate_by(out.conjugator);
    if (c.superdiag() != m.superdiag())
      throw std::logic_error("conjugation changed a superdiagonal");
    out.images.push_back(std::move(c));
  }
  return out;
}

// --- banded shape -----------------------------------------------------------

std::optional<BandedProfile> check_banded(const UniTri& b, const UniTri& a) {
  const int dim = a.dim(), n = dim - 1;
  if (!(a == UniTri::jordan(dim, a.p())))
    throw std::invalid_argument("A must be the all-ones Jordan matrix");
  if (b.dim() != dim || b.p() != a.p())
    throw std::invalid_argument("size/field mismatch");
  if (dim < 4) throw std::invalid_argument("need dimension >= 4");
  if (!a.commutator(b).is_central()) return std::nullopt;
  BandedProfile prof;
  for (int k = 1; k <= n - 2; ++k) {
    int v = b.at(0, k);
    for (int i = 0; i + k < dim; ++i)
      if (b.at(i, i + k) != v)
        throw std::logic_error("central commutator with a non-banded matrix");
    prof.band.push_back(v);
  }
  prof.high_band = {b.at(0, n - 1), b.at(1, n)};
  prof.corner = b.at(0, n);
  return prof;
}

namespace {

bool has_banded_shape(const UniTri& b) {
  const int dim = b.dim(), n = dim - 1;
  for (int k = 1; k <= n - 2; ++k)
    for (int i = 1; i + k < dim; ++i)
      if (b.at(i, i + k) != b.at(0, k)) return false;
  return true;
}

bool has_c_shape(const UniTri& c) {
  const int dim = c.dim(), n = dim - 1;
  if (c.at(0, 1) != 1 || c.at(n - 1, n) != 1) return false;
  for (int i = 1; i + 1 < n; ++i)
    if (c.at(i, i + 1) != 0) return false;
  return true;
}

}  // namespace

bool force_zero_band(const UniTri& b, const UniTri& c) {
  const int dim = b.dim(), n = dim - 1;
  if (c.dim() != dim || c.p() != b.p())
    throw std::invalid_argument("size/field mismatch");
  if (dim < 4) throw std::invalid_argument("need dimension >= 4");
  if (!has_banded_shape(b))
    throw std::invalid_argument("B does not have the banded shape");
  if (!has_c_shape(c))
    throw std::invalid_argument("C does not have superdiagonal (1,0,...,0,1)");
  if (!c.commutator(b).is_central())
    throw std::invalid_argument("[C, B] is not central");
  for (int k = 1; k <= n - 2; ++k)
    if (b.at(0, k) != 0) return false;
  return true;
}

// --- conjugation solving ----------------------------------------------------

namespace {

inline int upper_index(int dim, int i, int j) {
  // row-major order over strictly-upper positions
  int idx = 0;
  for (int r = 0; r < i; ++r) idx += dim - 1 - r;
  return idx + (j - i - 1);
}

}  // namespace

std::vector<UniTri> solve_conjugation(const UniTri& a, long e,
                                      const std::vector<EntryConstraint>& constraints,
                                      std::size_t max_solutions) {
  const int dim = a.dim(), p = a.p();
  const int nvars = dim * (dim - 1) / 2;
  UniTri ae = a.pow(e);
  LinearSystem sys(nvars, p);
  // B*A - A^e*B = 0 entrywise; the (i,j) unknown cancels, leaving the
  // strictly-interior unknowns and a constant term.
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      std::vector<int> coeffs(nvars, 0);
      long rhs = -(a.at(i, j) - ae.at(i, j));
      for (int k = i + 1; k < j; ++k) {
        coeffs[upper_index(dim, i, k)] =
            mod_norm(coeffs[upper_index(dim, i, k)] + a.at(k, j), p);
        coeffs[upper_index(dim, k, j)] =
            mod_norm(coeffs[upper_index(dim, k, j)] - ae.at(i, k), p);
      }
      sys.add(std::move(coeffs), mod_norm(rhs, p));
    }
  for (const auto& c : constraints) {
    if (c.i < 0 || c.j <= c.i || c.j >= dim)
      throw std::invalid_argument("constraint position out of range");
    std::vector<int> coeffs(nvars, 0);
    coeffs[upper_index(dim, c.i, c.j)] = 1;
    sys.add(std::move(coeffs), c.value);
  }
  auto sol = sys.solve();
  std::vector<UniTri> out;
  for (const auto& v : enumerate_solutions(sol, p, max_solutions)) {
    UniTri b(dim, p);
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) b.set(i, j, v[upper_index(dim, i, j)]);
    out.push_back(std::move(b));
  }
  return out;
}

// --- block decomposition ------------------------------------------------------

std::vector<JordanBlock> block_decompose(const UniTri& a) {
  const int dim = a.dim(), p = a.p();
  for (int i = 0; i < dim; ++i)
    for (int j = i + 2; j < dim; ++j)
      if (a.at(i, j) != 0)
        throw std::invalid_argument("matrix has entries above the superdiagonal");
  std::vector<JordanBlock> out;
  int start = 0;
  for (int i = 0; i < dim; ++i) {
    bool linked = (i + 1 < dim) && a.at(i, i + 1) != 0;
    if (!linked) {
      int size = i - start + 1;
      UniTri blk(size, p);
      for (int r = 0; r + 1 < size; ++r)
        blk.set(r, r + 1, a.at(start + r, start + r + 1));
      out.push_back({start, std::move(blk)});
      start = i + 1;
    }
  }
  return out;
}

}  // namespace raag
