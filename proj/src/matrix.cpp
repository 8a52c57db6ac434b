#include "carterlink/matrix.hpp"

#include <numeric>
#include <sstream>

namespace carterlink {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (rat_den(r) != 1) os << '/' << rat_den(r);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<std::vector<int>>& rows) {
  RatMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.n())
      throw std::invalid_argument("from_int_rows: ragged rows");
    for (int j = 0; j < m.n(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::mul(const RatMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  RatMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

std::vector<Rat> RatMatrix::mul(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("matrix/vector size mismatch");
  std::vector<Rat> r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

Int RatMatrix::common_denominator() const {
  Int l = 1;
  for (const Rat& x : a_) l = boost::multiprecision::lcm(l, rat_den(x));
  return l;
}

namespace {

// Clear denominators, returning integer matrix and the per-row scale product.
// Bareiss runs on the integer matrix; det is recovered by dividing out scales.
struct IntMat {
  int n;
  std::vector<Int> a;
  Int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
};

IntMat clear_denominators(const RatMatrix& m, Rat& scale) {
  IntMat im{m.n(), std::vector<Int>(static_cast<size_t>(m.n()) * m.n())};
  scale = 1;
  for (int i = 0; i < m.n(); ++i) {
    Int l = 1;
    for (int j = 0; j < m.n(); ++j) l = boost::multiprecision::lcm(l, rat_den(m.at(i, j)));
    scale *= Rat(1, l);
    for (int j = 0; j < m.n(); ++j) {
      Rat v = m.at(i, j) * l;
      im.at(i, j) = rat_num(v);
    }
  }
  return im;
}

// Fraction-free Gaussian elimination. Returns determinant of the integer
// matrix; rows are permuted in place, sign tracked.
Int bareiss_det(IntMat m) {
  const int n = m.n;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

} // namespace

Rat RatMatrix::determinant() const {
  if (n_ == 0) return 1;
  Rat scale;
  IntMat im = clear_denominators(*this, scale);
  return scale * Rat(bareiss_det(std::move(im)));
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  // Gauss-Jordan over exact rationals on [A | I]; pivots never round so this
  // matches the Bareiss determinant route exactly.
  const int n = n_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rat d = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Rat f = a.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool RatMatrix::symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RatMatrix::positive_definite() const {
  for (int k = 1; k <= n_; ++k) {
    RatMatrix lead(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = at(i, j);
    if (lead.determinant() <= 0) return false;
  }
  return true;
}

Rat RatMatrix::qform(const std::vector<Rat>& v) const {
  std::vector<Rat> mv = mul(v);
  Rat s = 0;
  for (int i = 0; i < n_; ++i) s += mv[i] * v[i];
  return s;
}

Rat RatMatrix::qform(const std::vector<int>& v) const {
  std::vector<Rat> rv(v.begin(), v.end());
  return qform(rv);
}

std::optional<std::vector<Rat>> solve(const RatMatrix& m, const std::vector<Rat>& b) {
  const int n = m.n();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("solve: size mismatch");
  RatMatrix a = m;
  std::vector<Rat> x = b;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      std::swap(x[piv], x[col]);
    }
    Rat d = a.at(col, col);
    for (int j = 0; j < n; ++j) a.at(col, j) /= d;
    x[col] /= d;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Rat f = a.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
      x[i] -= f * x[col];
    }
  }
  return x;
}

} // namespace carterlink
