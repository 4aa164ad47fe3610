#ifndef QCOV_LINALG_HPP
#define QCOV_LINALG_HPP

#include "qcov/rational.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <vector>

namespace qcov {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

// ---------------------------------------------------------------------------
// Exact Gaussian elimination. Pivoting is positional (first nonzero), which
// is deterministic and sufficient over an exact field.
// ---------------------------------------------------------------------------

struct Rref {
  Mat m;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

template <typename Derived>
Rref rref(const Eigen::MatrixBase<Derived>& a) {
  Rref r;
  r.m = a;
  Mat& m = r.m;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i) {
      if (!m(i, col).is_zero()) { piv = i; break; }
    }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    r.pivot_cols.push_back(col);
    ++row;
  }
  return r;
}

template <typename Derived>
Eigen::Index rank_of(const Eigen::MatrixBase<Derived>& a) {
  return rref(a).rank();
}

/// Columns form a basis of the kernel of `a` (solutions of a x = 0).
inline Mat kernel_basis(const Mat& a) {
  Rref r = rref(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (auto c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  }
  Mat k = Mat::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (size_t j = 0; j < free_cols.size(); ++j) {
    Eigen::Index fc = free_cols[j];
    k(fc, static_cast<Eigen::Index>(j)) = Rational(1);
    for (size_t i = 0; i < r.pivot_cols.size(); ++i) {
      k(r.pivot_cols[i], static_cast<Eigen::Index>(j)) = -r.m(static_cast<Eigen::Index>(i), fc);
    }
  }
  return k;
}

/// A particular solution of a x = b, if any.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
  Mat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  Rref r = rref(aug);
  for (auto c : r.pivot_cols) {
    if (c == a.cols()) return std::nullopt;  // inconsistent row 0 ... 0 | 1
  }
  Vec x = Vec::Zero(a.cols());
  for (size_t i = 0; i < r.pivot_cols.size(); ++i) {
    x(r.pivot_cols[i]) = r.m(static_cast<Eigen::Index>(i), a.cols());
  }
  return x;
}

/// Whether b lies in the column span of a.
inline bool in_span(const Mat& a, const Vec& b) { return solve(a, b).has_value(); }

inline Rational det(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: non-square matrix");
  Mat m = a;
  Rational d(1);
  const Eigen::Index n = m.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = col; i < n; ++i) {
      if (!m(i, col).is_zero()) { piv = i; break; }
    }
    if (piv < 0) return Rational(0);
    if (piv != col) { m.row(piv).swap(m.row(col)); d = -d; }
    d *= m(col, col);
    Rational inv = Rational(1) / m(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      Rational f = m(i, col) * inv;
      for (Eigen::Index j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

inline bool is_invertible(const Mat& a) {
  return a.rows() == a.cols() && !det(a).is_zero();
}

// ---------------------------------------------------------------------------
// Univariate polynomials over the rationals, little-endian coefficients.
// ---------------------------------------------------------------------------

using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
  Poly rem = a, quot;
  poly_trim(rem);
  if (poly_deg(rem) >= poly_deg(b)) quot.assign(rem.size() - b.size() + 1, Rational(0));
  while (poly_deg(rem) >= poly_deg(b)) {
    int shift = poly_deg(rem) - poly_deg(b);
    Rational c = rem.back() / b.back();
    quot[static_cast<size_t>(shift)] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[i + static_cast<size_t>(shift)] -= c * b[i];
    poly_trim(rem);
  }
  poly_trim(quot);
  return {quot, rem};
}

inline Poly poly_monic(Poly p) {
  poly_trim(p);
  if (p.empty()) return p;
  Rational inv = Rational(1) / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

inline Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

inline Poly poly_derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  poly_trim(d);
  return d;
}

inline Rational poly_eval(const Poly& p, const Rational& x) {
  Rational v(0);
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

/// Squarefree decomposition (Yun): returns factors f_i with
/// p = c * prod f_i^i; the f_i are squarefree and pairwise coprime.
inline std::vector<Poly> squarefree_decomposition(const Poly& p0) {
  Poly p = poly_monic(p0);
  std::vector<Poly> out;
  if (poly_deg(p) < 1) return out;
  Poly d = poly_derivative(p);
  Poly a = poly_gcd(p, d);
  Poly b = poly_divmod(p, a).first;
  Poly c = poly_divmod(d, a).first;
  Poly z = poly_sub(c, poly_derivative(b));
  while (poly_deg(b) > 0) {
    Poly f = poly_gcd(b, z);
    out.push_back(poly_monic(f));
    b = poly_divmod(b, f).first;
    z = poly_divmod(z, f).first;
    z = poly_sub(z, poly_derivative(b));
  }
  return out;
}

/// Rational roots of p, found through the classical numerator/denominator
/// divisor argument. Divisor enumeration is by trial division and bails out
/// on huge coefficients (callers treat the list as best-effort).
std::vector<Rational> rational_roots(const Poly& p);

/// Characteristic polynomial of a square matrix (Faddeev–LeVerrier), monic.
inline Poly charpoly(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("charpoly: non-square matrix");
  const Eigen::Index n = a.rows();
  Poly c(static_cast<size_t>(n) + 1, Rational(0));
  c[static_cast<size_t>(n)] = Rational(1);
  Mat m = Mat::Zero(n, n);
  Rational ck(1);
  for (Eigen::Index k = 1; k <= n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) += ck;
    m = (a * m).eval();
    Rational tr(0);
    for (Eigen::Index i = 0; i < n; ++i) tr += m(i, i);
    ck = -tr / Rational(static_cast<long>(k));
    c[static_cast<size_t>(n - k)] = ck;
  }
  return c;
}

/// Evaluate a polynomial at a matrix argument.
inline Mat poly_at_matrix(const Poly& p, const Mat& a) {
  const Eigen::Index n = a.rows();
  Mat r = Mat::Zero(n, n);
  for (size_t i = p.size(); i-- > 0;) {
    r = (r * a).eval();
    for (Eigen::Index k = 0; k < n; ++k) r(k, k) += p[i];
  }
  return r;
}

// ---------------------------------------------------------------------------
// Smith normal form over the integers.
// ---------------------------------------------------------------------------

/// Diagonal entries d_1 | d_2 | ... of the Smith normal form of an integer
/// matrix (nonnegative, zeros trailing).
std::vector<BigInt> smith_normal_form(IntMat m);

}  // namespace qcov

#endif  // QCOV_LINALG_HPP
