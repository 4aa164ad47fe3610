#include "qcov/linalg.hpp"

namespace qcov {

namespace {

// Divisors by trial division; empty result signals "too big to enumerate".
std::vector<BigInt> divisors_of(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> divs;
  if (n == 0) return divs;
  if (n > BigInt("1000000000000")) return divs;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
    if (divs.size() > 4096) return {};
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p0) {
  Poly p = p0;
  poly_trim(p);
  std::vector<Rational> roots;
  if (poly_deg(p) < 1) return roots;
  // Strip x^k.
  size_t low = 0;
  while (low < p.size() && p[low].is_zero()) ++low;
  if (low > 0) {
    roots.push_back(Rational(0));
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
  }
  if (poly_deg(p) < 1) return roots;
  // Clear denominators to a primitive integer polynomial.
  BigInt lcm(1);
  for (const auto& c : p) {
    BigInt d = c.denominator();
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> ip;
  for (const auto& c : p) ip.push_back(c.numerator() * (lcm / c.denominator()));
  auto ps = divisors_of(ip.front());
  auto qs = divisors_of(ip.back());
  for (const auto& num : ps) {
    for (const auto& den : qs) {
      if (boost::multiprecision::gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        Rational cand(sign * num, den);
        if (poly_eval(p, cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<BigInt> smith_normal_form(IntMat m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<BigInt> diag;
  Eigen::Index t = 0;
  auto nonzero_exists = [&](Eigen::Index from) {
    for (Eigen::Index i = from; i < rows; ++i) {
      for (Eigen::Index j = from; j < cols; ++j) {
        if (m(i, j) != 0) return true;
      }
    }
    return false;
  };
  while (t < rows && t < cols && nonzero_exists(t)) {
    // Pivot: smallest nonzero absolute value in the working block.
    Eigen::Index pi = -1, pj = -1;
    BigInt best = 0;
    for (Eigen::Index i = t; i < rows; ++i) {
      for (Eigen::Index j = t; j < cols; ++j) {
        BigInt v = m(i, j) < 0 ? BigInt(-m(i, j)) : m(i, j);
        if (v != 0 && (pi < 0 || v < best)) { best = v; pi = i; pj = j; }
      }
    }
    m.row(pi).swap(m.row(t));
    m.col(pj).swap(m.col(t));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        BigInt q = m(i, t) / m(t, t);
        m.row(i) -= q * m.row(t);
        if (m(i, t) != 0) {  // remainder smaller than pivot: swap and restart
          m.row(i).swap(m.row(t));
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        BigInt q = m(t, j) / m(t, t);
        m.col(j) -= q * m.col(t);
        if (m(t, j) != 0) {
          m.col(j).swap(m.col(t));
          clean = false;
        }
      }
      if (clean) {
        // Divisibility fix-up: pivot must divide the rest of the block.
        for (Eigen::Index i = t + 1; i < rows && clean; ++i) {
          for (Eigen::Index j = t + 1; j < cols && clean; ++j) {
            if (m(i, j) % m(t, t) != 0) {
              m.row(t) += m.row(i);
              clean = false;
            }
          }
        }
      }
    }
    diag.push_back(m(t, t) < 0 ? BigInt(-m(t, t)) : m(t, t));
    ++t;
  }
  while (static_cast<Eigen::Index>(diag.size()) < std::min(rows, cols)) diag.push_back(0);
  return diag;
}

}  // namespace qcov
