#ifndef QCOV_RATIONAL_HPP
#define QCOV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <functional>
#include <stdexcept>
#include <string>

namespace qcov {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Wraps boost's cpp_rational behind a closed
/// operator set so it plugs into Eigen as a custom scalar without the
/// multiprecision expression templates leaking into overload resolution.
class Rational {
public:
  using rep = boost::multiprecision::cpp_rational;

  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& n, const BigInt& d) : v_(rep(n) / rep(d)) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
  }
  explicit Rational(rep r) : v_(std::move(r)) {}

  // Accepts "p" or "p/q" with optional sign.
  static Rational parse(const std::string& s);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return boost::multiprecision::denominator(v_) == 1; }
  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  std::string str() const { return v_.str(); }
  const rep& value() const { return v_; }

private:
  rep v_;
};

inline Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
  }
}

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qcov

namespace Eigen {
template <>
struct NumTraits<qcov::Rational> {
  using Real = qcov::Rational;
  using NonInteger = qcov::Rational;
  using Nested = qcov::Rational;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static inline qcov::Rational epsilon() { return qcov::Rational(0); }
  static inline qcov::Rational dummy_precision() { return qcov::Rational(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace std {
template <>
struct hash<qcov::Rational> {
  size_t operator()(const qcov::Rational& r) const {
    return std::hash<std::string>()(r.str());
  }
};
}  // namespace std

#endif  // QCOV_RATIONAL_HPP
