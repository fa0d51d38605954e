#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace valgeo {

using Rational = boost::multiprecision::cpp_rational;

struct PiExponentMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// Exact scalar q * pi^m. All SO(n) structure constants live in this set:
// every flag coefficient and ball volume is a rational Laurent monomial in pi.
// Addition is only defined for matching exponents; mixing them is a bug in
// the caller, never something to coerce numerically.
class ScaledRational {
 public:
  ScaledRational() : q_(0), m_(0) {}
  ScaledRational(Rational q, int pi_exp = 0) : q_(std::move(q)), m_(pi_exp) {
    if (q_ == 0) m_ = 0;
  }
  ScaledRational(long num, long den, int pi_exp = 0)
      : ScaledRational(Rational(num, den), pi_exp) {}
  static ScaledRational integer(long v) { return ScaledRational(Rational(v), 0); }

  const Rational& q() const { return q_; }
  int pi_exp() const { return m_; }
  bool is_zero() const { return q_ == 0; }

  ScaledRational operator-() const { return ScaledRational(-q_, m_); }

  ScaledRational operator+(const ScaledRational& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (m_ != o.m_)
      throw PiExponentMismatch("adding pi^" + std::to_string(m_) + " to pi^" +
                               std::to_string(o.m_));
    return ScaledRational(q_ + o.q_, m_);
  }
  ScaledRational operator-(const ScaledRational& o) const { return *this + (-o); }
  ScaledRational operator*(const ScaledRational& o) const {
    return ScaledRational(q_ * o.q_, m_ + o.m_);
  }
  ScaledRational operator/(const ScaledRational& o) const {
    if (o.is_zero()) throw std::domain_error("ScaledRational division by zero");
    return ScaledRational(q_ / o.q_, m_ - o.m_);
  }
  ScaledRational& operator+=(const ScaledRational& o) { return *this = *this + o; }
  ScaledRational& operator*=(const ScaledRational& o) { return *this = *this * o; }

  bool operator==(const ScaledRational& o) const {
    return q_ == o.q_ && m_ == o.m_;
  }
  bool operator!=(const ScaledRational& o) const { return !(*this == o); }

  double to_double() const {
    return static_cast<double>(q_) * std::pow(M_PI, m_);
  }

  std::string str() const {
    std::ostringstream os;
    os << q_;
    if (m_ == 1)
      os << "*pi";
    else if (m_ != 0)
      os << "*pi^" << m_;
    return os.str();
  }

  std::string q_str() const {
    std::ostringstream os;
    os << q_;
    return os.str();
  }

 private:
  Rational q_;
  int m_;
};

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
  return r;
}

}  // namespace valgeo
