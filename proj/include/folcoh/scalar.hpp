#pragma once

// Exact Gaussian rationals: a + b*i with a, b arbitrary-precision rationals.

#include <gmpxx.h>

#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace folcoh {

using Integer = mpz_class;
using Rational = mpq_class;

class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}
  Scalar(int v) : re_(v) {}
  Scalar(const Integer &v) : re_(v) {}
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational &re() const { return re_; }
  const Rational &im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar &operator+=(const Scalar &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar &operator-=(const Scalar &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar &operator*=(const Scalar &o) {
    if (o.is_real()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  // Division by zero is a programming error; GMP raises SIGFPE.
  Scalar &operator/=(const Scalar &o) {
    if (o.is_real()) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    Rational n = o.norm();
    Scalar c = o.conj();
    *this *= c;
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  friend bool operator==(const Scalar &a, const Scalar &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream &operator<<(std::ostream &os, const Scalar &s) {
    if (s.is_real())
      return os << s.re_;
    if (sgn(s.re_) == 0)
      return os << s.im_ << "i";
    os << s.re_;
    if (sgn(s.im_) > 0)
      os << "+";
    return os << s.im_ << "i";
  }

private:
  Rational re_{0};
  Rational im_{0};
};

} // namespace folcoh
