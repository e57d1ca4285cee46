#pragma once

#include <string>

#include "gck/error.hpp"
#include "gck/rational.hpp"

namespace gck {

/// Complexification of an exact scalar field: re + i*im, componentwise canonical.
template <class T>
struct Cx {
  T re{0};
  T im{0};

  Cx() = default;
  Cx(int n) : re(n), im(0) {}  // NOLINT: implicit by design
  Cx(T r) : re(std::move(r)), im(0) {}  // NOLINT
  Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static Cx i() { return Cx(T(0), T(1)); }

  bool is_zero() const { return gck::is_zero(re) && gck::is_zero(im); }
  bool is_real() const { return gck::is_zero(im); }

  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
  Cx& operator*=(const Cx& o) {
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Cx& operator/=(const Cx& o) {
    T n = o.re * o.re + o.im * o.im;
    require(!gck::is_zero(n), Errc::division_by_zero, "complex division by zero");
    T r = (re * o.re + im * o.im) / n;
    T i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Cx operator+(Cx a, const Cx& b) { return a += b; }
  friend Cx operator-(Cx a, const Cx& b) { return a -= b; }
  friend Cx operator*(Cx a, const Cx& b) { return a *= b; }
  friend Cx operator/(Cx a, const Cx& b) { return a /= b; }
  friend Cx operator-(const Cx& a) { return Cx(-a.re, -a.im); }

  friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }
};

template <class T>
bool is_zero(const Cx<T>& c) { return c.is_zero(); }

template <class T>
Cx<T> conj_val(const Cx<T>& c) { return Cx<T>(c.re, -c.im); }

template <class T>
std::string to_string(const Cx<T>& c) {
  using gck::to_string;
  if (gck::is_zero(c.im)) return to_string(c.re);
  if (gck::is_zero(c.re)) return "(" + to_string(c.im) + ")*i";
  return "(" + to_string(c.re) + ")+(" + to_string(c.im) + ")*i";
}

using CRational = Cx<Rational>;

}  // namespace gck
