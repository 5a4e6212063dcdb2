#pragma once

// Fractions of Laurent polynomials.  Every value the library produces lives in
// Z[v^±1, s^±1] (or Z_2[...]) with the elements s^r - s^-r inverted; the
// canonical form writes such values as num / z^k with z = s - s^-1 and z not
// dividing num.  Quotients by other polynomials (Vandermonde solves) are kept
// as general fractions and compared by cross-multiplication.

#include <string>
#include <utility>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

class RingElem {
 public:
  RingElem() : RingElem(Characteristic::zero) {}
  explicit RingElem(Characteristic ch)
      : num_(ch), den_(LaurentPoly::constant(1, ch)), zexp_(0) {}
  RingElem(LaurentPoly num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)),
        den_(LaurentPoly::constant(1, num_.characteristic())),
        zexp_(0) {}
  RingElem(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.characteristic() != den_.characteristic())
      throw ArithmeticError("fraction: mixed characteristics");
    if (den_.is_zero()) throw ArithmeticError("fraction: zero denominator");
    canonicalize();
  }

  static RingElem from_int(long long c, Characteristic ch = Characteristic::zero) {
    return RingElem(LaurentPoly::constant(c, ch));
  }
  static RingElem z(Characteristic ch = Characteristic::zero) {
    return RingElem(LaurentPoly::quantum_factor(1, ch));
  }
  // num / z^k without further checks on num.
  static RingElem over_z_power(LaurentPoly num, int k) {
    Characteristic ch = num.characteristic();
    return RingElem(std::move(num), z_poly(ch).pow(static_cast<unsigned>(k)));
  }
  // The framed Homfly value of the unknot, (v^-1 - v)/(s - s^-1).
  static RingElem delta_homfly(Characteristic ch = Characteristic::zero) {
    return over_z_power(LaurentPoly::v(-1, ch) - LaurentPoly::v(1, ch), 1);
  }
  // The framed Kauffman value of the unknot, delta_homfly + 1.
  static RingElem delta_kauffman(Characteristic ch = Characteristic::zero) {
    return delta_homfly(ch) + from_int(1, ch);
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  Characteristic characteristic() const { return num_.characteristic(); }
  bool is_zero() const { return num_.is_zero(); }
  // Exponent k when the denominator is exactly z^k, otherwise -1.
  int z_exponent() const { return zexp_; }
  bool is_laurent() const { return den_.is_one(); }

  friend bool operator==(const RingElem& a, const RingElem& b) {
    if (a.characteristic() != b.characteristic())
      throw ArithmeticError("compare: mixed characteristics");
    if (a.zexp_ >= 0 && a.zexp_ == b.zexp_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

  RingElem operator-() const {
    RingElem r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RingElem operator+(const RingElem& a, const RingElem& b) { return add(a, b, false); }
  friend RingElem operator-(const RingElem& a, const RingElem& b) { return add(a, b, true); }
  friend RingElem operator*(const RingElem& a, const RingElem& b) {
    same(a, b, "mul");
    if (a.zexp_ >= 0 && b.zexp_ >= 0) return from_z_form(a.num_ * b.num_, a.zexp_ + b.zexp_);
    return RingElem(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RingElem operator/(const RingElem& a, const RingElem& b) {
    same(a, b, "div");
    if (b.is_zero()) throw ArithmeticError("div: division by zero");
    return RingElem(a.num_ * b.den_, a.den_ * b.num_);
  }
  RingElem& operator+=(const RingElem& b) { return *this = *this + b; }
  RingElem& operator-=(const RingElem& b) { return *this = *this - b; }
  RingElem& operator*=(const RingElem& b) { return *this = *this * b; }
  RingElem& operator/=(const RingElem& b) { return *this = *this / b; }

  RingElem pow(unsigned e) const {
    RingElem result = from_int(1, characteristic());
    RingElem base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  RingElem inverse() const { return from_int(1, characteristic()) / *this; }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  static LaurentPoly z_poly(Characteristic ch) { return LaurentPoly::quantum_factor(1, ch); }

  static void same(const RingElem& a, const RingElem& b, const char* op) {
    if (a.characteristic() != b.characteristic())
      throw ArithmeticError(std::string(op) + ": mixed characteristics");
  }

  static RingElem from_z_form(LaurentPoly num, int k) {
    RingElem r(num.characteristic());
    r.num_ = std::move(num);
    r.zexp_ = k;
    r.reduce_z_form();
    return r;
  }

  static RingElem add(const RingElem& a, const RingElem& b, bool subtract) {
    same(a, b, subtract ? "sub" : "add");
    if (a.zexp_ >= 0 && b.zexp_ >= 0) {
      const Characteristic ch = a.characteristic();
      const int k = std::max(a.zexp_, b.zexp_);
      LaurentPoly x = a.num_ * z_poly(ch).pow(static_cast<unsigned>(k - a.zexp_));
      LaurentPoly y = b.num_ * z_poly(ch).pow(static_cast<unsigned>(k - b.zexp_));
      return from_z_form(subtract ? x - y : x + y, k);
    }
    if (a.den_ == b.den_) return RingElem(subtract ? a.num_ - b.num_ : a.num_ + b.num_, a.den_);
    LaurentPoly x = a.num_ * b.den_;
    LaurentPoly y = b.num_ * a.den_;
    return RingElem(subtract ? x - y : x + y, a.den_ * b.den_);
  }

  // Cancels powers of z from num / z^k and rebuilds den.
  void reduce_z_form() {
    const Characteristic ch = num_.characteristic();
    if (num_.is_zero()) {
      zexp_ = 0;
    } else {
      LaurentPoly z = z_poly(ch);
      while (zexp_ > 0) {
        auto q = num_.divide_exact(z);
        if (!q) break;
        num_ = std::move(*q);
        --zexp_;
      }
    }
    den_ = z_poly(ch).pow(static_cast<unsigned>(zexp_));
  }

  void canonicalize() {
    const Characteristic ch = num_.characteristic();
    if (num_.is_zero()) {
      den_ = LaurentPoly::constant(1, ch);
      zexp_ = 0;
      return;
    }
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = LaurentPoly::constant(1, ch);
      zexp_ = 0;
      return;
    }
    // Peel z factors off the denominator; if what remains is a unit monomial
    // the value has the z-power form.
    LaurentPoly z = z_poly(ch);
    LaurentPoly rest = den_;
    int k = 0;
    while (!rest.is_monomial()) {
      auto q = rest.divide_exact(z);
      if (!q) break;
      rest = std::move(*q);
      ++k;
    }
    if (rest.is_monomial() && (rest.terms()[0].coeff == 1 || rest.terms()[0].coeff == -1)) {
      auto q = num_.divide_exact(rest);
      num_ = std::move(*q);
      zexp_ = k;
      reduce_z_form();
      return;
    }
    // General denominator: trial-cancel the factors s^r - s^-r.
    zexp_ = -1;
    const int span = den_.max_deg_s() - den_.min_deg_s();
    for (int r = 1; 2 * r <= span; ++r) {
      LaurentPoly f = LaurentPoly::quantum_factor(r, ch);
      for (;;) {
        auto qd = den_.divide_exact(f);
        if (!qd) break;
        auto qn = num_.divide_exact(f);
        if (!qn) break;
        den_ = std::move(*qd);
        num_ = std::move(*qn);
      }
    }
    if (ch == Characteristic::zero && den_.terms().back().coeff < 0) {
      den_ = -den_;
      num_ = -num_;
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
  int zexp_ = 0;
};

// Coefficient-wise reduction mod 2 of numerator and denominator.
inline RingElem to_mod2(const RingElem& a) {
  if (a.characteristic() != Characteristic::zero)
    throw ArithmeticError("to_mod2: input must have characteristic 0");
  LaurentPoly den = a.den().reduced_mod2();
  if (den.is_zero()) throw ArithmeticError("to_mod2: denominator vanishes mod 2");
  return RingElem(a.num().reduced_mod2(), den);
}

// The Frobenius substitution v -> v^2, s -> s^2; in characteristic 2 this is
// the squaring homomorphism.
inline RingElem bar(const RingElem& a) {
  if (a.characteristic() != Characteristic::two)
    throw ArithmeticError("bar: input must have characteristic 2");
  return RingElem(a.num().substitute_powers(2, 2), a.den().substitute_powers(2, 2));
}

}  // namespace skeinlab
