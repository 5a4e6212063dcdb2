#pragma once

// Sparse Laurent polynomials in two variables v and s with integer
// coefficients, optionally reduced mod 2.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skeinlab {

using BigInt = boost::multiprecision::cpp_int;

enum class Characteristic : int { zero = 0, two = 2 };

inline std::string to_string(Characteristic c) {
  return c == Characteristic::zero ? "0" : "2";
}

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponent pairs are packed as deg_v * 2^32 + deg_s.  The packing is additive
// (multiplying monomials adds keys) and its integer order is the (deg_v,
// deg_s) lexicographic order, so sorted term vectors are in render order.
class LaurentPoly {
 public:
  using Key = std::int64_t;

  struct Term {
    Key key;
    BigInt coeff;
  };

  static constexpr Key kVUnit = Key(1) << 32;

  static Key make_key(int deg_v, int deg_s) {
    return Key(deg_v) * kVUnit + Key(deg_s);
  }
  static int deg_v_of(Key k) {
    return static_cast<int>((k + (Key(1) << 31)) >> 32);
  }
  static int deg_s_of(Key k) {
    return static_cast<int>(k - Key(deg_v_of(k)) * kVUnit);
  }

  LaurentPoly() = default;
  explicit LaurentPoly(Characteristic ch) : char_(ch) {}

  static LaurentPoly constant(BigInt c, Characteristic ch = Characteristic::zero) {
    return monomial(std::move(c), 0, 0, ch);
  }
  static LaurentPoly monomial(BigInt c, int deg_v, int deg_s,
                              Characteristic ch = Characteristic::zero) {
    LaurentPoly p(ch);
    if (ch == Characteristic::two) c = reduce2(c);
    if (c != 0) p.terms_.push_back({make_key(deg_v, deg_s), std::move(c)});
    return p;
  }
  static LaurentPoly v(int e = 1, Characteristic ch = Characteristic::zero) {
    return monomial(1, e, 0, ch);
  }
  static LaurentPoly s(int e = 1, Characteristic ch = Characteristic::zero) {
    return monomial(1, 0, e, ch);
  }
  // s^r - s^-r
  static LaurentPoly quantum_factor(int r, Characteristic ch = Characteristic::zero) {
    return s(r, ch) - s(-r, ch);
  }

  // Builds from arbitrary (possibly repeated, unsorted) terms.
  static LaurentPoly from_terms(std::vector<Term> raw, Characteristic ch) {
    LaurentPoly p(ch);
    p.terms_ = std::move(raw);
    p.normalize();
    return p;
  }

  Characteristic characteristic() const { return char_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].key == 0 && terms_[0].coeff == 1;
  }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  BigInt coeff(int deg_v, int deg_s) const {
    Key k = make_key(deg_v, deg_s);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, Key x) { return t.key < x; });
    if (it != terms_.end() && it->key == k) return it->coeff;
    return 0;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    }
    return true;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    if (char_ == Characteristic::zero)
      for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    return merge(a, b, false);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return merge(a, b, true);
  }
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_same(a, b, "mul");
    LaurentPoly r(a.char_);
    if (a.is_zero() || b.is_zero()) return r;
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0]);
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0]);
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) raw.push_back({x.key + y.key, x.coeff * y.coeff});
    r.terms_ = std::move(raw);
    r.normalize();
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  LaurentPoly scaled(const BigInt& c) const {
    return times_term({0, c});
  }
  LaurentPoly shifted(int deg_v, int deg_s) const {
    LaurentPoly r = *this;
    Key d = make_key(deg_v, deg_s);
    for (auto& t : r.terms_) t.key += d;
    return r;
  }

  LaurentPoly pow(unsigned e) const {
    LaurentPoly result = constant(1, char_);
    LaurentPoly base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  // v -> v^a, s -> s^b.
  LaurentPoly substitute_powers(int a, int b) const {
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_)
      raw.push_back({make_key(deg_v_of(t.key) * a, deg_s_of(t.key) * b), t.coeff});
    return from_terms(std::move(raw), char_);
  }

  LaurentPoly reduced_mod2() const {
    std::vector<Term> raw;
    for (const auto& t : terms_)
      if (reduce2(t.coeff) != 0) raw.push_back({t.key, 1});
    LaurentPoly r(Characteristic::two);
    r.terms_ = std::move(raw);
    return r;
  }

  // Reinterprets a characteristic-2 polynomial with 0/1 coefficients as an
  // integer polynomial (used only for rendering and hashing).
  LaurentPoly with_characteristic(Characteristic ch) const {
    if (ch == char_) return *this;
    if (ch == Characteristic::two) return reduced_mod2();
    LaurentPoly r = *this;
    r.char_ = ch;
    return r;
  }

  int min_deg_v() const { return deg_v_of(terms_.front().key); }
  int max_deg_v() const { return deg_v_of(terms_.back().key); }
  int min_deg_s() const {
    int m = deg_s_of(terms_.front().key);
    for (const auto& t : terms_) m = std::min(m, deg_s_of(t.key));
    return m;
  }
  int max_deg_s() const {
    int m = deg_s_of(terms_.front().key);
    for (const auto& t : terms_) m = std::max(m, deg_s_of(t.key));
    return m;
  }

  // Exact division in the Laurent ring; nullopt when b does not divide *this.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& b) const {
    check_same(*this, b, "div");
    if (b.is_zero()) throw ArithmeticError("div: division by zero polynomial");
    if (is_zero()) return LaurentPoly(char_);
    if (b.terms_.size() == 1) {
      const Term& t = b.terms_[0];
      LaurentPoly q(char_);
      q.terms_.reserve(terms_.size());
      for (const auto& x : terms_) {
        if (char_ == Characteristic::zero && x.coeff % t.coeff != 0) return std::nullopt;
        q.terms_.push_back({x.key - t.key,
                            char_ == Characteristic::zero ? BigInt(x.coeff / t.coeff) : BigInt(1)});
      }
      return q;
    }
    // The quotient's keys lie in [min(a)-min(b), max(a)-max(b)] because the
    // key order is a group order.
    const Key lo_bound = terms_.front().key - b.terms_.front().key;
    const Term& lead_b = b.terms_.back();
    // Each variable's degree in an exact quotient is bounded separately.
    const int min_v = min_deg_v() - b.min_deg_v();
    const int min_s = min_deg_s() - b.min_deg_s();
    const int max_s = max_deg_s() - b.max_deg_s();
    std::map<Key, BigInt> rem;
    for (const auto& t : terms_) rem.emplace(t.key, t.coeff);
    std::vector<Term> quot;
    while (!rem.empty()) {
      auto lead = std::prev(rem.end());
      Key qk = lead->first - lead_b.key;
      if (qk < lo_bound || deg_v_of(qk) < min_v || deg_s_of(qk) < min_s || deg_s_of(qk) > max_s)
        return std::nullopt;
      BigInt qc;
      if (char_ == Characteristic::zero) {
        if (lead->second % lead_b.coeff != 0) return std::nullopt;
        qc = lead->second / lead_b.coeff;
      } else {
        qc = 1;
      }
      quot.push_back({qk, qc});
      for (const auto& bt : b.terms_) {
        Key k = bt.key + qk;
        BigInt delta = qc * bt.coeff;
        auto it = rem.find(k);
        if (it == rem.end()) {
          rem.emplace(k, char_ == Characteristic::zero ? BigInt(-delta) : BigInt(1));
        } else {
          if (char_ == Characteristic::zero) {
            it->second -= delta;
            if (it->second == 0) rem.erase(it);
          } else {
            rem.erase(it);
          }
        }
      }
    }
    return from_terms(std::move(quot), char_);
  }

  // Canonical text: terms by deg_v then deg_s ascending, `c*v^a*s^b` joined
  // by " + ", unit coefficients and zero exponents omitted.
  std::string to_string(const char* var_v = "v", const char* var_s = "s") const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      if (!first) out += " + ";
      first = false;
      int dv = deg_v_of(t.key);
      int ds = deg_s_of(t.key);
      std::vector<std::string> factors;
      bool unit = (t.coeff == 1 || t.coeff == -1);
      std::string prefix;
      if (!unit) factors.push_back(t.coeff.str());
      else if (t.coeff == -1) prefix = "-";
      if (dv != 0) factors.push_back(std::string(var_v) + "^" + std::to_string(dv));
      if (ds != 0) factors.push_back(std::string(var_s) + "^" + std::to_string(ds));
      if (factors.empty()) {
        out += prefix + "1";
        continue;
      }
      out += prefix;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        out += factors[i];
      }
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(char_);
    for (const auto& t : terms_) {
      h = h * 1000003u ^ std::hash<Key>{}(t.key);
      h = h * 1000003u ^ static_cast<std::size_t>(static_cast<long long>(t.coeff % 1000000007));
    }
    return h;
  }

 private:
  static BigInt reduce2(const BigInt& c) {
    BigInt r = c % 2;
    return r != 0 ? BigInt(1) : BigInt(0);
  }

  static void check_same(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
    if (a.char_ != b.char_)
      throw ArithmeticError(std::string(op) + ": mixed characteristics");
  }

  LaurentPoly times_term(const Term& t) const {
    LaurentPoly r(char_);
    if (t.coeff == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& x : terms_) {
      BigInt c = x.coeff * t.coeff;
      if (char_ == Characteristic::two) c = reduce2(c);
      if (c != 0) r.terms_.push_back({x.key + t.key, std::move(c)});
    }
    return r;
  }

  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    check_same(a, b, subtract ? "sub" : "add");
    LaurentPoly r(a.char_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    const bool two = a.char_ == Characteristic::two;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].key < b.terms_[j].key)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].key < a.terms_[i].key) {
        r.terms_.push_back({b.terms_[j].key, subtract && !two ? BigInt(-b.terms_[j].coeff)
                                                               : b.terms_[j].coeff});
        ++j;
      } else {
        if (!two) {
          BigInt c = subtract ? BigInt(a.terms_[i].coeff - b.terms_[j].coeff)
                              : BigInt(a.terms_[i].coeff + b.terms_[j].coeff);
          if (c != 0) r.terms_.push_back({a.terms_[i].key, std::move(c)});
        }
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return x.key < y.key; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().key == t.key) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty()) {
          if (char_ == Characteristic::two) out.back().coeff = reduce2(out.back().coeff);
          if (out.back().coeff == 0) out.pop_back();
        }
        out.push_back(std::move(t));
      }
    }
    if (!out.empty()) {
      if (char_ == Characteristic::two) out.back().coeff = reduce2(out.back().coeff);
      if (out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  Characteristic char_ = Characteristic::zero;
  std::vector<Term> terms_;
};

}  // namespace skeinlab
