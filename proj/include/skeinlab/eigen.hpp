#pragma once

// Meridian eigenvalues on the annulus skeins and the interpolating polynomial
// X(t) used to isolate one y_lambda from y_rho * y_1.

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skeinlab/partition.hpp"
#include "skeinlab/ring.hpp"

namespace skeinlab {

namespace detail {

inline RingElem reduce_to(const RingElem& x, Characteristic ch) {
  return ch == Characteristic::two ? to_mod2(x) : x;
}

// (s - s^-1)(v^-1 C_a(s^2) - v C_b(s^-2)) + (v^-1 - v)/(s - s^-1)
inline RingElem homfly_meridian_value(const Partition& a, const Partition& b) {
  LaurentPoly ca = content_polynomial(a).substitute_powers(1, 2);
  LaurentPoly cb = content_polynomial(b).substitute_powers(1, -2);
  LaurentPoly inner = LaurentPoly::v(-1) * ca - LaurentPoly::v(1) * cb;
  return RingElem(LaurentPoly::quantum_factor(1) * inner) + RingElem::delta_homfly();
}

}  // namespace detail

// Eigenvalue of the y_1 meridian on y_lambda in the Kauffman skein.
// Summed cell by cell: (s - s^-1) sum_x (v^-1 s^2c(x) - v s^-2c(x)) + delta_K.
inline RingElem c_of(const Partition& lambda, Characteristic ch = Characteristic::zero) {
  LaurentPoly cells;
  for (int c : lambda.contents()) cells += LaurentPoly::v(-1) * LaurentPoly::s(2 * c) - LaurentPoly::v(1) * LaurentPoly::s(-2 * c);
  RingElem value = RingElem(LaurentPoly::quantum_factor(1) * cells) + RingElem::delta_kauffman();
  return detail::reduce_to(value, ch);
}

// Eigenvalue of the oriented meridian on Q_{lambda,mu} in the Homfly skein.
inline RingElem s_of(const Partition& lambda, const Partition& mu,
                     Characteristic ch = Characteristic::zero) {
  return detail::reduce_to(detail::homfly_meridian_value(lambda, mu), ch);
}

// Eigenvalue of the adjoint decoration R_1 on a meridian around Q_{lambda,mu}.
inline RingElem adjoint_eigenvalue(const Partition& lambda, const Partition& mu,
                                   Characteristic ch = Characteristic::zero) {
  RingElem value = s_of(lambda, mu) * s_of(mu, lambda) - RingElem::from_int(1);
  return detail::reduce_to(value, ch);
}

// Memo of c_lambda in characteristic 0.  Reads after completed writes are safe
// from several threads; racing writers compute identical values.
class EigenTable {
 public:
  const RingElem& c(const Partition& lambda) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = entries_.find(lambda); it != entries_.end()) return it->second;
    }
    RingElem value = c_of(lambda);
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = entries_.emplace(lambda, std::move(value));
    if (lambda.size() > max_size_) max_size_ = lambda.size();
    return it->second;
  }

  RingElem c(const Partition& lambda, Characteristic ch) {
    return detail::reduce_to(c(lambda), ch);
  }

  void fill(int n) {
    for (const auto& p : enumerate_partitions(n)) c(p);
  }

  int max_size() const { return max_size_; }
  std::size_t size() const { return entries_.size(); }
  const std::map<Partition, RingElem>& entries() const { return entries_; }

 private:
  std::mutex mutex_;
  std::map<Partition, RingElem> entries_;
  int max_size_ = 0;
};

struct DistinctnessReport {
  int max_size = 0;
  std::size_t partitions = 0;
  std::size_t comparisons = 0;
  bool distinct = true;
  std::optional<std::pair<Partition, Partition>> collision;
};

// Compares c_lambda pairwise in characteristic 2 for all |lambda| <= n.
inline DistinctnessReport check_distinct(int n, EigenTable* table = nullptr) {
  if (n < 0) throw std::invalid_argument("check_distinct: n must be non-negative");
  EigenTable local;
  EigenTable& t = table ? *table : local;
  DistinctnessReport report;
  report.max_size = n;
  std::vector<Partition> parts = enumerate_partitions(n);
  std::vector<RingElem> values;
  values.reserve(parts.size());
  for (const auto& p : parts) values.push_back(t.c(p, Characteristic::two));
  report.partitions = parts.size();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      ++report.comparisons;
      if (values[i] == values[j] && report.distinct) {
        report.distinct = false;
        report.collision = std::make_pair(parts[i], parts[j]);
      }
    }
  }
  return report;
}

// A polynomial in t with ring coefficients, lowest degree first.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<RingElem> coeffs) : coeffs_(std::move(coeffs)) {}

  static TPoly one(Characteristic ch = Characteristic::zero) {
    return TPoly({RingElem::from_int(1, ch)});
  }

  const std::vector<RingElem>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // *this * (t - root)
  TPoly times_linear(const RingElem& root) const {
    std::vector<RingElem> out(coeffs_.size() + 1, RingElem(root.characteristic()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out[i + 1] += coeffs_[i];
      out[i] -= coeffs_[i] * root;
    }
    return TPoly(std::move(out));
  }

  RingElem operator()(const RingElem& t) const {
    RingElem acc(t.characteristic());
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
  }

  TPoly reduced(Characteristic ch) const {
    if (ch == Characteristic::zero) return *this;
    std::vector<RingElem> out;
    for (const auto& c : coeffs_) out.push_back(detail::reduce_to(c, ch));
    return TPoly(std::move(out));
  }

  TPoly barred() const {
    std::vector<RingElem> out;
    for (const auto& c : coeffs_) out.push_back(bar(c));
    return TPoly(std::move(out));
  }

 private:
  std::vector<RingElem> coeffs_;
};

// X(t) = prod over mu in rho^+ u rho^- minus {lambda} of (t - c_mu).
struct XPoly {
  Partition lambda;
  Partition rho;
  std::vector<Partition> roots;  // the partitions mu whose c_mu are roots
  TPoly poly;                    // characteristic 0

  int degree() const { return poly.degree(); }
  const std::vector<RingElem>& coeffs() const { return poly.coeffs(); }
};

inline XPoly x_poly(const Partition& lambda, const Partition& rho, EigenTable* table = nullptr) {
  auto minus = lambda.minus();
  if (std::find(minus.begin(), minus.end(), rho) == minus.end())
    throw std::invalid_argument("rho must be lambda minus one cell");
  EigenTable local;
  EigenTable& t = table ? *table : local;
  XPoly x{lambda, rho, {}, TPoly::one()};
  for (const auto& mu : rho.neighbors()) {
    if (mu == lambda) continue;
    x.roots.push_back(mu);
    x.poly = x.poly.times_linear(t.c(mu));
  }
  return x;
}

}  // namespace skeinlab
