#pragma once

// Skein of the annulus in the y-basis, the Homfly (lambda, mu) basis as
// formal sums, and the longitude-meridian expansion that rewrites a y_lambda
// decoration as a combination of honest diagrams.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/eigen.hpp"

namespace skeinlab {

// Finite combination of y_lambda; zero coefficients are never stored.
class AnnulusVecK {
 public:
  AnnulusVecK() = default;
  static AnnulusVecK basis(const Partition& lambda, RingElem coeff = RingElem::from_int(1)) {
    AnnulusVecK v;
    v.add(lambda, coeff);
    return v;
  }

  void add(const Partition& lambda, const RingElem& c) {
    auto it = coeffs_.find(lambda);
    if (it == coeffs_.end()) {
      if (!c.is_zero()) coeffs_.emplace(lambda, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }

  RingElem coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? RingElem() : it->second;
  }

  const std::map<Partition, RingElem>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  AnnulusVecK scaled(const RingElem& c) const {
    AnnulusVecK out;
    for (const auto& [p, x] : coeffs_) out.add(p, x * c);
    return out;
  }

  friend AnnulusVecK operator+(AnnulusVecK a, const AnnulusVecK& b) {
    for (const auto& [p, x] : b.coeffs_) a.add(p, x);
    return a;
  }

  friend bool operator==(const AnnulusVecK& a, const AnnulusVecK& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (const auto& [p, x] : a.coeffs_) {
      auto it = b.coeffs_.find(p);
      if (it == b.coeffs_.end() || it->second != x) return false;
    }
    return true;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [p, x] : coeffs_) {
      if (!out.empty()) out += " + ";
      out += "(" + x.to_string() + ")*y[" + p.to_string() + "]";
    }
    return out;
  }

 private:
  std::map<Partition, RingElem> coeffs_;
};

// y_rho y_1 = sum over mu in rho+ and rho- of y_mu, extended linearly.
inline AnnulusVecK branch_mul_y1(const AnnulusVecK& v) {
  AnnulusVecK out;
  for (const auto& [rho, c] : v.coeffs())
    for (const auto& mu : rho.neighbors()) out.add(mu, c);
  return out;
}

// r meridians: y_mu picks up c_mu^r.
inline AnnulusVecK meridian_act(const AnnulusVecK& v, int r, EigenTable* table = nullptr) {
  if (r < 0) throw std::invalid_argument("meridian_act: r must be non-negative");
  EigenTable local;
  EigenTable& t = table ? *table : local;
  AnnulusVecK out;
  for (const auto& [mu, c] : v.coeffs()) out.add(mu, c * t.c(mu).pow(static_cast<unsigned>(r)));
  return out;
}

// A longitude-meridian word such as l^2 m^3 l m, innermost letter first, with
// the partition decorating the innermost longitude.
struct LMWord {
  std::vector<std::pair<char, int>> letters;
  Partition slot;

  std::string to_string() const {
    std::string out;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (it->second == 0) continue;
      out += it->first;
      if (it->second != 1) out += "^" + std::to_string(it->second);
    }
    return (out.empty() ? "1" : out) + " [" + slot.to_string() + "]";
  }
};

struct ExpansionPlan {
  Partition target;
  Partition rho;
  std::vector<std::pair<RingElem, int>> terms;  // (a_r, r)
  RingElem scale = RingElem::from_int(1);       // X(c_target)
  std::vector<Partition> roots;                 // mu with X(c_mu) = 0
  std::shared_ptr<const ExpansionPlan> inner;   // replaces y_rho when |rho| > 1

  bool trivial() const { return terms.empty(); }

  // Product of the scales down the nesting.
  RingElem total_scale() const {
    RingElem s = scale;
    if (inner) s *= inner->total_scale();
    return s;
  }

  int depth() const { return trivial() ? 0 : 1 + (inner ? inner->depth() : 0); }

  // Fully expanded words with their coefficients.
  std::vector<std::pair<RingElem, LMWord>> words() const {
    if (trivial()) return {{RingElem::from_int(1), LMWord{{}, target}}};
    std::vector<std::pair<RingElem, LMWord>> base;
    if (inner) base = inner->words();
    else base = {{RingElem::from_int(1), LMWord{{}, rho}}};
    std::vector<std::pair<RingElem, LMWord>> out;
    for (const auto& [a, r] : terms) {
      for (const auto& [c, w] : base) {
        LMWord word = w;
        word.letters.push_back({'l', 2});
        word.letters.push_back({'m', r});
        out.push_back({a * c, word});
      }
    }
    return out;
  }
};

// Default rho: the member of lambda- that comes first in partition order,
// i.e. lambda with a cell removed from its last row.
inline ExpansionPlan expand_ylambda(const Partition& lambda, std::optional<Partition> rho_choice = std::nullopt,
                                    EigenTable* table = nullptr) {
  if (lambda.empty()) throw std::invalid_argument("expand_ylambda: the empty partition has no expansion");
  ExpansionPlan plan;
  plan.target = lambda;
  if (lambda.size() == 1) {
    if (rho_choice && !rho_choice->empty())
      throw std::invalid_argument("rho must be lambda minus one cell");
    return plan;
  }
  const auto minus = lambda.minus();
  const Partition rho = rho_choice ? *rho_choice : minus.front();
  EigenTable local;
  EigenTable& t = table ? *table : local;
  XPoly x = x_poly(lambda, rho, &t);
  plan.rho = rho;
  plan.roots = x.roots;
  for (std::size_t r = 0; r < x.coeffs().size(); ++r) plan.terms.push_back({x.coeffs()[r], static_cast<int>(r)});
  plan.scale = x.poly(t.c(lambda));
  if (rho.size() > 1) plan.inner = std::make_shared<ExpansionPlan>(expand_ylambda(rho, std::nullopt, &t));
  return plan;
}

// Every plan for lambda over all choices of rho at every level.
inline std::vector<ExpansionPlan> all_expansions(const Partition& lambda, EigenTable* table = nullptr) {
  if (lambda.size() <= 1) return {expand_ylambda(lambda, std::nullopt, table)};
  std::vector<ExpansionPlan> out;
  for (const auto& rho : lambda.minus()) {
    ExpansionPlan outer = expand_ylambda(lambda, rho, table);
    if (rho.size() <= 1) {
      out.push_back(outer);
      continue;
    }
    for (const auto& in : all_expansions(rho, table)) {
      ExpansionPlan p = outer;
      p.inner = std::make_shared<ExpansionPlan>(in);
      out.push_back(p);
    }
  }
  return out;
}

// Interprets the plan in the annulus: y_rho (or its own realization) times
// y_1, then r meridians, weighted by a_r.
inline AnnulusVecK realize_symbolic(const ExpansionPlan& plan, EigenTable* table = nullptr) {
  if (plan.trivial()) return AnnulusVecK::basis(plan.target);
  EigenTable local;
  EigenTable& t = table ? *table : local;
  AnnulusVecK base = plan.inner ? realize_symbolic(*plan.inner, &t) : AnnulusVecK::basis(plan.rho);
  AnnulusVecK product = branch_mul_y1(base);
  AnnulusVecK out;
  for (const auto& [a, r] : plan.terms) out = out + meridian_act(product, r, &t).scaled(a);
  return out;
}

// First recorded bundle whose entries lie, in order, on the given components.
inline std::optional<Bundle> find_bundle(const LinkDiagram& d, const std::vector<int>& comps) {
  for (const auto& b : d.bundles()) {
    if (b.size() != comps.size()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < b.size() && ok; ++i) {
      int c = b[i] > 0 ? d.component_of(b[i]) : -b[i] - 1;
      ok = c == comps[i];
    }
    if (ok) return b;
  }
  return std::nullopt;
}

// Doubles component comp and adds r meridians around the pair.
inline LinkDiagram longitude_pair_with_meridians(const LinkDiagram& d, int comp, int r) {
  LinkDiagram out = cable(d, comp, 2);
  for (int i = 0; i < r; ++i) {
    auto site = find_bundle(out, {comp, comp + 1});
    if (!site) throw std::logic_error("no bundle recorded for the cabled pair");
    out = insert_meridian(out, *site);
  }
  return out;
}

struct RealizedTerm {
  RingElem coeff;
  std::vector<int> meridians;  // r at each level, outermost first
  LinkDiagram diagram;
};

// Honest diagrams whose weighted Kauffman values sum to
// total_scale * D(d; y_lambda on comp).
inline std::vector<RealizedTerm> realize_diagrams(const LinkDiagram& d, int comp, const ExpansionPlan& plan) {
  if (comp < 0 || comp >= d.num_components()) throw std::invalid_argument("realize_diagrams: no such component");
  if (plan.trivial()) return {{RingElem::from_int(1), {}, d}};
  std::vector<RealizedTerm> out;
  for (const auto& [a, r] : plan.terms) {
    LinkDiagram outer = longitude_pair_with_meridians(d, comp, r);
    if (plan.inner) {
      for (auto& t : realize_diagrams(outer, comp, *plan.inner)) {
        std::vector<int> ms{r};
        ms.insert(ms.end(), t.meridians.begin(), t.meridians.end());
        out.push_back({a * t.coeff, ms, std::move(t.diagram)});
      }
    } else {
      out.push_back({a, {r}, std::move(outer)});
    }
  }
  return out;
}

// Homfly annulus basis Q_{alpha,beta} as formal integer combinations.
using PartitionPair = std::pair<Partition, Partition>;
using FormalSum = std::map<PartitionPair, long long>;

enum class Sense { with, against };

inline void add_term(FormalSum& f, const PartitionPair& key, long long c) {
  auto& x = f[key];
  x += c;
  if (x == 0) f.erase(key);
}

// Q_{alpha,beta} times a core curve: same sense grows alpha or shrinks beta,
// the opposite sense grows beta or shrinks alpha.
inline FormalSum homfly_branching_expand(const Partition& alpha, const Partition& beta, Sense sense) {
  FormalSum out;
  if (sense == Sense::with) {
    for (const auto& mu : alpha.plus()) add_term(out, {mu, beta}, 1);
    for (const auto& nu : beta.minus()) add_term(out, {alpha, nu}, 1);
  } else {
    for (const auto& nu : beta.plus()) add_term(out, {alpha, nu}, 1);
    for (const auto& mu : alpha.minus()) add_term(out, {mu, beta}, 1);
  }
  return out;
}

inline FormalSum branching_apply(const FormalSum& f, Sense sense) {
  FormalSum out;
  for (const auto& [key, c] : f)
    for (const auto& [k2, c2] : homfly_branching_expand(key.first, key.second, sense)) add_term(out, k2, c * c2);
  return out;
}

inline std::string to_string(const FormalSum& f) {
  if (f.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : f) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += "Q[" + key.first.to_string() + ";" + key.second.to_string() + "]";
  }
  return out;
}

struct HsrReport {
  Partition rho;
  FormalSum product;                    // R_rho R_1
  std::map<PartitionPair, long long> n;  // alpha < beta
  bool diagonal_ok = false;
  bool paired = false;
  bool nonnegative = false;
  bool binary = false;
  std::string failure;

  bool passed() const { return diagonal_ok && paired && nonnegative; }
};

// Expands R_rho R_1 = Q_{rho,rho}(Q_{1,0} Q_{0,1} - 1) and checks it has the
// shape sum_{mu in rho+-} R_mu + 2|rho-| R_rho + sum n (Q_{a,b} + Q_{b,a}).
inline HsrReport hsr_structure_check(const Partition& rho) {
  HsrReport r;
  r.rho = rho;
  FormalSum start{{{rho, rho}, 1}};
  FormalSum f = branching_apply(branching_apply(start, Sense::with), Sense::against);
  add_term(f, {rho, rho}, -1);
  r.product = f;

  FormalSum expected_diag;
  for (const auto& mu : rho.neighbors()) add_term(expected_diag, {mu, mu}, 1);
  add_term(expected_diag, {rho, rho}, 2 * static_cast<long long>(rho.minus().size()));
  FormalSum diag;
  for (const auto& [key, c] : f)
    if (key.first == key.second) diag[key] = c;
  r.diagonal_ok = diag == expected_diag;
  if (!r.diagonal_ok) r.failure = "diagonal part " + to_string(diag) + " != " + to_string(expected_diag);

  r.paired = true;
  r.nonnegative = true;
  r.binary = true;
  for (const auto& [key, c] : f) {
    if (key.first == key.second) continue;
    auto mirror = f.find({key.second, key.first});
    long long other = mirror == f.end() ? 0 : mirror->second;
    if (other != c) {
      r.paired = false;
      if (r.failure.empty())
        r.failure = "unpaired term Q[" + key.first.to_string() + ";" + key.second.to_string() + "]";
    }
    if (c < 0) {
      r.nonnegative = false;
      if (r.failure.empty()) r.failure = "negative coefficient";
    }
    if (key.first < key.second) {
      r.n[key] = c;
      if (c != 0 && c != 1) r.binary = false;
    }
  }
  return r;
}

}  // namespace skeinlab
