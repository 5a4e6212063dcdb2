#include <catch_amalgamated.hpp>

#include <random>

#include "skeinlab/annulus.hpp"
#include "skeinlab/io.hpp"
#include "skeinlab/skein_eval.hpp"

using namespace skeinlab;
using LP = LaurentPoly;

namespace {

const RingElem one = RingElem::from_int(1);
const RingElem z = RingElem(LP::quantum_factor(1));
const RingElem dH = RingElem::delta_homfly();
const RingElem dK = RingElem::delta_kauffman();
RingElem vpow(int e) { return RingElem(LP::v(e)); }

// Substitutes v = s^k into a polynomial.
LP at_v_power(const LP& p, int k) {
  LP out;
  for (const auto& t : p.terms())
    out += LP::monomial(t.coeff, 0, k * LP::deg_v_of(t.key) + LP::deg_s_of(t.key));
  return out;
}

// True when x(v = s^k) equals the Laurent polynomial `expect` in s.
bool specializes_to(const RingElem& x, int k, const LP& expect) {
  LP den = at_v_power(x.den(), k);
  REQUIRE_FALSE(den.is_zero());
  return at_v_power(x.num(), k) == expect * den;
}

// Diagrams built from the corpus by surgeries, for property checks.
std::vector<LinkDiagram> sample_diagrams() {
  std::vector<LinkDiagram> out = corpus::all();
  out.push_back(cable(corpus::trefoil(), 0, 2));
  out.push_back(cable(corpus::hopf_plus(), 1, 2));
  out.push_back(insert_meridian(corpus::figure_eight(), Bundle{3}));
  out.push_back(reverse(cable(corpus::hopf_minus(), 0, 2), {1}));
  out.push_back(add_curl(switch_crossing(corpus::figure_eight(), 1), 2, -1));
  out.push_back(disjoint_union(corpus::trefoil(), corpus::hopf_minus()));
  std::mt19937 rng(11);
  for (int i = 0; i < 6; ++i) {
    LinkDiagram d = out[3 + static_cast<std::size_t>(rng() % 4)];
    for (int step = 0; step < 3 && d.num_crossings() < 10; ++step) {
      if (d.num_crossings() == 0) break;
      std::size_t x = rng() % d.num_crossings();
      if (rng() % 2) d = switch_crossing(d, x);
      else d = insert_meridian(d, Bundle{d.crossings()[x].edges[static_cast<std::size_t>(rng() % 4)]});
    }
    out.push_back(d);
  }
  return out;
}

}  // namespace

TEST_CASE("empty and unknot", "[skein]") {
  CHECK(homfly(corpus::empty()) == one);
  CHECK(kauffman(corpus::empty()) == one);
  CHECK(homfly(corpus::unknot()) == dH);
  CHECK(kauffman(corpus::unknot()) == dK);
  CHECK(kauffman(corpus::unknot()) == c_of(Partition{}));
  CHECK(homfly(corpus::unlink2()) == dH * dH);
}

TEST_CASE("Hopf links against the hand resolution tree", "[skein]") {
  // Switching a crossing gives the 2-unlink; smoothing it leaves one kink.
  CHECK(homfly(corpus::hopf_plus()) == dH * dH + z * vpow(-1) * dH);
  CHECK(homfly(corpus::hopf_minus()) == dH * dH - z * vpow(1) * dH);
  CHECK(kauffman(corpus::hopf_plus()) == dK * dK + z * (vpow(-1) - vpow(1)) * dK);
  // The mirror image substitutes v -> v^-1, s -> s^-1, which fixes this value.
  CHECK(kauffman(corpus::hopf_minus()) == dK * dK + z * (vpow(-1) - vpow(1)) * dK);
}

TEST_CASE("mirror images invert both variables", "[skein][property]") {
  auto invert = [](const RingElem& x) {
    return RingElem(x.num().substitute_powers(-1, -1), x.den().substitute_powers(-1, -1));
  };
  for (const auto& d : sample_diagrams()) {
    LinkDiagram m = d;
    for (std::size_t i = 0; i < d.num_crossings(); ++i) m = switch_crossing(m, i);
    CHECK(homfly(m) == invert(homfly(d)));
    CHECK(kauffman(m) == invert(kauffman(d)));
  }
}

TEST_CASE("knots against their tabulated unframed invariants", "[skein]") {
  // Unframed, unknot-normalized: v^writhe P / delta_H.
  const RingElem z2 = z * z;
  RingElem t = homfly(corpus::trefoil()) * vpow(3) / dH;
  CHECK(t == RingElem::from_int(2) * vpow(2) - vpow(4) + z2 * vpow(2));
  RingElem f = homfly(corpus::figure_eight()) / dH;
  CHECK(f == vpow(-2) - one + vpow(2) - z2);
}

TEST_CASE("regression constants", "[skein]") {
  CHECK(homfly(corpus::trefoil()).to_string() ==
        "(v^-2*s^-2 + v^-2*s^2 + -s^-2 + -1 + -s^2 + v^2)/(-s^-1 + s^1)");
  CHECK(kauffman(corpus::trefoil()).to_string() ==
        "(v^-2*s^-2 + v^-2*s^2 + -v^-1*s^-3 + v^-1*s^3 + -s^-2 + -1 + -s^2 + v^1*s^-3 + -v^1*s^3 + v^2 + -v^3*s^-1 + v^3*s^1)/(-s^-1 + s^1)");
}

TEST_CASE("Homfly specializations", "[skein][property]") {
  for (const auto& d : sample_diagrams()) {
    INFO(d.name() << " " << canonical_code(d));
    const int w = d.validate().writhe;
    const int sign = d.num_components() % 2 ? -1 : 1;
    RingElem p = homfly(d);
    CHECK(specializes_to(p, -1, LP::s(w)));
    CHECK(specializes_to(p, 1, LP::s(-w).scaled(sign)));
  }
}

TEST_CASE("Kauffman specializations", "[skein][property]") {
  for (const auto& d : sample_diagrams()) {
    INFO(d.name() << " " << canonical_code(d));
    RingElem k = kauffman(d);
    CHECK(specializes_to(k, 0, LP::constant(1)));
    CHECK(specializes_to(k, 1, LP::constant(d.num_components() == 0 ? 1 : 0)));
    // Sum over orientations of s^writhe.
    LP expect;
    const int n = d.num_components();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::set<int> rev;
      for (int c = 0; c < n; ++c)
        if (mask >> c & 1) rev.insert(c);
      expect += LP::s(reverse(d, rev).validate().writhe);
    }
    CHECK(specializes_to(k, -1, expect));
  }
}

TEST_CASE("skein relation at every crossing", "[skein]") {
  for (const auto& d : sample_diagrams())
    for (std::size_t i = 0; i < d.num_crossings(); ++i)
      for (Flavor f : {Flavor::homfly, Flavor::kauffman}) {
        auto r = skein_relation_probe(d, i, f);
        INFO(d.name() << " crossing " << i << " " << to_string(f));
        CHECK(r.holds);
      }
  auto h = skein_relation_probe(corpus::hopf_plus(), 0, Flavor::homfly);
  CHECK(h.original - h.switched == z * h.smoothing0);
  auto k = skein_relation_probe(corpus::hopf_plus(), 0, Flavor::kauffman);
  CHECK(k.original - k.switched == z * (k.smoothing0 - k.smoothing_inf));
}

TEST_CASE("multiplicative under disjoint union", "[skein][property]") {
  auto ds = corpus::all();
  for (const auto& a : ds)
    for (const auto& b : ds) {
      CHECK(homfly(disjoint_union(a, b)) == homfly(a) * homfly(b));
      CHECK(kauffman(disjoint_union(a, b)) == kauffman(a) * kauffman(b));
    }
}

TEST_CASE("curl factors", "[skein][property]") {
  for (const auto& d : corpus::all()) {
    const RingElem p = homfly(d), k = kauffman(d);
    for (int sign : {1, -1}) {
      std::vector<int> sites;
      for (const auto& [e, c] : d.component_of_edge()) sites.push_back(e);
      for (const auto& [c, n] : d.free_loops()) sites.push_back(-(c + 1));
      for (int site : sites) {
        auto curled = add_curl(d, site, sign);
        CHECK(homfly(curled) == vpow(-sign) * p);
        CHECK(kauffman(curled) == vpow(-sign) * k);
      }
    }
  }
}

TEST_CASE("Reidemeister II", "[skein]") {
  // An unlinked meridian: switching one of its crossings leaves a 2-unlink up to RII.
  auto m = switch_crossing(insert_meridian_around_loop(corpus::unknot(), 0), 0);
  CHECK(homfly(m) == dH * dH);
  CHECK(kauffman(m) == dK * dK);
  auto t = switch_crossing(insert_meridian(corpus::trefoil(), Bundle{2}), 3);
  CHECK(homfly(t) == homfly(corpus::trefoil()) * dH);
  CHECK(kauffman(t) == kauffman(corpus::trefoil()) * dK);
}

TEST_CASE("Homfly is unchanged by reversing every component", "[skein][property]") {
  for (const auto& d : sample_diagrams()) CHECK(homfly(reverse_all(d)) == homfly(d));
}

TEST_CASE("Kauffman ignores orientation", "[skein][property]") {
  for (const auto& d : sample_diagrams())
    for (int c = 0; c < d.num_components(); ++c) CHECK(kauffman(reverse(d, {c})) == kauffman(d));
}

TEST_CASE("adjoint Homfly", "[skein]") {
  CHECK(adjoint_homfly(corpus::unknot()) == dH * dH - one);
  CHECK(adjoint_homfly(corpus::empty()) == one);
  CHECK(to_mod2(dH * dH - one) == bar(to_mod2(dK)));
  CHECK(antiparallel_double(corpus::trefoil()).num_crossings() == 12);
  CHECK(antiparallel_double(corpus::hopf_plus()).num_components() == 4);
}

TEST_CASE("adjoint Homfly by inclusion-exclusion", "[skein]") {
  auto d = corpus::hopf_plus();
  RingElem expect = homfly(antiparallel_double(d)) - homfly(antiparallel_double(corpus::unknot())) * RingElem::from_int(2) + one;
  CHECK(adjoint_homfly(d) == expect);
}

TEST_CASE("evaluation mod 2 agrees with reducing afterwards", "[skein][property]") {
  EvalConfig two;
  two.characteristic = Characteristic::two;
  for (const auto& d : sample_diagrams()) {
    CHECK(homfly(d, two) == to_mod2(homfly(d)));
    CHECK(kauffman(d, two) == to_mod2(kauffman(d)));
  }
  for (const auto& d : corpus::all()) CHECK(adjoint_homfly(d, two) == to_mod2(adjoint_homfly(d)));
}

TEST_CASE("configuration does not change values", "[skein]") {
  EvalConfig plain, nomemo, par;
  nomemo.memo_enabled = false;
  par.parallelism = 3;
  for (const auto& d : corpus::all()) {
    CHECK(homfly(d, nomemo) == homfly(d, plain));
    CHECK(kauffman(d, nomemo) == kauffman(d, plain));
    CHECK(adjoint_homfly(d, par).to_string() == adjoint_homfly(d, plain).to_string());
  }
}

TEST_CASE("crossing budget", "[skein]") {
  EvalConfig tight;
  tight.max_crossings = 2;
  try {
    homfly(corpus::trefoil(), tight);
    FAIL("expected a budget error");
  } catch (const BudgetExceeded& e) {
    CHECK(e.crossings() == 3);
  }
  CHECK_NOTHROW(homfly(corpus::hopf_plus(), tight));
  tight.max_crossings = 10;
  try {
    adjoint_homfly(corpus::trefoil(), tight);
    FAIL("expected a budget error");
  } catch (const BudgetExceeded& e) {
    CHECK(e.crossings() == 12);
    CHECK(std::string(e.what()).find("{1}") != std::string::npos);
  }
}
