#include <catch_amalgamated.hpp>

#include <thread>

#include "skeinlab/eigen.hpp"

using namespace skeinlab;
using LP = LaurentPoly;

namespace {

const RingElem z = RingElem(LP::quantum_factor(1));
const RingElem dH = RingElem::delta_homfly();
const RingElem one = RingElem::from_int(1);
RingElem vpow(int e) { return RingElem(LP::v(e)); }
RingElem spow(int e) { return RingElem(LP::s(e)); }

}  // namespace

TEST_CASE("c for small partitions", "[eigen]") {
  CHECK(c_of(Partition{}) == dH + one);
  CHECK(c_of(Partition{}) == RingElem::delta_kauffman());
  CHECK(c_of(Partition{1}) == z * (vpow(-1) - vpow(1)) + dH + one);
  CHECK(c_of(Partition{2}) == z * (vpow(-1) * (one + spow(2)) - vpow(1) * (one + spow(-2))) + dH + one);
}

TEST_CASE("s for small partitions", "[eigen]") {
  CHECK(s_of(Partition{}, Partition{}) == dH);
  CHECK(s_of(Partition{1}, Partition{}) == z * vpow(-1) + dH);
  CHECK(s_of(Partition{}, Partition{1}) == dH - z * vpow(1));
  CHECK(s_of(Partition{1}, Partition{1}) == z * (vpow(-1) - vpow(1)) + dH);
}

TEST_CASE("adjoint eigenvalue", "[eigen]") {
  CHECK(adjoint_eigenvalue(Partition{}, Partition{}) == dH * dH - one);
  CHECK(adjoint_eigenvalue(Partition{1}, Partition{}) ==
        s_of(Partition{1}, Partition{}) * s_of(Partition{}, Partition{1}) - one);
}

TEST_CASE("c equals s_{lambda,lambda} + 1", "[eigen]") {
  for (const auto& p : enumerate_partitions(8)) CHECK(c_of(p) == s_of(p, p) + one);
}

TEST_CASE("diagonal adjoint eigenvalue is bar(c) mod 2", "[eigen]") {
  for (const auto& p : enumerate_partitions(6))
    CHECK(adjoint_eigenvalue(p, p, Characteristic::two) == bar(c_of(p, Characteristic::two)));
}

TEST_CASE("distinctness in characteristic 2", "[eigen]") {
  auto r4 = check_distinct(4);
  CHECK(r4.distinct);
  CHECK(r4.partitions == 12);
  auto r0 = check_distinct(0);
  CHECK(r0.distinct);
  CHECK(r0.comparisons == 0);
  auto r8 = check_distinct(8);
  CHECK(r8.distinct);
  CHECK(r8.partitions == 67);
  CHECK(r8.comparisons == 2211);
  CHECK_FALSE(r8.collision.has_value());
}

TEST_CASE("X polynomial", "[eigen]") {
  EigenTable t;
  XPoly x = x_poly(Partition{2}, Partition{1}, &t);
  CHECK(x.degree() == 2);
  CHECK(x.roots == std::vector<Partition>{Partition{}, {1, 1}});
  const RingElem tt = spow(0) * vpow(3);  // any test point
  CHECK(x.poly(tt) == (tt - t.c(Partition{1, 1})) * (tt - t.c(Partition{})));

  XPoly y = x_poly(Partition{1, 1}, Partition{1}, &t);
  CHECK(y.roots == std::vector<Partition>{Partition{}, {2}});

  XPoly w = x_poly(Partition{3}, Partition{2}, &t);
  CHECK(w.degree() == 2);
  CHECK(w.roots == std::vector<Partition>{Partition{1}, {2, 1}});

  try {
    x_poly(Partition{3}, Partition{1, 1}, &t);
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()) == "rho must be lambda minus one cell");
  }
}

TEST_CASE("X vanishes at the other neighbors and not at lambda", "[eigen][property]") {
  EigenTable t;
  for (const auto& lambda : enumerate_partitions(6)) {
    for (const auto& rho : lambda.minus()) {
      XPoly x = x_poly(lambda, rho, &t);
      CHECK(x.degree() == static_cast<int>(rho.neighbors().size()) - 1);
      for (const auto& mu : rho.neighbors()) {
        if (mu == lambda) continue;
        CHECK(x.poly(t.c(mu)).is_zero());
      }
      CHECK_FALSE(x.poly.reduced(Characteristic::two)(t.c(lambda, Characteristic::two)).is_zero());
    }
  }
}

TEST_CASE("table entries match a fresh computation", "[eigen]") {
  EigenTable t;
  t.fill(6);
  CHECK(t.max_size() >= 6);
  for (const auto& [p, c] : t.entries()) CHECK(c == c_of(p));
}

TEST_CASE("table is safe to share between threads", "[eigen]") {
  EigenTable t;
  auto parts = enumerate_partitions(6);
  std::vector<std::thread> threads;
  for (int k = 0; k < 4; ++k)
    threads.emplace_back([&] {
      for (const auto& p : parts) (void)t.c(p);
    });
  for (auto& th : threads) th.join();
  CHECK(t.size() == parts.size());
  for (const auto& p : parts) CHECK(t.c(p) == c_of(p));
}
