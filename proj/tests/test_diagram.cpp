#include <catch_amalgamated.hpp>

#include "skeinlab/annulus.hpp"
#include "skeinlab/diagram.hpp"
#include "skeinlab/io.hpp"

using namespace skeinlab;

namespace {

int linking(const LinkDiagram& d, int a, int b) {
  int twice = 0;
  for (const auto& x : d.crossings()) {
    int c0 = d.component_of(x.edges[0]), c1 = d.component_of(x.edges[1]);
    if ((c0 == a && c1 == b) || (c0 == b && c1 == a)) twice += x.sign;
  }
  return twice / 2;
}

int crossings_on(const LinkDiagram& d, int comp) {
  int n = 0;
  for (const auto& x : d.crossings()) {
    bool hit = false;
    for (int e : x.edges) hit = hit || d.component_of(e) == comp;
    n += hit;
  }
  return n;
}

void check_valid(const LinkDiagram& d) {
  auto v = d.validate();
  INFO(d.name() << ": " << (v.issues.empty() ? "" : v.issues.front()));
  CHECK(v.valid);
  CHECK(d.is_planar());
}

}  // namespace

TEST_CASE("corpus entries validate", "[diagram]") {
  for (const auto& d : corpus::all()) check_valid(d);
  auto u = corpus::unknot().validate();
  CHECK(u.components == 1);
  CHECK(u.writhe == 0);
  auto h = corpus::hopf_plus().validate();
  CHECK(h.components == 2);
  CHECK(h.writhe == 2);
  CHECK(h.self_writhe == std::vector<int>{0, 0});
  CHECK(corpus::hopf_minus().validate().writhe == -2);
  CHECK(corpus::trefoil().validate().writhe == 3);
  CHECK(corpus::figure_eight().validate().writhe == 0);
}

TEST_CASE("malformed diagrams are reported", "[diagram]") {
  auto once = LinkDiagram::from_pd("bad", 1, {{1, 2, 2, 3}}, {{1, 0}, {2, 0}, {3, 0}}, {});
  auto v = once.validate();
  CHECK_FALSE(v.valid);
  CHECK_FALSE(v.issues.empty());
  CHECK_THROWS_AS(once.require_valid(), InvalidDiagram);
  auto both = LinkDiagram::from_pd("bad", 1, {}, {}, {{0, 2}});
  CHECK_FALSE(both.validate().valid);
}

TEST_CASE("cabling", "[diagram]") {
  auto u2 = cable(corpus::unknot(), 0, 2);
  CHECK(u2.num_components() == 2);
  CHECK(u2.num_crossings() == 0);
  CHECK(u2.free_loop_count() == 2);

  auto h = cable(corpus::hopf_plus(), 0, 2);
  CHECK(h.num_components() == 3);
  CHECK(h.num_crossings() == 4);
  check_valid(h);

  for (const auto& d : corpus::all())
    for (int c = 0; c < d.num_components(); ++c) CHECK(cable(d, c, 1) == d);
}

TEST_CASE("cable crossing count formula", "[diagram][property]") {
  for (const auto& d : corpus::all()) {
    for (int c = 0; c < d.num_components(); ++c) {
      int self = 0, mixed = 0;
      for (const auto& x : d.crossings()) {
        int a = d.component_of(x.edges[0]), b = d.component_of(x.edges[1]);
        if (a == c && b == c) ++self;
        else if (a == c || b == c) ++mixed;
      }
      for (int n = 1; n <= 3; ++n) {
        auto k = cable(d, c, n);
        check_valid(k);
        CHECK(k.num_crossings() == d.num_crossings() + (n * n - 1) * self + (n - 1) * mixed);
        CHECK(k.num_components() == d.num_components() + n - 1);
        // Deleting every copy leaves d minus the crossings on comp.
        auto back = k;
        for (int i = n - 1; i >= 0; --i) back = delete_component(back, c + i);
        CHECK(static_cast<int>(back.num_crossings()) == static_cast<int>(d.num_crossings()) - crossings_on(d, c));
      }
    }
  }
}

TEST_CASE("cable copies follow the blackboard framing", "[diagram]") {
  auto t = cable(corpus::trefoil(), 0, 2);
  CHECK(linking(t, 0, 1) == 3);  // blackboard framing of the trefoil diagram
  auto v = t.validate();
  CHECK(v.self_writhe == std::vector<int>{3, 3});
}

TEST_CASE("meridian around one strand", "[diagram]") {
  auto m = insert_meridian_around_loop(corpus::unknot(), 0);
  check_valid(m);
  CHECK(m.num_components() == 2);
  CHECK(m.num_crossings() == 2);
  CHECK(linking(m, 0, 1) == 1);
  CHECK(m.validate().self_writhe == std::vector<int>{0, 0});
}

TEST_CASE("meridian around a width-2 bundle", "[diagram]") {
  auto d = cable(corpus::unknot(), 0, 2);
  auto site = find_bundle(d, {0, 1});
  REQUIRE(site.has_value());
  auto m = insert_meridian(d, *site);
  check_valid(m);
  CHECK(m.num_crossings() == 4);
  CHECK(m.validate().self_writhe.back() == 0);
  CHECK(linking(m, 0, 2) == 1);
  CHECK(linking(m, 1, 2) == 1);

  auto site2 = find_bundle(m, {0, 1});
  REQUIRE(site2.has_value());
  auto mm = insert_meridian(m, *site2);
  check_valid(mm);
  CHECK(mm.num_crossings() == 8);
  auto rest = delete_component(delete_component(mm, 1), 0);
  CHECK(rest.num_components() == 2);
  CHECK(rest.num_crossings() == 0);
  CHECK(rest.free_loop_count() == 2);
}

TEST_CASE("meridian sites must be recorded bundles", "[diagram]") {
  auto d = cable(corpus::hopf_plus(), 0, 2);
  CHECK_THROWS(insert_meridian(d, Bundle{1, 2, 3}));
  CHECK_THROWS(insert_meridian(d, Bundle{}));
}

TEST_CASE("deleting an inserted meridian restores the diagram", "[diagram][property]") {
  for (const auto& d : corpus::all()) {
    for (const auto& [e, c] : d.component_of_edge()) {
      auto m = insert_meridian(d, Bundle{e});
      check_valid(m);
      CHECK(m.num_crossings() == d.num_crossings() + 2);
      CHECK(delete_component(m, d.num_components()) == d);
    }
  }
}

TEST_CASE("component deletion", "[diagram]") {
  for (int c : {0, 1}) {
    auto u = delete_component(corpus::hopf_plus(), c);
    CHECK(u == corpus::unknot());
  }
  auto m = insert_meridian_around_loop(corpus::unknot(), 0);
  CHECK(delete_component(m, 1) == corpus::unknot());
  auto du = disjoint_union(corpus::trefoil(), corpus::hopf_plus());
  check_valid(du);
  CHECK(delete_component(delete_component(du, 2), 1) == corpus::trefoil());
  CHECK(delete_component(du, 0) == corpus::hopf_plus());
  CHECK_THROWS(delete_component(du, 3));
}

TEST_CASE("orientation reversal", "[diagram]") {
  auto h = corpus::hopf_plus();
  auto both = reverse(h, {0, 1});
  for (const auto& x : both.crossings()) CHECK(x.sign == 1);
  auto one = reverse(h, {0});
  for (const auto& x : one.crossings()) CHECK(x.sign == -1);
  for (const auto& d : corpus::all()) {
    for (int c = 0; c < d.num_components(); ++c) CHECK(reverse(reverse(d, {c}), {c}) == d);
    CHECK(reverse_all(reverse_all(d)) == d);
  }
}

TEST_CASE("reversal flips signs only between the set and its complement", "[diagram][property]") {
  auto d = disjoint_union(cable(corpus::trefoil(), 0, 2), corpus::hopf_minus());
  d = insert_meridian(d, Bundle{d.crossings().front().edges[0]});
  for (int c = 0; c < d.num_components(); ++c) {
    auto r = reverse(d, {c});
    int expected = 0;
    for (const auto& x : d.crossings()) {
      int a = d.component_of(x.edges[0]), b = d.component_of(x.edges[1]);
      bool flips = (a == c) != (b == c);
      expected += flips ? -x.sign : x.sign;
    }
    CHECK(r.validate().writhe == expected);
  }
}

TEST_CASE("crossing switch and smoothings stay valid", "[diagram]") {
  for (const auto& d : corpus::all()) {
    for (std::size_t i = 0; i < d.num_crossings(); ++i) {
      auto s = switch_crossing(d, i);
      check_valid(s);
      CHECK(s.validate().writhe == d.validate().writhe - 2 * d.crossings()[i].sign);
      CHECK(switch_crossing(s, i) == d);
      for (auto kind : {Smoothing::oriented, Smoothing::zero, Smoothing::infinity}) {
        auto m = smooth_crossing(d, i, kind);
        CHECK(m.num_crossings() + 1 == d.num_crossings());
        CHECK(m.validate().valid);
      }
    }
  }
}

TEST_CASE("curls", "[diagram]") {
  for (const auto& d : corpus::all()) {
    for (int sign : {1, -1}) {
      for (const auto& [e, c] : d.component_of_edge()) {
        auto k = add_curl(d, e, sign);
        check_valid(k);
        CHECK(k.validate().writhe == d.validate().writhe + sign);
      }
      for (const auto& [c, n] : d.free_loops()) {
        auto k = add_curl(d, -(c + 1), sign);
        check_valid(k);
        CHECK(k.crossings().front().sign == sign);
      }
    }
  }
}

TEST_CASE("canonical code", "[diagram]") {
  auto h = corpus::hopf_plus();
  // The same Hopf diagram numbered from the other crossing.
  auto h2 = LinkDiagram::from_pd("hopf", 2, {{3, 1, 4, 2}, {1, 3, 2, 4}}, {{1, 0}, {2, 0}, {3, 1}, {4, 1}}, {});
  auto h3 = LinkDiagram::from_pd("hopf", 2, {{2, 4, 1, 3}, {4, 2, 3, 1}}, {{1, 0}, {2, 0}, {3, 1}, {4, 1}}, {});
  check_valid(h3);
  CHECK(canonical_code(h) == canonical_code(h2));
  CHECK(canonical_code(h) == canonical_code(h3));
  CHECK(canonical_code(h) != canonical_code(corpus::unlink2()));
  CHECK(canonical_code(h) != canonical_code(corpus::hopf_minus()));
  CHECK(canonical_code(corpus::trefoil()) == canonical_code(corpus::trefoil()));
  INFO(canonical_code(h));
}

TEST_CASE("JSON round trip", "[diagram]") {
  for (const auto& d : corpus::all()) {
    std::string text = diagram_to_json_text(d);
    auto back = diagram_from_json_text(text);
    CHECK(back == d);
    CHECK(back.name() == d.name());
    CHECK(diagram_to_json_text(back) == text);
  }
  auto m = insert_meridian(cable(corpus::hopf_plus(), 0, 2), *find_bundle(cable(corpus::hopf_plus(), 0, 2), {0, 1}));
  std::string text = diagram_to_json_text(m);
  CHECK(diagram_from_json_text(text) == m);
  CHECK(diagram_to_json_text(diagram_from_json_text(text)) == text);
}

TEST_CASE("JSON format", "[diagram]") {
  auto d = diagram_from_json_text(R"({"name": "u", "components": 1, "free_loops": {"1": 1}, "crossings": [], "component_of_edge": {}})");
  CHECK(d == corpus::unknot());
  CHECK_THROWS_AS(diagram_from_json_text("{"), InvalidDiagram);
  CHECK_THROWS_AS(diagram_from_json_text(R"({"name": "x", "crossings": [[1, 2, 3]]})"), InvalidDiagram);
  CHECK(load_link("corpus:trefoil") == corpus::trefoil());
  CHECK_THROWS(load_link("corpus:nope"));
}
