#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "wlp/census.hpp"
#include "wlp/errors.hpp"
#include "wlp/lefschetz.hpp"
#include "wlp/tensor.hpp"

using namespace wlp;
using test::ideal_of;

TEST_CASE("spec parsing") {
  const TensorSpec spec = parse_tensor_spec("2:2,3:4,1:2");
  REQUIRE(spec.factors.size() == 3);
  CHECK(spec.factors[1] == TensorFactor{3, 4});
  CHECK(spec.total_vars() == 6);
  CHECK(spec.critical_degree() == 1 + 3 + 1);
  CHECK_THROWS_AS(parse_tensor_spec("2"), invalid_input);
  CHECK_THROWS_AS(parse_tensor_spec("2:1"), invalid_input);
  CHECK_THROWS_AS(parse_tensor_spec("0:2"), invalid_input);
}

TEST_CASE("realize") {
  CHECK(realize(parse_tensor_spec("2:2,2:2,2:2")) == test::octahedron_ideal());
  CHECK(realize(parse_tensor_spec("1:2,1:2,1:2")) ==
        ideal_of(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  CHECK(hilbert_function(realize(parse_tensor_spec("2:3"))) ==
        HilbertFunction{1, 2, 3});
  // Hilbert function is the product of truncated binomial series
  CHECK(hilbert_function(realize(parse_tensor_spec("2:2,3:2"))) ==
        test::poly_mult({1, 2}, {1, 3}));
}

TEST_CASE("order-2 classification") {
  CHECK(order2_tensor_has_wlp(parse_tensor_spec("3:2,1:2,1:2")));
  CHECK(order2_tensor_has_wlp(parse_tensor_spec("2:2,2:2,1:2")));
  CHECK_FALSE(order2_tensor_has_wlp(parse_tensor_spec("2:2,2:2,1:2,1:2")));
  CHECK_FALSE(order2_tensor_has_wlp(parse_tensor_spec("2:2,2:2,2:2")));
  CHECK(order2_tensor_has_wlp(parse_tensor_spec("4:2")));
  // factor order matters only through the hypothesis
  CHECK_THROWS_AS(order2_tensor_has_wlp(parse_tensor_spec("2:3")), invalid_input);
  // characteristic 2 is refused, not answered
  CHECK_THROWS_AS(order2_tensor_has_wlp(parse_tensor_spec("2:2,2:2"), 2),
                  invalid_input);
  CHECK_FALSE(order2_tensor_has_wlp(parse_tensor_spec("2:2,2:2"), 3));
}

TEST_CASE("classification matches the engine up to 5 variables") {
  // all compositions of t <= 5 into parts >= 1, every factor order 2
  for (int total = 1; total <= 5; ++total) {
    for (unsigned mask = 0; mask < (1u << (total - 1)); ++mask) {
      TensorSpec spec;
      int run = 1;
      for (int pos = 0; pos < total - 1; ++pos) {
        if (mask & (1u << pos)) {
          spec.factors.push_back({run, 2});
          run = 1;
        } else {
          ++run;
        }
      }
      spec.factors.push_back({run, 2});
      const bool predicted = order2_tensor_has_wlp(spec);
      const bool direct = wlp_report(realize(spec)).has_wlp;
      if (predicted != direct) {
        FAIL("classification mismatch for total=", total, " mask=", mask);
      }
    }
  }
}

TEST_CASE("failure degree for all-big tensors") {
  CHECK(tensor_failure_degree(parse_tensor_spec("2:2,2:2,2:2")) == 2);
  CHECK(tensor_failure_degree(parse_tensor_spec("2:2,2:2")) == 1);
  CHECK(tensor_failure_degree(parse_tensor_spec("2:2,2:3")) == 2);
  CHECK_THROWS_AS(tensor_failure_degree(parse_tensor_spec("2:2")), invalid_input);
  CHECK_THROWS_AS(tensor_failure_degree(parse_tensor_spec("2:2,1:2")), invalid_input);

  for (const char* text : {"2:2,2:2", "2:2,2:3", "2:3,2:2", "2:2,2:2,2:2"}) {
    const TensorSpec spec = parse_tensor_spec(text);
    const WLPReport report = wlp_report(realize(spec));
    bool found = false;
    for (const Failure& f : report.failures) {
      found = found || f.degree == tensor_failure_degree(spec);
    }
    CHECK(found);
  }
}

TEST_CASE("failure windows combine by adding degrees") {
  FailureWindow a, b;
  a.surj_fail_targets = {2};
  b.surj_fail_targets = {1};
  a.inj_fail_sources = {1};
  b.inj_fail_sources = {1};
  const FailureWindow c = combine_windows(a, b);
  CHECK(c.surj_fail_targets == std::set<int>{3});
  CHECK(c.inj_fail_sources == std::set<int>{2});
  CHECK(combine_windows(FailureWindow{}, a) == FailureWindow{});
}

TEST_CASE("combined failures are confirmed by the tensor report") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    const MonomialIdeal a = to_ideal(test::random_graph(3, 0.5, rng));
    const MonomialIdeal b = to_ideal(test::random_graph(3, 0.5, rng));
    const FailureWindow combined =
        combine_windows(failure_window(a), failure_window(b));
    const WLPReport tensor_report = wlp_report(tensor_ideal(a, b));
    for (int target : combined.surj_fail_targets) {
      CHECK_FALSE(tensor_report.surjective_at(target - 1));
    }
    for (int source : combined.inj_fail_sources) {
      CHECK_FALSE(tensor_report.injective_at(source));
    }
  }
}

TEST_CASE("power-factor guarantee") {
  CHECK(power_factor_guarantee(test::octahedron_ideal(), 4) ==
        WlpGuarantee::guaranteed);
  CHECK(power_factor_guarantee(ideal_of(2, {{2, 0}, {0, 2}}), 3) ==
        WlpGuarantee::guaranteed);
  CHECK(power_factor_guarantee(test::octahedron_ideal(), 2) ==
        WlpGuarantee::no_guarantee);

  // the guarantee is confirmed by the direct engine
  std::mt19937 rng(73);
  const auto z_power = [](int j) {
    return MonomialIdeal(1, {Monomial({j})});
  };
  for (int trial = 0; trial < 10; ++trial) {
    const MonomialIdeal a = to_ideal(test::random_graph(4, 0.5, rng));
    const int j = socle_degree(a) + 1;
    if (j < 2) continue;
    CHECK(power_factor_guarantee(a, j) == WlpGuarantee::guaranteed);
    CHECK(wlp_report(tensor_ideal(a, z_power(j))).has_wlp);
  }
}

TEST_CASE("char-2 tensor with a square factor always fails") {
  const MonomialIdeal z2 = ideal_of(1, {{2}});
  for (GraphCode code = 0; code < (GraphCode{1} << pair_count(3)); ++code) {
    const Graph g = graph_from_code(3, code);
    const MonomialIdeal a = to_ideal(g);
    if (hilbert_function(a).size() < 3) continue;  // needs A_2 != 0
    CHECK_FALSE(wlp_report(tensor_ideal(a, z2), 2).has_wlp);
  }
}

TEST_CASE("bipartite cone parity") {
  CHECK(bipartite_cone_has_wlp(2, 2, 1));
  CHECK_FALSE(bipartite_cone_has_wlp(2, 2, 2));
  CHECK_FALSE(bipartite_cone_has_wlp(2, 3, 0));
  CHECK_THROWS_AS(bipartite_cone_has_wlp(1, 2, 1), invalid_input);
  CHECK_THROWS_AS(bipartite_cone_has_wlp(2, 2, 1, 2), invalid_input);

  // cross-checked against the engine for small cones
  for (int a = 2; a <= 3; ++a) {
    for (int b = 2; b <= 3; ++b) {
      for (int r = 0; r <= 2; ++r) {
        std::vector<int> parts = {a, b};
        for (int s = 0; s < r; ++s) parts.push_back(1);
        const bool direct = wlp_report(to_ideal(complete_multipartite(parts))).has_wlp;
        CHECK(bipartite_cone_has_wlp(a, b, r) == direct);
      }
    }
  }
}
