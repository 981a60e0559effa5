#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "wlp/census.hpp"
#include "wlp/errors.hpp"
#include "wlp/lefschetz.hpp"
#include "wlp/topology.hpp"

using namespace wlp;

TEST_CASE("skeleton boundary structure") {
  const SkeletonComplex sc = skeleton_complex(cycle(4), 1);
  REQUIRE(sc.row_faces.size() == 4);  // vertices
  REQUIRE(sc.col_faces.size() == 4);  // edges
  // every edge has exactly two vertices
  for (Index c = 0; c < sc.boundary_lift.cols(); ++c) {
    CHECK(sc.boundary_lift.col(c).sum() == 2);
  }
  // degree 0: the augmentation row over the empty face
  const SkeletonComplex aug = skeleton_complex(cycle(4), 0);
  CHECK(aug.row_faces == std::vector<std::vector<int>>{{}});
  CHECK((aug.boundary_lift.array() == 1).all());
}

TEST_CASE("mod-2 homology golden values") {
  CHECK(homology_gf2(complete_multipartite({2, 2, 2}), 2) == 1);  // sphere
  CHECK(homology_gf2(test::k22_plus_two_points(), 1) == 1);       // circle
  for (int n = 3; n <= 9; ++n) {
    CHECK(homology_gf2(cycle(n), 1) == 1);
  }
  // complete graph: skeleton of a simplex, H_i has dimension C(n-1, i+1)
  CHECK(homology_gf2(complete_multipartite({1, 1, 1, 1}), 1) == 3);
  CHECK(homology_gf2(complete_multipartite({1, 1, 1, 1, 1}), 2) == 4);
}

TEST_CASE("skeleton verdicts over GF(2)") {
  const SkeletonVerdict c4 = skeleton_verdict_gf2(cycle(4), 1);
  CHECK(c4.surjectivity_fails);
  CHECK(c4.injectivity_fails);
  CHECK(c4.boundary_rank == 3);

  const SkeletonVerdict oct = skeleton_verdict_gf2(complete_multipartite({2, 2, 2}), 2);
  CHECK(oct.surjectivity_fails);
  CHECK(oct.h_dim == 1);

  // K4 at degree 1: injectivity fails over GF(2), surjectivity is fine
  const SkeletonVerdict k4 = skeleton_verdict_gf2(complete_multipartite({1, 1, 1, 1}), 1);
  CHECK(k4.injectivity_fails);
  CHECK_FALSE(k4.surjectivity_fails);
}

TEST_CASE("skeleton verdict equals the char-2 engine on the truncated ideal") {
  for (int n = 1; n <= 4; ++n) {
    const GraphCode limit = GraphCode{1} << pair_count(n);
    for (GraphCode code = 0; code < limit; ++code) {
      const Graph g = graph_from_code(n, code);
      for (int i = 1; i <= 3; ++i) {
        const SkeletonVerdict verdict = skeleton_verdict_gf2(g, i);
        const MonomialIdeal truncated = truncate_ideal(to_ideal(g), i);
        const WLPReport report = wlp_report(truncated, 2);
        const std::int64_t dim_i = report.dim(i);
        const std::int64_t dim_j = report.dim(i + 1);
        const std::int64_t rank = report.rank_at(i);
        const bool full = rank == std::min(dim_i, dim_j);
        const bool surj_fails = !full && dim_j <= dim_i;
        const bool inj_fails = !full && dim_i <= dim_j;
        if (verdict.surjectivity_fails != surj_fails ||
            verdict.injectivity_fails != inj_fails) {
          FAIL("verdict mismatch at n=", n, " code=", code, " i=", i);
        }
      }
    }
  }
}

TEST_CASE("bockstein golden verdicts") {
  const BocksteinVerdict c4 = bockstein_verdict(cycle(4), 1);
  CHECK(c4.h_dim == 1);
  CHECK_FALSE(c4.delta_injective);
  CHECK(c4.witness_cycle ==
        std::vector<std::vector<int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  REQUIRE(c4.witness_preimage.has_value());

  const BocksteinVerdict c5 = bockstein_verdict(cycle(5), 1);
  CHECK(c5.h_dim == 1);
  CHECK(c5.delta_injective);
  CHECK(c5.witness_cycle.empty());

  const BocksteinVerdict k3 = bockstein_verdict(complete_multipartite({1, 1, 1}), 1);
  CHECK(k3.h_dim == 1);
  CHECK(k3.delta_injective);
}

TEST_CASE("bockstein verdict decides char-0 surjectivity on the truncation") {
  for (int n = 1; n <= 4; ++n) {
    const GraphCode limit = GraphCode{1} << pair_count(n);
    for (GraphCode code = 0; code < limit; ++code) {
      const Graph g = graph_from_code(n, code);
      for (int i = 1; i <= 3; ++i) {
        const BocksteinVerdict verdict = bockstein_verdict(g, i);  // also self-checks
        const WLPReport report = wlp_report(truncate_ideal(to_ideal(g), i), 0);
        const bool surjective = report.rank_at(i) == report.dim(i + 1);
        if (verdict.delta_injective != surjective) {
          FAIL("bockstein mismatch at n=", n, " code=", code, " i=", i);
        }
      }
    }
  }
}

TEST_CASE("witness certificate: preimage solves M x = lifted cycle / 2") {
  const SkeletonComplex sc = skeleton_complex(cycle(6), 1);
  const BocksteinVerdict verdict = bockstein_verdict(cycle(6), 1);
  REQUIRE_FALSE(verdict.delta_injective);
  REQUIRE(verdict.witness_preimage.has_value());
  IntVector lifted = IntVector::Zero(sc.boundary_lift.cols());
  for (const auto& face : verdict.witness_cycle) {
    for (Index c = 0; c < static_cast<Index>(sc.col_faces.size()); ++c) {
      if (sc.col_faces[static_cast<std::size_t>(c)] == face) lifted(c) = 1;
    }
  }
  const IntVector halved = (sc.boundary_lift * lifted) / 2;
  CHECK(sc.boundary_lift * *verdict.witness_preimage == halved);
}

TEST_CASE("truncation transparency below the socle degree") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = test::random_graph(5, 0.6, rng);
    const MonomialIdeal ideal = to_ideal(g);
    const WLPReport full = wlp_report(ideal, 2);
    const int d = static_cast<int>(full.hilbert.size()) - 1;
    for (int i = 1; i < d; ++i) {
      const WLPReport truncated = wlp_report(truncate_ideal(ideal, i), 2);
      CHECK(truncated.rank_at(i) == full.rank_at(i));
      CHECK(truncated.dim(i) == full.dim(i));
      CHECK(truncated.dim(i + 1) == full.dim(i + 1));
    }
  }
}

TEST_CASE("consecutive boundaries compose to zero mod 2") {
  for (int n = 1; n <= 5; ++n) {
    const GraphCode limit = GraphCode{1} << pair_count(n);
    for (GraphCode code = 0; code < limit; ++code) {
      const Graph g = graph_from_code(n, code);
      const FVector f = f_vector(g);
      for (int i = 0; i + 1 < static_cast<int>(f.counts.size()) - 1; ++i) {
        const SkeletonComplex low = skeleton_complex(g, i);
        const SkeletonComplex high = skeleton_complex(g, i + 1);
        const GFMatrix composite =
            low.boundary_gf2.entries * high.boundary_gf2.entries;
        for (Index r = 0; r < composite.rows(); ++r) {
          for (Index c = 0; c < composite.cols(); ++c) {
            if (composite(r, c) % 2 != 0) {
              FAIL("boundary^2 != 0 at n=", n, " code=", code, " i=", i);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("degree preconditions") {
  CHECK_THROWS_AS(skeleton_verdict_gf2(cycle(4), 0), invalid_input);
  CHECK_THROWS_AS(bockstein_verdict(cycle(4), 0), invalid_input);
  // the 0-skeleton is four points; reduced homology counts them minus one
  CHECK(homology_gf2(cycle(4), 0) == 3);
}
