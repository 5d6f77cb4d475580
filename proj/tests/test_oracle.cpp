#include <doctest.h>

#include "rigiditylab/gram.hpp"
#include "rigiditylab/oracle.hpp"
#include "test_util.hpp"

using namespace rigiditylab;
using namespace rltest;

namespace {

Configuration generic_1d(int v, std::uint64_t seed) {
  return random_configuration(v, SpaceDescriptor::euclidean(1), 1000000, seed);
}

std::vector<double> targets_from(const Graph& g, std::uint64_t seed) {
  Framework base = random_framework(g, SpaceDescriptor::euclidean(2), 1000, seed);
  std::vector<double> t;
  for (const auto& m : edge_measurements(base)) t.push_back(to_double(m.re));
  return t;
}

}  // namespace

TEST_CASE("exact 1D enumeration: paths and cycles") {
  CHECK(enumerate_1d(path_graph(3), generic_1d(3, 1)).classes() == 2);
  CHECK(enumerate_1d(cycle_graph(3), generic_1d(3, 2)).classes() == 1);
  CHECK(enumerate_1d(path_graph(4), generic_1d(4, 3)).classes() == 4);

  SUBCASE("representatives reproduce the measurements exactly and are non-congruent") {
    RealizationSet rs = enumerate_1d(path_graph(4), generic_1d(4, 5));
    const SpaceDescriptor e1 = SpaceDescriptor::euclidean(1);
    for (const auto& rep : rs.representatives) {
      Framework f{path_graph(4), rep, e1};
      size_t k = 0;
      for (const auto& m : edge_measurements(f)) {
        CHECK(m == GaussianRational(rs.exact_measurements[k]));
        ++k;
      }
    }
    for (size_t a = 0; a < rs.representatives.size(); ++a)
      for (size_t b = a + 1; b < rs.representatives.size(); ++b)
        CHECK(!is_congruent(rs.representatives[a], rs.representatives[b], e1));
  }

  SUBCASE("disconnected graphs are rejected") {
    Graph two_islands(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(enumerate_1d(two_islands, generic_1d(4, 6)), Error);
  }
}

TEST_CASE("heuristic 2D enumeration") {
  Enum2DOptions opt;
  opt.n_starts = 600;
  opt.seed = 12;

  SUBCASE("K4: one class") {
    Graph g = complete_graph(4);
    RealizationSet rs = enumerate_2d_heuristic(g, targets_from(g, 7), opt);
    CHECK(rs.classes() == 1);
    CHECK(rs.residual_max <= opt.residual_tol);
  }

  SUBCASE("K4 plus a degree-2 vertex: the reflection pair shows up") {
    Graph g = k4_plus_low_degree_vertex();
    RealizationSet rs = enumerate_2d_heuristic(g, targets_from(g, 8), opt);
    CHECK(rs.classes() == 2);
    CHECK(rs.residual_max <= opt.residual_tol);
  }

  SUBCASE("4-cycle is not locally rigid") {
    Graph g = cycle_graph(4);
    CHECK_THROWS_AS(enumerate_2d_heuristic(g, targets_from(g, 9), opt), Error);
  }

  SUBCASE("class count is reseeding-stable (light version)") {
    Graph g = k4_plus_low_degree_vertex();
    std::vector<double> targets = targets_from(g, 10);
    for (std::uint64_t reseed = 0; reseed < 2; ++reseed) {
      Enum2DOptions o = opt;
      o.seed = 100 + reseed;
      CHECK(enumerate_2d_heuristic(g, targets, o).classes() == 2);
    }
  }
}

TEST_CASE("parity reports") {
  SUBCASE("P3 in 1D: two classes, even, consistent") {
    RealizationSet rs = enumerate_1d(path_graph(3), generic_1d(3, 20));
    GGRVerdict v = ggr_test(path_graph(3), 1, Field::Real, 0);
    REQUIRE(v.verdict == Verdict::GGF);
    ParityReport r = parity_report(rs, v);
    CHECK(r.classes == 2);
    CHECK(r.even);
    CHECK(r.theorem_applies);
    CHECK(r.consistent_with_theory);
  }

  SUBCASE("C3 in 1D: GGR, count one, theorem does not apply, consistent") {
    RealizationSet rs = enumerate_1d(cycle_graph(3), generic_1d(3, 21));
    GGRVerdict v = ggr_test(cycle_graph(3), 1, Field::Real, 0);
    REQUIRE(v.verdict == Verdict::GGR);
    ParityReport r = parity_report(rs, v);
    CHECK(r.classes == 1);
    CHECK(!r.even);
    CHECK(!r.theorem_applies);
    CHECK(r.consistent_with_theory);
  }

  SUBCASE("K4 plus degree-2 vertex in 2D: two classes, even, consistent") {
    Graph g = k4_plus_low_degree_vertex();
    Enum2DOptions opt;
    opt.n_starts = 600;
    opt.seed = 3;
    RealizationSet rs = enumerate_2d_heuristic(g, targets_from(g, 30), opt);
    GGRVerdict v = ggr_test(g, 2, Field::Real, 0);
    ParityReport r = parity_report(rs, v);
    CHECK(r.classes == 2);
    CHECK(r.theorem_applies);
    CHECK(r.consistent_with_theory);
  }

  SUBCASE("an odd count under a GGF verdict is flagged inconsistent") {
    RealizationSet fake;
    fake.d = 2;
    fake.exactness = Exactness::Heuristic;
    fake.representatives.resize(3);
    GGRVerdict v;
    v.verdict = Verdict::GGF;
    ParityReport r = parity_report(fake, v);
    CHECK(!r.consistent_with_theory);
  }
}
