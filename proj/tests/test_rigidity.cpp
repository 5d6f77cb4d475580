#include <doctest.h>

#include "rigiditylab/rigidity.hpp"
#include "test_util.hpp"

using namespace rigiditylab;
using namespace rltest;

namespace {

std::vector<GaussianRational> flatten(const Configuration& c) {
  std::vector<GaussianRational> out;
  for (const Point& p : c.points)
    for (const auto& x : p) out.push_back(x);
  return out;
}

bool in_kernel(const ComplexMatrix& r, const std::vector<GaussianRational>& f) {
  for (const auto& e : r.apply(f))
    if (!e.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("rigidity matrix rows carry the metric's signature weights") {
  Graph single(2, {{0, 1}});
  Framework f = make_framework(single, SpaceDescriptor::euclidean(2), {{0, 0}, {1, 0}});
  ComplexMatrix r = rigidity_matrix(f);
  REQUIRE(r.rows() == 1);
  CHECK(r(0, 0) == GaussianRational(Rational(-1)));
  CHECK(r(0, 1).is_zero());
  CHECK(r(0, 2) == GaussianRational(Rational(1)));
  CHECK(r(0, 3).is_zero());

  Framework fp = make_framework(single, SpaceDescriptor::pseudo(2, 1), {{0, 0}, {1, 0}});
  ComplexMatrix rp = rigidity_matrix(fp);
  CHECK(rp(0, 0) == GaussianRational(Rational(1)));
  CHECK(rp(0, 2) == GaussianRational(Rational(-1)));

  Framework hyp{single, config({{1, 0, 0}, {0, 1, 0}}), SpaceDescriptor::hyperbolic(2)};
  CHECK_THROWS_AS(rigidity_matrix(hyp), Error);
}

TEST_CASE("trivial motions lie in the rigidity kernel for every space kind") {
  for (const SpaceDescriptor& space :
       {SpaceDescriptor::euclidean(2), SpaceDescriptor::pseudo(2, 1), SpaceDescriptor::pseudo(3, 2),
        SpaceDescriptor::minkowski(3), SpaceDescriptor::complex_space(2)}) {
    const int d = space.ambient_dim();
    Graph g = complete_graph(d + 2);
    Framework f = random_framework(g, space, 100, 17 + static_cast<std::uint64_t>(d));
    ComplexMatrix r = rigidity_matrix(f);

    // Translations.
    for (int i = 0; i < d; ++i) {
      Configuration tr;
      for (int t = 0; t < g.v; ++t) {
        Point p(static_cast<size_t>(d));
        p[static_cast<size_t>(i)] = GaussianRational(Rational(1));
        tr.points.push_back(p);
      }
      CHECK(in_kernel(r, flatten(tr)));
    }
    // Fields x -> A x with S A skew-symmetric (A = S K, K skew).
    RationalMatrix s = space.form_matrix();
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        RationalMatrix k(static_cast<size_t>(d), static_cast<size_t>(d));
        k(static_cast<size_t>(a), static_cast<size_t>(b)) = Rational(1);
        k(static_cast<size_t>(b), static_cast<size_t>(a)) = Rational(-1);
        ComplexMatrix rot = complexify(s * k);
        Configuration field;
        for (int t = 0; t < g.v; ++t) field.points.push_back(Point(rot.apply(f.config[t])));
        CHECK(in_kernel(r, flatten(field)));
      }
    // Kernel is at least d(d+1)/2 dimensional.
    CHECK(rank(r) <= static_cast<size_t>(g.v * d - trivial_motion_dim(d)));
  }
}

TEST_CASE("generic local rigidity") {
  CHECK(is_locally_rigid_generic(complete_graph(3), SpaceDescriptor::euclidean(2), 1));
  CHECK(!is_locally_rigid_generic(path_graph(3), SpaceDescriptor::euclidean(2), 1));
  CHECK(is_locally_rigid_generic(complete_graph(4), SpaceDescriptor::pseudo(2, 1), 1));
  CHECK(!is_locally_rigid_generic(cycle_graph(4), SpaceDescriptor::euclidean(2), 1));
}

TEST_CASE("equilibrium stress bases") {
  Framework tri = random_framework(complete_graph(3), SpaceDescriptor::euclidean(2), 1000, 3);
  CHECK(equilibrium_stress_basis(tri).empty());

  Framework edge = random_framework(Graph(2, {{0, 1}}), SpaceDescriptor::euclidean(2), 1000, 4);
  CHECK(equilibrium_stress_basis(edge).empty());

  Framework k4 = random_framework(complete_graph(4), SpaceDescriptor::euclidean(2), 1000, 5);
  CHECK(equilibrium_stress_basis(k4).size() == 1);
}

TEST_CASE("stress matrices: assembly, kernel, rank") {
  Graph k4 = complete_graph(4);
  std::vector<GaussianRational> zero(k4.edges.size(), GaussianRational(Rational(0)));
  ComplexMatrix z = stress_matrix(k4, zero);
  for (const auto& e : z.data()) CHECK(e.is_zero());

  Framework f = random_framework(k4, SpaceDescriptor::euclidean(2), 1000, 6);
  auto basis = equilibrium_stress_basis(f);
  REQUIRE(basis.size() == 1);
  ComplexMatrix omega = stress_matrix(k4, basis[0]);

  // Zero row sums.
  for (size_t i = 0; i < omega.rows(); ++i) {
    GaussianRational acc;
    for (size_t j = 0; j < omega.cols(); ++j) acc += omega(i, j);
    CHECK(acc.is_zero());
  }
  // Annihilates the coordinate columns.
  for (int coord = 0; coord < 2; ++coord) {
    std::vector<GaussianRational> col;
    for (int t = 0; t < 4; ++t) col.push_back(f.config[t][static_cast<size_t>(coord)]);
    for (const auto& e : omega.apply(col)) CHECK(e.is_zero());
  }
  CHECK(rank(omega) == 1);  // v - d - 1 = 4 - 2 - 1
}

TEST_CASE("ggr_test verdicts on the canonical examples") {
  CHECK(ggr_test(complete_graph(4), 2, Field::Real, 0).verdict == Verdict::GGR);
  CHECK(ggr_test(k4_plus_low_degree_vertex(), 2, Field::Real, 0).verdict == Verdict::GGF);
  CHECK(ggr_test(path_graph(3), 1, Field::Real, 0).verdict == Verdict::GGF);
  CHECK(ggr_test(cycle_graph(3), 1, Field::Real, 0).verdict == Verdict::GGR);
  CHECK(ggr_test(path_graph(4), 2, Field::Real, 0).verdict == Verdict::FLEXIBLE);
  CHECK(ggr_test(complete_graph(3), 2, Field::Real, 0).verdict == Verdict::SMALL_COMPLETE);
  CHECK(ggr_test(path_graph(3), 2, Field::Real, 0).verdict == Verdict::SMALL_INCOMPLETE);

  GGRVerdict ggr = ggr_test(complete_graph(4), 2, Field::Real, 0);
  REQUIRE(ggr.witness_stress.has_value());
  CHECK(rank(stress_matrix(complete_graph(4), *ggr.witness_stress)) == 1);
}

TEST_CASE("real and complex verdicts agree (sampled battery)") {
  const std::vector<std::pair<Graph, int>> battery = {
      {complete_graph(4), 2},
      {k4_plus_low_degree_vertex(), 2},
      {path_graph(4), 2},
      {wheel_graph(4), 2},
      {prism_graph(3), 2},
      {cycle_graph(3), 1},
  };
  for (const auto& [g, d] : battery)
    for (std::uint64_t seed = 0; seed < 3; ++seed)
      CHECK(ggr_test(g, d, Field::Real, seed).verdict ==
            ggr_test(g, d, Field::Complex, seed).verdict);
}

TEST_CASE("pseudo verdicts are transfer-derived and carry exact witnesses") {
  PseudoVerdict ok = pseudo_ggr_verdict(complete_graph(4), 2, 1, 0);
  CHECK(ok.verdict.verdict == Verdict::GGR);
  CHECK(ok.verdict.transfer_derived);
  CHECK(ok.verdict.s == 1);
  CHECK(ok.verdict.space == "pseudo");

  PseudoVerdict flexible = pseudo_ggr_verdict(k4_plus_low_degree_vertex(), 2, 1, 0, {}, true);
  CHECK(flexible.verdict.verdict == Verdict::GGF);
  REQUIRE(flexible.witness.has_value());
  const FrameworkPair& w = *flexible.witness;
  CHECK(w.first.space == SpaceDescriptor::pseudo(2, 1));
  CHECK(is_equivalent(w.first, w.second));
  CHECK(!is_congruent(w.first.config, w.second.config, w.first.space));

  PseudoVerdict same = pseudo_ggr_verdict(complete_graph(4), 2, 0, 9);
  GGRVerdict direct = ggr_test(complete_graph(4), 2, Field::Real, 9);
  CHECK(same.verdict.verdict == direct.verdict);
  CHECK(!same.verdict.transfer_derived);
}

TEST_CASE("averaging: exact flex identity") {
  Graph g = k4_plus_low_degree_vertex();
  FrameworkPair pair = build_noncongruent_equivalent_pair(g, 2, 11);

  SUBCASE("identical inputs give a zero flex") {
    AveragedPair same = averaging_flex(pair.first, pair.first);
    CHECK(same.average == pair.first);
    for (const Point& p : same.flex.points)
      for (const auto& c : p) CHECK(c.is_zero());
  }

  SUBCASE("reflection pairs pass the exact kernel check") {
    AveragedPair avg = averaging_flex(pair.first, pair.second);
    ComplexMatrix r = rigidity_matrix(avg.average);
    CHECK(in_kernel(r, flatten(avg.flex)));
  }

  SUBCASE("pseudo-euclidean averaging also verifies") {
    FrameworkPair mapped = pogorelov(pair, 1);
    AveragedPair avg = averaging_flex(mapped.first, mapped.second);
    CHECK(avg.average.space == SpaceDescriptor::pseudo(2, 1));
  }

  SUBCASE("non-equivalent inputs are rejected") {
    Framework other = random_framework(g, SpaceDescriptor::euclidean(2), 1000, 12);
    CHECK_THROWS_AS(averaging_flex(pair.first, other), Error);
  }
}

TEST_CASE("verdicts are seed-stable on the sampled battery") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    CHECK(ggr_test(complete_graph(4), 2, Field::Real, seed).verdict == Verdict::GGR);
    CHECK(ggr_test(k4_plus_low_degree_vertex(), 2, Field::Real, seed).verdict == Verdict::GGF);
  }
}
