#include <doctest.h>

#include "rigiditylab/gram.hpp"
#include "rigiditylab/rigidity.hpp"
#include "test_util.hpp"

using namespace rigiditylab;
using namespace rltest;

namespace {

FrameworkPair embedded(const FrameworkPair& pair) {
  return FrameworkPair{embed_real_as_complex(pair.first), embed_real_as_complex(pair.second),
                       false};
}

}  // namespace

TEST_CASE("average/difference map: the single-edge example") {
  Graph single(2, {{0, 1}});
  FrameworkPair pair{make_framework(single, SpaceDescriptor::euclidean(2), {{0, 0}, {3, 4}}),
                     make_framework(single, SpaceDescriptor::euclidean(2), {{0, 0}, {5, 0}}),
                     false};
  REQUIRE(is_equivalent(pair.first, pair.second));

  FrameworkPair mapped = pogorelov(pair, 1);
  CHECK(mapped.first.space == SpaceDescriptor::pseudo(2, 1));
  CHECK(mapped.first.config[1] == pt({3, 0}));
  CHECK(mapped.second.config[1] == pt({5, 4}));
  CHECK(squared_length(mapped.first.space, mapped.first.config[1] - mapped.first.config[0]) ==
        GaussianRational(Rational(-9)));
  CHECK(squared_length(mapped.second.space, mapped.second.config[1] - mapped.second.config[0]) ==
        GaussianRational(Rational(-9)));
  CHECK(is_equivalent(mapped.first, mapped.second));
}

TEST_CASE("average/difference map: boundary signatures") {
  Graph g = k4_plus_low_degree_vertex();
  FrameworkPair pair = build_noncongruent_equivalent_pair(g, 2, 21);

  SUBCASE("identical inputs stay identical") {
    FrameworkPair same{pair.first, pair.first, false};
    FrameworkPair mapped = pogorelov(same, 1);
    CHECK(mapped.first.config == pair.first.config);
    CHECK(mapped.second.config == pair.first.config);
  }

  SUBCASE("s = d swaps every coordinate: ordered identity") {
    FrameworkPair mapped = pogorelov(pair, 2);
    CHECK(mapped.first.config == pair.first.config);
    CHECK(mapped.second.config == pair.second.config);
  }

  SUBCASE("s = 0 returns the transposed pair (coordinate-swap labeling)") {
    FrameworkPair mapped = pogorelov(pair, 0);
    CHECK(mapped.first.config == pair.second.config);
    CHECK(mapped.second.config == pair.first.config);
    CHECK(mapped.first.space == SpaceDescriptor::euclidean(2));
  }

  SUBCASE("out-of-range signature") { CHECK_THROWS_AS(pogorelov(pair, 3), Error); }
}

TEST_CASE("pogorelov equals coordinate_swap entry for entry") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    int d = 2 + static_cast<int>(seed % 2);
    Graph g(3, {{0, 1}, {1, 2}});
    FrameworkPair pair{random_framework(g, SpaceDescriptor::euclidean(d), 500, seed),
                       random_framework(g, SpaceDescriptor::euclidean(d), 500, seed + 5000),
                       false};
    int s = static_cast<int>(seed % (static_cast<std::uint64_t>(d) + 1));
    CHECK(pogorelov(pair, s) == coordinate_swap(pair, s));
  }
}

TEST_CASE("equivalence preservation and the congruence biconditional") {
  for (int d = 2; d <= 3; ++d) {
    Graph g = d == 2 ? k4_plus_low_degree_vertex() : k5_plus_low_degree_vertex();
    for (int s = 1; s <= d; ++s) {
      FrameworkPair pair = build_noncongruent_equivalent_pair(g, d, static_cast<std::uint64_t>(7 * d + s));
      FrameworkPair mapped = pogorelov(pair, s);
      CHECK(is_equivalent(mapped.first, mapped.second));
      // Non-congruent inputs stay non-congruent.
      CHECK(!is_congruent(mapped.first.config, mapped.second.config, mapped.first.space));

      // Congruent inputs map to congruent outputs.
      ComplexMatrix o = complexify(cayley_orthogonal(static_cast<std::uint64_t>(100 + d + s), d, 0));
      Point tau;
      for (int i = 0; i < d; ++i) tau.push_back(GaussianRational(Rational(i + 1)));
      FrameworkPair congruent{pair.first,
                              Framework{g, transform_configuration(pair.first.config, o, tau),
                                        pair.first.space},
                              false};
      REQUIRE(is_congruent(congruent.first.config, congruent.second.config, congruent.first.space));
      FrameworkPair mapped_c = pogorelov(congruent, s);
      CHECK(is_equivalent(mapped_c.first, mapped_c.second));
      CHECK(is_congruent(mapped_c.first.config, mapped_c.second.config, mapped_c.first.space));
    }
  }
}

TEST_CASE("haar transform identities") {
  Graph g(3, {{0, 1}, {1, 2}});
  Framework x = random_framework(g, SpaceDescriptor::complex_space(2), 300, 1);
  Framework y = random_framework(g, SpaceDescriptor::complex_space(2), 300, 2);
  FrameworkPair pair{x, y, false};

  FrameworkPair h = haar(pair);
  CHECK(h.haar_coords);
  CHECK(haar_inverse(h) == pair);

  FrameworkPair xx{x, x, false};
  FrameworkPair hx = haar(xx);
  CHECK(hx.first.config == x.config);
  for (const Point& p : hx.second.config.points)
    for (const auto& c : p) CHECK(c.is_zero());

  Framework neg = x;
  for (Point& p : neg.config.points)
    for (auto& c : p) c = -c;
  FrameworkPair anti{x, neg, false};
  FrameworkPair ha = haar(anti);
  for (const Point& p : ha.first.config.points)
    for (const auto& c : p) CHECK(c.is_zero());
  CHECK(ha.second.config == x.config);
}

TEST_CASE("s_twist: examples and double application") {
  Graph single(2, {{0, 1}});
  Framework f = embed_real_as_complex(
      make_framework(single, SpaceDescriptor::euclidean(2), {{0, 0}, {1, 1}}));
  FrameworkPair pair{f, f, false};

  CHECK(s_twist(pair, 0) == pair);

  FrameworkPair tw = s_twist(pair, 1);
  CHECK(tw.first.config[1][0] == imaginary_unit());
  CHECK(tw.first.config[1][1] == GaussianRational(Rational(1)));
  CHECK(tw.second.config[1][0] == -imaginary_unit());

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g(3, {{0, 1}, {0, 2}});
    FrameworkPair p{random_framework(g, SpaceDescriptor::complex_space(3), 200, seed),
                    random_framework(g, SpaceDescriptor::complex_space(3), 200, seed + 100),
                    false};
    int s = 1 + static_cast<int>(seed % 3);
    FrameworkPair twice = s_twist(s_twist(p, s), s);
    FrameworkPair negated = p;
    for (Framework* fw : {&negated.first, &negated.second})
      for (Point& ptn : fw->config.points)
        for (int j = 0; j < s; ++j) ptn[static_cast<size_t>(j)] = -ptn[static_cast<size_t>(j)];
    CHECK(twice == negated);
  }
}

TEST_CASE("complex pogorelov: composition facts") {
  Graph g = k4_plus_low_degree_vertex();

  SUBCASE("s = 0 is the ordered identity") {
    FrameworkPair pair = embedded(build_noncongruent_equivalent_pair(g, 2, 31));
    CHECK(complex_pogorelov(pair, 0) == pair);
  }

  SUBCASE("commuting square with the real map (outputs transposed)") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      int d = 2 + static_cast<int>(seed % 2);
      Graph gg = d == 2 ? k4_plus_low_degree_vertex() : k5_plus_low_degree_vertex();
      FrameworkPair pair = build_noncongruent_equivalent_pair(gg, d, 400 + seed);
      int s = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(d));
      FrameworkPair real_route = pogorelov(pair, s);
      FrameworkPair complex_route = complex_pogorelov(embedded(pair), s);
      CHECK(complex_route.first == embed_s_valued(real_route.second));
      CHECK(complex_route.second == embed_s_valued(real_route.first));
    }
  }

  SUBCASE("equivalent complex pairs map to equivalent complex pairs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      FrameworkPair pair = embedded(build_noncongruent_equivalent_pair(g, 2, 900 + seed));
      REQUIRE(is_equivalent(pair.first, pair.second));
      FrameworkPair mapped = complex_pogorelov(pair, 1);
      CHECK(is_equivalent(mapped.first, mapped.second));
    }
  }
}

TEST_CASE("coordinate scaling preserves the flex property") {
  Graph g = k4_plus_low_degree_vertex();
  FrameworkPair base = embedded(build_noncongruent_equivalent_pair(g, 2, 55));
  FrameworkPair hb = haar(base);

  SUBCASE("unit scale is the identity") {
    CHECK(coordinate_scaling(hb, 0, GaussianRational(Rational(1))) == hb);
  }

  SUBCASE("lambda then 1/lambda is the identity") {
    GaussianRational lam(rational(3, 2), rational(-1, 5));
    FrameworkPair once = coordinate_scaling(hb, 1, lam);
    FrameworkPair back = coordinate_scaling(once, 1, GaussianRational(Rational(1)) / lam);
    CHECK(back == hb);
  }

  SUBCASE("scaled pairs keep R(a') f' = 0 exactly") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      FrameworkPair pair = embedded(build_noncongruent_equivalent_pair(g, 2, 700 + seed));
      FrameworkPair hp = haar(pair);
      GaussianRational lam(Rational(1 + static_cast<long>(seed % 5)),
                           rational(static_cast<long>(seed % 3), 7));
      FrameworkPair scaled = coordinate_scaling(hp, static_cast<int>(seed % 2), lam);
      ComplexMatrix r = rigidity_matrix(scaled.first);
      std::vector<GaussianRational> flat;
      for (const Point& p : scaled.second.config.points)
        for (const auto& c : p) flat.push_back(c);
      for (const auto& e : r.apply(flat)) CHECK(e.is_zero());
    }
  }

  SUBCASE("error paths") {
    CHECK_THROWS_AS(coordinate_scaling(hb, 0, GaussianRational()), Error);
    CHECK_THROWS_AS(coordinate_scaling(base, 0, GaussianRational(Rational(2))), Error);
    CHECK_THROWS_AS(coordinate_scaling(hb, 5, GaussianRational(Rational(2))), Error);
  }
}

TEST_CASE("reflection builder") {
  SUBCASE("K4 plus a degree-2 vertex: valid pair") {
    FrameworkPair pair = build_noncongruent_equivalent_pair(k4_plus_low_degree_vertex(), 2, 1);
    CHECK(is_equivalent(pair.first, pair.second));
    CHECK(!is_congruent(pair.first.config, pair.second.config, pair.first.space));
  }
  SUBCASE("K4 in the plane has no reflectable vertex") {
    CHECK_THROWS_AS(build_noncongruent_equivalent_pair(complete_graph(4), 2, 1), Error);
  }
  SUBCASE("P3 in one dimension folds at the middle vertex") {
    FrameworkPair pair = build_noncongruent_equivalent_pair(path_graph(3), 1, 1);
    CHECK(is_equivalent(pair.first, pair.second));
    CHECK(!is_congruent(pair.first.config, pair.second.config, pair.first.space));
  }
}
