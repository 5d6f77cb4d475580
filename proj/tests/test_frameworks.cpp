#include <doctest.h>

#include "rigiditylab/gram.hpp"
#include "test_util.hpp"

using namespace rigiditylab;
using namespace rltest;

TEST_CASE("squared_length per space kind") {
  Point iso{imaginary_unit(), GaussianRational(Rational(1))};
  CHECK(squared_length(SpaceDescriptor::complex_space(2), iso).is_zero());

  CHECK(squared_length(SpaceDescriptor::pseudo(2, 1), pt({1, 1})).is_zero());
  CHECK(squared_length(SpaceDescriptor::euclidean(2), pt({3, 4})) == GaussianRational(Rational(25)));
  CHECK(squared_length(SpaceDescriptor::minkowski(2), pt({2, 1})) == GaussianRational(Rational(-3)));
  CHECK_THROWS_AS(squared_length(SpaceDescriptor::euclidean(2), pt({1, 2, 3})), Error);
}

TEST_CASE("edge measurements in graph order") {
  Graph single(2, {{0, 1}});
  Framework f = make_framework(single, SpaceDescriptor::euclidean(2), {{0, 0}, {3, 4}});
  CHECK(edge_measurements(f) == std::vector<GaussianRational>{GaussianRational(Rational(25))});

  Graph tri = complete_graph(3);
  Framework t = make_framework(tri, SpaceDescriptor::euclidean(2), {{0, 0}, {1, 0}, {0, 1}});
  CHECK(edge_measurements(t) ==
        std::vector<GaussianRational>{GaussianRational(Rational(1)), GaussianRational(Rational(1)),
                                      GaussianRational(Rational(2))});

  Framework tp = make_framework(tri, SpaceDescriptor::pseudo(2, 1), {{0, 0}, {1, 0}, {0, 1}});
  CHECK(edge_measurements(tp) ==
        std::vector<GaussianRational>{GaussianRational(Rational(-1)), GaussianRational(Rational(1)),
                                      GaussianRational(Rational(0))});
}

TEST_CASE("equivalence: exact measurement comparison") {
  Graph single(2, {{0, 1}});
  Framework f = make_framework(single, SpaceDescriptor::euclidean(2), {{0, 0}, {3, 4}});
  CHECK(is_equivalent(f, f));
  Framework g = make_framework(single, SpaceDescriptor::euclidean(2), {{0, 0}, {5, 0}});
  CHECK(is_equivalent(f, g));
  Framework h = make_framework(single, SpaceDescriptor::euclidean(2), {{0, 0}, {5, 1}});
  CHECK(!is_equivalent(f, h));

  Framework other_space = make_framework(single, SpaceDescriptor::pseudo(2, 1), {{0, 0}, {3, 4}});
  CHECK_THROWS_AS(is_equivalent(f, other_space), Error);
}

TEST_CASE("congruence: translations, isometries, and a 1D counterexample") {
  SpaceDescriptor e2 = SpaceDescriptor::euclidean(2);
  Configuration p = config({{0, 0}, {4, 1}, {-2, 3}});
  Configuration shifted = transform_configuration(p, complexify(RationalMatrix::identity(2)),
                                                  pt({17, -5}));
  CHECK(is_congruent(p, shifted, e2));

  ComplexMatrix o = complexify(cayley_orthogonal(3, 2, 0));
  Configuration rotated = transform_configuration(p, o, pt({1, 2}));
  CHECK(is_congruent(p, rotated, e2));

  SpaceDescriptor e1 = SpaceDescriptor::euclidean(1);
  CHECK(!is_congruent(config({{0}, {1}, {2}}), config({{0}, {1}, {3}}), e1));
}

TEST_CASE("congruence is an equivalence relation on random configurations") {
  SpaceDescriptor space = SpaceDescriptor::pseudo(2, 1);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Configuration p = random_configuration(4, space, 1000, seed);
    ComplexMatrix o1 = complexify(cayley_orthogonal(seed + 10, 2, 1));
    ComplexMatrix o2 = complexify(cayley_orthogonal(seed + 20, 2, 1, true));
    Configuration q = transform_configuration(p, o1, pt({3, -2}));
    Configuration r = transform_configuration(q, o2, pt({-7, 11}));
    CHECK(is_congruent(p, p, space));
    CHECK(is_congruent(p, q, space));
    CHECK(is_congruent(q, p, space));
    CHECK((is_congruent(p, q, space) && is_congruent(q, r, space) && is_congruent(p, r, space)));
  }
}

TEST_CASE("affine span dimension") {
  CHECK(affine_span_dim(config({{0, 0}, {1, 1}, {2, 2}})) == 1);
  CHECK(affine_span_dim(config({{0, 0}, {1, 0}, {0, 1}})) == 2);
  CHECK(affine_span_dim(config({{5, 7}})) == 0);
}

TEST_CASE("strong congruence witness: identity, round trip, degenerate span") {
  SpaceDescriptor e2 = SpaceDescriptor::euclidean(2);
  Configuration p = config({{0, 0}, {3, 1}, {1, 4}, {-2, -2}});

  CongruenceWitness id = strong_congruence_witness(p, p, e2);
  CHECK(id.transform == complexify(RationalMatrix::identity(2)));
  for (const auto& c : id.translation) CHECK(c.is_zero());

  // Recover a known transform exactly.
  ComplexMatrix o = complexify(cayley_orthogonal(11, 2, 0, true));
  Point tau = pt({9, -4});
  Configuration q = transform_configuration(p, o, tau);
  CongruenceWitness w = strong_congruence_witness(p, q, e2);
  CHECK(transform_configuration(p, w.transform, w.translation) == q);

  // Pseudo-euclidean form.
  SpaceDescriptor p21 = SpaceDescriptor::pseudo(2, 1);
  ComplexMatrix op = complexify(cayley_orthogonal(13, 2, 1));
  Configuration qp = transform_configuration(p, op, pt({1, 1}));
  CongruenceWitness wp = strong_congruence_witness(p, qp, p21);
  ComplexMatrix s = complexify(signature_matrix(2, 1));
  CHECK(wp.transform.transpose() * s * wp.transform == s);
  CHECK(transform_configuration(p, wp.transform, wp.translation) == qp);

  Configuration line = config({{0, 0}, {1, 1}, {2, 2}});
  Configuration line2 = config({{5, 0}, {5 + 1, 1}, {5 + 2, 2}});
  CHECK_THROWS_AS(strong_congruence_witness(line, line2, e2), Error);

  Configuration not_cong = config({{0, 0}, {3, 1}, {1, 4}, {-2, -1}});
  CHECK_THROWS_AS(strong_congruence_witness(p, not_cong, e2), Error);
}

TEST_CASE("embeddings preserve measurements exactly") {
  Graph tri = complete_graph(3);
  Framework real_fw = make_framework(tri, SpaceDescriptor::euclidean(2), {{0, 0}, {3, 4}, {7, -1}});
  Framework cfw = embed_real_as_complex(real_fw);
  CHECK(cfw.space.kind == SpaceKind::Complex);
  CHECK(cfw.config == real_fw.config);
  CHECK(edge_measurements(cfw) == edge_measurements(real_fw));

  SUBCASE("s-valued embedding matches the pseudo metric for every s") {
    for (int d = 1; d <= 3; ++d) {
      for (int s = 0; s <= d; ++s) {
        Graph g = complete_graph(4);
        Framework f = random_framework(g, SpaceDescriptor::pseudo(d, s), 500, 91 + static_cast<std::uint64_t>(10 * d + s));
        Framework emb = embed_s_valued(f);
        CHECK(edge_measurements(emb) == edge_measurements(f));
        CHECK(is_s_valued(emb, s));
      }
    }
  }

  SUBCASE("single point example: (1,1) with s=1 maps to (i,1)") {
    Graph single(2, {{0, 1}});
    Framework f = make_framework(single, SpaceDescriptor::pseudo(2, 1), {{0, 0}, {1, 1}});
    Framework emb = embed_s_valued(f);
    CHECK(emb.config[1][0] == imaginary_unit());
    CHECK(emb.config[1][1] == GaussianRational(Rational(1)));
    CHECK(squared_length(emb.space, emb.config[1] - emb.config[0]).is_zero());
  }
}

TEST_CASE("is_s_valued") {
  Graph single(2, {{0, 1}});
  Framework f = make_framework(single, SpaceDescriptor::pseudo(2, 1), {{0, 0}, {1, 1}});
  CHECK(is_s_valued(embed_s_valued(f), 1));

  Framework bad{single,
                Configuration{{pt({0, 0}), Point{GaussianRational(Rational(1), Rational(1)),
                                                 GaussianRational(Rational(0))}}},
                SpaceDescriptor::complex_space(2)};
  CHECK(!is_s_valued(bad, 1));

  Framework all_real = embed_real_as_complex(
      make_framework(single, SpaceDescriptor::euclidean(2), {{0, 0}, {2, 5}}));
  CHECK(is_s_valued(all_real, 0));
}

TEST_CASE("framework validation rejects malformed inputs") {
  Graph tri = complete_graph(3);
  Framework wrong_count{tri, config({{0, 0}, {1, 0}}), SpaceDescriptor::euclidean(2)};
  CHECK_THROWS_AS(wrong_count.validate(), Error);

  Framework complex_in_real{tri,
                            Configuration{{pt({0, 0}), pt({1, 0}),
                                           Point{imaginary_unit(), GaussianRational(Rational(0))}}},
                            SpaceDescriptor::euclidean(2)};
  CHECK_THROWS_AS(complex_in_real.validate(), Error);
}
