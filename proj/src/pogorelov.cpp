#include "rigiditylab/pogorelov.hpp"

#include "rigiditylab/gram.hpp"

namespace rigiditylab {

void FrameworkPair::validate() const {
  first.validate();
  second.validate();
  require(first.graph == second.graph, Errc::GraphMismatch, "pair needs one graph");
  require(first.space == second.space, Errc::SpaceMismatch, "pair needs one space");
}

namespace {

void check_swap_inputs(const FrameworkPair& pair, int s) {
  pair.validate();
  require(pair.first.space.kind == SpaceKind::Euclidean, Errc::SpaceMismatch,
          "the average/difference map starts from euclidean frameworks");
  require(0 <= s && s <= pair.first.space.d, Errc::SignatureOutOfRange,
          "signature count out of range");
}

SpaceDescriptor swap_target_space(int d, int s) {
  return s == 0 ? SpaceDescriptor::euclidean(d) : SpaceDescriptor::pseudo(d, s);
}

GaussianRational half() { return GaussianRational(rational(1, 2)); }

}  // namespace

FrameworkPair pogorelov(const FrameworkPair& pair, int s) {
  check_swap_inputs(pair, s);
  const SpaceDescriptor target = swap_target_space(pair.first.space.d, s);
  FrameworkPair out = pair;
  out.first.space = target;
  out.second.space = target;
  out.haar_coords = false;
  const int v = pair.first.graph.v;
  for (int t = 0; t < v; ++t) {
    Point avg = half() * (pair.first.config[t] + pair.second.config[t]);
    Point diff = half() * (pair.first.config[t] - pair.second.config[t]);
    for (int j = 0; j < s; ++j) diff[static_cast<size_t>(j)] = -diff[static_cast<size_t>(j)];
    out.first.config[t] = avg - diff;
    out.second.config[t] = avg + diff;
  }
  return out;
}

FrameworkPair coordinate_swap(const FrameworkPair& pair, int s) {
  check_swap_inputs(pair, s);
  const SpaceDescriptor target = swap_target_space(pair.first.space.d, s);
  FrameworkPair out = pair;
  out.first.space = target;
  out.second.space = target;
  out.haar_coords = false;
  const int v = pair.first.graph.v;
  for (int t = 0; t < v; ++t) {
    for (int j = 0; j < s; ++j) {
      out.first.config[t][static_cast<size_t>(j)] = pair.first.config[t][static_cast<size_t>(j)];
      out.second.config[t][static_cast<size_t>(j)] = pair.second.config[t][static_cast<size_t>(j)];
    }
    for (int j = s; j < pair.first.space.d; ++j) {
      out.first.config[t][static_cast<size_t>(j)] = pair.second.config[t][static_cast<size_t>(j)];
      out.second.config[t][static_cast<size_t>(j)] = pair.first.config[t][static_cast<size_t>(j)];
    }
  }
  return out;
}

FrameworkPair haar(const FrameworkPair& pair) {
  pair.validate();
  require(pair.first.space.is_complex(), Errc::SpaceMismatch, "haar operates on complex pairs");
  FrameworkPair out = pair;
  out.haar_coords = true;
  const int v = pair.first.graph.v;
  for (int t = 0; t < v; ++t) {
    out.first.config[t] = half() * (pair.first.config[t] + pair.second.config[t]);
    out.second.config[t] = half() * (pair.first.config[t] - pair.second.config[t]);
  }
  return out;
}

FrameworkPair haar_inverse(const FrameworkPair& pair) {
  pair.validate();
  require(pair.first.space.is_complex(), Errc::SpaceMismatch, "haar operates on complex pairs");
  FrameworkPair out = pair;
  out.haar_coords = false;
  const int v = pair.first.graph.v;
  for (int t = 0; t < v; ++t) {
    out.first.config[t] = pair.first.config[t] + pair.second.config[t];
    out.second.config[t] = pair.first.config[t] - pair.second.config[t];
  }
  return out;
}

FrameworkPair s_twist(const FrameworkPair& pair, int s) {
  pair.validate();
  require(pair.first.space.is_complex(), Errc::SpaceMismatch, "s_twist operates on complex pairs");
  require(0 <= s && s <= pair.first.space.d, Errc::SignatureOutOfRange,
          "signature count out of range");
  FrameworkPair out = pair;
  const GaussianRational i = imaginary_unit();
  const GaussianRational minus_i = -i;
  const int v = pair.first.graph.v;
  for (int t = 0; t < v; ++t)
    for (int j = 0; j < s; ++j) {
      out.first.config[t][static_cast<size_t>(j)] *= i;
      out.second.config[t][static_cast<size_t>(j)] *= minus_i;
    }
  return out;
}

FrameworkPair complex_pogorelov(const FrameworkPair& pair, int s) {
  return haar_inverse(s_twist(haar(pair), s));
}

FrameworkPair coordinate_scaling(const FrameworkPair& pair, int coord,
                                 const GaussianRational& lambda) {
  pair.validate();
  require(pair.haar_coords, Errc::NotHaarCoordinates,
          "coordinate scaling acts on (average, flex) pairs");
  require(pair.first.space.is_complex(), Errc::SpaceMismatch,
          "coordinate scaling operates on complex pairs");
  require(!lambda.is_zero(), Errc::ZeroScale, "scale must be nonzero");
  require(0 <= coord && coord < pair.first.space.d, Errc::DimensionMismatch,
          "coordinate index out of range");
  FrameworkPair out = pair;
  const GaussianRational inv = GaussianRational(Rational(1)) / lambda;
  const int v = pair.first.graph.v;
  for (int t = 0; t < v; ++t) {
    out.first.config[t][static_cast<size_t>(coord)] *= lambda;
    out.second.config[t][static_cast<size_t>(coord)] *= inv;
  }
  return out;
}

Point reflect_across_affine_hull(const std::vector<Point>& hull_points, const Point& x) {
  require(!hull_points.empty(), Errc::DimensionMismatch, "empty hull");
  const size_t d = x.size();
  const Point& base = hull_points.front();
  std::vector<Point> dirs;
  for (size_t k = 1; k < hull_points.size(); ++k) dirs.push_back(hull_points[k] - base);
  Point rel = x - base;

  Point proj(d, GaussianRational(Rational(0)));
  if (!dirs.empty()) {
    // Normal equations of the euclidean projection onto span(dirs),
    // reduced to an independent subset of directions first.
    std::vector<Point> indep;
    for (const Point& dir : dirs) {
      ComplexMatrix trial(d, indep.size() + 1);
      for (size_t r = 0; r < d; ++r) {
        for (size_t c = 0; c < indep.size(); ++c) trial(r, c) = indep[c][r];
        trial(r, indep.size()) = dir[r];
      }
      if (rank(trial) == indep.size() + 1) indep.push_back(dir);
    }
    const size_t k = indep.size();
    ComplexMatrix gramm(k, k);
    std::vector<GaussianRational> rhs(k);
    auto dot = [d](const Point& a, const Point& b) {
      GaussianRational acc;
      for (size_t i = 0; i < d; ++i) acc += a[i] * b[i];
      return acc;
    };
    for (size_t a = 0; a < k; ++a) {
      for (size_t b = 0; b < k; ++b) gramm(a, b) = dot(indep[a], indep[b]);
      rhs[a] = dot(indep[a], rel);
    }
    auto coef = solve(gramm, rhs);
    require(coef.has_value(), Errc::Internal, "projection system unexpectedly singular");
    for (size_t a = 0; a < k; ++a) proj = proj + (*coef)[a] * indep[a];
  }
  return base + proj + (proj - rel);
}

FrameworkPair build_noncongruent_equivalent_pair(const Graph& g, int d, std::uint64_t seed,
                                                 std::int64_t bound, int retries) {
  std::vector<int> reflectable;
  for (int t = 0; t < g.v; ++t)
    if (g.degree(t) <= d) reflectable.push_back(t);
  require(!reflectable.empty(), Errc::NoReflectableVertex,
          "every vertex has degree > d; no reflection is available");

  const SpaceDescriptor space = SpaceDescriptor::euclidean(d);
  for (int attempt = 0; attempt <= retries; ++attempt) {
    Configuration p =
        random_configuration(g.v, space, bound, mix_seed(seed, static_cast<std::uint64_t>(attempt), 0xF01D));
    for (int w : reflectable) {
      const std::vector<int> nbrs = g.neighbors(w);
      if (nbrs.empty()) continue;  // isolated vertex carries no constraints either way

      std::vector<Point> hull;
      for (int n : nbrs) hull.push_back(p[n]);
      Configuration q = p;
      q[w] = reflect_across_affine_hull(hull, p[w]);

      FrameworkPair pair{Framework{g, p, space}, Framework{g, q, space}, false};
      if (!is_equivalent(pair.first, pair.second))
        fail(Errc::Internal, "reflection pair is not equivalent");
      if (!is_congruent(p, q, space)) return pair;
      // Congruent (w in its own neighbor hull, or a non-generic draw):
      // try the next vertex / next sample.
    }
  }
  fail(Errc::NonGenericSample,
       "reflection produced only congruent pairs; graph may pin every low-degree vertex");
}

}  // namespace rigiditylab
