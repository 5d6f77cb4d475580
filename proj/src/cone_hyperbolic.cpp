#include "rigiditylab/cone_hyperbolic.hpp"

#include <cmath>

namespace rigiditylab {
namespace {

Rational re_checked(const GaussianRational& c) {
  require(c.is_real(), Errc::NotReal, "expected a real coordinate");
  return c.re;
}

void require_coned(const Framework& f) {
  require(has_cone_shape(f.graph), Errc::GraphMismatch,
          "framework graph is not a coned graph (cone vertex must be last)");
}

int cone_vertex(const Framework& f) { return f.graph.v - 1; }

// Base-relative real coordinates w_t = rho(t) - rho(cone).
std::vector<Rational> relative_real(const Framework& f, int t) {
  Point w = f.config[t] - f.config[cone_vertex(f)];
  std::vector<Rational> out;
  out.reserve(w.size());
  for (const auto& c : w) out.push_back(re_checked(c));
  return out;
}

Graph base_graph_of_coned(const Graph& coned) {
  const int c = coned.v - 1;
  std::vector<std::pair<int, int>> base_edges;
  for (const auto& [t, u] : coned.edges)
    if (t != c && u != c) base_edges.emplace_back(t, u);
  return Graph(coned.v - 1, std::move(base_edges));
}

}  // namespace

Rational minkowski_inner(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  require(x.size() == y.size() && !x.empty(), Errc::DimensionMismatch,
          "minkowski inner product needs matching nonempty vectors");
  Rational acc = -(x[0] * y[0]);
  for (size_t i = 1; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

void HyperbolicPoint::validate() const {
  require(ray.size() >= 2, Errc::DimensionMismatch, "hyperbolic ray needs >= 2 coordinates");
  require(sign(ray[0]) > 0, Errc::ParseError, "hyperbolic ray must have positive first coordinate");
  require(sign(self_inner()) < 0, Errc::ParseError, "hyperbolic ray must be timelike");
}

HyperbolicPoint hyperbolicpoint_unchecked(std::vector<Rational> ray) {
  HyperbolicPoint p{std::move(ray)};
  p.validate();
  return p;
}

HyperbolicPoint hyperbolic_point_from_ball(const std::vector<Rational>& u) {
  Rational r2(0);
  for (const auto& c : u) r2 += c * c;
  require(r2 < 1, Errc::OutsideBall, "ball parameter must satisfy |u|^2 < 1");
  Rational denom = Rational(1) - r2;
  std::vector<Rational> ray;
  ray.reserve(u.size() + 1);
  ray.push_back((Rational(1) + r2) / denom);
  for (const auto& c : u) ray.push_back(Rational(2) * c / denom);
  return hyperbolicpoint_unchecked(std::move(ray));
}

std::vector<Rational> ball_from_hyperbolic_point(const HyperbolicPoint& p) {
  require(p.self_inner() == -1, Errc::Internal,
          "ball parameters are exact only for canonical locus points");
  Rational denom = Rational(1) + p.ray[0];
  std::vector<Rational> u;
  u.reserve(p.ray.size() - 1);
  for (size_t i = 1; i < p.ray.size(); ++i) u.push_back(p.ray[i] / denom);
  return u;
}

void HyperbolicFramework::validate() const {
  require(d >= 1, Errc::DimensionMismatch, "hyperbolic dimension must be >= 1");
  require(static_cast<int>(points.size()) == graph.v, Errc::DimensionMismatch,
          "one point per vertex required");
  for (const auto& p : points) {
    p.validate();
    require(p.ambient_dim() == d + 1, Errc::DimensionMismatch, "ray dimension mismatch");
  }
}

bool normalized_inner_equal(const HyperbolicPoint& x, const HyperbolicPoint& y,
                            const HyperbolicPoint& x2, const HyperbolicPoint& y2) {
  Rational a1 = minkowski_inner(x.ray, y.ray);
  Rational a2 = minkowski_inner(x2.ray, y2.ray);
  if (sign(a1) != sign(a2)) return false;
  Rational b1 = x.self_inner() * y.self_inner();   // positive
  Rational b2 = x2.self_inner() * y2.self_inner();
  return a1 * a1 * b2 == a2 * a2 * b1;
}

bool hyperbolic_equivalent(const HyperbolicFramework& f, const HyperbolicFramework& g) {
  require(f.graph == g.graph, Errc::GraphMismatch, "equivalence needs identical graphs");
  require(f.d == g.d, Errc::DimensionMismatch, "equivalence needs one dimension");
  for (const auto& [t, u] : f.graph.edges)
    if (!normalized_inner_equal(f.points[static_cast<size_t>(t)], f.points[static_cast<size_t>(u)],
                                g.points[static_cast<size_t>(t)], g.points[static_cast<size_t>(u)]))
      return false;
  return true;
}

bool hyperbolic_congruent(const HyperbolicFramework& f, const HyperbolicFramework& g) {
  require(f.graph.v == g.graph.v, Errc::LengthMismatch, "congruence needs equal point counts");
  require(f.d == g.d, Errc::DimensionMismatch, "congruence needs one dimension");
  for (int t = 0; t < f.graph.v; ++t)
    for (int u = t + 1; u < f.graph.v; ++u)
      if (!normalized_inner_equal(f.points[static_cast<size_t>(t)], f.points[static_cast<size_t>(u)],
                                  g.points[static_cast<size_t>(t)], g.points[static_cast<size_t>(u)]))
        return false;
  return true;
}

double hyperbolic_distance(const HyperbolicPoint& x, const HyperbolicPoint& y) {
  double a = to_double(minkowski_inner(x.ray, y.ray));
  double b = std::sqrt(to_double(x.self_inner()) * to_double(y.self_inner()));
  return std::acosh(-a / b);
}

Framework cone_to_minkowski(const HyperbolicFramework& f, const std::vector<Rational>& scales,
                            const std::vector<Rational>& offset) {
  f.validate();
  const int ambient = f.d + 1;
  require(static_cast<int>(scales.size()) == f.graph.v, Errc::DimensionMismatch,
          "one scale per base vertex required");
  require(static_cast<int>(offset.size()) == ambient, Errc::DimensionMismatch,
          "offset dimension mismatch");
  for (const auto& a : scales)
    require(sign(a) > 0, Errc::NonpositiveScale, "vertex scales must be positive");

  Framework out;
  out.graph = cone_graph(f.graph).graph;
  out.space = SpaceDescriptor::minkowski(ambient);
  out.config.points.resize(static_cast<size_t>(out.graph.v));
  for (int t = 0; t < f.graph.v; ++t) {
    Point pt(static_cast<size_t>(ambient));
    for (int i = 0; i < ambient; ++i)
      pt[static_cast<size_t>(i)] = GaussianRational(
          scales[static_cast<size_t>(t)] * f.points[static_cast<size_t>(t)].ray[static_cast<size_t>(i)] +
          offset[static_cast<size_t>(i)]);
    out.config[t] = std::move(pt);
  }
  Point cone_pt(static_cast<size_t>(ambient));
  for (int i = 0; i < ambient; ++i) cone_pt[static_cast<size_t>(i)] = GaussianRational(offset[static_cast<size_t>(i)]);
  out.config[out.graph.v - 1] = std::move(cone_pt);
  out.validate();
  return out;
}

Framework cone_to_minkowski(const HyperbolicFramework& f, std::uint64_t seed, std::int64_t bound) {
  SplitMix64 rng(seed);
  std::vector<Rational> scales;
  scales.reserve(static_cast<size_t>(f.graph.v));
  for (int t = 0; t < f.graph.v; ++t) scales.push_back(Rational(rng.uniform(1, bound)));
  std::vector<Rational> offset;
  const int ambient = f.d + 1;
  offset.reserve(static_cast<size_t>(ambient));
  for (int i = 0; i < ambient; ++i) offset.push_back(Rational(rng.uniform(-bound, bound)));
  return cone_to_minkowski(f, scales, offset);
}

HyperbolicFramework minkowski_to_hyperbolic(const Framework& f) {
  require(f.space.is_minkowski_like(), Errc::SpaceMismatch,
          "input must live in minkowski space");
  require_coned(f);
  require(is_upper_coned(f), Errc::NotUpperConed, "input framework is not upper coned");
  HyperbolicFramework out;
  out.graph = base_graph_of_coned(f.graph);
  out.d = f.space.ambient_dim() - 1;
  out.points.reserve(static_cast<size_t>(out.graph.v));
  for (int t = 0; t < out.graph.v; ++t)
    out.points.push_back(hyperbolicpoint_unchecked(relative_real(f, t)));
  out.validate();
  return out;
}

bool is_spiky(const Framework& f) {
  require(f.space.kind == SpaceKind::Euclidean, Errc::SpaceMismatch,
          "spikiness is a euclidean predicate");
  require_coned(f);
  const int c = cone_vertex(f);
  const int base_v = f.graph.v - 1;
  if (base_v < 1) return false;
  bool far_vertex = false;
  for (int t = 0; t < base_v && !far_vertex; ++t)
    far_vertex = re_checked(squared_length(f.space, f.config[t] - f.config[c])) > 4;
  if (!far_vertex) return false;
  const Rational edge_bound = rational(1, base_v) * rational(1, base_v);
  for (const auto& [t, u] : f.graph.edges) {
    if (t == c || u == c) continue;
    if (!(re_checked(squared_length(f.space, f.config[t] - f.config[u])) < edge_bound))
      return false;
  }
  return true;
}

bool is_upper_cylindrical(const Framework& f) {
  require(f.space.kind == SpaceKind::Euclidean || f.space.is_minkowski_like(),
          Errc::SpaceMismatch, "cylindricality applies in E^{d+1} or M^{d+1}");
  require_coned(f);
  for (int t = 0; t < f.graph.v - 1; ++t) {
    std::vector<Rational> w = relative_real(f, t);
    if (!(w[0] > 1)) return false;
    Rational transverse(0);
    for (size_t i = 1; i < w.size(); ++i) transverse += w[i] * w[i];
    if (!(transverse < 1)) return false;
  }
  return true;
}

namespace {

bool coned_with_sign(const Framework& f, int first_coord_sign) {
  require(f.space.is_minkowski_like(), Errc::SpaceMismatch,
          "conedness is a minkowski-space predicate");
  require_coned(f);
  for (int t = 0; t < f.graph.v - 1; ++t) {
    std::vector<Rational> w = relative_real(f, t);
    if (!(minkowski_inner(w, w) < 0)) return false;
    if (sign(w[0]) != first_coord_sign) return false;
  }
  return true;
}

}  // namespace

bool is_upper_coned(const Framework& f) { return coned_with_sign(f, 1); }
bool is_lower_coned(const Framework& f) { return coned_with_sign(f, -1); }

Framework rotate_spiky_to_cylindrical(const Framework& f) {
  require(is_spiky(f), Errc::NotSpiky, "rotation requires a spiky framework");
  Graph base = base_graph_of_coned(f.graph);
  require(base.connected(), Errc::Disconnected, "rotation requires a connected base graph");

  const int c = cone_vertex(f);
  const int dim = f.space.ambient_dim();
  int far = -1;
  for (int t = 0; t < f.graph.v - 1 && far < 0; ++t)
    if (re_checked(squared_length(f.space, f.config[t] - f.config[c])) > 4) far = t;

  // Householder reflection taking rho(far) - rho(cone) to |.| e_1, applied
  // to all cone-relative coordinates in doubles.
  std::vector<std::vector<double>> w(static_cast<size_t>(f.graph.v));
  for (int t = 0; t < f.graph.v; ++t) {
    std::vector<Rational> rel = relative_real(f, t);
    w[static_cast<size_t>(t)].resize(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) w[static_cast<size_t>(t)][static_cast<size_t>(i)] = to_double(rel[static_cast<size_t>(i)]);
  }
  const std::vector<double>& w0 = w[static_cast<size_t>(far)];
  double n2 = 0;
  for (double x : w0) n2 += x * x;
  const double n = std::sqrt(n2);
  std::vector<double> h(w0);
  h[0] -= n;
  double h2 = 0;
  for (double x : h) h2 += x * x;

  Framework out = f;
  for (int t = 0; t < f.graph.v; ++t) {
    std::vector<double> y = w[static_cast<size_t>(t)];
    if (h2 > 1e-30) {
      double dot = 0;
      for (int i = 0; i < dim; ++i) dot += h[static_cast<size_t>(i)] * y[static_cast<size_t>(i)];
      double fct = 2.0 * dot / h2;
      for (int i = 0; i < dim; ++i) y[static_cast<size_t>(i)] -= fct * h[static_cast<size_t>(i)];
    }
    Point pt(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      mpq_class q;
      mpq_set_d(q.get_mpq_t(), y[static_cast<size_t>(i)]);  // exact binary value
      pt[static_cast<size_t>(i)] = GaussianRational(Rational(q));
    }
    out.config[t] = std::move(pt);
  }
  return out;
}

double measurement_residual(const Framework& f, const Framework& g) {
  std::vector<GaussianRational> mf = edge_measurements(f);
  std::vector<GaussianRational> mg = edge_measurements(g);
  require(mf.size() == mg.size(), Errc::GraphMismatch, "residual needs matching edge counts");
  double worst = 0;
  for (size_t k = 0; k < mf.size(); ++k) {
    GaussianRational d = mf[k] - mg[k];
    worst = std::max(worst, std::abs(to_double(d.re)));
    worst = std::max(worst, std::abs(to_double(d.im)));
  }
  return worst;
}

std::pair<FrameworkPair, bool> pogorelov_preserves_cylindrical(const FrameworkPair& pair) {
  pair.validate();
  require(pair.first.space.kind == SpaceKind::Euclidean, Errc::SpaceMismatch,
          "cylindrical transfer starts from euclidean frameworks");
  require(is_upper_cylindrical(pair.first) && is_upper_cylindrical(pair.second),
          Errc::NotCylindrical, "both inputs must be upper cylindrical");
  FrameworkPair mapped = pogorelov(pair, 1);
  mapped.first.space = SpaceDescriptor::minkowski(pair.first.space.d);
  mapped.second.space = mapped.first.space;
  bool preserved = is_upper_cylindrical(mapped.first) && is_upper_cylindrical(mapped.second);
  return {std::move(mapped), preserved};
}

Sheet sheet_classification(const FrameworkPair& pair) {
  pair.validate();
  require(base_graph_of_coned(pair.first.graph).connected(), Errc::Disconnected,
          "sheet classification requires a connected base graph");
  require(is_upper_coned(pair.first), Errc::NotUpperConed,
          "first framework must be upper coned");
  require(is_equivalent(pair.first, pair.second), Errc::NotEquivalent,
          "sheet classification requires an equivalent pair");
  if (is_upper_coned(pair.second)) return Sheet::Upper;
  if (is_lower_coned(pair.second)) return Sheet::Lower;
  fail(Errc::SheetAmbiguous,
       "second framework lies on neither sheet; non-generic input suspected");
}

ConeTransferVerdicts cone_verdict_transfer(const Graph& g, int d, std::uint64_t seed,
                                           const GenericityPolicy& policy) {
  ConeTransferVerdicts out;
  out.base = ggr_test(g, d, Field::Real, mix_seed(seed, 0xBA5E), policy);
  out.coned = ggr_test(cone_graph(g).graph, d + 1, Field::Real, mix_seed(seed, 0xC04ED), policy);
  return out;
}

FrameworkPair build_cylindrical_reflection_pair(const Graph& base, int d, std::uint64_t seed,
                                                std::int64_t bound, int retries) {
  const int ambient = d + 1;
  const ConedGraph coned = cone_graph(base);
  std::vector<int> reflectable;
  for (int t = 0; t < base.v; ++t)
    if (base.degree(t) <= d) reflectable.push_back(t);
  require(!reflectable.empty(), Errc::NoReflectableVertex,
          "every base vertex has degree > d; no reflection is available");

  const SpaceDescriptor space = SpaceDescriptor::euclidean(ambient);
  // Numerator bound / denominator chosen so the cluster sits inside the
  // cylinder around (2, 0, ..., 0) with room for the reflected vertex.
  const std::int64_t denom = 8 * static_cast<std::int64_t>(ambient) * bound;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(attempt), 0xC1AD));
    Configuration p;
    p.points.resize(static_cast<size_t>(coned.graph.v));
    for (int t = 0; t < base.v; ++t) {
      Point pt(static_cast<size_t>(ambient));
      pt[0] = GaussianRational(Rational(2) + rational(rng.uniform(-bound, bound), denom));
      for (int i = 1; i < ambient; ++i)
        pt[static_cast<size_t>(i)] = GaussianRational(rational(rng.uniform(-bound, bound), denom));
      p[t] = std::move(pt);
    }
    p[coned.cone_vertex] = Point(static_cast<size_t>(ambient));  // cone at the origin

    for (int w : reflectable) {
      std::vector<Point> hull;
      for (int nb : coned.graph.neighbors(w)) hull.push_back(p[nb]);
      Configuration q = p;
      q[w] = reflect_across_affine_hull(hull, p[w]);

      FrameworkPair pair{Framework{coned.graph, p, space}, Framework{coned.graph, q, space}, false};
      if (!is_equivalent(pair.first, pair.second))
        fail(Errc::Internal, "reflection pair is not equivalent");
      if (!is_upper_cylindrical(pair.first) || !is_upper_cylindrical(pair.second)) continue;
      if (is_congruent(p, q, space)) continue;
      return pair;
    }
  }
  fail(Errc::NonGenericSample, "could not realize a cylindrical non-congruent reflection pair");
}

HyperbolicVerdict hyperbolic_ggr_verdict(const Graph& g, int d, std::uint64_t seed,
                                         const GenericityPolicy& policy, bool want_witness) {
  HyperbolicVerdict out;
  out.verdict = ggr_test(g, d, Field::Real, seed, policy);
  out.verdict.space = "hyperbolic";
  out.verdict.transfer_derived = true;
  if (want_witness && out.verdict.verdict == Verdict::GGF) {
    FrameworkPair cyl = build_cylindrical_reflection_pair(g, d, mix_seed(seed, 0x48AB), policy.bound);
    auto [mapped, preserved] = pogorelov_preserves_cylindrical(cyl);
    require(preserved, Errc::Internal, "cylindricality lost under the average/difference map");
    require(is_upper_coned(mapped.first) && is_upper_coned(mapped.second), Errc::Internal,
            "cylindrical transfer output is not upper coned");
    HyperbolicPair witness{minkowski_to_hyperbolic(mapped.first),
                           minkowski_to_hyperbolic(mapped.second)};
    require(hyperbolic_equivalent(witness.first, witness.second), Errc::Internal,
            "hyperbolic witness lost equivalence");
    require(!hyperbolic_congruent(witness.first, witness.second), Errc::Internal,
            "hyperbolic witness became congruent");
    out.witness = std::move(witness);
  }
  return out;
}

}  // namespace rigiditylab
