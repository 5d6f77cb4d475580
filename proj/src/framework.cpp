#include "rigiditylab/framework.hpp"

#include <algorithm>

#include "rigiditylab/gram.hpp"

namespace rigiditylab {

Point operator+(const Point& a, const Point& b) {
  require(a.size() == b.size(), Errc::DimensionMismatch, "point sum");
  Point c = a;
  for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

Point operator-(const Point& a, const Point& b) {
  require(a.size() == b.size(), Errc::DimensionMismatch, "point difference");
  Point c = a;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

Point operator*(const GaussianRational& c, const Point& a) {
  Point out = a;
  for (auto& x : out) x *= c;
  return out;
}

void Framework::validate() const {
  space.validate();
  require(config.size() == graph.v, Errc::DimensionMismatch,
          "configuration length must equal vertex count");
  const size_t ambient = static_cast<size_t>(space.ambient_dim());
  for (const Point& pt : config.points) {
    require(pt.size() == ambient, Errc::DimensionMismatch, "point dimension mismatch");
    if (space.is_real())
      for (const auto& c : pt)
        require(c.is_real(), Errc::NotReal, "real-space coordinate with imaginary part");
  }
}

GaussianRational squared_length(const SpaceDescriptor& space, const Point& w) {
  require(space.kind != SpaceKind::Hyperbolic, Errc::UnsupportedSpace,
          "hyperbolic lengths go through locus inner products");
  require(static_cast<int>(w.size()) == space.ambient_dim(), Errc::DimensionMismatch,
          "vector dimension mismatch");
  const int neg = space.neg_count();
  GaussianRational acc;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    GaussianRational sq = w[static_cast<size_t>(i)] * w[static_cast<size_t>(i)];
    if (i < neg)
      acc -= sq;
    else
      acc += sq;
  }
  return acc;
}

std::vector<GaussianRational> edge_measurements(const Framework& f) {
  std::vector<GaussianRational> out;
  out.reserve(f.graph.edges.size());
  for (const auto& [t, u] : f.graph.edges)
    out.push_back(squared_length(f.space, f.config[t] - f.config[u]));
  return out;
}

bool is_equivalent(const Framework& f, const Framework& g) {
  require(f.graph == g.graph, Errc::GraphMismatch, "equivalence needs identical graphs");
  require(f.space == g.space, Errc::SpaceMismatch, "equivalence needs identical spaces");
  return edge_measurements(f) == edge_measurements(g);
}

bool is_congruent(const Configuration& p, const Configuration& q, const SpaceDescriptor& space) {
  require(p.size() == q.size(), Errc::LengthMismatch, "congruence needs equal point counts");
  return gram(p, space).entries == gram(q, space).entries;
}

namespace {

// Vectors of p relative to vertex 0, as columns of an ambient x (v-1)
// matrix.
ComplexMatrix vectors_of(const Configuration& p) {
  const int v = p.size();
  const size_t ambient = v > 0 ? p[0].size() : 0;
  ComplexMatrix m(ambient, static_cast<size_t>(std::max(0, v - 1)));
  for (int t = 1; t < v; ++t) {
    Point w = p[t] - p[0];
    for (size_t i = 0; i < ambient; ++i) m(i, static_cast<size_t>(t - 1)) = w[i];
  }
  return m;
}

}  // namespace

int affine_span_dim(const Configuration& p) {
  if (p.size() <= 1) return 0;
  return static_cast<int>(rank(vectors_of(p)));
}

CongruenceWitness strong_congruence_witness(const Configuration& p, const Configuration& q,
                                            const SpaceDescriptor& space) {
  require(p.size() == q.size(), Errc::LengthMismatch, "witness needs equal point counts");
  const int d = space.ambient_dim();
  require(p.size() >= 1, Errc::LengthMismatch, "empty configuration");
  if (!is_congruent(p, q, space)) fail(Errc::NotCongruent, "inputs are not congruent");
  require(affine_span_dim(p) == d, Errc::DegenerateSpan,
          "witness recovery requires a full-dimensional affine span");

  // Pick d vertices whose vectors form a basis; the form restricted to a
  // full-span basis is nondegenerate, so the same indices work for q.
  ComplexMatrix pv = vectors_of(p);
  std::vector<int> basis;
  {
    ComplexMatrix probe(pv.rows(), 0);
    std::vector<size_t> chosen;
    for (size_t c = 0; c < pv.cols() && chosen.size() < static_cast<size_t>(d); ++c) {
      ComplexMatrix trial(pv.rows(), chosen.size() + 1);
      for (size_t r = 0; r < pv.rows(); ++r) {
        for (size_t k = 0; k < chosen.size(); ++k) trial(r, k) = pv(r, chosen[k]);
        trial(r, chosen.size()) = pv(r, c);
      }
      if (rank(trial) == chosen.size() + 1) chosen.push_back(c);
    }
    require(chosen.size() == static_cast<size_t>(d), Errc::Internal, "basis search failed");
    for (size_t c : chosen) basis.push_back(static_cast<int>(c) + 1);
  }

  auto basis_matrix = [&](const Configuration& cfg) {
    ComplexMatrix b(static_cast<size_t>(d), static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
      Point w = cfg[basis[static_cast<size_t>(k)]] - cfg[0];
      for (int i = 0; i < d; ++i) b(static_cast<size_t>(i), static_cast<size_t>(k)) = w[static_cast<size_t>(i)];
    }
    return b;
  };
  ComplexMatrix pb = basis_matrix(p);
  ComplexMatrix qb = basis_matrix(q);
  auto pb_inv = try_invert(pb);
  require(pb_inv.has_value(), Errc::Internal, "basis matrix not invertible");
  ComplexMatrix o = qb * (*pb_inv);

  // Both checks are guaranteed by congruence plus full span; a failure
  // here would be a bug, not a property of the input.
  ComplexMatrix s = complexify(space.form_matrix());
  require(o.transpose() * s * o == s, Errc::Internal, "recovered transform is not an isometry");
  for (int t = 0; t < p.size(); ++t) {
    Point w = p[t] - p[0];
    Point expect = q[t] - q[0];
    std::vector<GaussianRational> got = o.apply(w);
    require(std::equal(got.begin(), got.end(), expect.begin(), expect.end()), Errc::Internal,
            "recovered transform does not reproduce q");
  }

  Point tau = q[0] - o.apply(p[0]);
  return CongruenceWitness{std::move(o), std::move(tau)};
}

Framework embed_real_as_complex(const Framework& f) {
  require(f.space.kind == SpaceKind::Euclidean, Errc::SpaceMismatch,
          "embed_real_as_complex expects a euclidean framework");
  Framework out = f;
  out.space = SpaceDescriptor::complex_space(f.space.d);
  return out;
}

Framework embed_s_valued(const Framework& f) {
  require(f.space.kind == SpaceKind::Pseudo || f.space.kind == SpaceKind::Euclidean ||
              f.space.kind == SpaceKind::Minkowski,
          Errc::SpaceMismatch, "embed_s_valued expects a real-metric framework");
  const int s = f.space.neg_count();
  Framework out = f;
  out.space = SpaceDescriptor::complex_space(f.space.ambient_dim());
  const GaussianRational i = imaginary_unit();
  for (auto& pt : out.config.points)
    for (int j = 0; j < s; ++j) pt[static_cast<size_t>(j)] *= i;
  return out;
}

bool is_s_valued(const Configuration& p, int s) {
  for (const Point& pt : p.points)
    for (size_t j = 0; j < pt.size(); ++j) {
      if (static_cast<int>(j) < s) {
        if (!(pt[j].re == 0)) return false;
      } else {
        if (!pt[j].is_real()) return false;
      }
    }
  return true;
}

bool is_s_valued(const Framework& f, int s) {
  require(f.space.is_complex(), Errc::SpaceMismatch, "s-valuedness is a complex-space predicate");
  return is_s_valued(f.config, s);
}

Configuration random_configuration(int v, const SpaceDescriptor& space, std::int64_t bound,
                                   std::uint64_t seed) {
  const int ambient = space.ambient_dim();
  SplitMix64 rng(seed);
  Configuration cfg;
  cfg.points.reserve(static_cast<size_t>(v));
  for (int t = 0; t < v; ++t) {
    std::vector<Rational> re = random_rational_vector(ambient, bound, rng);
    Point pt(static_cast<size_t>(ambient));
    if (space.is_complex()) {
      std::vector<Rational> im = random_rational_vector(ambient, bound, rng);
      for (int i = 0; i < ambient; ++i)
        pt[static_cast<size_t>(i)] = GaussianRational(re[static_cast<size_t>(i)], im[static_cast<size_t>(i)]);
    } else {
      for (int i = 0; i < ambient; ++i) pt[static_cast<size_t>(i)] = GaussianRational(re[static_cast<size_t>(i)]);
    }
    cfg.points.push_back(std::move(pt));
  }
  return cfg;
}

Framework random_framework(const Graph& g, const SpaceDescriptor& space, std::int64_t bound,
                           std::uint64_t seed) {
  Framework f{g, random_configuration(g.v, space, bound, seed), space};
  f.validate();
  return f;
}

Configuration transform_configuration(const Configuration& p, const ComplexMatrix& o,
                                      const Point& tau) {
  Configuration out;
  out.points.reserve(p.points.size());
  for (const Point& pt : p.points) {
    std::vector<GaussianRational> y = o.apply(pt);
    Point moved(y.begin(), y.end());
    out.points.push_back(moved + tau);
  }
  return out;
}

}  // namespace rigiditylab
