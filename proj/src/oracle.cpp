#include "rigiditylab/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "rigiditylab/gram.hpp"

namespace rigiditylab {
namespace {

Rational re_of(const GaussianRational& c) {
  require(c.is_real(), Errc::NotReal, "1D enumeration needs real coordinates");
  return c.re;
}

struct TreeEdge {
  int parent, child;
  size_t edge_index;
};

std::vector<TreeEdge> spanning_tree(const Graph& g) {
  std::vector<std::vector<std::pair<int, size_t>>> adj(static_cast<size_t>(g.v));
  for (size_t k = 0; k < g.edges.size(); ++k) {
    const auto [t, u] = g.edges[k];
    adj[static_cast<size_t>(t)].push_back({u, k});
    adj[static_cast<size_t>(u)].push_back({t, k});
  }
  std::vector<bool> seen(static_cast<size_t>(g.v), false);
  std::vector<TreeEdge> tree;
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (const auto& [u, k] : adj[static_cast<size_t>(t)])
      if (!seen[static_cast<size_t>(u)]) {
        seen[static_cast<size_t>(u)] = true;
        tree.push_back({t, u, k});
        stack.push_back(u);
      }
  }
  return tree;
}

}  // namespace

RealizationSet enumerate_1d(const Graph& g, const Configuration& base_config) {
  require(g.connected(), Errc::Disconnected, "1D enumeration requires a connected graph");
  require(base_config.size() == g.v, Errc::DimensionMismatch, "configuration size mismatch");

  const SpaceDescriptor space = SpaceDescriptor::euclidean(1);
  RealizationSet out;
  out.d = 1;
  out.exactness = Exactness::Exact;

  std::vector<Rational> edge_abs(g.edges.size());
  for (size_t k = 0; k < g.edges.size(); ++k) {
    const auto [t, u] = g.edges[k];
    Rational diff = re_of(base_config[t][0]) - re_of(base_config[u][0]);
    edge_abs[k] = abs(diff);
    out.exact_measurements.push_back(diff * diff);
    out.measurements.push_back(to_double(out.exact_measurements.back()));
  }

  const std::vector<TreeEdge> tree = spanning_tree(g);
  std::vector<bool> in_tree(g.edges.size(), false);
  for (const auto& te : tree) in_tree[te.edge_index] = true;

  std::vector<ComplexMatrix> seen_grams;
  const size_t n_tree = tree.size();
  // First tree-edge sign pinned: a global flip is a congruence.
  const std::uint64_t combos = n_tree == 0 ? 1 : (1ULL << (n_tree - 1));
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    Configuration q;
    q.points.assign(static_cast<size_t>(g.v), Point{GaussianRational(Rational(0))});
    for (size_t j = 0; j < n_tree; ++j) {
      const TreeEdge& te = tree[j];
      const bool negative = j > 0 && ((mask >> (j - 1)) & 1ULL);
      Rational step = negative ? Rational(-edge_abs[te.edge_index]) : edge_abs[te.edge_index];
      q[te.child][0] = GaussianRational(Rational(re_of(q[te.parent][0]) + step));
    }
    bool consistent = true;
    for (size_t k = 0; k < g.edges.size() && consistent; ++k) {
      if (in_tree[k]) continue;
      const auto [t, u] = g.edges[k];
      Rational diff = re_of(q[t][0]) - re_of(q[u][0]);
      consistent = diff * diff == out.exact_measurements[k];
    }
    if (!consistent) continue;
    ComplexMatrix gm = gram(q, space).entries;
    bool duplicate = false;
    for (const auto& seen : seen_grams)
      if (seen == gm) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    seen_grams.push_back(std::move(gm));
    out.representatives.push_back(std::move(q));
  }
  return out;
}

namespace {

// One converged (or failed) Newton start, already gauge-canonicalized.
struct StartResult {
  bool converged = false;
  double residual = 0.0;
  std::vector<double> coords;  // x1, x2, y2, x3, y3, ...
};

double squared_dist(const std::vector<double>& xy, int t, int u) {
  double dx = xy[2 * static_cast<size_t>(t)] - xy[2 * static_cast<size_t>(u)];
  double dy = xy[2 * static_cast<size_t>(t) + 1] - xy[2 * static_cast<size_t>(u) + 1];
  return dx * dx + dy * dy;
}

// Unknown vector -> per-vertex coordinates with the gauge applied.
std::vector<double> unpack(const std::vector<double>& z, int v) {
  std::vector<double> xy(2 * static_cast<size_t>(v), 0.0);
  xy[2] = z[0];
  for (int t = 2; t < v; ++t) {
    xy[2 * static_cast<size_t>(t)] = z[static_cast<size_t>(2 * t - 3)];
    xy[2 * static_cast<size_t>(t) + 1] = z[static_cast<size_t>(2 * t - 2)];
  }
  return xy;
}

// Dense symmetric positive-definite solve (Cholesky with jitter fallback).
bool solve_spd(std::vector<double>& a, std::vector<double>& b, int n) {
  for (int k = 0; k < n; ++k) {
    double d = a[static_cast<size_t>(k * n + k)];
    if (!(d > 1e-300)) return false;
    double inv = 1.0 / d;
    for (int i = k + 1; i < n; ++i) {
      double f = a[static_cast<size_t>(i * n + k)] * inv;
      if (f == 0.0) continue;
      for (int j = k; j < n; ++j)
        a[static_cast<size_t>(i * n + j)] -= f * a[static_cast<size_t>(k * n + j)];
      b[static_cast<size_t>(i)] -= f * b[static_cast<size_t>(k)];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double acc = b[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) acc -= a[static_cast<size_t>(i * n + j)] * b[static_cast<size_t>(j)];
    b[static_cast<size_t>(i)] = acc / a[static_cast<size_t>(i * n + i)];
  }
  return true;
}

StartResult newton_start(const Graph& g, const std::vector<double>& targets, double scale,
                         std::uint64_t seed, int max_iters, double residual_tol) {
  const int v = g.v;
  const int n = 2 * v - 3;
  const int e = g.e();
  SplitMix64 rng(seed);
  std::vector<double> z(static_cast<size_t>(n));
  for (double& x : z) x = (2.0 * rng.uniform_real() - 1.0) * 2.0 * scale;

  auto residuals = [&](const std::vector<double>& zz, std::vector<double>& f) {
    std::vector<double> xy = unpack(zz, v);
    double worst = 0.0;
    for (int k = 0; k < e; ++k) {
      const auto [t, u] = g.edges[static_cast<size_t>(k)];
      f[static_cast<size_t>(k)] = squared_dist(xy, t, u) - targets[static_cast<size_t>(k)];
      worst = std::max(worst, std::abs(f[static_cast<size_t>(k)]));
    }
    return worst;
  };

  std::vector<double> f(static_cast<size_t>(e));
  double worst = residuals(z, f);
  double lambda = 1e-3 * scale * scale;
  StartResult result;
  for (int iter = 0; iter < max_iters; ++iter) {
    if (worst <= residual_tol * 1e-3) break;
    // Jacobian of the squared-length system w.r.t. the reduced unknowns.
    std::vector<double> xy = unpack(z, v);
    std::vector<double> jac(static_cast<size_t>(e) * static_cast<size_t>(n), 0.0);
    auto var_index = [v](int t, int coord) -> int {
      if (t == 0) return -1;
      if (t == 1) return coord == 0 ? 0 : -1;
      return 2 * t - 3 + coord;
    };
    for (int k = 0; k < e; ++k) {
      const auto [t, u] = g.edges[static_cast<size_t>(k)];
      for (int coord = 0; coord < 2; ++coord) {
        double diff = 2.0 * (xy[2 * static_cast<size_t>(t) + static_cast<size_t>(coord)] -
                             xy[2 * static_cast<size_t>(u) + static_cast<size_t>(coord)]);
        int it = var_index(t, coord);
        int iu = var_index(u, coord);
        if (it >= 0) jac[static_cast<size_t>(k * n + it)] += diff;
        if (iu >= 0) jac[static_cast<size_t>(k * n + iu)] -= diff;
      }
    }
    // Normal equations with Levenberg damping.
    std::vector<double> jtj(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
    std::vector<double> jtf(static_cast<size_t>(n), 0.0);
    for (int k = 0; k < e; ++k) {
      for (int i = 0; i < n; ++i) {
        double jki = jac[static_cast<size_t>(k * n + i)];
        if (jki == 0.0) continue;
        jtf[static_cast<size_t>(i)] += jki * f[static_cast<size_t>(k)];
        for (int j = i; j < n; ++j)
          jtj[static_cast<size_t>(i * n + j)] += jki * jac[static_cast<size_t>(k * n + j)];
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) jtj[static_cast<size_t>(i * n + j)] = jtj[static_cast<size_t>(j * n + i)];

    bool stepped = false;
    for (int tries = 0; tries < 8 && !stepped; ++tries) {
      std::vector<double> a = jtj;
      for (int i = 0; i < n; ++i) a[static_cast<size_t>(i * n + i)] += lambda;
      std::vector<double> step = jtf;
      if (!solve_spd(a, step, n)) {
        lambda *= 10.0;
        continue;
      }
      std::vector<double> z_new = z;
      for (int i = 0; i < n; ++i) z_new[static_cast<size_t>(i)] -= step[static_cast<size_t>(i)];
      std::vector<double> f_new(static_cast<size_t>(e));
      double worst_new = residuals(z_new, f_new);
      if (worst_new < worst) {
        z = std::move(z_new);
        f = std::move(f_new);
        worst = worst_new;
        lambda = std::max(lambda / 3.0, 1e-14);
        stepped = true;
      } else {
        lambda *= 4.0;
      }
    }
    if (!stepped) break;
  }
  if (worst > residual_tol) return result;  // not converged

  // Canonical congruence-class representative: x1 > 0 (rotate by pi),

  // then first clearly off-axis vertex gets positive y (reflection).
  std::vector<double> xy = unpack(z, v);
  if (xy[2] < 0)
    for (double& c : xy) c = -c;
  for (int t = 2; t < v; ++t) {
    double y = xy[2 * static_cast<size_t>(t) + 1];
    if (std::abs(y) > 1e-7 * std::max(1.0, scale)) {
      if (y < 0)
        for (int s = 0; s < v; ++s) xy[2 * static_cast<size_t>(s) + 1] = -xy[2 * static_cast<size_t>(s) + 1];
      break;
    }
  }
  result.converged = true;
  result.residual = worst;
  result.coords = std::move(xy);
  return result;
}

double gmatrix_distance(const std::vector<double>& a, const std::vector<double>& b, int v) {
  // Frobenius distance of vertex-0-based float g-matrices, normalized.
  double diff2 = 0.0, na = 0.0, nb = 0.0;
  for (int t = 1; t < v; ++t)
    for (int u = 1; u < v; ++u) {
      double ga = a[2 * static_cast<size_t>(t)] * a[2 * static_cast<size_t>(u)] +
                  a[2 * static_cast<size_t>(t) + 1] * a[2 * static_cast<size_t>(u) + 1];
      double gb = b[2 * static_cast<size_t>(t)] * b[2 * static_cast<size_t>(u)] +
                  b[2 * static_cast<size_t>(t) + 1] * b[2 * static_cast<size_t>(u) + 1];
      diff2 += (ga - gb) * (ga - gb);
      na += ga * ga;
      nb += gb * gb;
    }
  return std::sqrt(diff2) / std::max(1.0, std::sqrt(std::max(na, nb)));
}

}  // namespace

RealizationSet enumerate_2d_heuristic(const Graph& g, const std::vector<double>& measurements,
                                      const Enum2DOptions& options) {
  require(measurements.size() == g.edges.size(), Errc::DimensionMismatch,
          "one measurement per edge required");
  require(g.v >= 3, Errc::DimensionMismatch, "2D enumeration needs at least 3 vertices");
  require(is_locally_rigid_generic(g, SpaceDescriptor::euclidean(2),
                                   mix_seed(options.seed, 0x10C2), options.rigidity_policy),
          Errc::NotLocallyRigid, "graph is generically flexible in the plane");

  double max_m = 0.0;
  for (double m : measurements) max_m = std::max(max_m, std::abs(m));
  const double scale = std::sqrt(std::max(max_m, 1e-12));

  std::vector<StartResult> results(static_cast<size_t>(options.n_starts));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (long i = 0; i < static_cast<long>(options.n_starts); ++i) {
    results[static_cast<size_t>(i)] =
        newton_start(g, measurements, scale, mix_seed(options.seed, static_cast<std::uint64_t>(i), 0x57A7),
                     options.max_iterations, options.residual_tol);
  }

  RealizationSet out;
  out.d = 2;
  out.exactness = Exactness::Heuristic;
  out.measurements = measurements;
  std::vector<std::vector<double>> reps;
  for (const StartResult& r : results) {
    if (!r.converged) continue;
    bool duplicate = false;
    for (const auto& rep : reps)
      if (gmatrix_distance(rep, r.coords, g.v) < options.dedup_tol) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    reps.push_back(r.coords);
    out.residual_max = std::max(out.residual_max, r.residual);
    Configuration cfg;
    cfg.points.reserve(static_cast<size_t>(g.v));
    for (int t = 0; t < g.v; ++t) {
      mpq_class x, y;
      mpq_set_d(x.get_mpq_t(), r.coords[2 * static_cast<size_t>(t)]);
      mpq_set_d(y.get_mpq_t(), r.coords[2 * static_cast<size_t>(t) + 1]);
      cfg.points.push_back(Point{GaussianRational(Rational(x)), GaussianRational(Rational(y))});
    }
    out.representatives.push_back(std::move(cfg));
  }
  return out;
}

ParityReport parity_report(const RealizationSet& rs, const GGRVerdict& verdict) {
  ParityReport report;
  report.classes = rs.classes();
  report.even = report.classes % 2 == 0;
  report.exactness = rs.exactness;
  report.residual_max = rs.residual_max;
  switch (verdict.verdict) {
    case Verdict::GGF:
      report.theorem_applies = true;
      report.consistent_with_theory = report.even;
      report.detail = "GGF: an even class count is predicted";
      break;
    case Verdict::GGR:
    case Verdict::SMALL_COMPLETE:
      report.theorem_applies = false;
      report.consistent_with_theory = report.classes == 1;
      report.detail = "GGR: the parity statement does not apply; one class expected";
      break;
    default:
      report.theorem_applies = false;
      report.consistent_with_theory = true;
      report.detail = "no prediction for flexible or small incomplete graphs";
      break;
  }
  return report;
}

}  // namespace rigiditylab
