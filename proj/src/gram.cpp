#include "rigiditylab/gram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rigiditylab {

bool GMatrix::is_real() const {
  for (const auto& e : entries.data())
    if (!e.is_real()) return false;
  return true;
}

RationalMatrix GMatrix::real_entries_checked() const { return real_part_checked(entries); }

GMatrix gram(const Configuration& p, const SpaceDescriptor& space) {
  require(space.kind != SpaceKind::Hyperbolic, Errc::UnsupportedSpace,
          "hyperbolic configurations use locus inner products");
  const int v = p.size();
  const int side = std::max(0, v - 1);
  const int neg = space.neg_count();
  GMatrix g;
  g.side = side;
  g.entries = ComplexMatrix(static_cast<size_t>(side), static_cast<size_t>(side));
  for (int t = 1; t < v; ++t) {
    Point wt = p[t] - p[0];
    for (int u = t; u < v; ++u) {
      Point wu = p[u] - p[0];
      GaussianRational acc;
      for (size_t i = 0; i < wt.size(); ++i) {
        GaussianRational term = wt[i] * wu[i];
        if (static_cast<int>(i) < neg)
          acc -= term;
        else
          acc += term;
      }
      g.entries(static_cast<size_t>(t - 1), static_cast<size_t>(u - 1)) = acc;
      g.entries(static_cast<size_t>(u - 1), static_cast<size_t>(t - 1)) = acc;
    }
  }
  return g;
}

GMatrix gram(const Framework& f) { return gram(f.config, f.space); }

GaussianRational pi_tu(const GMatrix& m, int t, int u) {
  require(t != u, Errc::SameVertex, "pi_tu needs two distinct vertices");
  const int v = m.side + 1;
  require(0 <= t && t < v && 0 <= u && u < v, Errc::DimensionMismatch, "vertex out of range");
  if (t > u) std::swap(t, u);
  const auto& e = m.entries;
  if (t == 0) return e(static_cast<size_t>(u - 1), static_cast<size_t>(u - 1));
  GaussianRational two(Rational(2));
  return e(static_cast<size_t>(t - 1), static_cast<size_t>(t - 1)) +
         e(static_cast<size_t>(u - 1), static_cast<size_t>(u - 1)) -
         two * e(static_cast<size_t>(t - 1), static_cast<size_t>(u - 1));
}

ComplexMatrix pi_K(const GMatrix& m) {
  const int v = m.side + 1;
  ComplexMatrix out(static_cast<size_t>(v), static_cast<size_t>(v));
  for (int t = 0; t < v; ++t)
    for (int u = t + 1; u < v; ++u) {
      GaussianRational val = pi_tu(m, t, u);
      out(static_cast<size_t>(t), static_cast<size_t>(u)) = val;
      out(static_cast<size_t>(u), static_cast<size_t>(t)) = val;
    }
  return out;
}

std::vector<GaussianRational> pi_E(const GMatrix& m, const Graph& graph) {
  require(graph.v == m.side + 1, Errc::DimensionMismatch,
          "graph order does not match g-matrix side");
  std::vector<GaussianRational> out;
  out.reserve(graph.edges.size());
  for (const auto& [t, u] : graph.edges) out.push_back(pi_tu(m, t, u));
  return out;
}

InertiaSignature gmatrix_signature(const GMatrix& m) {
  return inertia(m.real_entries_checked());
}

GMatrix SValuedRealization::gram() const {
  const int n = side();
  GMatrix g;
  g.side = n;
  g.entries = ComplexMatrix(static_cast<size_t>(n), static_cast<size_t>(n));
  for (int t = 0; t < n; ++t)
    for (int u = t; u < n; ++u) {
      Rational acc(0);
      for (int j = 0; j < rank(); ++j) {
        Rational term = scale_sq[static_cast<size_t>(j)] * rows[static_cast<size_t>(j)][static_cast<size_t>(t)] *
                        rows[static_cast<size_t>(j)][static_cast<size_t>(u)];
        if (j < s)
          acc -= term;  // (i sqrt(c) x)(i sqrt(c) y) = -c x y
        else
          acc += term;
      }
      g.entries(static_cast<size_t>(t), static_cast<size_t>(u)) = GaussianRational(acc);
      g.entries(static_cast<size_t>(u), static_cast<size_t>(t)) = GaussianRational(acc);
    }
  return g;
}

bool SValuedRealization::reproduces(const GMatrix& m) const {
  return side() == m.side && gram().entries == m.entries;
}

std::vector<std::vector<std::complex<double>>> SValuedRealization::materialize() const {
  std::vector<std::vector<std::complex<double>>> pts;
  const int n = side();
  pts.reserve(static_cast<size_t>(n) + 1);
  pts.emplace_back(static_cast<size_t>(ambient_d), std::complex<double>(0.0, 0.0));
  for (int u = 0; u < n; ++u) {
    std::vector<std::complex<double>> pt(static_cast<size_t>(ambient_d), {0.0, 0.0});
    for (int j = 0; j < rank(); ++j) {
      double val = std::sqrt(to_double(scale_sq[static_cast<size_t>(j)])) *
                   to_double(rows[static_cast<size_t>(j)][static_cast<size_t>(u)]);
      pt[static_cast<size_t>(j)] = (j < s) ? std::complex<double>(0.0, val)
                                           : std::complex<double>(val, 0.0);
    }
    pts.push_back(std::move(pt));
  }
  return pts;
}

SValuedRealization configuration_from_real_gmatrix(const GMatrix& m, int d) {
  RationalMatrix real = m.real_entries_checked();
  require(real.is_symmetric(), Errc::NotSymmetric, "g-matrix must be symmetric");

  SymmetricDiagonalization dec = symmetric_diagonalize(real);
  const size_t n = real.rows();

  // Order rows negative-first, then positive; zero-diagonal rows drop out.
  std::vector<size_t> order;
  for (size_t j = 0; j < n; ++j)
    if (sgn(dec.diag[j]) < 0) order.push_back(j);
  const int s = static_cast<int>(order.size());
  for (size_t j = 0; j < n; ++j)
    if (sgn(dec.diag[j]) > 0) order.push_back(j);
  const int rank_m = static_cast<int>(order.size());
  require(rank_m <= d, Errc::RankExceedsDimension,
          "g-matrix rank exceeds the requested ambient dimension");

  SValuedRealization out;
  out.ambient_d = d;
  out.s = s;
  out.rows.reserve(order.size());
  out.scale_sq.reserve(order.size());
  for (size_t j : order) {
    std::vector<Rational> row(n);
    for (size_t c = 0; c < n; ++c) row[c] = dec.basis(j, c);
    out.rows.push_back(std::move(row));
    out.scale_sq.push_back(abs(dec.diag[j]));
  }
  require(out.reproduces(m), Errc::Internal, "factorization does not reproduce the g-matrix");
  return out;
}

SignatureReport signature_consistency_check(const std::vector<GMatrix>& ms,
                                            const InertiaSignature& expected) {
  SignatureReport report;
  report.signatures.reserve(ms.size());
  for (size_t i = 0; i < ms.size(); ++i) {
    InertiaSignature sig = gmatrix_signature(ms[i]);
    report.signatures.push_back(sig);
    if (!(sig == expected)) report.mismatched.push_back(i);
  }
  return report;
}

}  // namespace rigiditylab
