#include "rigiditylab/rigidity.hpp"

namespace rigiditylab {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::GGR: return "GGR";
    case Verdict::GGF: return "GGF";
    case Verdict::FLEXIBLE: return "FLEXIBLE";
    case Verdict::SMALL_COMPLETE: return "SMALL_COMPLETE";
    case Verdict::SMALL_INCOMPLETE: return "SMALL_INCOMPLETE";
  }
  return "?";
}

const char* field_name(Field f) { return f == Field::Real ? "real" : "complex"; }

ComplexMatrix rigidity_matrix(const Framework& f) {
  require(f.space.kind != SpaceKind::Hyperbolic, Errc::UnsupportedSpace,
          "cone a hyperbolic framework before building its rigidity matrix");
  f.validate();
  const int v = f.graph.v;
  const int dim = f.space.ambient_dim();
  const int neg = f.space.neg_count();
  ComplexMatrix r(f.graph.edges.size(), static_cast<size_t>(v) * static_cast<size_t>(dim));
  for (size_t k = 0; k < f.graph.edges.size(); ++k) {
    const auto [t, u] = f.graph.edges[k];
    Point w = f.config[t] - f.config[u];
    for (int i = 0; i < dim; ++i) {
      GaussianRational entry = w[static_cast<size_t>(i)];
      if (i < neg) entry = -entry;
      r(k, static_cast<size_t>(t * dim + i)) = entry;
      r(k, static_cast<size_t>(u * dim + i)) = -entry;
    }
  }
  return r;
}

bool is_locally_rigid_generic(const Graph& g, const SpaceDescriptor& space, std::uint64_t seed,
                              const GenericityPolicy& policy) {
  const int dim = space.ambient_dim();
  if (g.v <= dim + 1) return g.is_complete();
  const size_t target = static_cast<size_t>(g.v) * static_cast<size_t>(dim) -
                        static_cast<size_t>(trivial_motion_dim(dim));
  for (int attempt = 0; attempt <= policy.retries; ++attempt) {
    Framework f = random_framework(g, space, policy.bound,
                                   mix_seed(seed, static_cast<std::uint64_t>(attempt), 0x10CA1));
    if (rank(rigidity_matrix(f)) == target) return true;
  }
  return false;
}

std::vector<std::vector<GaussianRational>> equilibrium_stress_basis(const Framework& f) {
  ComplexMatrix rt = rigidity_matrix(f).transpose();
  std::vector<std::vector<GaussianRational>> basis = nullspace_basis(rt);
  // Re-verify each vector against the per-vertex equilibrium sums.
  const int dim = f.space.ambient_dim();
  for (const auto& stress : basis) {
    for (int t = 0; t < f.graph.v; ++t) {
      Point sum(static_cast<size_t>(dim), GaussianRational(Rational(0)));
      for (size_t k = 0; k < f.graph.edges.size(); ++k) {
        const auto [a, b] = f.graph.edges[k];
        if (a != t && b != t) continue;
        int other = a == t ? b : a;
        sum = sum + stress[k] * (f.config[t] - f.config[other]);
      }
      for (const auto& c : sum)
        require(c.is_zero(), Errc::Internal, "stress basis vector violates equilibrium");
    }
  }
  return basis;
}

ComplexMatrix stress_matrix(const Graph& g, const std::vector<GaussianRational>& stress) {
  require(stress.size() == g.edges.size(), Errc::DimensionMismatch,
          "one stress entry per edge required");
  ComplexMatrix omega(static_cast<size_t>(g.v), static_cast<size_t>(g.v));
  for (size_t k = 0; k < g.edges.size(); ++k) {
    const auto [t, u] = g.edges[k];
    omega(static_cast<size_t>(t), static_cast<size_t>(u)) = -stress[k];
    omega(static_cast<size_t>(u), static_cast<size_t>(t)) = -stress[k];
    omega(static_cast<size_t>(t), static_cast<size_t>(t)) += stress[k];
    omega(static_cast<size_t>(u), static_cast<size_t>(u)) += stress[k];
  }
  return omega;
}

GGRVerdict ggr_test(const Graph& g, int d, Field field, std::uint64_t seed,
                    const GenericityPolicy& policy) {
  require(d >= 1, Errc::DimensionMismatch, "dimension must be positive");
  const SpaceDescriptor space =
      field == Field::Real ? SpaceDescriptor::euclidean(d) : SpaceDescriptor::complex_space(d);
  GGRVerdict out;
  out.d = d;
  out.field = field;
  out.space = space.kind_name();

  if (g.v <= d + 1) {
    out.verdict = g.is_complete() ? Verdict::SMALL_COMPLETE : Verdict::SMALL_INCOMPLETE;
    return out;
  }
  if (!is_locally_rigid_generic(g, space, mix_seed(seed, 0xA110), policy)) {
    out.verdict = Verdict::FLEXIBLE;
    return out;
  }

  const int target = g.v - d - 1;
  for (int attempt = 0; attempt <= policy.retries; ++attempt) {
    const std::uint64_t cfg_seed = mix_seed(seed, static_cast<std::uint64_t>(attempt), 0xC0F1);
    Framework f = random_framework(g, space, policy.bound, cfg_seed);
    out.seeds.push_back(cfg_seed);
    auto basis = equilibrium_stress_basis(f);
    if (basis.empty()) {
      out.ranks.push_back(0);
      continue;
    }
    // Random rational combination of the basis; generically of maximal
    // rank within the stress space.
    SplitMix64 combo_rng(mix_seed(seed, static_cast<std::uint64_t>(attempt), 0x5E5A));
    std::vector<GaussianRational> stress(g.edges.size(), GaussianRational(Rational(0)));
    for (const auto& vec : basis) {
      GaussianRational c(Rational(combo_rng.uniform(-policy.bound, policy.bound)));
      if (field == Field::Complex)
        c.im = Rational(combo_rng.uniform(-policy.bound, policy.bound));
      for (size_t k = 0; k < stress.size(); ++k) stress[k] += c * vec[k];
    }
    const int r = static_cast<int>(rank(stress_matrix(g, stress)));
    out.ranks.push_back(r);
    if (r == target) {
      out.verdict = Verdict::GGR;
      out.witness_stress = std::move(stress);
      return out;
    }
  }
  out.verdict = Verdict::GGF;
  return out;
}

PseudoVerdict pseudo_ggr_verdict(const Graph& g, int d, int s, std::uint64_t seed,
                                 const GenericityPolicy& policy, bool want_witness) {
  require(0 <= s && s <= d, Errc::SignatureOutOfRange, "signature count out of range");
  PseudoVerdict out;
  out.verdict = ggr_test(g, d, Field::Real, seed, policy);
  out.verdict.s = s;
  if (s != 0) {
    out.verdict.space = "pseudo";
    out.verdict.transfer_derived = true;
  }
  if (want_witness && s != 0 && out.verdict.verdict == Verdict::GGF) {
    FrameworkPair base =
        build_noncongruent_equivalent_pair(g, d, mix_seed(seed, 0xB17D), policy.bound, policy.retries);
    FrameworkPair mapped = pogorelov(base, s);
    require(is_equivalent(mapped.first, mapped.second), Errc::Internal,
            "witness pair lost equivalence");
    require(!is_congruent(mapped.first.config, mapped.second.config, mapped.first.space),
            Errc::Internal, "witness pair became congruent");
    out.witness = std::move(mapped);
  }
  return out;
}

AveragedPair averaging_flex(const Framework& f, const Framework& g) {
  require(is_equivalent(f, g), Errc::NotEquivalent, "averaging needs equivalent frameworks");
  const GaussianRational h(rational(1, 2));
  AveragedPair out;
  out.average = f;
  out.flex.points.reserve(static_cast<size_t>(f.graph.v));
  for (int t = 0; t < f.graph.v; ++t) {
    out.average.config[t] = h * (f.config[t] + g.config[t]);
    out.flex.points.push_back(h * (f.config[t] - g.config[t]));
  }
  // R(a) f = 0 is an algebraic identity for squared-length measurements;
  // a failure indicates a bug rather than bad input.
  ComplexMatrix r = rigidity_matrix(out.average);
  const int dim = f.space.ambient_dim();
  std::vector<GaussianRational> flat(static_cast<size_t>(f.graph.v) * static_cast<size_t>(dim));
  for (int t = 0; t < f.graph.v; ++t)
    for (int i = 0; i < dim; ++i)
      flat[static_cast<size_t>(t * dim + i)] = out.flex[t][static_cast<size_t>(i)];
  for (const auto& entry : r.apply(flat))
    require(entry.is_zero(), Errc::AveragingViolation, "averaged framework fails the flex identity");
  return out;
}

}  // namespace rigiditylab
