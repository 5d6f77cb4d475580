// Benchmark comparing the serial reference kernels against the
// OpenMP-parallel ones: fraction-free rank, nullspace, exact inertia,
// and the multi-start 2D realization search. Exact kernels return
// identical results in both modes; only wall time differs.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rigiditylab/linalg.hpp"
#include "rigiditylab/oracle.hpp"

namespace rl = rigiditylab;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

rl::RationalMatrix random_int_matrix(size_t rows, size_t cols, std::uint64_t seed, int64_t bound) {
  rl::SplitMix64 rng(seed);
  rl::RationalMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = rl::Rational(rng.uniform(-bound, bound));
  return m;
}

rl::RationalMatrix random_symmetric(size_t n, std::uint64_t seed, int64_t bound) {
  rl::SplitMix64 rng(seed);
  rl::RationalMatrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      m(i, j) = rl::rational(rng.uniform(-bound, bound), 7);
      m(j, i) = m(i, j);
    }
  return m;
}

template <typename F>
double timed(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return seconds_since(t0);
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-34s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial kernel\n");
#endif

  {
    rl::RationalMatrix m = random_int_matrix(160, 160, 7, 50);
    size_t r_serial = 0, r_parallel = 0;
    double ts = timed([&] { r_serial = rl::rank(m, rl::ExecMode::Serial); });
    double tp = timed([&] { r_parallel = rl::rank(m, rl::ExecMode::Parallel); });
    report("bareiss rank 160x160", ts, tp);
    if (r_serial != r_parallel) {
      std::printf("MISMATCH: serial %zu vs parallel %zu\n", r_serial, r_parallel);
      return 1;
    }
  }
  {
    rl::RationalMatrix m = random_int_matrix(110, 150, 11, 40);
    size_t ns = 0, np = 0;
    double ts = timed([&] { ns = rl::nullspace_basis(m, rl::ExecMode::Serial).size(); });
    double tp = timed([&] { np = rl::nullspace_basis(m, rl::ExecMode::Parallel).size(); });
    report("bareiss nullspace 110x150", ts, tp);
    if (ns != np) {
      std::printf("MISMATCH: serial %zu vs parallel %zu\n", ns, np);
      return 1;
    }
  }
  {
    rl::RationalMatrix m = random_symmetric(120, 13, 30);
    rl::InertiaSignature ss, sp;
    double ts = timed([&] { ss = rl::inertia(m, rl::ExecMode::Serial); });
    double tp = timed([&] { sp = rl::inertia(m, rl::ExecMode::Parallel); });
    report("exact inertia 120x120", ts, tp);
    if (!(ss == sp)) {
      std::printf("MISMATCH in inertia\n");
      return 1;
    }
  }
  {
    rl::Graph g = rl::with_pendant_vertex(rl::complete_graph(4), {0, 1});
    rl::Framework base = rl::random_framework(g, rl::SpaceDescriptor::euclidean(2), 1000, 99);
    std::vector<double> targets;
    for (const auto& m : rl::edge_measurements(base)) targets.push_back(rl::to_double(m.re));
    rl::Enum2DOptions opt;
    opt.n_starts = 3000;
    opt.seed = 5;
    int cs = 0, cp = 0;
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
    double ts = timed([&] { cs = rl::enumerate_2d_heuristic(g, targets, opt).classes(); });
    omp_set_num_threads(max_threads);
    double tp = timed([&] { cp = rl::enumerate_2d_heuristic(g, targets, opt).classes(); });
#else
    double ts = timed([&] { cs = rl::enumerate_2d_heuristic(g, targets, opt).classes(); });
    double tp = ts;
    cp = cs;
#endif
    report("2D multistart 3000 starts", ts, tp);
    if (cs != cp) {
      std::printf("MISMATCH: serial %d vs parallel %d classes\n", cs, cp);
      return 1;
    }
  }
  return 0;
}
