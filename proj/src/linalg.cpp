#include "rigiditylab/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <utility>

#include "rigiditylab/rng.hpp"

namespace rigiditylab {
namespace {

bool use_parallel(ExecMode mode, size_t work_side) {
#ifdef _OPENMP
  switch (mode) {
    case ExecMode::Serial: return false;
    case ExecMode::Parallel: return true;
    case ExecMode::Auto: return work_side >= kParallelThreshold;
  }
  return false;
#else
  (void)mode;
  (void)work_side;
  return false;
#endif
}

// ---------------------------------------------------------------------------
// Integral rings backing the fraction-free elimination. Bareiss quotients
// are determinants of integral submatrices, so divexact never truncates.
// ---------------------------------------------------------------------------

struct ZRing {
  using Elem = Integer;
  static Elem zero() { return Elem(0); }
  static Elem one() { return Elem(1); }
  static bool is_zero(const Elem& e) { return sgn(e) == 0; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem divexact(const Elem& a, const Elem& b) {
    Elem q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

struct GaussianInteger {
  Integer re, im;
  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};

struct GZRing {
  using Elem = GaussianInteger;
  static Elem zero() { return {Integer(0), Integer(0)}; }
  static Elem one() { return {Integer(1), Integer(0)}; }
  static bool is_zero(const Elem& e) { return sgn(e.re) == 0 && sgn(e.im) == 0; }
  static Elem mul(const Elem& a, const Elem& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  static Elem sub(const Elem& a, const Elem& b) { return {a.re - b.re, a.im - b.im}; }
  static Elem divexact(const Elem& a, const Elem& b) {
    // a / b = a * conj(b) / |b|^2, componentwise exact.
    Integer n = b.re * b.re + b.im * b.im;
    Integer r = a.re * b.re + a.im * b.im;
    Integer i = a.im * b.re - a.re * b.im;
    Elem q;
    mpz_divexact(q.re.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), i.get_mpz_t(), n.get_mpz_t());
    return q;
  }
};

// Traits mapping a field scalar onto its integral ring.
template <typename T>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  using Ring = ZRing;
  static void scale_row_to_integral(const Rational* row, size_t n, Integer* out) {
    Integer l(1);
    for (size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row[j].get_den().get_mpz_t());
    for (size_t j = 0; j < n; ++j) out[j] = row[j].get_num() * (l / row[j].get_den());
  }
  static Rational from_ring(const Integer& e) { return Rational(e); }
};

template <>
struct FieldTraits<GaussianRational> {
  using Ring = GZRing;
  static void scale_row_to_integral(const GaussianRational* row, size_t n, GaussianInteger* out) {
    Integer l(1);
    for (size_t j = 0; j < n; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row[j].re.get_den().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row[j].im.get_den().get_mpz_t());
    }
    for (size_t j = 0; j < n; ++j) {
      out[j].re = row[j].re.get_num() * (l / row[j].re.get_den());
      out[j].im = row[j].im.get_num() * (l / row[j].im.get_den());
    }
  }
  static GaussianRational from_ring(const GaussianInteger& e) {
    return {Rational(e.re), Rational(e.im)};
  }
};

template <typename Ring>
struct EchelonForm {
  std::vector<typename Ring::Elem> m;  // row-major, rows x cols
  size_t rows = 0, cols = 0;
  std::vector<size_t> pivot_cols;  // column of the pivot in row k
  size_t rank() const { return pivot_cols.size(); }
};

// Fraction-free Gaussian elimination (one-step Bareiss) with row swaps and
// left-to-right column scanning. Intermediate entries stay minors of the
// input, which bounds coefficient swell.
template <typename Ring>
EchelonForm<Ring> bareiss_echelon(std::vector<typename Ring::Elem> a, size_t rows, size_t cols,
                                  bool parallel) {
  using Elem = typename Ring::Elem;
  EchelonForm<Ring> ech;
  ech.rows = rows;
  ech.cols = cols;
  Elem prev = Ring::one();
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t pivot = rows;
    for (size_t i = r; i < rows; ++i) {
      if (!Ring::is_zero(a[i * cols + col])) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r)
      for (size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[pivot * cols + j]);
    const Elem piv = a[r * cols + col];
    const long rr = static_cast<long>(r);
    const long nrows = static_cast<long>(rows);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (long i = rr + 1; i < nrows; ++i) {
      Elem head = a[static_cast<size_t>(i) * cols + col];
      for (size_t j = col + 1; j < cols; ++j) {
        Elem& t = a[static_cast<size_t>(i) * cols + j];
        t = Ring::divexact(Ring::sub(Ring::mul(t, piv), Ring::mul(head, a[r * cols + j])), prev);
      }
      a[static_cast<size_t>(i) * cols + col] = Ring::zero();
    }
    prev = piv;
    ech.pivot_cols.push_back(col);
    ++r;
  }
  ech.m = std::move(a);
  return ech;
}

template <typename T>
EchelonForm<typename FieldTraits<T>::Ring> echelon_of(const Matrix<T>& m, ExecMode mode) {
  using Traits = FieldTraits<T>;
  using Ring = typename Traits::Ring;
  const size_t rows = m.rows(), cols = m.cols();
  std::vector<typename Ring::Elem> a(rows * cols, Ring::zero());
  for (size_t i = 0; i < rows; ++i)
    Traits::scale_row_to_integral(m.data().data() + i * cols, cols, a.data() + i * cols);
  return bareiss_echelon<Ring>(std::move(a), rows, cols, use_parallel(mode, std::min(rows, cols)));
}

template <typename T>
std::vector<std::vector<T>> nullspace_impl(const Matrix<T>& m, ExecMode mode) {
  using Traits = FieldTraits<T>;
  auto ech = echelon_of(m, mode);
  const size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<T>> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<T> x(cols, T(0));
    x[free_col] = T(1);
    // Back-substitute pivot variables from the bottom row up.
    for (size_t k = ech.pivot_cols.size(); k-- > 0;) {
      size_t pc = ech.pivot_cols[k];
      T acc(0);
      for (size_t j = pc + 1; j < cols; ++j) {
        if (x[j] == T(0)) continue;
        acc += Traits::from_ring(ech.m[k * cols + j]) * x[j];
      }
      x[pc] = -acc / Traits::from_ring(ech.m[k * cols + pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Symmetric congruence reduction.
// ---------------------------------------------------------------------------

// Optional accumulator maintaining m = B^t A B across congruence steps.
struct BasisTracker {
  RationalMatrix b;
  explicit BasisTracker(size_t n) : b(RationalMatrix::identity(n)) {}

  void swap_rows(size_t i, size_t j) {
    for (size_t c = 0; c < b.cols(); ++c) std::swap(b(i, c), b(j, c));
  }
  // Inverse of the congruence "col i += col j": row j of B -= row i.
  void add_col_inverse(size_t i, size_t j) {
    for (size_t c = 0; c < b.cols(); ++c) b(j, c) -= b(i, c);
  }
  // Inverse of the elimination "col i -= f * col k": row k of B += f * row i.
  void eliminate_inverse(size_t k, size_t i, const Rational& f) {
    for (size_t c = 0; c < b.cols(); ++c) b(k, c) += f * b(i, c);
  }
};

InertiaSignature congruence_reduce(std::vector<Rational>& a, size_t n, bool parallel,
                                   BasisTracker* tracker, std::vector<Rational>* diag_out) {
  auto at = [&](size_t i, size_t j) -> Rational& { return a[i * n + j]; };
  auto sym_swap = [&](size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < n; ++c) std::swap(at(i, c), at(j, c));
    for (size_t r = 0; r < n; ++r) std::swap(at(r, i), at(r, j));
    if (tracker) tracker->swap_rows(i, j);
  };

  InertiaSignature sig;
  if (diag_out) diag_out->assign(n, Rational(0));
  for (size_t k = 0; k < n; ++k) {
    if (sgn(at(k, k)) == 0) {
      size_t dpivot = n;
      for (size_t j = k + 1; j < n; ++j)
        if (sgn(at(j, j)) != 0) {
          dpivot = j;
          break;
        }
      if (dpivot < n) {
        sym_swap(k, dpivot);
      } else {
        // All remaining diagonal entries vanish; splice a nonzero
        // off-diagonal entry onto the diagonal via col i += col j
        // (then 2 a_ij sits at (i, i)).
        size_t fi = n, fj = n;
        for (size_t i = k; i < n && fi == n; ++i)
          for (size_t j = i + 1; j < n; ++j)
            if (sgn(at(i, j)) != 0) {
              fi = i;
              fj = j;
              break;
            }
        if (fi == n) {
          sig.zero += static_cast<int>(n - k);
          return sig;
        }
        for (size_t c = 0; c < n; ++c) at(fi, c) += at(fj, c);
        for (size_t r = 0; r < n; ++r) at(r, fi) += at(r, fj);
        if (tracker) tracker->add_col_inverse(fi, fj);
        sym_swap(k, fi);
      }
    }
    const Rational d = at(k, k);
    if (sgn(d) > 0)
      ++sig.pos;
    else
      ++sig.neg;
    if (diag_out) (*diag_out)[k] = d;

    std::vector<Rational> factors(n, Rational(0));
    for (size_t i = k + 1; i < n; ++i) factors[i] = at(i, k) / d;
    const long kk = static_cast<long>(k);
    const long nn = static_cast<long>(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (long i = kk + 1; i < nn; ++i) {
      const Rational& f = factors[static_cast<size_t>(i)];
      if (sgn(f) == 0) continue;
      for (size_t j = k + 1; j < n; ++j)
        at(static_cast<size_t>(i), j) -= f * at(k, j);
    }
    for (size_t i = k + 1; i < n; ++i) {
      if (sgn(factors[i]) == 0) continue;
      if (tracker) tracker->eliminate_inverse(k, i, factors[i]);
      at(i, k) = 0;
      at(k, i) = 0;
    }
  }
  return sig;
}

std::vector<Rational> symmetric_copy_checked(const RationalMatrix& m) {
  require(m.is_square(), Errc::NotSymmetric, "inertia input must be square");
  require(m.is_symmetric(), Errc::NotSymmetric, "inertia input must equal its transpose");
  return m.data();
}

// Field Gauss-Jordan; shared by try_invert and solve.
template <typename T>
std::optional<Matrix<T>> invert_impl(const Matrix<T>& m) {
  require(m.is_square(), Errc::DimensionMismatch, "inverse of non-square matrix");
  const size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = n;
    for (size_t i = col; i < n; ++i)
      if (!(a(i, col) == T(0))) {
        pivot = i;
        break;
      }
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    T d = a(col, col);
    for (size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / d;
      inv(col, j) = inv(col, j) / d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      T f = a(i, col);
      if (f == T(0)) continue;
      for (size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

template <typename T>
std::optional<std::vector<T>> solve_impl(const Matrix<T>& a, const std::vector<T>& b) {
  require(b.size() == a.rows(), Errc::DimensionMismatch, "solve: rhs length");
  const size_t rows = a.rows(), cols = a.cols();
  Matrix<T> aug(rows, cols + 1);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    aug(i, cols) = b[i];
  }
  std::vector<size_t> pivot_cols;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t pivot = rows;
    for (size_t i = r; i < rows; ++i)
      if (!(aug(i, col) == T(0))) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != r)
      for (size_t j = 0; j <= cols; ++j) std::swap(aug(pivot, j), aug(r, j));
    T d = aug(r, col);
    for (size_t j = col; j <= cols; ++j) aug(r, j) = aug(r, j) / d;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      T f = aug(i, col);
      if (f == T(0)) continue;
      for (size_t j = col; j <= cols; ++j) aug(i, j) -= f * aug(r, j);
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!(aug(i, cols) == T(0))) return std::nullopt;  // inconsistent
  std::vector<T> x(cols, T(0));
  for (size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = aug(k, cols);
  return x;
}

}  // namespace

size_t rank(const RationalMatrix& m, ExecMode mode) { return echelon_of(m, mode).rank(); }
size_t rank(const ComplexMatrix& m, ExecMode mode) { return echelon_of(m, mode).rank(); }

std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& m, ExecMode mode) {
  return nullspace_impl(m, mode);
}
std::vector<std::vector<GaussianRational>> nullspace_basis(const ComplexMatrix& m, ExecMode mode) {
  return nullspace_impl(m, mode);
}

InertiaSignature inertia(const RationalMatrix& m, ExecMode mode) {
  std::vector<Rational> a = symmetric_copy_checked(m);
  return congruence_reduce(a, m.rows(), use_parallel(mode, m.rows()), nullptr, nullptr);
}

InertiaSignature inertia(const ComplexMatrix& m, ExecMode mode) {
  return inertia(real_part_checked(m), mode);
}

SymmetricDiagonalization symmetric_diagonalize(const RationalMatrix& m) {
  std::vector<Rational> a = symmetric_copy_checked(m);
  BasisTracker tracker(m.rows());
  SymmetricDiagonalization out;
  congruence_reduce(a, m.rows(), false, &tracker, &out.diag);
  out.basis = std::move(tracker.b);
  return out;
}

std::optional<RationalMatrix> try_invert(const RationalMatrix& m) { return invert_impl(m); }
std::optional<ComplexMatrix> try_invert(const ComplexMatrix& m) { return invert_impl(m); }

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  return solve_impl(a, b);
}
std::optional<std::vector<GaussianRational>> solve(const ComplexMatrix& a,
                                                   const std::vector<GaussianRational>& b) {
  return solve_impl(a, b);
}

RationalMatrix signature_matrix(int d, int s) {
  require(0 <= s && s <= d, Errc::SignatureOutOfRange, "signature count out of range");
  RationalMatrix m(static_cast<size_t>(d), static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) m(i, i) = Rational(i < s ? -1 : 1);
  return m;
}

RationalMatrix cayley_orthogonal(std::uint64_t skew_seed, int dim, int signature_s, bool flip,
                                 int retries) {
  require(0 <= signature_s && signature_s <= dim, Errc::SignatureOutOfRange,
          "signature count out of range");
  const size_t n = static_cast<size_t>(dim);
  const RationalMatrix s_mat = signature_matrix(dim, signature_s);
  for (int attempt = 0; attempt <= retries; ++attempt) {
    SplitMix64 rng(mix_seed(skew_seed, static_cast<std::uint64_t>(attempt)));
    // A = S K with K skew-symmetric, so (S A)^t = K^t = -K = -S A.
    RationalMatrix k(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        k(i, j) = rational(rng.uniform(-1000, 1000), 997);
        k(j, i) = -k(i, j);
      }
    RationalMatrix a = s_mat * k;
    RationalMatrix i_plus = RationalMatrix::identity(n) + a;
    auto inv = try_invert(i_plus);
    if (!inv) continue;
    RationalMatrix o = (RationalMatrix::identity(n) - a) * (*inv);
    if (flip && n > 0) {
      for (size_t r = 0; r < n; ++r) o(r, 0) = -o(r, 0);
    }
    return o;
  }
  fail(Errc::SingularCayley, "I + A singular after retries");
}

ComplexMatrix complexify(const RationalMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = GaussianRational(m(i, j));
  return out;
}

RationalMatrix real_part_checked(const ComplexMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      require(m(i, j).is_real(), Errc::NotReal, "matrix entry has nonzero imaginary part");
      out(i, j) = m(i, j).re;
    }
  return out;
}

}  // namespace rigiditylab
