#ifndef DWOP_SAMPLER_HPP
#define DWOP_SAMPLER_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

#include "dwop/kernels.hpp"
#include "dwop/types.hpp"

namespace dwop {

// Deterministic seeded generation of test instances. splitmix64 keeps the
// streams splittable: (master_seed, stream_id) fully determines the sequence,
// so trials parallelize with stream_id = trial index and no coordination.

inline constexpr const char* kGeneratorName = "splitmix64";

class SeededStream {
 public:
  SeededStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : state_(mix(master_seed + 0x9E3779B97F4A7C15ull * (stream_id + 1))) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (pairs cached).
  double next_normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = next_double();
    const double u2 = next_double();
    if (u1 <= 0) u1 = 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    have_cached_ = true;
    return radius * std::cos(angle);
  }

  /// Complex normal with unit-variance real and imaginary parts.
  Complex<double> next_cnormal() {
    const double re = next_normal();
    const double im = next_normal();
    return {re, im};
  }

  /// Uniform integer in [lo, hi].
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double next_log_uniform(double lo, double hi) {
    return lo * std::exp(next_double() * std::log(hi / lo));
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
  double cached_ = 0;
  bool have_cached_ = false;
};

/// n x n matrix with i.i.d. complex standard normal entries.
inline Matrixcd ginibre(Index n, SeededStream& stream) {
  if (n < 1) throw std::invalid_argument("ginibre: n must be positive");
  Matrixcd G(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) G(i, j) = stream.next_cnormal();
  return G;
}

/// Product of n x k and k x n Ginibre factors: numerical rank k almost surely.
inline Matrixcd rank_deficient(Index n, Index k, SeededStream& stream) {
  if (k < 0 || k >= n)
    throw std::invalid_argument("rank_deficient: need 0 <= k < n");
  if (k == 0) return Matrixcd::Zero(n, n);
  Matrixcd L(n, k), R(k, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < k; ++j) L(i, j) = stream.next_cnormal();
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < n; ++j) R(i, j) = stream.next_cnormal();
  return L * R;
}

/// Hermitian PSD draw G*G.
inline Matrixcd random_psd(Index n, SeededStream& stream) {
  const Matrixcd G = ginibre(n, stream);
  const Matrixcd H = (G.adjoint() * G).eval();
  return ((H + H.adjoint()) / 2.0).eval();
}

/// Partial isometry of the given rank from truncated SVD factors of a
/// Ginibre draw. Rank n gives a unitary.
inline Matrixcd random_partial_isometry(Index n, Index rank, SeededStream& stream) {
  if (rank < 0 || rank > n)
    throw std::invalid_argument("random_partial_isometry: rank out of range");
  if (rank == 0) return Matrixcd::Zero(n, n);
  const Svd<double> f = svd<double>(ginibre(n, stream));
  return (f.u.leftCols(rank) * f.v.leftCols(rank).adjoint()).eval();
}

inline Matrixcd random_unitary(Index n, SeededStream& stream) {
  return random_partial_isometry(n, n, stream);
}

enum class ParamKind { t, p_t0, p_t1, r };

/// Parameter draws over the tested ranges: t log-uniform on [0.1, 10],
/// p in (0, 1] for the invertibility-free bound, p in [-2, 3] for the
/// p-angular bound, r = 1 + log-uniform [0.1, 10].
inline double draw_params(SeededStream& stream, ParamKind kind) {
  switch (kind) {
    case ParamKind::t:
      return stream.next_log_uniform(0.1, 10.0);
    case ParamKind::p_t0: {
      const double u = stream.next_double();
      return u == 0.0 ? 1.0 : u;  // uniform on (0, 1]
    }
    case ParamKind::p_t1:
      return -2.0 + 5.0 * stream.next_double();
    case ParamKind::r:
      return 1.0 + stream.next_log_uniform(0.1, 10.0);
  }
  throw std::invalid_argument("draw_params: unknown kind");
}

}  // namespace dwop

#endif  // DWOP_SAMPLER_HPP
