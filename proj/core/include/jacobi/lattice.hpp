#pragma once

// Theta series of positive definite even lattices, the source of genuine
// Jacobi forms of weight rank/2 and index (1/2) V' G V.

#include "jacobi/form_data.hpp"

#include <functional>
#include <vector>

namespace jacobi {

struct LatticeSpec {
  /// Throws OddRank for odd rank, InvalidIndex for a Gram matrix that is not
  /// symmetric, even and positive definite, ShapeMismatch for bad vectors.
  LatticeSpec(std::vector<std::vector<long>> gram, std::vector<std::vector<long>> vectors);

  std::size_t rank() const noexcept { return gram.size(); }
  std::size_t h() const noexcept { return vectors.size(); }
  /// m_ij = (1/2) v_i' G v_j.
  HalfIntSymMatrix index() const;

  std::vector<std::vector<long>> gram;
  /// h vectors in Z^rank.
  std::vector<std::vector<long>> vectors;
};

/// Cartan matrix of E8 (even unimodular, rank 8).
std::vector<std::vector<long>> e8_gram();

/// E8 with v_j = e_{j} for the simple roots listed in order; h <= 8.
LatticeSpec e8_lattice(std::size_t h);

/// Estimated number of lattice vectors with (1/2) x'Gx <= bound.
double estimated_vector_count(const LatticeSpec& lattice, long bound);

/// Default cap on estimated_vector_count before theta_series refuses.
inline constexpr double kMaxThetaVectors = 2.0e7;

/// c(N, r) = #{x : (1/2) x'Gx = N, (x'G v_j)_j = r} for N <= bound, at weight rank/2.
/// Throws TruncationTooLarge past max_vectors.
JacobiFormData theta_series(const LatticeSpec& lattice, long bound, double max_vectors = kMaxThetaVectors);

/// Calls fn(x) for every x in Z^rank with x'Gx <= 2 bound (exact integer test).
void for_each_short_vector(const std::vector<std::vector<long>>& gram, long bound,
                           const std::function<void(const std::vector<long>&)>& fn);

}  // namespace jacobi
