#pragma once

#include "jacobi/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace jacobi {

/// Exponent pair (nu, r) of the monomial alpha^nu beta^r.
struct MultiIndexPair {
  std::vector<int> nu;
  int r = 0;

  static MultiIndexPair zero(std::size_t h) { return {std::vector<int>(h, 0), 0}; }

  std::size_t h() const noexcept { return nu.size(); }
  int nu_total() const noexcept;
  /// |nu, r| = nu_1 + ... + nu_h + 2r.
  int degree() const noexcept { return nu_total() + 2 * r; }
  bool is_zero() const noexcept { return r == 0 && nu_total() == 0; }

  auto operator<=>(const MultiIndexPair&) const = default;
  bool operator==(const MultiIndexPair&) const = default;

  std::string to_string() const;
};

/// Exponent vectors nu in N_0^h with |nu| = total, in descending lexicographic
/// order: (2,0), (1,1), (0,2).
std::vector<std::vector<int>> compositions(int total, std::size_t h);

/// All pairs with |nu, r| = level; r ascending, then nu descending-lex.
std::vector<MultiIndexPair> enumerate_pairs(int level, std::size_t h);

/// All pairs with |nu, r| <= max_level, level by level.
std::vector<MultiIndexPair> enumerate_pairs_up_to(int max_level, std::size_t h);

/// mu(s, h) = binom(s + h - 1, h - 1): number of degree-s monomials in h variables.
long multiplicity_mu(int s, std::size_t h);

/// nu_1! ... nu_h!
Integer multi_factorial(const std::vector<int>& nu);

}  // namespace jacobi
