#include "doctest.h"
#include "support.hpp"

#include "jacobi/errors.hpp"
#include "jacobi/matrix.hpp"
#include "jacobi/multi_index.hpp"

#include <set>

using namespace testing;

namespace {

// Sylvester: PSD iff every principal minor is non-negative.
bool psd_by_minors(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    RationalMatrix sub(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = a(idx[i], idx[j]);
    if (sgn(sub.determinant()) < 0) return false;
  }
  return true;
}

RationalMatrix block(const Rational& n, const std::vector<long>& r, const HalfIntSymMatrix& m) {
  const std::size_t h = m.h();
  RationalMatrix b(h + 1, h + 1);
  b(0, 0) = n;
  for (std::size_t i = 0; i < h; ++i) {
    b(0, i + 1) = b(i + 1, 0) = Rational(r[i], 2);
    for (std::size_t j = 0; j < h; ++j) b(i + 1, j + 1) = m(i, j);
  }
  return b;
}

}  // namespace

TEST_SUITE("exactcore") {

TEST_CASE("rationals are kept canonical") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(3, -6).get_den() == 2);
  CHECK(is_integer(q(4, 2)));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 3) == 0);
  CHECK(factorial(5) == 120);
}

TEST_CASE("index validation") {
  CHECK_THROWS_AS(HalfIntSymMatrix(RationalMatrix{{q(1, 2)}}), InvalidIndex);
  CHECK_THROWS_AS(HalfIntSymMatrix(RationalMatrix{{q(1), q(1, 3)}, {q(1, 3), q(1)}}), InvalidIndex);
  CHECK_THROWS_AS(HalfIntSymMatrix(RationalMatrix{{q(1), q(1, 2)}, {q(0), q(1)}}), InvalidIndex);
  const auto m = HalfIntSymMatrix::from_twice({{2, 1}, {1, 4}});
  CHECK(m(0, 1) == q(1, 2));
  CHECK(m(1, 1) == q(2));
  CHECK(m.twice() == std::vector<std::vector<long>>{{2, 1}, {1, 4}});
}

TEST_CASE("invert_index examples") {
  CHECK(invert_index(HalfIntSymMatrix::identity(1)) == RationalMatrix{{q(1)}});
  const auto m = HalfIntSymMatrix::from_twice({{4, 1}, {1, 4}});
  CHECK(invert_index(m) == RationalMatrix{{q(8, 15), q(-2, 15)}, {q(-2, 15), q(8, 15)}});
  CHECK_THROWS_AS(invert_index(HalfIntSymMatrix::from_twice({{2, 2}, {2, 2}})), SingularIndex);
  CHECK_FALSE(HalfIntSymMatrix::from_twice({{2, 2}, {2, 2}}).is_invertible());
}

TEST_CASE("invert_index times m is the identity for random indices") {
  Rng rng(11);
  for (std::size_t h = 1; h <= 4; ++h) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_index(h, rng);
      CHECK(m.matrix() * invert_index(m) == RationalMatrix::identity(h));
      CHECK(invert_index(m) * m.matrix() == RationalMatrix::identity(h));
    }
  }
}

TEST_CASE("psd_support_check examples") {
  const auto one = HalfIntSymMatrix::identity(1);
  const long r2[] = {2};
  const long r1[] = {1};
  CHECK(psd_support_check(q(1), r2, one));
  CHECK_FALSE(psd_support_check(q(0), r1, one));
  const long r00[] = {0, 0};
  CHECK(psd_support_check(q(0), r00, HalfIntSymMatrix::identity(2)));
}

TEST_CASE("psd_support_check agrees with principal minors") {
  Rng rng(5);
  int accepted = 0, rejected = 0;
  for (std::size_t h = 1; h <= 3; ++h) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto m = random_index(h, rng, trial % 2 == 0);
      std::uniform_int_distribution<long> rd(-4, 4), nd(-1, 6);
      std::vector<long> r(h);
      for (auto& x : r) x = rd(rng);
      const Rational n(nd(rng), 2);
      const bool expected = psd_by_minors(block(n, r, m));
      CHECK(psd_support_check(n, r, m) == expected);
      (expected ? accepted : rejected)++;
    }
  }
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}

TEST_CASE("is_positive_semidefinite handles zero pivots") {
  CHECK(is_positive_semidefinite(RationalMatrix{{q(0), q(0)}, {q(0), q(1)}}));
  CHECK_FALSE(is_positive_semidefinite(RationalMatrix{{q(0), q(1)}, {q(1), q(1)}}));
  CHECK(is_positive_semidefinite(RationalMatrix{{q(1), q(1)}, {q(1), q(1)}}));
}

TEST_CASE("enumerate_pairs examples") {
  CHECK(enumerate_pairs(0, 3) == std::vector<MultiIndexPair>{MultiIndexPair::zero(3)});
  CHECK(enumerate_pairs(2, 1) == std::vector<MultiIndexPair>{{{2}, 0}, {{0}, 1}});
  CHECK(enumerate_pairs(2, 2) == std::vector<MultiIndexPair>{{{2, 0}, 0}, {{1, 1}, 0}, {{0, 2}, 0}, {{0, 0}, 1}});
  CHECK(MultiIndexPair{{2, 0}, 1}.degree() == 4);
}

TEST_CASE("pair counts match brute-force monomial counts") {
  for (std::size_t h = 1; h <= 3; ++h) {
    for (int d = 0; d <= 6; ++d) {
      std::size_t total = 0;
      for (int l = 0; l <= d; ++l) {
        const auto pairs = enumerate_pairs(l, h);
        for (const auto& p : pairs) CHECK(p.degree() == l);
        CHECK(std::set<MultiIndexPair>(pairs.begin(), pairs.end()).size() == pairs.size());
        total += pairs.size();
      }
      // Brute force over the box nu_j <= d, r <= d / 2.
      std::size_t brute = 0;
      std::vector<int> nu(h, 0);
      while (true) {
        int s = 0;
        for (int x : nu) s += x;
        for (int r = 0; s + 2 * r <= d; ++r) ++brute;
        std::size_t j = 0;
        for (; j < h; ++j) {
          if (nu[j] < d) {
            ++nu[j];
            break;
          }
          nu[j] = 0;
        }
        if (j == h) break;
      }
      CHECK(total == brute);
      CHECK(enumerate_pairs_up_to(d, h).size() == brute);
    }
  }
}

TEST_CASE("multiplicity_mu counts monomials") {
  CHECK(multiplicity_mu(0, 4) == 1);
  CHECK(multiplicity_mu(7, 1) == 1);
  CHECK(multiplicity_mu(2, 2) == 3);
  for (int s = 0; s <= 6; ++s)
    for (std::size_t h = 1; h <= 6; ++h) {
      long brute = 0;
      std::vector<int> y(h, 0);
      while (true) {
        int total = 0;
        for (int x : y) total += x;
        if (total == s) ++brute;
        std::size_t j = 0;
        for (; j < h; ++j) {
          if (y[j] < s) {
            ++y[j];
            break;
          }
          y[j] = 0;
        }
        if (j == h) break;
      }
      CHECK(multiplicity_mu(s, h) == brute);
      CHECK(compositions(s, h).size() == std::size_t(brute));
    }
}

TEST_CASE("compositions are descending lexicographic") {
  CHECK(compositions(2, 2) == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(multi_factorial({3, 0, 2}) == 12);
}

}
