#include "jacobi/multi_index.hpp"

#include <numeric>
#include <sstream>

namespace jacobi {

int MultiIndexPair::nu_total() const noexcept { return std::accumulate(nu.begin(), nu.end(), 0); }

std::string MultiIndexPair::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < nu.size(); ++i) os << (i ? "," : "") << nu[i];
  os << ';' << r << ')';
  return os.str();
}

namespace {

void fill_compositions(int remaining, std::size_t pos, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    current[pos] = a;
    fill_compositions(remaining - a, pos + 1, current, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<std::vector<int>> compositions(int total, std::size_t h) {
  std::vector<std::vector<int>> out;
  if (total < 0 || h == 0) return out;
  std::vector<int> current(h, 0);
  fill_compositions(total, 0, current, out);
  return out;
}

std::vector<MultiIndexPair> enumerate_pairs(int level, std::size_t h) {
  std::vector<MultiIndexPair> out;
  for (int r = 0; 2 * r <= level; ++r)
    for (auto& nu : compositions(level - 2 * r, h)) out.push_back({std::move(nu), r});
  return out;
}

std::vector<MultiIndexPair> enumerate_pairs_up_to(int max_level, std::size_t h) {
  std::vector<MultiIndexPair> out;
  for (int level = 0; level <= max_level; ++level) {
    auto pairs = enumerate_pairs(level, h);
    out.insert(out.end(), pairs.begin(), pairs.end());
  }
  return out;
}

long multiplicity_mu(int s, std::size_t h) {
  return binomial(s + static_cast<long>(h) - 1, static_cast<long>(h) - 1).get_si();
}

Integer multi_factorial(const std::vector<int>& nu) {
  Integer out = 1;
  for (int a : nu) out *= factorial(a);
  return out;
}

}  // namespace jacobi
