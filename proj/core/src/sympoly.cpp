#include "jacobi/sympoly.hpp"

#include <algorithm>

namespace jacobi {

std::vector<SymMonomial> coset_basis(int s, std::size_t h, int t) {
  std::vector<SymMonomial> out;
  for (int x = std::min(t, s + 1) - 1; x >= 0; --x)
    for (auto& nu : compositions(s - x, h)) out.push_back({x, std::move(nu)});
  return out;
}

}  // namespace jacobi
