#pragma once

#include <vector>

#include "cackit/cac.hpp"

namespace fixtures {

inline cackit::Cac make(std::uint64_t L, std::size_t w, std::vector<std::vector<cackit::Residue>> words) {
  std::vector<cackit::Codeword> out;
  for (auto& e : words) out.emplace_back(cackit::ResidueSet(L, std::move(e)));
  return cackit::Cac(L, w, std::move(out));
}

inline cackit::Cac code_15_3() { return make(15, 3, {{0, 5, 10}, {0, 1, 2}, {0, 7, 11}, {0, 6, 12}}); }

inline cackit::Cac code_26_4() { return make(26, 4, {{0, 1, 2, 3}, {0, 4, 8, 12}, {0, 5, 10, 15}, {0, 6, 13, 19}}); }

}  // namespace fixtures
