#pragma once

#include <functional>
#include <tuple>
#include <vector>

#include "wildauto/abelian_model.hpp"
#include "wildauto/int_matrix.hpp"
#include "wildauto/int_poly.hpp"

namespace wildauto::test {

// Independent characteristic-polynomial oracle: Laplace expansion of the
// polynomial matrix xI - M along the first column. Exponential, fine for
// the small matrices the tests use; shares nothing with the shipped
// Faddeev-LeVerrier route.
inline IntPoly charpoly_oracle(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<IntPoly>> grid(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      grid[i][j] = i == j ? IntPoly({0, 1}) - IntPoly::constant(m.at(i, j))
                          : -IntPoly::constant(m.at(i, j));

  std::function<IntPoly(const std::vector<std::size_t>&, const std::vector<std::size_t>&)> det =
      [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) -> IntPoly {
    if (rows.empty()) return IntPoly::one();
    IntPoly acc;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::vector<std::size_t> sub_rows;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (i != k) sub_rows.push_back(rows[i]);
      std::vector<std::size_t> sub_cols(cols.begin() + 1, cols.end());
      IntPoly term = grid[rows[k]][cols[0]] * det(sub_rows, sub_cols);
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return det(idx, idx);
}

inline FGAbelianGroup make_group(std::size_t free_rank, std::vector<long> torsion = {}) {
  FGAbelianGroup g;
  g.free_rank = free_rank;
  for (long t : torsion) g.torsion.emplace_back(t);
  return g;
}

inline VarietyModel make_model(
    std::vector<std::tuple<std::size_t, std::size_t, FGAbelianGroup>> blocks) {
  VarietyModel m;
  std::size_t i = 0;
  for (auto& [factor_dim, mult, group] : blocks) {
    m.blocks.push_back(VarietyBlock{"E" + std::to_string(++i), factor_dim, mult, group});
  }
  return m;
}

inline GroupElement elem(const FGAbelianGroup& g, std::vector<long> free_coords,
                         std::vector<long> torsion_coords = {}) {
  std::vector<Int> f, t;
  for (long v : free_coords) f.emplace_back(v);
  for (long v : torsion_coords) t.emplace_back(v);
  if (t.empty()) t.resize(g.torsion.size());
  return GroupElement(g, std::move(f), std::move(t));
}

}  // namespace wildauto::test
