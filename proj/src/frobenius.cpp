#include "wildauto/frobenius.hpp"

#include <optional>
#include <utility>

#include "wildauto/error.hpp"

namespace wildauto {

namespace {

using PolyGrid = std::vector<std::vector<RatPoly>>;

std::optional<std::pair<std::size_t, std::size_t>> min_degree_pivot(const PolyGrid& a,
                                                                    std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  long best_deg = 0;
  for (std::size_t i = t; i < a.size(); ++i) {
    for (std::size_t j = t; j < a.size(); ++j) {
      if (a[i][j].is_zero()) continue;
      if (!best || a[i][j].degree() < best_deg) {
        best = {{i, j}};
        best_deg = a[i][j].degree();
      }
    }
  }
  return best;
}

void swap_rows(PolyGrid& a, std::size_t i, std::size_t j) {
  if (i != j) std::swap(a[i], a[j]);
}

void swap_cols(PolyGrid& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (auto& row : a) std::swap(row[i], row[j]);
}

}  // namespace

// Smith form of the characteristic matrix xI - M over Q[x], diagonal only.
// Same elimination scheme as the integer SNF, with polynomial degree in
// place of absolute value.
std::vector<IntPoly> frobenius_invariants(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("frobenius_invariants: square matrix required");
  const std::size_t n = m.rows();
  PolyGrid a(n, std::vector<RatPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rat> c;
      if (i == j) {
        c = {Rat(-m.at(i, j)), Rat(1)};
      } else {
        c = {Rat(-m.at(i, j))};
      }
      a[i][j] = RatPoly(std::move(c));
    }
  }

  for (std::size_t t = 0; t < n; ++t) {
    auto pivot = min_degree_pivot(a, t);
    if (!pivot) break;  // xI - M is nonsingular; only reachable for t = n
    for (;;) {
      swap_rows(a, t, pivot->first);
      swap_cols(a, t, pivot->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t].is_zero()) continue;
        auto [q, r] = a[i][t].divmod(a[t][t]);
        for (std::size_t j = t; j < n; ++j) a[i][j] = a[i][j] - q * a[t][j];
        if (!r.is_zero()) dirty = true;
      }
      if (dirty) {
        pivot = min_degree_pivot(a, t);
        continue;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j].is_zero()) continue;
        auto [q, r] = a[t][j].divmod(a[t][t]);
        for (std::size_t i = t; i < n; ++i) a[i][j] = a[i][j] - q * a[i][t];
        if (!r.is_zero()) dirty = true;
      }
      if (dirty) {
        pivot = min_degree_pivot(a, t);
        continue;
      }
      bool folded = false;
      for (std::size_t i = t + 1; i < n && !folded; ++i) {
        for (std::size_t j = t + 1; j < n && !folded; ++j) {
          if (!a[i][j].divmod(a[t][t]).second.is_zero()) {
            for (std::size_t k = t; k < n; ++k) a[t][k] = a[t][k] + a[i][k];
            folded = true;
          }
        }
      }
      if (!folded) break;
      pivot = min_degree_pivot(a, t);
    }
  }

  std::vector<IntPoly> chain;
  for (std::size_t t = 0; t < n; ++t) {
    if (a[t][t].degree() < 1) continue;  // unit factors carry no information
    chain.push_back(a[t][t].to_int_poly_monic());
  }
  return chain;
}

}  // namespace wildauto
