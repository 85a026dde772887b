#include "wildauto/sampling.hpp"

namespace wildauto {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial)
    : engine_(splitmix64(splitmix64(seed ^ (stream * 0xa24baed4963ee407ULL)) ^
                         (trial * 0x9fb21c651e98df25ULL))) {}

long TrialRng::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

long TrialRng::uniform_nonzero(long lo, long hi) {
  for (;;) {
    long v = uniform(lo, hi);
    if (v != 0) return v;
  }
}

bool TrialRng::coin() { return uniform(0, 1) == 1; }

std::pair<IntMatrix, IntMatrix> random_unimodular(TrialRng& rng, std::size_t n, std::size_t ops) {
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix u_inv = IntMatrix::identity(n);
  if (n < 1) return {u, u_inv};
  for (std::size_t k = 0; k < ops; ++k) {
    switch (n == 1 ? 2 : rng.uniform(0, 2)) {
      case 0: {  // row i += c * row j; inverse gets col j -= c * col i
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        if (i == j) j = (j + 1) % n;
        Int c(rng.uniform_nonzero(-3, 3));
        u.add_row_multiple(i, j, c);
        u_inv.add_col_multiple(j, i, -c);
        break;
      }
      case 1: {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
        break;
      }
      default: {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        u.negate_row(i);
        u_inv.negate_col(i);
        break;
      }
    }
  }
  return {u, u_inv};
}

IntMatrix random_gl2(TrialRng& rng, std::size_t max_factors) {
  IntMatrix m = IntMatrix::identity(2);
  const std::size_t count = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_factors)));
  for (std::size_t k = 0; k < count; ++k) {
    IntMatrix factor = IntMatrix::identity(2);
    switch (rng.uniform(0, 3)) {
      case 0:
        factor.at(0, 1) = rng.uniform_nonzero(-3, 3);
        break;
      case 1:
        factor.at(1, 0) = rng.uniform_nonzero(-3, 3);
        break;
      case 2:
        factor = IntMatrix::from_rows({{0, 1}, {1, 0}});
        break;
      default:
        factor.at(0, 0) = -1;
        break;
    }
    m = m * factor;
  }
  return m;
}

IntMatrix random_unipotent(TrialRng& rng, std::size_t n) {
  IntMatrix t = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) t.at(i, j) = rng.uniform(-3, 3);
  auto [u, u_inv] = random_unimodular(rng, n, 2 * n);
  return u * t * u_inv;
}

namespace {

FGAbelianGroup random_group(TrialRng& rng) {
  FGAbelianGroup g;
  g.free_rank = static_cast<std::size_t>(rng.uniform(1, 3));
  switch (rng.uniform(0, 5)) {
    case 0:
      g.torsion = {Int(2)};
      break;
    case 1:
      g.torsion = {Int(3)};
      break;
    case 2:
      g.torsion = {Int(2), Int(4)};
      break;
    case 3:
      g.torsion = {Int(2), Int(6)};
      break;
    default:
      break;  // torsion-free
  }
  return g;
}

}  // namespace

VarietyModel random_model(TrialRng& rng) {
  VarietyModel model;
  const std::size_t blocks = static_cast<std::size_t>(rng.uniform(1, 3));
  for (std::size_t b = 0; b < blocks; ++b) {
    VarietyBlock block;
    block.factor_id = "E" + std::to_string(b + 1);
    block.factor_dim = rng.uniform(0, 4) == 0 ? 2 : 1;
    block.multiplicity = static_cast<std::size_t>(rng.uniform(1, 4));
    block.point_group = random_group(rng);
    model.blocks.push_back(std::move(block));
  }
  return model;
}

Point random_point(TrialRng& rng, const VarietyModel& model) {
  Point p;
  p.entries.reserve(model.blocks.size());
  for (const auto& block : model.blocks) {
    std::vector<GroupElement> row;
    row.reserve(block.multiplicity);
    for (std::size_t i = 0; i < block.multiplicity; ++i) {
      std::vector<Int> f(block.point_group.free_rank), t(block.point_group.torsion.size());
      for (Int& v : f) v = rng.uniform(-5, 5);
      for (std::size_t k = 0; k < t.size(); ++k)
        t[k] = rng.uniform(0, static_cast<long>(block.point_group.torsion[k].get_si()) - 1);
      row.emplace_back(block.point_group, std::move(f), std::move(t));
    }
    p.entries.push_back(std::move(row));
  }
  return p;
}

Point random_torsion_point(TrialRng& rng, const VarietyModel& model) {
  Point p = random_point(rng, model);
  for (std::size_t b = 0; b < p.entries.size(); ++b) {
    for (std::size_t i = 0; i < p.entries[b].size(); ++i) {
      const auto& group = model.blocks[b].point_group;
      p.entries[b][i] = GroupElement(group, std::vector<Int>(group.free_rank),
                                     std::vector<Int>(p.entries[b][i].torsion_coords()));
    }
  }
  return p;
}

Automorphism random_unipotent_automorphism(TrialRng& rng, const VarietyModel& model) {
  Automorphism sigma;
  for (const auto& block : model.blocks) {
    if (block.multiplicity == 1 || rng.uniform(0, 3) == 0) {
      sigma.alpha.blocks.push_back(IntMatrix::identity(block.multiplicity));
    } else {
      sigma.alpha.blocks.push_back(random_unipotent(rng, block.multiplicity));
    }
  }
  sigma.b = random_point(rng, model);
  return sigma;
}

}  // namespace wildauto
