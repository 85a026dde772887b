#include "wildauto/abelian_model.hpp"

#include <set>

#include "wildauto/error.hpp"
#include "wildauto/normal_forms.hpp"

namespace wildauto {

void FGAbelianGroup::validate() const {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw ModelError("torsion invariants must be >= 2");
    if (i > 0 && torsion[i] % torsion[i - 1] != 0)
      throw ModelError("torsion invariants must form a divisibility chain m1 | m2 | ...");
  }
}

GroupElement::GroupElement(FGAbelianGroup group, std::vector<Int> free_coords,
                           std::vector<Int> torsion_coords)
    : group_(std::move(group)), free_(std::move(free_coords)), torsion_(std::move(torsion_coords)) {
  if (free_.size() != group_.free_rank || torsion_.size() != group_.torsion.size())
    throw DimensionError("group element coordinate count does not match its group");
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    mpz_fdiv_r(torsion_[i].get_mpz_t(), torsion_[i].get_mpz_t(), group_.torsion[i].get_mpz_t());
}

GroupElement GroupElement::zero(const FGAbelianGroup& group) {
  return GroupElement(group, std::vector<Int>(group.free_rank),
                      std::vector<Int>(group.torsion.size()));
}

bool GroupElement::is_zero() const {
  for (const Int& v : free_)
    if (v != 0) return false;
  for (const Int& v : torsion_)
    if (v != 0) return false;
  return true;
}

bool GroupElement::is_torsion() const {
  for (const Int& v : free_)
    if (v != 0) return false;
  return true;
}

Int GroupElement::torsion_order() const {
  if (!is_torsion()) throw DomainError("torsion_order: element has infinite order");
  Int order = 1;
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    order = int_lcm(order, Int(group_.torsion[i] / int_gcd(group_.torsion[i], torsion_[i])));
  return order;
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  if (group_ != other.group_) throw DimensionError("group element addition across groups");
  std::vector<Int> f(free_.size()), t(torsion_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = free_[i] + other.free_[i];
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = torsion_[i] + other.torsion_[i];
  return GroupElement(group_, std::move(f), std::move(t));
}

GroupElement GroupElement::operator-() const { return scaled(Int(-1)); }

GroupElement GroupElement::scaled(const Int& c) const {
  std::vector<Int> f(free_.size()), t(torsion_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = c * free_[i];
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = c * torsion_[i];
  return GroupElement(group_, std::move(f), std::move(t));
}

std::size_t VarietyModel::dim() const {
  std::size_t d = 0;
  for (const auto& b : blocks) d += b.factor_dim * b.multiplicity;
  return d;
}

void VarietyModel::validate() const {
  std::set<std::string> ids;
  for (const auto& b : blocks) {
    if (b.factor_id.empty()) throw ModelError("factor id must be nonempty");
    if (!ids.insert(b.factor_id).second)
      throw ModelError("factor ids must be distinct (factors are pairwise non-isogenous)");
    if (b.factor_dim == 0) throw ModelError("factor_dim must be >= 1");
    if (b.multiplicity == 0) throw ModelError("multiplicity must be >= 1");
    b.point_group.validate();
  }
  if (dim() == 0) throw ModelError("the modeled variety must have dimension >= 1");
}

bool Point::is_zero() const {
  for (const auto& block : entries)
    for (const auto& e : block)
      if (!e.is_zero()) return false;
  return true;
}

Point Point::zero(const VarietyModel& model) {
  Point p;
  p.entries.reserve(model.blocks.size());
  for (const auto& b : model.blocks)
    p.entries.emplace_back(b.multiplicity, GroupElement::zero(b.point_group));
  return p;
}

BlockEndomorphism BlockEndomorphism::identity(const VarietyModel& model) {
  BlockEndomorphism phi;
  phi.blocks.reserve(model.blocks.size());
  for (const auto& b : model.blocks) phi.blocks.push_back(IntMatrix::identity(b.multiplicity));
  return phi;
}

bool BlockEndomorphism::is_identity() const {
  for (const auto& m : blocks)
    if (!m.is_identity()) return false;
  return true;
}

BlockEndomorphism BlockEndomorphism::operator*(const BlockEndomorphism& other) const {
  if (blocks.size() != other.blocks.size()) throw DimensionError("endomorphism block count mismatch");
  BlockEndomorphism out;
  out.blocks.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) out.blocks.push_back(blocks[i] * other.blocks[i]);
  return out;
}

BlockEndomorphism BlockEndomorphism::operator+(const BlockEndomorphism& other) const {
  if (blocks.size() != other.blocks.size()) throw DimensionError("endomorphism block count mismatch");
  BlockEndomorphism out;
  out.blocks.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) out.blocks.push_back(blocks[i] + other.blocks[i]);
  return out;
}

BlockEndomorphism BlockEndomorphism::operator-(const BlockEndomorphism& other) const {
  if (blocks.size() != other.blocks.size()) throw DimensionError("endomorphism block count mismatch");
  BlockEndomorphism out;
  out.blocks.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) out.blocks.push_back(blocks[i] - other.blocks[i]);
  return out;
}

BlockEndomorphism BlockEndomorphism::pow(unsigned long k) const {
  BlockEndomorphism out;
  out.blocks.reserve(blocks.size());
  for (const auto& m : blocks) out.blocks.push_back(m.pow(k));
  return out;
}

void check_point_shape(const VarietyModel& model, const Point& p) {
  if (p.entries.size() != model.blocks.size())
    throw DimensionError("point block count does not match the model");
  for (std::size_t i = 0; i < model.blocks.size(); ++i) {
    if (p.entries[i].size() != model.blocks[i].multiplicity)
      throw DimensionError("point entry count does not match block multiplicity");
    for (const auto& e : p.entries[i])
      if (e.group() != model.blocks[i].point_group)
        throw DimensionError("point entry group does not match block point group");
  }
}

void check_endo_shape(const VarietyModel& model, const BlockEndomorphism& phi) {
  if (phi.blocks.size() != model.blocks.size())
    throw DimensionError("endomorphism block count does not match the model");
  for (std::size_t i = 0; i < model.blocks.size(); ++i) {
    const auto& m = phi.blocks[i];
    if (m.rows() != model.blocks[i].multiplicity || m.cols() != model.blocks[i].multiplicity)
      throw DimensionError("endomorphism block must be multiplicity x multiplicity");
  }
}

Point apply_endo(const VarietyModel& model, const BlockEndomorphism& phi, const Point& p) {
  check_point_shape(model, p);
  check_endo_shape(model, phi);
  Point out;
  out.entries.reserve(model.blocks.size());
  for (std::size_t b = 0; b < model.blocks.size(); ++b) {
    const IntMatrix& m = phi.blocks[b];
    const auto& in = p.entries[b];
    std::vector<GroupElement> row_out;
    row_out.reserve(in.size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      GroupElement acc = GroupElement::zero(model.blocks[b].point_group);
      for (std::size_t j = 0; j < m.cols(); ++j) acc = acc + in[j].scaled(m.at(i, j));
      row_out.push_back(std::move(acc));
    }
    out.entries.push_back(std::move(row_out));
  }
  return out;
}

namespace {

// Kernel of the generation criterion for one block: stack the free
// coordinates of every candidate (each a vector of `n` group elements) into
// an n x (free_rank * #candidates) matrix; the candidates generate X_i^n
// iff the left kernel is trivial. On failure, returns a nonzero theta that
// kills every candidate exactly: a kernel basis vector scaled by the lcm of
// the torsion orders of its images (free parts vanish by construction, so
// the scaling is always possible).
std::optional<std::vector<Int>> block_relation(const FGAbelianGroup& group, std::size_t n,
                                               const std::vector<const std::vector<GroupElement>*>& candidates) {
  IntMatrix stacked(n, group.free_rank * candidates.size());
  for (std::size_t s = 0; s < candidates.size(); ++s)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < group.free_rank; ++k)
        stacked.at(i, s * group.free_rank + k) = (*candidates[s])[i].free_coords()[k];

  IntMatrix kernel = left_kernel(stacked);
  if (kernel.rows() == 0) return std::nullopt;

  std::vector<Int> theta0(n);
  for (std::size_t j = 0; j < n; ++j) theta0[j] = kernel.at(0, j);

  Int scale = 1;
  for (const auto* candidate : candidates) {
    GroupElement combo = GroupElement::zero(group);
    for (std::size_t j = 0; j < n; ++j) combo = combo + (*candidate)[j].scaled(theta0[j]);
    if (!combo.is_torsion())
      throw ConsistencyError("kernel relation left a nonzero free part");
    scale = int_lcm(scale, combo.torsion_order());
  }
  std::vector<Int> theta(n);
  for (std::size_t j = 0; j < n; ++j) theta[j] = scale * theta0[j];
  return theta;
}

GenerationResult generates_common(const VarietyModel& model, const std::vector<Point>& points) {
  for (const auto& p : points) check_point_shape(model, p);
  for (std::size_t b = 0; b < model.blocks.size(); ++b) {
    std::vector<const std::vector<GroupElement>*> candidates;
    candidates.reserve(points.size());
    for (const auto& p : points) candidates.push_back(&p.entries[b]);
    auto theta = block_relation(model.blocks[b].point_group, model.blocks[b].multiplicity, candidates);
    if (theta) return {false, GenerationCertificate{b, std::move(*theta)}};
  }
  return {true, std::nullopt};
}

}  // namespace

GenerationResult generates_point(const VarietyModel& model, const Point& a) {
  return generates_common(model, {a});
}

GenerationResult generates_set(const VarietyModel& model, const std::vector<Point>& points) {
  if (model.blocks.empty()) throw ModelError("generates_set: model has no blocks");
  if (points.empty()) {
    // Nothing generates a positive-dimensional variety.
    std::vector<Int> theta(model.blocks.front().multiplicity);
    theta[0] = 1;
    return {false, GenerationCertificate{0, std::move(theta)}};
  }
  return generates_common(model, points);
}

bool verify_generation_certificate(const VarietyModel& model, const std::vector<Point>& points,
                                   const GenerationCertificate& cert) {
  if (cert.block_index >= model.blocks.size()) return false;
  const auto& block = model.blocks[cert.block_index];
  if (cert.theta.size() != block.multiplicity) return false;
  bool nonzero = false;
  for (const Int& v : cert.theta)
    if (v != 0) nonzero = true;
  if (!nonzero) return false;
  for (const auto& p : points) {
    check_point_shape(model, p);
    GroupElement combo = GroupElement::zero(block.point_group);
    for (std::size_t j = 0; j < block.multiplicity; ++j)
      combo = combo + p.entries[cert.block_index][j].scaled(cert.theta[j]);
    if (!combo.is_zero()) return false;
  }
  return true;
}

std::size_t QuotientModel::dim() const {
  std::size_t d = 0;
  for (std::size_t b = 0; b < base.blocks.size(); ++b)
    d += (base.blocks[b].multiplicity - blocks[b].rank) * base.blocks[b].factor_dim;
  return d;
}

Point QuotientModel::project(const Point& p) const {
  check_point_shape(base, p);
  Point out;
  out.entries.reserve(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const IntMatrix& proj = blocks[b].projection;
    std::vector<GroupElement> row;
    row.reserve(proj.rows());
    for (std::size_t i = 0; i < proj.rows(); ++i) {
      GroupElement acc = GroupElement::zero(base.blocks[b].point_group);
      for (std::size_t j = 0; j < proj.cols(); ++j)
        acc = acc + p.entries[b][j].scaled(proj.at(i, j));
      row.push_back(std::move(acc));
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

// With D_i = U_i beta_i V_i of rank r_i, the first r_i coordinates after
// the U_i change of basis sweep out beta(X_i^{n_i}) (each nonzero d * X_i
// equals X_i, the factor being divisible), so the quotient is X_i^{n_i-r_i}
// read off the remaining rows of U_i.
QuotientModel image_quotient(const VarietyModel& model, const BlockEndomorphism& beta) {
  check_endo_shape(model, beta);
  QuotientModel out;
  out.base = model;
  out.blocks.reserve(model.blocks.size());
  for (std::size_t b = 0; b < model.blocks.size(); ++b) {
    SmithDecomposition s = snf(beta.blocks[b]);
    const std::size_t n = model.blocks[b].multiplicity;
    QuotientBlock qb;
    qb.rank = s.rank;
    qb.projection = IntMatrix(n - s.rank, n);
    for (std::size_t i = 0; i < n - s.rank; ++i)
      for (std::size_t j = 0; j < n; ++j) qb.projection.at(i, j) = s.U.at(s.rank + i, j);
    out.blocks.push_back(std::move(qb));
  }
  return out;
}

GenerationResult generates_in_quotient(const QuotientModel& quotient, const Point& p) {
  Point image = quotient.project(p);
  for (std::size_t b = 0; b < quotient.blocks.size(); ++b) {
    const std::size_t n = quotient.base.blocks[b].multiplicity - quotient.blocks[b].rank;
    if (n == 0) continue;  // this block is swept out by beta
    std::vector<const std::vector<GroupElement>*> candidates{&image.entries[b]};
    auto theta = block_relation(quotient.base.blocks[b].point_group, n, candidates);
    if (theta) return {false, GenerationCertificate{b, std::move(*theta)}};
  }
  return {true, std::nullopt};
}

bool verify_quotient_certificate(const QuotientModel& quotient, const Point& p,
                                 const GenerationCertificate& cert) {
  if (cert.block_index >= quotient.blocks.size()) return false;
  const std::size_t n =
      quotient.base.blocks[cert.block_index].multiplicity - quotient.blocks[cert.block_index].rank;
  if (cert.theta.size() != n || n == 0) return false;
  bool nonzero = false;
  for (const Int& v : cert.theta)
    if (v != 0) nonzero = true;
  if (!nonzero) return false;
  Point image = quotient.project(p);
  GroupElement combo = GroupElement::zero(quotient.base.blocks[cert.block_index].point_group);
  for (std::size_t j = 0; j < n; ++j)
    combo = combo + image.entries[cert.block_index][j].scaled(cert.theta[j]);
  return combo.is_zero();
}

}  // namespace wildauto
