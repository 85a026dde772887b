#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wildauto/int_matrix.hpp"

namespace wildauto {

/// Finitely generated abelian group Z^free_rank x Z/m1 x ... x Z/mk with
/// m1 | m2 | ... and every mi >= 2. Models the group of declared points of
/// one simple factor.
struct FGAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  /// Throws ModelError if an invariant fails.
  void validate() const;

  bool operator==(const FGAbelianGroup& other) const = default;
};

/// Element of an FGAbelianGroup; torsion coordinates are kept reduced to
/// [0, mi), so equality is plain coordinatewise comparison.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(FGAbelianGroup group, std::vector<Int> free_coords, std::vector<Int> torsion_coords);

  static GroupElement zero(const FGAbelianGroup& group);

  const FGAbelianGroup& group() const { return group_; }
  const std::vector<Int>& free_coords() const { return free_; }
  const std::vector<Int>& torsion_coords() const { return torsion_; }

  bool is_zero() const;
  /// true iff the free part is zero (the element has finite order).
  bool is_torsion() const;
  /// Order of a finite-order element; DomainError if the free part is nonzero.
  Int torsion_order() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement scaled(const Int& c) const;

  bool operator==(const GroupElement& other) const = default;

 private:
  FGAbelianGroup group_;
  std::vector<Int> free_;
  std::vector<Int> torsion_;
};

/// One isogeny-class block X_i^{n_i} of the modeled variety. End(X_i) = Z
/// and Hom(X_i, X_j) = 0 for i != j; a CM factor is rejected at input
/// validation, which is what keeps generation decidable.
struct VarietyBlock {
  std::string factor_id;
  std::size_t factor_dim = 1;
  std::size_t multiplicity = 1;
  FGAbelianGroup point_group;

  bool operator==(const VarietyBlock& other) const = default;
};

/// X = prod_i X_i^{n_i} with pairwise non-isogenous simple factors.
struct VarietyModel {
  std::vector<VarietyBlock> blocks;

  std::size_t dim() const;
  void validate() const;

  bool operator==(const VarietyModel& other) const = default;
};

/// Point of X: per block, n_i elements of that block's point group.
struct Point {
  std::vector<std::vector<GroupElement>> entries;

  bool is_zero() const;
  bool operator==(const Point& other) const = default;

  static Point zero(const VarietyModel& model);
};

/// Endomorphism of X under End(X) = prod_i M_{n_i}(Z): one integer matrix
/// per block.
struct BlockEndomorphism {
  std::vector<IntMatrix> blocks;

  static BlockEndomorphism identity(const VarietyModel& model);
  bool is_identity() const;

  BlockEndomorphism operator*(const BlockEndomorphism& other) const;
  BlockEndomorphism operator+(const BlockEndomorphism& other) const;
  BlockEndomorphism operator-(const BlockEndomorphism& other) const;
  BlockEndomorphism pow(unsigned long k) const;

  bool operator==(const BlockEndomorphism& other) const = default;
};

/// Shape checks; throw DimensionError on mismatch.
void check_point_shape(const VarietyModel& model, const Point& p);
void check_endo_shape(const VarietyModel& model, const BlockEndomorphism& phi);

/// phi applied to p, blockwise matrix action on group elements.
Point apply_endo(const VarietyModel& model, const BlockEndomorphism& phi, const Point& p);

/// A nonzero integer relation sum_j theta_j * (j-th entry) = 0 in one block,
/// exact on free and torsion parts. Witnesses non-generation.
struct GenerationCertificate {
  std::size_t block_index = 0;
  std::vector<Int> theta;
};

struct GenerationResult {
  bool generates = false;
  std::optional<GenerationCertificate> certificate;
};

/// Does the single point a generate X? Per block, a generates iff the
/// n_i x free_rank matrix of free coordinates has trivial left kernel.
GenerationResult generates_point(const VarietyModel& model, const Point& a);

/// Does the finite set S generate X? Same kernel criterion on the stacked
/// coordinate matrices of all points of S.
GenerationResult generates_set(const VarietyModel& model, const std::vector<Point>& points);

/// Certificate re-verification by direct evaluation: theta must be nonzero
/// and sum_j theta_j * (entry j) must be the zero element for every point.
bool verify_generation_certificate(const VarietyModel& model, const std::vector<Point>& points,
                                   const GenerationCertificate& cert);

/// X / beta(X), presented per block by the last n_i - r_i rows of the SNF
/// row transform of beta_i; quotient block is X_i^{n_i - r_i}.
struct QuotientBlock {
  std::size_t rank = 0;       // rank of beta on this block
  IntMatrix projection;       // (n_i - r_i) x n_i
};

struct QuotientModel {
  VarietyModel base;
  std::vector<QuotientBlock> blocks;

  std::size_t dim() const;
  /// Image of a point of X in quotient coordinates.
  Point project(const Point& p) const;
};

QuotientModel image_quotient(const VarietyModel& model, const BlockEndomorphism& beta);

/// Does the image of p generate the quotient? Vacuously true when the
/// quotient is zero-dimensional.
GenerationResult generates_in_quotient(const QuotientModel& quotient, const Point& p);

/// Re-verification for quotient-side certificates (theta lives in quotient
/// coordinates of its block).
bool verify_quotient_certificate(const QuotientModel& quotient, const Point& p,
                                 const GenerationCertificate& cert);

}  // namespace wildauto
