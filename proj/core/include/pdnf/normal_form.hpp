#pragma once

#include <cstddef>
#include <vector>

#include "pdnf/matrix.hpp"
#include "pdnf/vector_field.hpp"

namespace pdnf {

inline constexpr unsigned kDefaultDegree = 8;

/// Record of one normalization degree.
struct DegreeStep {
  unsigned degree = 0;
  /// Homogeneous generator h_m; the step substitutes old = new + h_m(new).
  std::vector<Polynomial> generator;
  /// Basis of the resonant space at this degree (coordinates in GradedBasis).
  std::vector<std::vector<Rational>> kernel_basis;
  /// Retained degree-m part, as coordinates on kernel_basis.
  std::vector<Rational> remainder;
  /// Dimension of the full solution space of the homological equation;
  /// zero means the generator is unique.
  std::size_t solution_dimension = 0;

  friend bool operator==(const DegreeStep&, const DegreeStep&) = default;
};

struct NormalFormResult {
  VectorField normalized;
  /// forward(): original -> normalized coordinates; inverse(): the reverse.
  NearIdentityMap transformation;
  std::vector<DegreeStep> steps;  ///< degrees 2..degree, in order
  Matrix linear_part;
  Matrix semisimple_part;
  unsigned degree = 0;

  /// The normalized field written back in original coordinates. Equals the
  /// input through `degree` (the round-trip property).
  VectorField reconstruct_original() const;
};

struct StepOutput {
  DegreeStep step;
  VectorField updated;
};

/// Removes the non-resonant part of the degree-m terms. Lower degrees are
/// untouched; higher degrees change through the substitution.
/// Throws DegenerateLinearPartError when the linear part vanishes.
StepOutput normalize_step(const VectorField& field, unsigned m);

/// Poincare-Dulac normal form through degree min(k, field truncation).
NormalFormResult normal_form(const VectorField& field, unsigned k = kDefaultDegree);

struct JointNormalFormResult {
  NormalFormResult x;  ///< shares its transformation with y
  NormalFormResult y;
};

/// Simultaneous normal form of two commuting fields: nonlinear parts end in
/// Ker(ad_{A_s}) and Ker(ad_{B_s}) jointly. Throws CommutationError with the
/// first failing degree when [x, y] != 0 through k.
JointNormalFormResult joint_normal_form(const VectorField& x, const VectorField& y,
                                        unsigned k = kDefaultDegree);

enum class Verdict { linear_through_k, obstructed };

struct LinearizationCertificate {
  Verdict verdict = Verdict::obstructed;
  unsigned degree = 0;
  unsigned obstruction_degree = 0;  ///< first nonlinear degree of the transformed x
  NearIdentityMap transformation;   ///< original -> linearizing coordinates
  VectorField normalized_x;
  VectorField normalized_y;
  bool symmetry_is_dilation = false;
  /// Per degree 2..k, solution-space dimension of Y's homological equation.
  std::vector<std::size_t> solution_dimensions;

  /// x's view as a normal-form result (for flow checks and reports).
  NormalFormResult as_normal_form(const VectorField& original_x) const;
};

/// Normalizes y, whose linear part must be the identity, and carries x along.
/// A commuting pair must end with x linear; anything else is reported as an
/// obstruction at the offending degree.
LinearizationCertificate linearize_via_symmetry(const VectorField& x, const VectorField& y,
                                                unsigned k = kDefaultDegree);

}  // namespace pdnf
