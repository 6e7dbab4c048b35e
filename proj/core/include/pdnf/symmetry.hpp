#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdnf/matrix.hpp"
#include "pdnf/normal_form.hpp"
#include "pdnf/vector_field.hpp"

namespace pdnf {

enum class SolveStatus { unique, parametrized, obstructed };

struct DegreeSolve {
  unsigned degree = 0;
  SolveStatus status = SolveStatus::unique;
  /// Dimension of the solution space of the degree-m determining equation
  /// (0 when obstructed).
  std::size_t solution_dimension = 0;

  friend bool operator==(const DegreeSolve&, const DegreeSolve&) = default;
};

struct SymmetryResult {
  /// Valid through degree k, or through obstruction_degree - 1 when
  /// obstructed (its truncation degree says which).
  VectorField symmetry;
  Matrix target;
  unsigned degree = 0;
  std::vector<DegreeSolve> degrees;  ///< one entry per attempted degree >= 2
  std::optional<unsigned> obstruction_degree;

  bool obstructed() const { return obstruction_degree.has_value(); }
};

/// Solves [x, y] = 0 degree by degree for y with linear part b. At each
/// degree the free variables are set to zero. Throws CommutationError (degree
/// 1) when [A, b] != 0.
SymmetryResult find_symmetry(const VectorField& x, const Matrix& b, unsigned k = kDefaultDegree);

/// Linear fields (A^j x), j = 0..max_power; j = 0 is the dilation field.
std::vector<VectorField> power_symmetries(const Matrix& a, unsigned max_power, unsigned truncation = kDefaultDegree);

struct BracketEntry {
  std::size_t i = 0, j = 0;
  VectorField bracket;
  bool vanishes = false;
  Matrix linear_part;
  /// Expected linear part from the linear parts alone. With the bracket
  /// {f,g} = (f.grad) g - (g.grad) f, two linear fields Bi x, Bj x bracket
  /// to (Bj Bi - Bi Bj) x.
  Matrix expected_linear_part;
  bool linear_identity_holds = false;
};

struct CommutatorReport {
  std::vector<BracketEntry> pairs;  ///< i < j
  bool linear_identity_holds = true;
  /// Every bracket lies in the linear span of the inputs through the
  /// truncation degree.
  bool closes = true;
  unsigned truncation = 0;
};

CommutatorReport commutator_report(const std::vector<VectorField>& fields);

}  // namespace pdnf
