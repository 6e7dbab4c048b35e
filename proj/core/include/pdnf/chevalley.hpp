#pragma once

#include "pdnf/matrix.hpp"
#include "pdnf/univariate.hpp"

namespace pdnf {

/// Jordan-Chevalley splitting A = S + N with S semisimple, N nilpotent and
/// SN = NS. Both parts are polynomials in A, so everything stays over Q.
struct SNDecomposition {
  Matrix semisimple;
  Matrix nilpotent;
};

/// Newton iteration S <- S - q(S) q'(S)^{-1}, q the squarefree part of the
/// characteristic polynomial, started at S = A.
SNDecomposition sn_decompose(const Matrix& a);

/// Checks the four defining properties exactly. Used by tests and as a
/// post-condition inside sn_decompose.
bool is_valid_sn(const Matrix& a, const SNDecomposition& sn);

/// Minimal polynomial of a square matrix (monic), by Krylov dependence.
UniPoly minimal_poly(const Matrix& m);

}  // namespace pdnf
