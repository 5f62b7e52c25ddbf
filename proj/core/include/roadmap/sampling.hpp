#pragma once

#include "roadmap/representation.hpp"
#include "roadmap/triangular.hpp"

#include <string>
#include <vector>

namespace roadmap {

/// Computes parametrized univariate representations whose realized points
/// meet every bounded semi-algebraically connected component of the zero set
/// of P, for every value of the parameters.
///
/// The variables of P that are not listed in `params` are the coordinates of
/// the ambient space, in the order they appear in P's variable list; call
/// them x_1, ..., x_n. Each returned representation has parameters `params`,
/// root variable `uvar`, and a tuple (g_0, g_1, ..., g_n) whose coordinate
/// polynomials follow that variable order.
///
/// Method: the zero set is replaced by the level set P = z * g where z is a
/// fresh infinitesimal (smaller than every positive element of K) and g is a
/// positive proper polynomial of even degree larger than deg P. The critical
/// points of x_1 on that level set form a finite set computed exactly in the
/// quotient algebra of the defining equations (whose leading terms are pure
/// powers, so the quotient has a known monomial basis); representations are
/// produced from traces of multiplication matrices, and the limit z -> 0 is
/// taken coefficientwise after clearing the leading z-valuation. Realized
/// points that do not satisfy P = 0 are artifacts of that limit and must be
/// filtered by an exact membership test; points on every bounded component
/// are present for at least one returned representation.
///
/// When `nonnegative` is false, P is replaced internally by P^2 (this is what
/// makes one-sided or sign-changing zero sets safe, at the cost of doubling
/// the degree). Pass true only when P >= 0 holds everywhere, e.g. for a sum
/// of squares.
///
/// `reduce_mod`, when given, must be a quasi-monic triangular system over a
/// subset of `params` with rational leading coefficients; every intermediate
/// coefficient is then replaced by its exact normal form modulo the system,
/// which keeps degrees bounded when the parameters are themselves algebraic
/// coordinates of a known point. The output is then only meaningful at that
/// point.
///
/// Several candidate root variables u = x_1 + l*x_2 + ... + l^{n-1}*x_n are
/// tried; candidates are emitted until one certifies separation (squarefree
/// defining polynomial before the limit) or a small cap is reached, and all
/// computed candidates are returned. Callers realize each candidate and keep
/// the points that pass the membership test.
///
/// Throws std::invalid_argument when there are no free variables, when uvar
/// collides with a variable of P, or when reduce_mod is unusable.
template <ScalarRing K>
std::vector<ParamUnivariateRep<K>> bounded_algebraic_sampling(
    const MultiPoly<K>& P, const std::vector<std::string>& params, const std::string& uvar,
    bool nonnegative = false, const TriangularThomEncoding<K>* reduce_mod = nullptr);

}  // namespace roadmap
