#pragma once

#include "roadmap/multipoly.hpp"

#include <string>
#include <vector>

namespace roadmap {

/// Eliminates one variable from a polynomial, producing a family whose signs
/// control the real roots in that variable: on any connected subset of the
/// space of the remaining variables where every member of the returned
/// family has constant sign, the number of real roots of f(., vvar), their
/// Thom encodings, and the signs the aux polynomials take at those roots are
/// all fixed.
///
/// The family consists of the leading coefficients of the truncations of f
/// (in vvar) together with the principal signed subresultant coefficients of
/// each truncation against the even pseudo-remainders of f' * q for q
/// ranging over 1, the higher derivatives of the truncation and their
/// squares, and each aux polynomial and its square. Constant members are
/// dropped; over the rationals members are normalized to integer primitive
/// form with positive leading (graded-lexicographic) coefficient and
/// deduplicated.
template <ScalarRing K>
std::vector<MultiPoly<K>> restricted_elimination(const MultiPoly<K>& f,
                                                 const std::vector<MultiPoly<K>>& aux,
                                                 const std::string& vvar);

}  // namespace roadmap
