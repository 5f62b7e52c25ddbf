#pragma once

#include "roadmap/triangular.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace roadmap {

/// A tuple of coordinates with rational-function values over the point of a
/// triangular Thom encoding. Level i of the encoding carries a (possibly
/// empty) block (f_0, f_1, ..., f_l): one shared denominator f_0 followed by
/// l numerators, all polynomials in the level variables T_1..T_{i+1}. The
/// represented coordinates are f_1/f_0, ..., f_l/f_0 evaluated at the point,
/// listed block by block.
template <ScalarRing K>
struct BlockRepresentation {
    TriangularThomEncoding<K> enc;
    /// blocks.size() == enc.levels(); blocks[i] is empty or has >= 2 entries.
    std::vector<std::vector<MultiPoly<K>>> blocks;

    /// Number of represented coordinates (numerators over all blocks).
    size_t total_coords() const {
        size_t n = 0;
        for (const auto& b : blocks)
            if (!b.empty()) n += b.size() - 1;
        return n;
    }
};

/// Substitutes the coordinates of blk for the first total_coords() variables
/// of Q and clears every denominator with an even power: each block i with
/// denominator f_0 contributes the factor f_0^{e_i} where e_i is the
/// smallest even integer >= the total block-i degree of Q. The result R over
/// enc.vars() + (remaining variables of Q) satisfies
///     R(t, x_rest) = prod_i f_0(t)^{e_i} * Q(coords(t), x_rest),
/// so R has the sign of Q at the represented point (the cleared factors are
/// strictly positive). Throws std::domain_error if some block denominator
/// vanishes at the point.
template <ScalarRing K>
MultiPoly<K> substitute_block(const MultiPoly<K>& Q, const BlockRepresentation<K>& blk);

/// substitute_block applied to every component of a tuple with one shared
/// clearing exponent per block: the smallest integer >= the largest total
/// block degree over all components (not rounded to even). All components
/// carry the same factor prod_i f_0(t)^{e_i} at the point, so ratios of
/// components are preserved: R_a / R_b = Q_a(coords)/Q_b(coords). The shared
/// factor may be negative (odd exponent); only ratios and the vanishing of
/// components are meaningful.
template <ScalarRing K>
std::vector<MultiPoly<K>> substitute_block_tuple(const std::vector<MultiPoly<K>>& tuple,
                                                 const BlockRepresentation<K>& blk);

/// A point of R^p with coordinates g_1/g_0, ..., g_p/g_0 evaluated at the
/// root described by the last level of the encoding (the polynomials g_j
/// live over all encoding variables; the denominator g_0 does not vanish at
/// the root).
template <ScalarRing K>
struct RealUnivariateRep {
    /// Base levels of the underlying point plus one final level whose
    /// variable is the representation's root variable.
    TriangularThomEncoding<K> enc;
    /// (g_0, g_1, ..., g_p) over enc.vars().
    std::vector<MultiPoly<K>> g;

    size_t coords() const { return g.empty() ? 0 : g.size() - 1; }
    const std::string& uvar() const { return enc.var(enc.levels() - 1); }
};

/// A family of candidate points parametrized by free variables: specializing
/// the parameters to a point t (a triangular Thom encoding over exactly the
/// parameter variables) turns each real root of f(t, uvar) into a candidate
/// RealUnivariateRep.
template <ScalarRing K>
struct ParamUnivariateRep {
    std::vector<std::string> params;  ///< parameter variable names (may be empty)
    std::string uvar;                 ///< root variable name
    MultiPoly<K> f;                   ///< defining polynomial over params + {uvar}
    std::vector<MultiPoly<K>> g;      ///< tuple (g_0, ..., g_p) over params + {uvar}
};

/// Specializes a parametrized representation at the encoded point: Thom-
/// encodes the real roots of f(t, .), and replaces the tuple by its d-th
/// componentwise derivative in the root variable, where d is the smallest
/// order making the denominator nonzero at the root (L'Hopital recovers the
/// represented value when the whole tuple vanishes at a multiple root; a
/// tuple whose denominator is already nonzero is kept as is). At a root of
/// multiplicity mu the denominator is probed up to order mu - 1; roots where
/// it vanishes deeper are skipped, as are specializations where f is
/// identically zero: such candidates represent no point.
template <ScalarRing K>
std::vector<RealUnivariateRep<K>> realize_at(const TriangularThomEncoding<K>& enc,
                                             const ParamUnivariateRep<K>& rep);

/// Exact sign of Q at the represented point. Q is a polynomial in exactly
/// coords() variables, matched positionally to the coordinates; when the
/// tower has base levels below the root level, Q may instead have
/// (base levels + coords()) variables, the base coordinates positionally
/// first, so that membership of the joint (parameter, coordinate) point can
/// be decided.
template <ScalarRing K>
int sign_at_rep_point(const RealUnivariateRep<K>& rep, const MultiPoly<K>& Q);

/// Exact comparison of coordinate i of two representations realized over the
/// same underlying base point: -1, 0, +1 as a.x_i - b.x_i.
template <ScalarRing K>
int compare_rep_coordinate(const RealUnivariateRep<K>& a, const RealUnivariateRep<K>& b,
                           size_t i);

/// True when all coordinates of the two represented points agree exactly.
template <ScalarRing K>
bool equal_rep_points(const RealUnivariateRep<K>& a, const RealUnivariateRep<K>& b);

/// Pseudo-reduces every component of a tuple by a quasi-monic encoding and
/// rescales so all components carry one common positive factor: the returned
/// tuple R satisfies R_j(t) = c * tuple_j(t) for a single c > 0, so ratios
/// (and signs relative to each other) are preserved.
template <ScalarRing K>
std::vector<MultiPoly<K>> pseudo_reduce_tuple(const std::vector<MultiPoly<K>>& tuple,
                                              const TriangularThomEncoding<K>& enc);

/// The polynomial with one variable renamed in place (same exponents, same
/// order); the new name must not collide with another variable.
template <ScalarRing K>
MultiPoly<K> rename_var(const MultiPoly<K>& p, const std::string& from, const std::string& to);

}  // namespace roadmap
