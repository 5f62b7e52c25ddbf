#pragma once

#include "roadmap/eps_scalar.hpp"
#include "roadmap/representation.hpp"
#include "roadmap/triangular.hpp"

namespace roadmap {

/// Result of taking the limit of a point as an infinitesimal goes to zero:
/// the base point's encoding (possibly refined: level polynomials may have
/// been replaced by equal-rooted factors while clearing denominators) and a
/// quasi-monic representation of the limit point over it.
template <ScalarRing K>
struct BoundedPointLimit {
    TriangularThomEncoding<K> base;
    RealUnivariateRep<K> rep;
};

/// Exact limit, as the innermost infinitesimal of Eps<K> tends to zero from
/// above, of the point described by rep_eps.
///
/// rep_eps encodes a point with coordinates in the ordered extension K<eps>:
/// its tower consists of base levels whose polynomials are free of eps
/// (they describe an ordinary K-point t) plus one final root level whose
/// polynomial and tuple may carry eps in their coefficients. The base must
/// be quasi-monic.
///
/// The limit is computed exactly: the root polynomial and the tuple are
/// replaced by their lowest eps-order parts that do not vanish at t (the
/// tuple jointly, so coordinate ratios survive), the roots of the resulting
/// eps-free polynomial over t are Thom-encoded, and the root carrying the
/// limit is identified by testing which root's coordinate tuple lies within
/// an infinitesimal ball (of radius large against eps but infinitesimal
/// against K) around the input point -- a single exact sign determination
/// over a two-infinitesimal extension. The returned representation is made
/// quasi-monic and pseudo-reduced.
///
/// Throws std::domain_error("point unbounded over R") if the point does not
/// converge to a representable point (some coordinate grows like a negative
/// power of eps, or the limit root admits no finite coordinate tuple).
/// Throws std::invalid_argument if a base level's coefficients involve eps
/// or the base is not quasi-monic.
template <ScalarRing K>
BoundedPointLimit<K> limit_of_bounded_point(const RealUnivariateRep<Eps<K>>& rep_eps);

}  // namespace roadmap
