#include "roadmap/subresultant.hpp"

#include "roadmap/multipoly.hpp"

namespace roadmap {

template SubresultantSequence<Rational> signed_subresultants<Rational>(const UPoly<Rational>&,
                                                                       const UPoly<Rational>&);
template SubresultantSequence<EpsScalar> signed_subresultants<EpsScalar>(const UPoly<EpsScalar>&,
                                                                         const UPoly<EpsScalar>&);
template SubresultantSequence<Eps<EpsScalar>> signed_subresultants<Eps<EpsScalar>>(
    const UPoly<Eps<EpsScalar>>&, const UPoly<Eps<EpsScalar>>&);
template SubresultantSequence<MultiPoly<Rational>> signed_subresultants<MultiPoly<Rational>>(
    const UPoly<MultiPoly<Rational>>&, const UPoly<MultiPoly<Rational>>&);
template SubresultantSequence<MultiPoly<EpsScalar>> signed_subresultants<MultiPoly<EpsScalar>>(
    const UPoly<MultiPoly<EpsScalar>>&, const UPoly<MultiPoly<EpsScalar>>&);

}  // namespace roadmap
