#include "roadmap/upoly.hpp"

namespace roadmap {

template class UPoly<Rational>;
template class UPoly<EpsScalar>;
template class UPoly<Eps<EpsScalar>>;
template class UPoly<MultiPoly<Rational>>;
template class UPoly<MultiPoly<EpsScalar>>;

}  // namespace roadmap
