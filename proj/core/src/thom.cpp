#include "roadmap/thom.hpp"

namespace roadmap {

template struct ThomEncoding<Rational>;
template struct ThomEncoding<EpsScalar>;
template std::vector<ThomEncoding<Rational>> thom_encodings_of_roots<Rational>(const UPoly<Rational>&);
template std::vector<ThomEncoding<EpsScalar>> thom_encodings_of_roots<EpsScalar>(const UPoly<EpsScalar>&);
template int compare_thom<Rational>(const ThomEncoding<Rational>&, const ThomEncoding<Rational>&);
template int compare_thom<EpsScalar>(const ThomEncoding<EpsScalar>&, const ThomEncoding<EpsScalar>&);

}  // namespace roadmap
