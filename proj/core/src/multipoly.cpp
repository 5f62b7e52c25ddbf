#include "roadmap/multipoly.hpp"

namespace roadmap {

Rational cauchy_bound(const MultiPoly<Rational>& p) {
    if (p.is_zero()) throw std::invalid_argument("cauchy_bound: zero polynomial");
    size_t var = 0;
    bool found = false;
    for (size_t i = 0; i < p.nvars(); ++i) {
        if (p.degree(i) > 0) {
            if (found) throw std::invalid_argument("cauchy_bound: polynomial is not univariate");
            var = i;
            found = true;
        }
    }
    if (!found) return Rational(1);  // nonzero constant: the formula degenerates to 1
    std::vector<Rational> a(static_cast<size_t>(p.degree(var)) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) a[m[var]] = c;
    size_t q = 0;
    while (a[q].is_zero()) ++q;
    Rational s(0);
    for (size_t i = q; i < a.size(); ++i) s += abs(a[i] / a[q]);
    return Rational(1) / s;
}

template class MultiPoly<Rational>;
template class MultiPoly<EpsScalar>;
template class MultiPoly<Eps<EpsScalar>>;

}  // namespace roadmap
