#include "roadmap/elimination.hpp"

#include "roadmap/eps_scalar.hpp"
#include "roadmap/sign_determination.hpp"
#include "roadmap/subresultant.hpp"
#include "roadmap/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace roadmap {

namespace {

/// Integer-primitive form with positive leading grlex coefficient (rational
/// coefficients only; other scalar towers are left as computed).
template <ScalarRing K>
MultiPoly<K> normalize_member(const MultiPoly<K>& p) {
    if constexpr (std::is_same_v<K, Rational>) {
        mpz_class g(0), l(1);
        for (const auto& [m, c] : p.terms()) {
            mpz_class gn, gl;
            mpz_gcd(gn.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
            g = gn;
            mpz_lcm(gl.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
            l = gl;
        }
        if (g == 0) return p;
        Rational scale = Rational(l, g);
        if (p.terms().rbegin()->second.sign() < 0) scale = -scale;
        return p * MultiPoly<K>::constant(p.vars(), scale);
    } else {
        return p;
    }
}

template <ScalarRing K>
void emit(const MultiPoly<K>& p, const std::vector<std::string>& out_vars,
          std::vector<MultiPoly<K>>& out) {
    if (p.is_zero() || p.is_constant()) return;
    MultiPoly<K> q = normalize_member(p.with_vars(out_vars));
    for (const MultiPoly<K>& seen : out)
        if (seen == q) return;
    out.push_back(std::move(q));
}

/// f' * q reduced below deg(f) by an even (sign-preserving) pseudo-remainder.
template <ScalarRing K>
UPoly<MultiPoly<K>> reduced_product(const UPoly<MultiPoly<K>>& fprime,
                                    const UPoly<MultiPoly<K>>& q,
                                    const UPoly<MultiPoly<K>>& f) {
    UPoly<MultiPoly<K>> g = fprime * q;
    if (!g.is_zero() && g.degree() >= f.degree()) g = even_pseudo_remainder(g, f);
    return g;
}

}  // namespace

template <ScalarRing K>
std::vector<MultiPoly<K>> restricted_elimination(const MultiPoly<K>& f,
                                                 const std::vector<MultiPoly<K>>& aux,
                                                 const std::string& vvar) {
    size_t idx = f.var_index(vvar);
    std::vector<std::string> out_vars;
    for (const std::string& v : f.vars())
        if (v != vvar) out_vars.push_back(v);

    std::vector<MultiPoly<K>> out;
    UPoly<MultiPoly<K>> fU = to_upoly_in(f, idx);
    if (fU.is_zero()) return out;

    std::vector<UPoly<MultiPoly<K>>> auxU;
    auxU.reserve(aux.size());
    for (const MultiPoly<K>& a : aux) auxU.push_back(to_upoly_in(a.with_vars(f.vars()), idx));

    // Truncations of f: drop leading terms while the leading coefficient can
    // vanish somewhere (is not a nonzero constant).
    UPoly<MultiPoly<K>> tr = fU;
    while (true) {
        if (tr.degree() <= 0) {
            // Constant in vvar: its sign decides the no-roots branch.
            if (tr.degree() == 0) emit(tr.coeff(0), out_vars, out);
            break;
        }
        MultiPoly<K> lc = tr.coeff(tr.degree());
        emit(lc, out_vars, out);

        UPoly<MultiPoly<K>> fp = tr.derivative();
        std::vector<UPoly<MultiPoly<K>>> queries;
        queries.push_back(UPoly<MultiPoly<K>>(MultiPoly<K>::constant(f.vars(), K(1))));
        UPoly<MultiPoly<K>> d = fp.derivative();
        while (!d.is_zero()) {
            queries.push_back(d);
            queries.push_back(d * d);
            d = d.derivative();
        }
        for (const UPoly<MultiPoly<K>>& a : auxU) {
            if (a.is_zero()) continue;
            queries.push_back(a);
            queries.push_back(a * a);
        }
        for (const UPoly<MultiPoly<K>>& q : queries) {
            UPoly<MultiPoly<K>> g = reduced_product(fp, q, tr);
            if (g.is_zero()) continue;
            if (g.degree() == 0) {
                emit(g.coeff(0), out_vars, out);
                continue;
            }
            SubresultantSequence<MultiPoly<K>> sub = signed_subresultants(tr, g);
            for (const MultiPoly<K>& c : sub.principal) emit(c, out_vars, out);
        }

        if (lc.is_constant()) break;
        std::vector<MultiPoly<K>> tail;
        for (int j = 0; j < tr.degree(); ++j) tail.push_back(tr.coeff(j));
        tr = UPoly<MultiPoly<K>>::from_coeffs(std::move(tail));
    }
    return out;
}

template std::vector<MultiPoly<Rational>> restricted_elimination<Rational>(
    const MultiPoly<Rational>&, const std::vector<MultiPoly<Rational>>&, const std::string&);
template std::vector<MultiPoly<EpsScalar>> restricted_elimination<EpsScalar>(
    const MultiPoly<EpsScalar>&, const std::vector<MultiPoly<EpsScalar>>&, const std::string&);
template std::vector<MultiPoly<Eps<EpsScalar>>> restricted_elimination<Eps<EpsScalar>>(
    const MultiPoly<Eps<EpsScalar>>&, const std::vector<MultiPoly<Eps<EpsScalar>>>&,
    const std::string&);

}  // namespace roadmap
