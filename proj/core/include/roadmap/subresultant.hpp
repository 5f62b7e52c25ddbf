#pragma once

#include "roadmap/upoly.hpp"

#include <stdexcept>
#include <vector>

namespace roadmap {

/// Signed subresultant sequence of (P, Q) with Bezout cofactors.
///
/// Level j holds the signed subresultant polynomial sres[j] (zero at the
/// levels that vanish), with cof_u[j]*P + cof_v[j]*Q = sres[j] exactly.
/// principal[j] is the coefficient of X^j in sres[j] (the principal signed
/// subresultant coefficient); principal[p] is lc(P) so that the sequence
/// feeds sign-variation counts directly. The convention matches polynomial
/// determinants of the coefficient matrix whose rows are
/// X^{q-j-1}P ... P, Q ... X^{p-j-1}Q (columns by decreasing power), which
/// makes the counts coherent with signed-remainder (Sturm) sequences.
template <ExactRing R>
struct SubresultantSequence {
    int p = 0;
    std::vector<UPoly<R>> sres;
    std::vector<UPoly<R>> cof_u;
    std::vector<UPoly<R>> cof_v;
    std::vector<R> principal;
    int gcd_level = 0;

    /// The last nonzero subresultant, a gcd of (P, Q). Over an ordered ring
    /// it is normalized to a positive leading coefficient, making it
    /// positively proportional to the monic gcd over the fraction field.
    UPoly<R> gcd() const {
        UPoly<R> g = sres[static_cast<size_t>(gcd_level)];
        if constexpr (ScalarRing<R>) {
            if (!g.is_zero() && sign(g.lc()) < 0) g = -g;
        }
        return g;
    }
};

namespace detail {
/// (-1)^{m(m+1)/2}
inline int eps_sign(int m) { return (m % 4 == 0 || m % 4 == 3) ? 1 : -1; }
}  // namespace detail

/// Computes the full signed subresultant sequence with cofactors.
/// Requires P nonzero and deg P >= deg Q (equal degrees are handled by one
/// initial pseudo-division step; levels then refer to (P, PsRem(Q, P))).
template <ExactRing R>
SubresultantSequence<R> signed_subresultants(const UPoly<R>& P, const UPoly<R>& Q) {
    if (P.is_zero() && Q.is_zero())
        throw std::invalid_argument("signed_subresultants: both inputs zero");
    if (P.is_zero() || P.degree() < Q.degree())
        throw std::invalid_argument("signed_subresultants: requires deg P >= deg Q, P nonzero");

    int p = P.degree();

    if (!Q.is_zero() && Q.degree() == p) {
        // One pseudo-division step: lc(P)^e Q = W*P + R0.
        PseudoDivision<R> d = pseudo_divmod(Q, P);
        SubresultantSequence<R> out = signed_subresultants(P, d.remainder);
        R ce = R(1);
        for (int i = 0; i < d.exponent; ++i) ce = ce * P.lc();
        for (size_t j = 0; j < out.sres.size(); ++j) {
            // sres = u*P + v*R0 = (u - v*W)*P + (v*c^e)*Q
            UPoly<R> v0 = out.cof_v[j];
            out.cof_u[j] = out.cof_u[j] - v0 * d.quotient;
            out.cof_v[j] = v0 * ce;
        }
        return out;
    }

    SubresultantSequence<R> out;
    out.p = p;
    size_t n = static_cast<size_t>(p) + 1;
    out.sres.assign(n, UPoly<R>());
    out.cof_u.assign(n, UPoly<R>());
    out.cof_v.assign(n, UPoly<R>());
    out.principal.assign(n, R(0));

    out.sres[static_cast<size_t>(p)] = P;
    out.cof_u[static_cast<size_t>(p)] = UPoly<R>(1);
    out.principal[static_cast<size_t>(p)] = P.lc();
    out.gcd_level = p;
    if (Q.is_zero() || p == 0) return out;

    out.sres[static_cast<size_t>(p - 1)] = Q;
    out.cof_v[static_cast<size_t>(p - 1)] = UPoly<R>(1);
    if (Q.degree() == p - 1) out.principal[static_cast<size_t>(p - 1)] = Q.lc();

    // Recurrence state: the level-i polynomial has degree exactly i; the
    // top level uses s_rec = t = 1 (this is what matches the determinant
    // convention; lc(P) appears only in the principal sequence).
    R s_upper(1);  // s_rec[i]
    R t_upper(1);  // lc(sres[i]) convention at the top
    int i = p;

    while (true) {
        const UPoly<R> C = out.sres[static_cast<size_t>(i - 1)];
        if (C.is_zero()) {
            out.gcd_level = i;
            break;
        }
        int k = C.degree();
        R tC = C.lc();
        R s_k;
        if (k == i - 1) {
            s_k = tC;
            out.principal[static_cast<size_t>(k)] = tC;
        } else {
            // Proportional copy to level k: sres[k] = eps * tC^m * C / s_upper^m.
            int m = (i - 1) - k;
            R num(detail::eps_sign(m));
            for (int a = 0; a < m; ++a) num = num * tC;
            R den(1);
            for (int a = 0; a < m; ++a) den = den * s_upper;
            auto scaled = [&](const UPoly<R>& x) {
                UPoly<R> y = x * num;
                std::vector<R> cs = y.coeffs();
                for (auto& c : cs) c = exact_div(c, den);
                return UPoly<R>::from_coeffs(std::move(cs));
            };
            out.sres[static_cast<size_t>(k)] = scaled(C);
            out.cof_u[static_cast<size_t>(k)] = scaled(out.cof_u[static_cast<size_t>(i - 1)]);
            out.cof_v[static_cast<size_t>(k)] = scaled(out.cof_v[static_cast<size_t>(i - 1)]);
            s_k = out.sres[static_cast<size_t>(k)].lc();
            out.principal[static_cast<size_t>(k)] = s_k;
        }
        out.gcd_level = k;
        if (k == 0) break;

        // Descent: sres[k-1] = -Rem(s_k * tC * sres[i], C) / (s_upper * t_upper).
        // Fraction-free: pseudo-division gives rem = tC^e*(s_k*sres[i]) - quot*C
        // = tC^{e-1} * Rem(s_k*tC*sres[i], C), so divide by tC^{e-1} as well.
        PseudoDivision<R> pd = pseudo_divmod(out.sres[static_cast<size_t>(i)] * s_k, C);
        R tCe(1);
        for (int a = 0; a < pd.exponent; ++a) tCe = tCe * tC;
        R denom(1);
        for (int a = 0; a < pd.exponent - 1; ++a) denom = denom * tC;
        denom = denom * s_upper * t_upper;
        auto neg_div = [&](const UPoly<R>& num) {
            std::vector<R> cs = num.coeffs();
            for (auto& c : cs) c = -exact_div(c, denom);
            return UPoly<R>::from_coeffs(std::move(cs));
        };
        out.sres[static_cast<size_t>(k - 1)] = neg_div(pd.remainder);
        R tCe_sk = tCe * s_k;
        out.cof_u[static_cast<size_t>(k - 1)] = neg_div(
            out.cof_u[static_cast<size_t>(i)] * tCe_sk - pd.quotient * out.cof_u[static_cast<size_t>(i - 1)]);
        out.cof_v[static_cast<size_t>(k - 1)] = neg_div(
            out.cof_v[static_cast<size_t>(i)] * tCe_sk - pd.quotient * out.cof_v[static_cast<size_t>(i - 1)]);
        out.principal[static_cast<size_t>(k - 1)] =
            out.sres[static_cast<size_t>(k - 1)].coeff(k - 1);

        s_upper = s_k;
        t_upper = s_k;
        i = k;
    }
    return out;
}

}  // namespace roadmap
