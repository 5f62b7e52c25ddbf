#include "roadmap/limits.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace roadmap {

namespace {

/// Coefficients split by eps-power: slices[v] collects the terms whose scalar
/// sits at eps^v (entries may be zero polynomials).
template <ScalarRing K>
std::vector<MultiPoly<K>> eps_slices(const MultiPoly<Eps<K>>& p) {
    std::vector<MultiPoly<K>> slices;
    for (const auto& [m, c] : p.terms()) {
        for (int v = 0; v <= c.degree(); ++v) {
            const K& kc = c.coeff(static_cast<unsigned>(v));
            if (detail::szero(kc)) continue;
            while (slices.size() <= static_cast<size_t>(v)) slices.emplace_back(p.vars());
            slices[static_cast<size_t>(v)] += MultiPoly<K>::monomial(p.vars(), m, kc);
        }
    }
    return slices;
}

/// Smallest eps-power whose slice, read as a polynomial in the root variable,
/// does not vanish identically at the encoded base point; -1 if none does.
template <ScalarRing K>
int min_valuation_at(const TriangularThomEncoding<K>& base, const std::vector<MultiPoly<K>>& slices,
                     size_t uidx) {
    std::vector<MultiPoly<K>> queries;
    std::vector<int> vof;
    for (size_t v = 0; v < slices.size(); ++v) {
        if (slices[v].is_zero()) continue;
        for (MultiPoly<K>& cj : slices[v].univariate_coeffs(uidx)) {
            if (cj.is_zero()) continue;
            queries.push_back(cj.with_vars(base.vars()));
            vof.push_back(static_cast<int>(v));
        }
    }
    if (queries.empty()) return -1;
    SignCondition s = triangular_sign_determination(base, queries);
    int best = -1;
    for (size_t i = 0; i < queries.size(); ++i)
        if (s[i] != 0 && (best < 0 || vof[i] < best)) best = vof[i];
    return best;
}

}  // namespace

template <ScalarRing K>
BoundedPointLimit<K> limit_of_bounded_point(const RealUnivariateRep<Eps<K>>& rep_eps) {
    using KE = Eps<K>;
    using K2 = Eps<Eps<K>>;
    const TriangularThomEncoding<KE>& ence = rep_eps.enc;
    if (ence.levels() == 0)
        throw std::invalid_argument("limit_of_bounded_point: representation has no root level");
    if (rep_eps.g.empty())
        throw std::invalid_argument("limit_of_bounded_point: empty coordinate tuple");
    const size_t uidx = ence.levels() - 1;
    const std::string uvar = ence.var(uidx);

    // The base point below the root level must be an ordinary K-point.
    auto demote = [](const KE& c) -> K {
        if (c.degree() > 0)
            throw std::invalid_argument(
                "limit_of_bounded_point: base level involves the infinitesimal");
        return c.coeff(0);
    };
    TriangularThomEncoding<K> base;
    for (size_t i = 0; i < uidx; ++i)
        base = base.extended(ence.var(i), map_coeffs<K>(ence.poly(i), demote), ence.thom(i));
    if (!base.quasi_monic())
        throw std::invalid_argument("limit_of_bounded_point: base encoding is not quasi-monic");
    std::vector<std::string> fullv = base.vars();
    fullv.push_back(uvar);

    // Replace the root polynomial by its lowest eps-order part alive at the
    // base point: that part's roots over t are exactly the finite limits of
    // the input polynomial's roots.
    std::vector<MultiPoly<K>> gs = eps_slices(ence.poly(uidx));
    int vg = min_valuation_at(base, gs, uidx);
    if (vg < 0)
        throw std::invalid_argument("limit_of_bounded_point: root level vanishes at the base point");
    MultiPoly<K> glim = gs[static_cast<size_t>(vg)].with_vars(fullv);

    // Same for the coordinate tuple, but jointly across components (a common
    // positive factor cancels in the ratios, so the minimal surviving order
    // of the whole tuple is the right normalization).
    std::vector<std::vector<MultiPoly<K>>> tsplits;
    tsplits.reserve(rep_eps.g.size());
    int w = -1;
    for (const MultiPoly<KE>& gj : rep_eps.g) {
        tsplits.push_back(eps_slices(gj));
        int v = min_valuation_at(base, tsplits.back(), uidx);
        if (v >= 0 && (w < 0 || v < w)) w = v;
    }
    std::vector<MultiPoly<K>> tlim;
    tlim.reserve(tsplits.size());
    for (const std::vector<MultiPoly<K>>& sp : tsplits) {
        if (w >= 0 && static_cast<size_t>(w) < sp.size() && !sp[static_cast<size_t>(w)].is_zero())
            tlim.push_back(sp[static_cast<size_t>(w)].with_vars(fullv));
        else
            tlim.push_back(MultiPoly<K>(fullv));
    }

    // Candidate limit points: every root of the limit polynomial over t that
    // carries a finite coordinate tuple.
    std::vector<RealUnivariateRep<K>> cands =
        realize_at(base, ParamUnivariateRep<K>{base.vars(), uvar, glim, tlim});

    // Identify the candidate whose ball of infinitesimal radius delta
    // (large against eps, small against K) contains the input point. With
    // A the candidate tuple at its root and B the input tuple at its root,
    // the point lies strictly inside the ball iff
    //   delta^2 A0^2 B0^2 - sum_i (B_i A0 - A_i B0)^2 > 0,
    // one exact sign query over the two-infinitesimal tower per candidate.
    // Distinct roots over t are separated by non-infinitesimal distances, so
    // at most one candidate passes.
    std::string evar = uvar + "#";
    {
        auto used = [&](const std::string& n) {
            for (const std::string& v : fullv)
                if (v == n) return true;
            return false;
        };
        while (used(evar)) evar += "#";
    }
    auto promo = [](const K& c) { return K2(KE(c)); };
    // The input's eps becomes the outermost (smallest) level of the double
    // tower; the middle level is kept free for delta, so eps << delta << 1.
    auto embed = [](const KE& c) {
        std::vector<KE> cs;
        cs.reserve(static_cast<size_t>(c.degree() + 1));
        for (int v = 0; v <= c.degree(); ++v) cs.push_back(KE(c.coeff(static_cast<unsigned>(v))));
        return K2::from_coeffs(std::move(cs));
    };
    MultiPoly<K2> ge2 = rename_var(map_coeffs<K2>(ence.poly(uidx), embed), uvar, evar);
    std::vector<MultiPoly<K2>> B;
    B.reserve(rep_eps.g.size());
    for (const MultiPoly<KE>& gj : rep_eps.g)
        B.push_back(rename_var(map_coeffs<K2>(gj, embed), uvar, evar));
    const K2 delta2 = K2(KE::monomial(K(1), 2));

    const RealUnivariateRep<K>* winner = nullptr;
    for (const RealUnivariateRep<K>& r : cands) {
        TriangularThomEncoding<K2> stack;
        for (size_t i = 0; i < r.enc.levels(); ++i)
            stack = stack.extended(r.enc.var(i), map_coeffs<K2>(r.enc.poly(i), promo), r.enc.thom(i));
        stack = stack.extended(evar, ge2, ence.thom(uidx));
        const std::vector<std::string>& sv = stack.vars();
        MultiPoly<K2> A0 = map_coeffs<K2>(r.g[0], promo).with_vars(sv);
        MultiPoly<K2> B0 = B[0].with_vars(sv);
        MultiPoly<K2> ball = MultiPoly<K2>::constant(sv, delta2) * A0 * A0 * B0 * B0;
        for (size_t i = 1; i < r.g.size(); ++i) {
            MultiPoly<K2> d = B[i].with_vars(sv) * A0 - map_coeffs<K2>(r.g[i], promo).with_vars(sv) * B0;
            ball = ball - d * d;
        }
        if (triangular_sign_determination(stack, {ball})[0] > 0) {
            winner = &r;
            break;
        }
    }
    if (!winner) throw std::domain_error("point unbounded over R");

    // Package the winner quasi-monically: pseudo-invert the leading
    // coefficient of its root polynomial (possibly refining the base
    // encoding), re-identify the root against the rescaled polynomial, and
    // pseudo-reduce the tuple.
    const size_t bl = base.levels();
    UPoly<MultiPoly<K>> gU = to_upoly_in(winner->enc.poly(bl), bl);
    auto [hq, base2] = make_quasi_monic(gU, bl, base);
    SignCondition sig2;
    MultiPoly<K> lcq = gU.lc();
    if (lcq.is_constant() && detail::ssign(lcq.constant_value()) > 0)
        sig2 = winner->enc.thom(bl);
    else
        sig2 = thom_of_same_root(base2, hq, gU, winner->enc.thom(bl));
    TriangularThomEncoding<K> out_enc = base2.extended(uvar, from_upoly_in(hq, bl), sig2);
    std::vector<MultiPoly<K>> tup;
    tup.reserve(winner->g.size());
    for (const MultiPoly<K>& gj : winner->g) tup.push_back(gj.with_vars(out_enc.vars()));
    tup = pseudo_reduce_tuple(tup, out_enc);
    return {std::move(base2), RealUnivariateRep<K>{std::move(out_enc), std::move(tup)}};
}

template BoundedPointLimit<Rational> limit_of_bounded_point<Rational>(
    const RealUnivariateRep<EpsScalar>&);

}  // namespace roadmap
