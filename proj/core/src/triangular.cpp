#include "roadmap/triangular.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <utility>

namespace roadmap {

namespace {

template <ScalarRing K>
MultiPoly<K> lift(const MultiPoly<K>& p, const std::vector<std::string>& vars) {
    if (p.vars() == vars) return p;
    return p.with_vars(vars);
}

/// Fills pos[i] with the index of enc_vars[i] inside vars; false if missing.
bool positions_of(const std::vector<std::string>& enc_vars, const std::vector<std::string>& vars,
                  std::vector<size_t>& pos) {
    pos.assign(enc_vars.size(), 0);
    for (size_t i = 0; i < enc_vars.size(); ++i) {
        bool found = false;
        for (size_t j = 0; j < vars.size(); ++j)
            if (vars[j] == enc_vars[i]) {
                pos[i] = j;
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

template <ScalarRing K>
UPoly<MultiPoly<K>> one_upoly(const std::vector<std::string>& vars) {
    return UPoly<MultiPoly<K>>(MultiPoly<K>::constant(vars, K(1)));
}

/// Sign of a coefficient polynomial at the encoded point, with a cheap path
/// for constants.
template <ScalarRing K>
int sign_at(const TriangularThomEncoding<K>& enc, const MultiPoly<K>& p) {
    if (p.is_constant()) return detail::ssign(p.constant_value());
    return triangular_sign_determination(enc, {p})[0];
}

/// Drops leading coefficients that vanish at the encoded point, so the view's
/// degree is the true degree of f(t, .).
template <ScalarRing K>
UPoly<MultiPoly<K>> truncate_at_point(const TriangularThomEncoding<K>& enc, UPoly<MultiPoly<K>> f) {
    while (!f.is_zero()) {
        if (sign_at(enc, f.coeff(f.degree())) != 0) break;
        std::vector<MultiPoly<K>> c;
        c.reserve(static_cast<size_t>(f.degree()));
        for (int i = 0; i < f.degree(); ++i) c.push_back(f.coeff(i));
        f = UPoly<MultiPoly<K>>::from_coeffs(std::move(c));
    }
    return f;
}

/// The Thom chain (f', f'', ..., f^(deg f)).
template <ScalarRing K>
std::vector<UPoly<MultiPoly<K>>> derivative_chain(const UPoly<MultiPoly<K>>& f) {
    std::vector<UPoly<MultiPoly<K>>> out;
    UPoly<MultiPoly<K>> d = f.derivative();
    while (!d.is_zero()) {
        out.push_back(d);
        d = d.derivative();
    }
    return out;
}

/// Realized sign conditions over (Der(f), extra...) at the roots of f(t, .),
/// where t is the point of the base encoding. f's leading coefficient must
/// not vanish at t.
template <ScalarRing K>
std::vector<std::pair<SignCondition, int>> rows_at_roots(
    const TriangularThomEncoding<K>& base, const UPoly<MultiPoly<K>>& f,
    const std::vector<UPoly<MultiPoly<K>>>& extra) {
    std::vector<UPoly<MultiPoly<K>>> combined = derivative_chain(f);
    combined.insert(combined.end(), extra.begin(), extra.end());
    UPoly<MultiPoly<K>> one = one_upoly<K>(f.lc().vars());
    int total = triangular_tarski_query(base, one, f);
    auto mulred = [&](const UPoly<MultiPoly<K>>& a, const UPoly<MultiPoly<K>>& b) {
        UPoly<MultiPoly<K>> p = a * b;
        if (p.degree() < f.degree()) return p;
        return even_pseudo_remainder(p, f);
    };
    auto taq = [&](const UPoly<MultiPoly<K>>& p) { return triangular_tarski_query(base, p, f); };
    return detail::determine_signs_by_queries(total, combined, one, mulred, taq);
}

/// Thom order on derivative sign vectors (prepends the shared 0 for the
/// polynomial itself).
bool thom_sigma_less(const SignCondition& a, const SignCondition& b) {
    std::vector<int> va{0}, vb{0};
    va.insert(va.end(), a.signs().begin(), a.signs().end());
    vb.insert(vb.end(), b.signs().begin(), b.signs().end());
    return thom_order_compare(va, vb) < 0;
}

}  // namespace

template <ScalarRing K>
SignCondition thom_of_same_root(const TriangularThomEncoding<K>& base, const UPoly<MultiPoly<K>>& h,
                                const UPoly<MultiPoly<K>>& f_orig, const SignCondition& sigma_orig) {
    std::vector<UPoly<MultiPoly<K>>> extra{f_orig};
    UPoly<MultiPoly<K>> d = f_orig.derivative();
    while (!d.is_zero()) {
        extra.push_back(d);
        d = d.derivative();
    }
    std::vector<int> want{0};
    want.insert(want.end(), sigma_orig.signs().begin(), sigma_orig.signs().end());
    size_t nder = static_cast<size_t>(h.degree());
    for (const auto& [cond, count] : rows_at_roots(base, h, extra)) {
        (void)count;
        std::vector<int> got(cond.signs().begin() + static_cast<long>(nder), cond.signs().end());
        if (got == want) return cond.prefix(nder);
    }
    throw std::logic_error("thom_of_same_root: lost track of the encoded root");
}

template <ScalarRing K>
std::pair<UPoly<MultiPoly<K>>, TriangularThomEncoding<K>> make_quasi_monic(
    UPoly<MultiPoly<K>> h, size_t var, TriangularThomEncoding<K> base) {
    h = truncate_at_point(base, std::move(h));
    if (h.degree() < 1)
        throw std::logic_error("make_quasi_monic: polynomial is constant at the point");
    MultiPoly<K> lc = h.coeff(h.degree());
    if (lc.is_constant()) {
        if (detail::ssign(lc.constant_value()) < 0) return {-h, std::move(base)};
        return {std::move(h), std::move(base)};
    }
    PseudoInverse<K> inv = pseudo_invert(lc.with_vars(base.vars()), base);
    // h2 := beta*c*X^d + PsRed(g * (h - lc*X^d)) equals beta*g(t)*h(t, X) at
    // the point (beta is the uniform reduction factor and g(t)*lc(t) = c),
    // so it has the same roots there and a constant positive leading
    // coefficient beta*c.
    int d = h.degree();
    const std::vector<std::string>& vars = lc.vars();
    MultiPoly<K> g = lift(inv.g, vars);
    MultiPoly<K> x = MultiPoly<K>::variable(vars, var);
    MultiPoly<K> tail = MultiPoly<K>::constant(vars, K(0));
    for (int i = 0; i < d; ++i) tail += h.coeff(i) * x.pow(static_cast<unsigned>(i));
    auto [tail_red, beta] = pseudo_reduce_with_factor(g * tail, inv.enc);
    MultiPoly<K> res =
        MultiPoly<K>::constant(vars, beta * inv.c) * x.pow(static_cast<unsigned>(d)) +
        lift(tail_red, vars);
    return {to_upoly_in(res, var), std::move(inv.enc)};
}

template <ScalarRing K>
SignCondition triangular_sign_determination(const TriangularThomEncoding<K>& enc,
                                            const std::vector<MultiPoly<K>>& polys) {
    size_t m = enc.levels();
    if (m == 0) {
        std::vector<int> s;
        s.reserve(polys.size());
        for (const MultiPoly<K>& p : polys) {
            MultiPoly<K> pl = p.nvars() == 0 ? p : p.with_vars({});
            s.push_back(detail::ssign(pl.constant_value()));
        }
        return SignCondition(std::move(s));
    }
    size_t var = m - 1;
    TriangularThomEncoding<K> base = enc.prefix(var);
    UPoly<MultiPoly<K>> fU = to_upoly_in(enc.poly(var), var);
    std::vector<UPoly<MultiPoly<K>>> extra;
    extra.reserve(polys.size());
    for (const MultiPoly<K>& p : polys) extra.push_back(to_upoly_in(lift(p, enc.vars()), var));
    size_t nder = static_cast<size_t>(fU.degree());
    for (const auto& [cond, count] : rows_at_roots(base, fU, extra)) {
        (void)count;
        if (cond.prefix(nder) == enc.thom(var)) return cond.suffix_from(nder);
    }
    throw std::invalid_argument("triangular_sign_determination: encoding does not identify a root");
}

template <ScalarRing K>
int triangular_tarski_query(const TriangularThomEncoding<K>& enc, const UPoly<MultiPoly<K>>& g,
                            const UPoly<MultiPoly<K>>& f) {
    if (f.is_zero()) throw std::invalid_argument("triangular_tarski_query: zero polynomial");
    if (f.degree() == 0 || g.is_zero()) return 0;
    UPoly<MultiPoly<K>> fg = f.derivative() * g;
    UPoly<MultiPoly<K>> r = fg.degree() >= f.degree() ? even_pseudo_remainder(fg, f) : fg;
    r = truncate_at_point(enc, std::move(r));
    if (r.is_zero()) return 0;
    SubresultantSequence<MultiPoly<K>> sub = signed_subresultants(f, r);
    std::vector<MultiPoly<K>> coeffs;
    coeffs.reserve(static_cast<size_t>(sub.p) + 1);
    for (int j = sub.p; j >= 0; --j) coeffs.push_back(sub.principal[static_cast<size_t>(j)]);
    SignCondition signs = triangular_sign_determination(enc, coeffs);
    return pmv_from_signs(signs.signs());
}

template <ScalarRing K>
std::pair<MultiPoly<K>, K> pseudo_reduce_with_factor(const MultiPoly<K>& f,
                                                     const TriangularThomEncoding<K>& enc) {
    if (!enc.quasi_monic())
        throw std::invalid_argument("pseudo_reduce: encoding is not quasi-monic");
    // f may live over a superset of the encoding's variables (extra variables
    // ride along as coefficients); otherwise it is lifted into them.
    MultiPoly<K> r = f;
    std::vector<size_t> pos;
    if (!positions_of(enc.vars(), r.vars(), pos)) {
        r = r.with_vars(enc.vars());
        positions_of(enc.vars(), r.vars(), pos);
    }
    K factor(1);
    for (size_t i = enc.levels(); i-- > 0;) {
        size_t v = pos[i];
        MultiPoly<K> fi = enc.poly(i).with_vars(r.vars());
        int dq = fi.degree(v);
        int dp = r.degree(v);
        if (dp < dq) continue;
        int e = dp - dq + 1;
        if (e % 2 != 0) ++e;  // matches the sign-preserving padding
        K b = fi.leading_coeff(v).constant_value();
        r = pseudo_remainder(r, fi, v, /*sign_preserving=*/true);
        for (int k = 0; k < e; ++k) factor = factor * b;
    }
    return {std::move(r), std::move(factor)};
}

template <ScalarRing K>
MultiPoly<K> pseudo_reduce(const MultiPoly<K>& f, const TriangularThomEncoding<K>& enc) {
    return pseudo_reduce_with_factor(f, enc).first;
}

template <ScalarRing K>
PseudoInverse<K> pseudo_invert(const MultiPoly<K>& f, const TriangularThomEncoding<K>& enc) {
    size_t m = enc.levels();
    MultiPoly<K> fl = lift(f, enc.vars());
    if (m == 0) {
        K v = fl.constant_value();
        int s = detail::ssign(v);
        if (s == 0) throw std::domain_error("pseudo_invert: not invertible at encoded point");
        MultiPoly<K> g = MultiPoly<K>::constant(enc.vars(), K(s));
        K c = s > 0 ? v : K(0) - v;
        return {std::move(g), std::move(c), enc};
    }
    if (!enc.quasi_monic())
        throw std::invalid_argument("pseudo_invert: encoding is not quasi-monic");
    auto [fred, beta] = pseudo_reduce_with_factor(fl, enc);
    size_t var = m - 1;
    TriangularThomEncoding<K> base = enc.prefix(var);
    UPoly<MultiPoly<K>> rU = truncate_at_point(base, to_upoly_in(fred, var));
    if (rU.is_zero()) throw std::domain_error("pseudo_invert: not invertible at encoded point");

    if (rU.degree() == 0) {
        // f(t) = c0(t) / beta with c0 free of the level variable.
        MultiPoly<K> c0 = rU.coeff(0).with_vars(base.vars());
        PseudoInverse<K> inner = pseudo_invert(c0, base);
        TriangularThomEncoding<K> out_enc =
            inner.enc.extended(enc.var(var), enc.poly(var), enc.thom(var));
        MultiPoly<K> g = lift(inner.g, out_enc.vars()) *
                         MultiPoly<K>::constant(out_enc.vars(), beta);
        return {std::move(g), std::move(inner.c), std::move(out_enc)};
    }

    UPoly<MultiPoly<K>> fU = to_upoly_in(enc.poly(var), var);
    SubresultantSequence<MultiPoly<K>> sub = signed_subresultants(fU, rU);
    std::vector<MultiPoly<K>> princ(sub.principal.begin(), sub.principal.end());
    SignCondition psigns = triangular_sign_determination(base, princ);
    int jstar = 0;
    while (psigns[static_cast<size_t>(jstar)] == 0) ++jstar;  // principal[p] = lc(f_m) > 0

    if (jstar == 0) {
        // The level polynomial and f are coprime at t: the degree-0 signed
        // subresultant с0 = u*f_m + v*fred gives v(t)*fred(t) = c0(t) != 0.
        MultiPoly<K> c0 = sub.sres[0].coeff(0).with_vars(base.vars());
        MultiPoly<K> v = from_upoly_in(sub.cof_v[0], var);
        PseudoInverse<K> inner = pseudo_invert(c0, base);
        TriangularThomEncoding<K> out_enc =
            inner.enc.extended(enc.var(var), enc.poly(var), enc.thom(var));
        MultiPoly<K> g = lift(v, out_enc.vars()) * lift(inner.g, out_enc.vars()) *
                         MultiPoly<K>::constant(out_enc.vars(), beta);
        auto [gred, beta2] = pseudo_reduce_with_factor(g, out_enc);
        K c = inner.c * beta2;
        return {std::move(gred), std::move(c), std::move(out_enc)};
    }

    // The specialized gcd of (f_m, fred) at t has degree jstar > 0; its
    // witness sres[jstar] is a factor of f_m at the point. If the encoded
    // root satisfies it, f vanishes at the point; otherwise replace the
    // level polynomial by the complementary factor (the pseudo-quotient)
    // and retry on the refined encoding.
    MultiPoly<K> G = from_upoly_in(sub.sres[static_cast<size_t>(jstar)], var);
    if (sign_at(enc, G) == 0)
        throw std::domain_error("pseudo_invert: not invertible at encoded point");
    PseudoDivision<MultiPoly<K>> pd = pseudo_divmod(fU, sub.sres[static_cast<size_t>(jstar)]);
    auto [hq, base2] = make_quasi_monic(pd.quotient, var, base);
    SignCondition sigma2 = thom_of_same_root(base2, hq, fU, enc.thom(var));
    TriangularThomEncoding<K> out_enc =
        base2.extended(enc.var(var), from_upoly_in(hq, var), sigma2);
    return pseudo_invert(fl, out_enc);
}

template <ScalarRing K>
std::vector<TriangularThomEncoding<K>> triangular_thom_encodings(
    const TriangularThomEncoding<K>& enc, const MultiPoly<K>& h, const std::string& uvar) {
    std::vector<std::string> full = enc.vars();
    full.push_back(uvar);
    size_t var = enc.levels();
    UPoly<MultiPoly<K>> hU = truncate_at_point(enc, to_upoly_in(h.with_vars(full), var));
    if (hU.is_zero())
        throw std::domain_error(
            "triangular_thom_encodings: polynomial is identically zero at the encoded point");
    if (hU.degree() == 0) return {};
    std::vector<SignCondition> sigmas;
    for (const auto& [cond, count] : rows_at_roots(enc, hU, {})) {
        if (count != 1) throw std::logic_error("triangular_thom_encodings: non-simple Thom condition");
        sigmas.push_back(cond);
    }
    std::sort(sigmas.begin(), sigmas.end(), thom_sigma_less);
    MultiPoly<K> hm = from_upoly_in(hU, var);
    std::vector<TriangularThomEncoding<K>> out;
    out.reserve(sigmas.size());
    for (SignCondition& s : sigmas) out.push_back(enc.extended(uvar, hm, std::move(s)));
    return out;
}

template <ScalarRing K>
int compare_extensions(const TriangularThomEncoding<K>& a, const TriangularThomEncoding<K>& b) {
    size_t m = a.levels();
    if (m == 0 || b.levels() != m || a.vars() != b.vars())
        throw std::invalid_argument("compare_extensions: encodings of different shape");
    size_t var = m - 1;
    for (size_t i = 0; i < var; ++i)
        if (!(a.poly(i) == b.poly(i)) || a.thom(i) != b.thom(i))
            throw std::invalid_argument("compare_extensions: different base points");
    if (a.poly(var) == b.poly(var)) {
        std::vector<int> va{0}, vb{0};
        va.insert(va.end(), a.thom(var).signs().begin(), a.thom(var).signs().end());
        vb.insert(vb.end(), b.thom(var).signs().begin(), b.thom(var).signs().end());
        return thom_order_compare(va, vb);
    }
    // Signs of (f_b, Der f_b) at a's point, compared with b's root data.
    SignCondition nu = triangular_sign_determination(a, derivative_sequence(b.poly(var), var));
    std::vector<int> v2{0};
    v2.insert(v2.end(), b.thom(var).signs().begin(), b.thom(var).signs().end());
    return thom_order_compare(nu.signs(), v2);
}

template <ScalarRing K>
TriangularSamplePoints<K> triangular_sample_points(const TriangularThomEncoding<K>& enc,
                                                   const std::vector<MultiPoly<K>>& family,
                                                   const std::string& xvar) {
    std::vector<std::string> full = enc.vars();
    full.push_back(xvar);
    size_t var = enc.levels();

    std::vector<UPoly<MultiPoly<K>>> views;
    views.reserve(family.size());
    for (const MultiPoly<K>& h : family) {
        UPoly<MultiPoly<K>> v = truncate_at_point(enc, to_upoly_in(h.with_vars(full), var));
        if (v.is_zero())
            throw std::domain_error(
                "triangular_sample_points: family member is identically zero at the encoded point");
        views.push_back(std::move(v));
    }

    TriangularSamplePoints<K> out;
    UPoly<MultiPoly<K>> P = one_upoly<K>(full);
    bool any = false;
    for (const auto& v : views)
        if (v.degree() > 0) {
            P = P * v;
            any = true;
        }
    int total = any ? triangular_tarski_query(enc, one_upoly<K>(full), P) : 0;
    if (total == 0) {
        out.samples.emplace_back(0);
        return out;
    }

    // Root counting above a rational threshold: #roots(q) > x equals
    // (TaQ(X - x, q) + TaQ((X - x)^2, q)) / 2.
    auto make_counter = [&](const UPoly<MultiPoly<K>>& q) {
        auto cache = std::make_shared<std::map<Rational, int>>();
        return [&enc, &full, q, cache](const Rational& x) {
            auto it = cache->find(x);
            if (it != cache->end()) return it->second;
            MultiPoly<K> shift = MultiPoly<K>::constant(full, detail::scalar_from_rational<K>(x));
            UPoly<MultiPoly<K>> lin =
                UPoly<MultiPoly<K>>::from_coeffs({MultiPoly<K>::constant(full, K(0)) - shift,
                                                  MultiPoly<K>::constant(full, K(1))});
            int t1 = triangular_tarski_query(enc, lin, q);
            int t2 = triangular_tarski_query(enc, lin * lin, q);
            int c = (t1 + t2) / 2;
            cache->emplace(x, c);
            return c;
        };
    };
    auto above = make_counter(P);

    Rational bound(1);
    while (above(-bound) != total || above(bound) != 0) bound = bound * Rational(2);

    struct Iv {
        Rational lo, hi;
    };
    std::vector<Iv> isolated;
    std::vector<Iv> stack{{-bound, bound}};
    while (!stack.empty()) {
        Iv iv = stack.back();
        stack.pop_back();
        int cnt = above(iv.lo) - above(iv.hi);
        if (cnt == 0) continue;
        if (cnt == 1) {
            isolated.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / Rational(2);
        stack.push_back({mid, iv.hi});  // right pushed first so left pops first
        stack.push_back({iv.lo, mid});
    }

    auto tighten = [&](Iv& iv) {
        Rational mid = (iv.lo + iv.hi) / Rational(2);
        if (above(iv.lo) - above(mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    };
    for (size_t i = 0; i + 1 < isolated.size(); ++i)
        while (!(isolated[i].hi < isolated[i + 1].lo)) {
            tighten(isolated[i]);
            tighten(isolated[i + 1]);
        }

    // Match each member's ordered root encodings to the isolated intervals.
    std::vector<std::vector<TriangularThomEncoding<K>>> member_encs(views.size());
    std::vector<std::function<int(const Rational&)>> member_above;
    for (size_t j = 0; j < views.size(); ++j) {
        member_above.push_back(make_counter(views[j]));
        if (views[j].degree() > 0)
            member_encs[j] = triangular_thom_encodings(enc, from_upoly_in(views[j], var), xvar);
    }
    std::vector<size_t> next(views.size(), 0);
    for (const Iv& iv : isolated) {
        bool claimed = false;
        for (size_t j = 0; j < views.size(); ++j) {
            if (views[j].degree() < 1) continue;
            int cj = member_above[j](iv.lo) - member_above[j](iv.hi);
            if (cj == 0) continue;
            if (cj != 1 || next[j] >= member_encs[j].size())
                throw std::logic_error("triangular_sample_points: inconsistent root count");
            if (!claimed) {
                out.roots.push_back(member_encs[j][next[j]]);
                claimed = true;
            }
            ++next[j];
        }
        if (!claimed) throw std::logic_error("triangular_sample_points: interval without owner");
    }
    for (size_t j = 0; j < views.size(); ++j)
        if (next[j] != member_encs[j].size())
            throw std::logic_error("triangular_sample_points: unassigned member root");

    // One rational strictly inside each complementary interval. Half-open
    // isolating intervals guarantee lo is strictly below its root; the top
    // endpoint may coincide with the largest root, in which case it is
    // shifted past it.
    out.samples.push_back(isolated.front().lo);
    for (size_t i = 0; i + 1 < isolated.size(); ++i)
        out.samples.push_back((isolated[i].hi + isolated[i + 1].lo) / Rational(2));
    Rational top = isolated.back().hi;
    {
        MultiPoly<K> shift = MultiPoly<K>::constant(full, detail::scalar_from_rational<K>(top));
        UPoly<MultiPoly<K>> lin = UPoly<MultiPoly<K>>::from_coeffs(
            {MultiPoly<K>::constant(full, K(0)) - shift, MultiPoly<K>::constant(full, K(1))});
        int roots_not_at_top = triangular_tarski_query(enc, lin * lin, P);
        if (roots_not_at_top != total) top = top + Rational(1);
    }
    out.samples.push_back(top);
    return out;
}

#define ROADMAP_INSTANTIATE_TRIANGULAR(K)                                                         \
    template class TriangularThomEncoding<K>;                                                     \
    template SignCondition triangular_sign_determination<K>(const TriangularThomEncoding<K>&,     \
                                                            const std::vector<MultiPoly<K>>&);    \
    template int triangular_tarski_query<K>(const TriangularThomEncoding<K>&,                     \
                                            const UPoly<MultiPoly<K>>&,                           \
                                            const UPoly<MultiPoly<K>>&);                          \
    template std::pair<MultiPoly<K>, K> pseudo_reduce_with_factor<K>(                             \
        const MultiPoly<K>&, const TriangularThomEncoding<K>&);                                   \
    template MultiPoly<K> pseudo_reduce<K>(const MultiPoly<K>&, const TriangularThomEncoding<K>&);\
    template PseudoInverse<K> pseudo_invert<K>(const MultiPoly<K>&,                               \
                                               const TriangularThomEncoding<K>&);                 \
    template std::pair<UPoly<MultiPoly<K>>, TriangularThomEncoding<K>> make_quasi_monic<K>(       \
        UPoly<MultiPoly<K>>, size_t, TriangularThomEncoding<K>);                                  \
    template SignCondition thom_of_same_root<K>(const TriangularThomEncoding<K>&,                 \
                                                const UPoly<MultiPoly<K>>&,                       \
                                                const UPoly<MultiPoly<K>>&, const SignCondition&);\
    template std::vector<TriangularThomEncoding<K>> triangular_thom_encodings<K>(                 \
        const TriangularThomEncoding<K>&, const MultiPoly<K>&, const std::string&);               \
    template int compare_extensions<K>(const TriangularThomEncoding<K>&,                          \
                                       const TriangularThomEncoding<K>&);                         \
    template TriangularSamplePoints<K> triangular_sample_points<K>(                               \
        const TriangularThomEncoding<K>&, const std::vector<MultiPoly<K>>&, const std::string&);

ROADMAP_INSTANTIATE_TRIANGULAR(Rational)
ROADMAP_INSTANTIATE_TRIANGULAR(EpsScalar)
ROADMAP_INSTANTIATE_TRIANGULAR(Eps<EpsScalar>)

#undef ROADMAP_INSTANTIATE_TRIANGULAR

}  // namespace roadmap
