#pragma once

#include "roadmap/sign_condition.hpp"
#include "roadmap/subresultant.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace roadmap {

namespace detail {

/// Solves M x = b exactly (M square invertible over the rationals).
std::vector<Rational> solve_sign_system(std::vector<std::vector<Rational>> m,
                                        std::vector<Rational> b);

inline int sign_power(int s, int e) {
    if (e == 0) return 1;
    if (e == 1) return s;
    return s * s;
}

/// Incremental sign determination over an abstract root set: polys are added
/// one at a time, an adapted set of query products is maintained so the sign
/// matrix stays invertible, and every query is answered by the supplied
/// Tarski-query functor. `total` is the number of roots, `one` the unit
/// element, `mulred(a, b)` a sign-faithful reduced product, and `taq(p)` the
/// sum of sign(p) over the roots. Returns every realized sign condition on
/// polys with the number of roots realizing it.
template <class Poly, class MulRed, class TaQ>
std::vector<std::pair<SignCondition, int>> determine_signs_by_queries(
    int total, const std::vector<Poly>& polys, const Poly& one, MulRed&& mulred, TaQ&& taq) {
    if (total == 0) return {};

    std::vector<SignCondition> sigma{SignCondition{}};
    std::vector<int> counts{total};
    std::vector<std::vector<Rational>> M{{Rational(1)}};
    std::vector<Poly> prods{one};
    std::vector<int> queries{total};

    for (const Poly& P : polys) {
        size_t na = prods.size();
        std::vector<Poly> prod1(na), prod2(na);
        std::vector<int> t1(na), t2(na);
        for (size_t a = 0; a < na; ++a) {
            prod1[a] = mulred(prods[a], P);
            prod2[a] = mulred(prod1[a], P);
            t1[a] = taq(prod1[a]);
            t2[a] = taq(prod2[a]);
        }

        // Per adapted row a: (taq, t1, t2)(a) = M3 * (z0, z+, z-)(a) with
        // M3 rows (1,1,1), (0,1,-1), (0,1,1); solve in closed form.
        std::vector<Rational> z0(na), zp(na), zm(na);
        for (size_t a = 0; a < na; ++a) {
            zp[a] = Rational(t1[a] + t2[a]) / Rational(2);
            zm[a] = Rational(t2[a] - t1[a]) / Rational(2);
            z0[a] = Rational(queries[a] - t2[a]);
        }
        // Each z_s = M * c_s where c_s are the root counts of (sigma, s).
        std::vector<Rational> c0 = solve_sign_system(M, z0);
        std::vector<Rational> cp = solve_sign_system(M, zp);
        std::vector<Rational> cm = solve_sign_system(M, zm);

        std::vector<SignCondition> new_sigma;
        std::vector<int> new_counts;
        std::vector<std::pair<size_t, int>> origin;  // (old sigma index, sign)
        const int sign_order[3] = {0, 1, -1};
        for (size_t s = 0; s < sigma.size(); ++s) {
            for (int sv : sign_order) {
                const Rational& c = sv == 0 ? c0[s] : (sv == 1 ? cp[s] : cm[s]);
                if (c.is_zero()) continue;
                if (!c.is_integer() || c.sign() < 0)
                    throw std::logic_error("determine_signs: non-integral root count");
                SignCondition ext = sigma[s];
                ext.push_back(sv);
                new_sigma.push_back(std::move(ext));
                new_counts.push_back(static_cast<int>(c.num().get_si()));
                origin.emplace_back(s, sv);
            }
        }

        // Select an adapted set of query rows whose sign matrix over the
        // surviving conditions is invertible; prefer low extra exponents.
        size_t m = new_sigma.size();
        std::vector<std::vector<Rational>> newM;
        std::vector<Poly> new_prods;
        std::vector<int> new_queries;
        std::vector<std::vector<Rational>> echelon;  // reduced copies of accepted rows
        std::vector<size_t> pivot_col;
        for (int e = 0; e <= 2 && newM.size() < m; ++e) {
            for (size_t a = 0; a < na && newM.size() < m; ++a) {
                std::vector<Rational> row(m);
                for (size_t c = 0; c < m; ++c)
                    row[c] = M[a][origin[c].first] * Rational(sign_power(origin[c].second, e));
                // Rank test: reduce against accepted rows.
                std::vector<Rational> red = row;
                for (size_t r = 0; r < echelon.size(); ++r) {
                    const Rational& lead = red[pivot_col[r]];
                    if (lead.is_zero()) continue;
                    Rational factor = lead / echelon[r][pivot_col[r]];
                    for (size_t c = 0; c < m; ++c) red[c] -= factor * echelon[r][c];
                }
                size_t pc = m;
                for (size_t c = 0; c < m; ++c)
                    if (!red[c].is_zero()) { pc = c; break; }
                if (pc == m) continue;  // dependent
                echelon.push_back(std::move(red));
                pivot_col.push_back(pc);
                newM.push_back(std::move(row));
                new_prods.push_back(e == 0 ? prods[a] : (e == 1 ? prod1[a] : prod2[a]));
                new_queries.push_back(e == 0 ? queries[a] : (e == 1 ? t1[a] : t2[a]));
            }
        }
        if (newM.size() != m) throw std::logic_error("determine_signs: adapted basis not found");

        sigma = std::move(new_sigma);
        counts = std::move(new_counts);
        M = std::move(newM);
        prods = std::move(new_prods);
        queries = std::move(new_queries);
    }

    std::vector<std::pair<SignCondition, int>> out;
    out.reserve(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) out.emplace_back(sigma[i], counts[i]);
    return out;
}

}  // namespace detail

/// Generalized permanences-minus-variations count of a sign sequence
/// (entries in {-1,0,1}, ordered from the top level downward). Consecutive
/// nonzero entries a, b separated by g zeros contribute
/// (-1)^{g/2} * sign(a*b) when g is even and 0 when g is odd.
int pmv_from_signs(const std::vector<int>& s);

/// Orders two points from their sign vectors over a common derivative chain
/// (h, h', ..., h^(d)), exploiting that between the points the first
/// derivative above the highest disagreeing one keeps a constant nonzero
/// sign. Returns -1, 0, 1. Both vectors must describe actual points.
int thom_order_compare(const std::vector<int>& v1, const std::vector<int>& v2);

/// Pseudo-remainder of a by b with the leading-coefficient multiplier padded
/// to an even power, so values at common evaluation points keep their signs.
template <ExactRing R>
UPoly<R> even_pseudo_remainder(const UPoly<R>& a, const UPoly<R>& b) {
    PseudoDivision<R> d = pseudo_divmod(a, b);
    if (d.exponent % 2 != 0) return d.remainder * b.lc();
    return d.remainder;
}

/// Tarski query TaQ(g, f) = sum over real roots x of f of sign(g(x)),
/// computed as the sign-variation count of the signed subresultants of
/// (f, f' g mod f). Exact over any ordered coefficient ring.
template <ScalarRing K>
int tarski_query(const UPoly<K>& g, const UPoly<K>& f) {
    if (f.is_zero()) throw std::invalid_argument("tarski_query: zero polynomial");
    if (f.degree() == 0 || g.is_zero()) return 0;
    UPoly<K> fg = f.derivative() * g;
    UPoly<K> r = fg.degree() >= f.degree() ? even_pseudo_remainder(fg, f) : fg;
    if (r.is_zero()) return 0;  // f'g/f is a polynomial: no sign jumps
    SubresultantSequence<K> sub = signed_subresultants(f, r);
    std::vector<int> signs;
    signs.reserve(static_cast<size_t>(sub.p) + 1);
    for (int j = sub.p; j >= 0; --j) signs.push_back(sign(sub.principal[static_cast<size_t>(j)]));
    return pmv_from_signs(signs);
}

/// Number of distinct real roots of f.
template <ScalarRing K>
int real_root_count(const UPoly<K>& f) {
    return tarski_query(UPoly<K>(1), f);
}

/// Realized sign conditions of a polynomial list at the real roots of f,
/// with the number of roots realizing each condition. Incremental: one
/// polynomial is added at a time, keeping an adapted set of query exponents
/// whose sign matrix stays invertible, so only 2 * |realized| new Tarski
/// queries are spent per polynomial.
template <ScalarRing K>
std::vector<std::pair<SignCondition, int>> determine_signs(const UPoly<K>& f,
                                                           const std::vector<UPoly<K>>& polys);

/// Per-root sign conditions over the chain (f', ..., f^(deg f)) followed by
/// polys, one row per distinct real root of f in increasing root order. The
/// derivative prefix of each row is the root's Thom sign condition (which is
/// also what orders the rows).
template <ScalarRing K>
std::vector<SignCondition> sign_determination_full(const UPoly<K>& f,
                                                   const std::vector<UPoly<K>>& polys);

/// Per-root sign conditions of a polynomial list, one row per distinct real
/// root of f in increasing root order.
template <ScalarRing K>
std::vector<SignCondition> sign_determination(const UPoly<K>& f, const std::vector<UPoly<K>>& polys);

/// Signs of a polynomial list at the single root of f identified by the
/// Thom sign condition der_signs (signs of f', ..., f^(deg f) at the root).
/// Throws if no real root of f realizes der_signs.
template <ScalarRing K>
SignCondition signs_at_root(const UPoly<K>& f, const SignCondition& der_signs,
                            const std::vector<UPoly<K>>& polys);

}  // namespace roadmap
