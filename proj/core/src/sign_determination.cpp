#include "roadmap/sign_determination.hpp"

#include <algorithm>
#include <numeric>

namespace roadmap {

int pmv_from_signs(const std::vector<int>& s) {
    int total = 0;
    size_t last = s.size();  // sentinel: none seen yet
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) continue;
        if (last != s.size()) {
            size_t gap = i - last - 1;
            if (gap % 2 == 0) {
                int c = s[last] * s[i];
                if ((gap / 2) % 2 != 0) c = -c;
                total += c;
            }
        }
        last = i;
    }
    return total;
}

int thom_order_compare(const std::vector<int>& v1, const std::vector<int>& v2) {
    if (v1.size() != v2.size())
        throw std::invalid_argument("thom_order_compare: vectors of different length");
    size_t n = v1.size();
    size_t k = n;
    for (size_t i = n; i-- > 0;) {
        if (v1[i] != v2[i]) { k = i; break; }
    }
    if (k == n) return 0;
    if (k + 1 >= n) throw std::logic_error("thom_order_compare: vectors differ at the top derivative");
    int s = v1[k + 1];
    if (s == 0 || s != v2[k + 1]) throw std::logic_error("thom_order_compare: invalid sign data");
    int lt = v1[k] < v2[k] ? -1 : 1;
    return s > 0 ? lt : -lt;
}

namespace detail {

std::vector<Rational> solve_sign_system(std::vector<std::vector<Rational>> m,
                                        std::vector<Rational> b) {
    size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::logic_error("solve_sign_system: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational factor = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
    return x;
}

}  // namespace detail

template <ScalarRing K>
std::vector<std::pair<SignCondition, int>> determine_signs(const UPoly<K>& f,
                                                           const std::vector<UPoly<K>>& polys) {
    if (f.is_zero()) throw std::invalid_argument("determine_signs: zero polynomial");
    int total = f.degree() == 0 ? 0 : real_root_count(f);
    auto mulred = [&](const UPoly<K>& a, const UPoly<K>& b) {
        UPoly<K> p = a * b;
        if (p.degree() < f.degree()) return p;
        return even_pseudo_remainder(p, f);
    };
    auto taq = [&](const UPoly<K>& p) { return tarski_query(p, f); };
    return detail::determine_signs_by_queries(total, polys, UPoly<K>(1), mulred, taq);
}

template <ScalarRing K>
std::vector<SignCondition> sign_determination_full(const UPoly<K>& f,
                                                   const std::vector<UPoly<K>>& polys) {
    if (f.is_zero()) throw std::invalid_argument("sign_determination: zero polynomial");
    if (f.degree() == 0) return {};
    std::vector<UPoly<K>> combined;
    UPoly<K> d = f.derivative();
    while (!d.is_zero()) {
        combined.push_back(d);
        d = d.derivative();
    }
    size_t nder = combined.size();
    combined.insert(combined.end(), polys.begin(), polys.end());
    std::vector<std::pair<SignCondition, int>> rows = determine_signs(f, combined);

    // Each root realizes a distinct derivative prefix, so each full
    // condition is realized exactly once.
    for (const auto& [cond, count] : rows) {
        (void)cond;
        if (count != 1) throw std::logic_error("sign_determination: non-simple realized condition");
    }
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        std::vector<int> va{0}, vb{0};
        va.insert(va.end(), a.first.signs().begin(), a.first.signs().begin() + static_cast<long>(nder));
        vb.insert(vb.end(), b.first.signs().begin(), b.first.signs().begin() + static_cast<long>(nder));
        return thom_order_compare(va, vb) < 0;
    });
    std::vector<SignCondition> out;
    out.reserve(rows.size());
    for (const auto& [cond, count] : rows) out.push_back(cond);
    return out;
}

template <ScalarRing K>
std::vector<SignCondition> sign_determination(const UPoly<K>& f, const std::vector<UPoly<K>>& polys) {
    std::vector<SignCondition> rows = sign_determination_full(f, polys);
    size_t nder = static_cast<size_t>(std::max(f.degree(), 0));  // chain f', ..., f^(deg)
    std::vector<SignCondition> out;
    out.reserve(rows.size());
    for (const SignCondition& cond : rows) out.push_back(cond.suffix_from(nder));
    return out;
}

template <ScalarRing K>
SignCondition signs_at_root(const UPoly<K>& f, const SignCondition& der_signs,
                            const std::vector<UPoly<K>>& polys) {
    if (f.is_zero() || f.degree() == 0)
        throw std::invalid_argument("signs_at_root: polynomial has no roots");
    std::vector<UPoly<K>> combined;
    UPoly<K> d = f.derivative();
    while (!d.is_zero()) {
        combined.push_back(d);
        d = d.derivative();
    }
    size_t nder = combined.size();
    if (der_signs.size() != nder)
        throw std::invalid_argument("signs_at_root: encoding length mismatch");
    combined.insert(combined.end(), polys.begin(), polys.end());
    std::vector<std::pair<SignCondition, int>> rows = determine_signs(f, combined);
    for (const auto& [cond, count] : rows) {
        (void)count;
        if (cond.prefix(nder) == der_signs) return cond.suffix_from(nder);
    }
    throw std::invalid_argument("signs_at_root: invalid encoding (no realizing root)");
}

template std::vector<std::pair<SignCondition, int>> determine_signs<Rational>(
    const UPoly<Rational>&, const std::vector<UPoly<Rational>>&);
template std::vector<std::pair<SignCondition, int>> determine_signs<EpsScalar>(
    const UPoly<EpsScalar>&, const std::vector<UPoly<EpsScalar>>&);
template std::vector<std::pair<SignCondition, int>> determine_signs<Eps<EpsScalar>>(
    const UPoly<Eps<EpsScalar>>&, const std::vector<UPoly<Eps<EpsScalar>>>&);
template std::vector<SignCondition> sign_determination_full<Rational>(
    const UPoly<Rational>&, const std::vector<UPoly<Rational>>&);
template std::vector<SignCondition> sign_determination_full<EpsScalar>(
    const UPoly<EpsScalar>&, const std::vector<UPoly<EpsScalar>>&);
template std::vector<SignCondition> sign_determination_full<Eps<EpsScalar>>(
    const UPoly<Eps<EpsScalar>>&, const std::vector<UPoly<Eps<EpsScalar>>>&);
template std::vector<SignCondition> sign_determination<Rational>(const UPoly<Rational>&,
                                                                 const std::vector<UPoly<Rational>>&);
template std::vector<SignCondition> sign_determination<EpsScalar>(const UPoly<EpsScalar>&,
                                                                  const std::vector<UPoly<EpsScalar>>&);
template std::vector<SignCondition> sign_determination<Eps<EpsScalar>>(
    const UPoly<Eps<EpsScalar>>&, const std::vector<UPoly<Eps<EpsScalar>>>&);
template SignCondition signs_at_root<Rational>(const UPoly<Rational>&, const SignCondition&,
                                               const std::vector<UPoly<Rational>>&);
template SignCondition signs_at_root<EpsScalar>(const UPoly<EpsScalar>&, const SignCondition&,
                                                const std::vector<UPoly<EpsScalar>>&);
template SignCondition signs_at_root<Eps<EpsScalar>>(const UPoly<Eps<EpsScalar>>&, const SignCondition&,
                                                     const std::vector<UPoly<Eps<EpsScalar>>>&);

}  // namespace roadmap
