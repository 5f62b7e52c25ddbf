#pragma once

#include "roadmap/sign_determination.hpp"

#include <vector>

namespace roadmap {

/// A real root of f pinned by the signs of the strict derivatives
/// f', ..., f^(deg f) at the root (f's own sign, always 0, is implicit).
/// Distinct real roots of the same f receive distinct encodings.
template <ScalarRing K>
struct ThomEncoding {
    UPoly<K> f;
    SignCondition der;

    /// Multiplicity of the encoded root: one plus the number of leading
    /// vanishing derivatives.
    int multiplicity() const {
        int m = 1;
        for (size_t i = 0; i < der.size(); ++i) {
            if (der[i] != 0) break;
            ++m;
        }
        return m;
    }

    friend bool operator==(const ThomEncoding& a, const ThomEncoding& b) {
        return a.f == b.f && a.der == b.der;
    }
};

/// Thom encodings of every distinct real root of f, in increasing root order.
template <ScalarRing K>
std::vector<ThomEncoding<K>> thom_encodings_of_roots(const UPoly<K>& f) {
    if (f.is_zero()) throw std::invalid_argument("thom_encodings_of_roots: zero polynomial");
    std::vector<ThomEncoding<K>> out;
    if (f.degree() == 0) return out;
    for (SignCondition& sc : sign_determination_full(f, std::vector<UPoly<K>>{}))
        out.push_back(ThomEncoding<K>{f, std::move(sc)});
    return out;
}

/// Exact comparison of the two encoded real numbers; works across different
/// defining polynomials (via sign determination of one root against the
/// other's derivative chain). Returns -1, 0, 1.
/// Throws std::invalid_argument if an encoding has no realizing root.
template <ScalarRing K>
int compare_thom(const ThomEncoding<K>& e1, const ThomEncoding<K>& e2) {
    if (e1.f == e2.f) {
        // Validate both against the realized encodings.
        std::vector<UPoly<K>> none;
        (void)signs_at_root(e1.f, e1.der, none);
        (void)signs_at_root(e2.f, e2.der, none);
        std::vector<int> v1{0}, v2{0};
        v1.insert(v1.end(), e1.der.signs().begin(), e1.der.signs().end());
        v2.insert(v2.end(), e2.der.signs().begin(), e2.der.signs().end());
        return thom_order_compare(v1, v2);
    }
    // Signs of (f2, f2', ...) at e1's root, compared against (0, e2.der).
    std::vector<UPoly<K>> chain2;
    {
        UPoly<K> g = e2.f;
        while (!g.is_zero()) {
            chain2.push_back(g);
            g = g.derivative();
        }
    }
    (void)signs_at_root(e2.f, e2.der, std::vector<UPoly<K>>{});  // validate e2
    SignCondition nu = signs_at_root(e1.f, e1.der, chain2);
    std::vector<int> v1 = nu.signs();
    std::vector<int> v2{0};
    v2.insert(v2.end(), e2.der.signs().begin(), e2.der.signs().end());
    return thom_order_compare(v1, v2);
}

}  // namespace roadmap
