#pragma once

#include "roadmap/multipoly.hpp"
#include "roadmap/scalar.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace roadmap {

/// Dense univariate polynomial over an ExactRing, used by the subresultant
/// and Tarski-query kernels. Coefficients indexed by power, no trailing zeros.
template <ExactRing R>
class UPoly {
public:
    UPoly() = default;
    UPoly(int n) : UPoly(R(n)) {}
    UPoly(const R& c) {
        if (!detail::szero(c)) c_.push_back(c);
    }
    static UPoly from_coeffs(std::vector<R> coeffs) {
        UPoly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }
    static UPoly monomial(const R& c, unsigned k) {
        UPoly p;
        if (!detail::szero(c)) {
            p.c_.assign(k + 1, R(0));
            p.c_[k] = c;
        }
        return p;
    }
    static UPoly x() { return monomial(R(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const R& coeff(int k) const {
        static const R zero{};
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : zero;
    }
    const R& lc() const {
        if (c_.empty()) throw std::invalid_argument("UPoly: leading coefficient of zero");
        return c_.back();
    }
    const std::vector<R>& coeffs() const { return c_; }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) { return *this += -o; }
    friend UPoly operator+(UPoly a, const UPoly& b) { a += b; return a; }
    friend UPoly operator-(UPoly a, const UPoly& b) { a -= b; return a; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::szero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return from_coeffs(std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { *this = *this * o; return *this; }
    UPoly operator*(const R& s) const {
        UPoly r;
        if (detail::szero(s)) return r;
        r.c_.reserve(c_.size());
        for (const auto& c : c_) r.c_.push_back(c * s);
        r.trim();
        return r;
    }
    /// Multiplication by X^k.
    UPoly shifted(unsigned k) const {
        if (is_zero() || k == 0) return *this;
        UPoly r;
        r.c_.assign(c_.size() + k, R(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }
    UPoly pow(unsigned e) const {
        UPoly r(R(1));
        UPoly base = *this;
        while (e) {
            if (e & 1u) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<R> r(c_.size() - 1, R(0));
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * R(static_cast<int>(i));
        return from_coeffs(std::move(r));
    }

    R eval(const R& x) const {
        R acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    std::string to_string(const std::string& var = "X") const {
        if (c_.empty()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            if (detail::szero(c_[i])) continue;
            std::string cs = roadmap::to_string(c_[i]);
            if (!out.empty()) {
                if (!cs.empty() && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos) {
                    out += " - ";
                    cs = cs.substr(1);
                } else {
                    out += " + ";
                }
            }
            bool compound = cs.find_first_of("+* ") != std::string::npos || cs.find('-', 1) != std::string::npos;
            if (compound) cs = "(" + cs + ")";
            if (i == 0) {
                out += cs;
            } else {
                std::string pw = var + (i > 1 ? "^" + std::to_string(i) : "");
                out += (cs == "1") ? pw : cs + "*" + pw;
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && detail::szero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

template <ExactRing R>
bool is_zero(const UPoly<R>& p) { return p.is_zero(); }
template <ExactRing R>
std::string to_string(const UPoly<R>& p) { return p.to_string(); }

/// Pseudo-division: lc(B)^e * A = Q * B + R with deg R < deg B and
/// e = max(deg A - deg B + 1, 0) exactly (the multiplier is always padded to
/// the full exponent so the identity holds verbatim).
template <ExactRing R>
struct PseudoDivision {
    UPoly<R> quotient;
    UPoly<R> remainder;
    int exponent = 0;
};

template <ExactRing R>
PseudoDivision<R> pseudo_divmod(const UPoly<R>& a, const UPoly<R>& b) {
    if (b.is_zero()) throw std::invalid_argument("UPoly: pseudo-division by zero");
    PseudoDivision<R> out;
    int db = b.degree();
    out.exponent = std::max(a.degree() - db + 1, 0);
    UPoly<R> r = a;
    UPoly<R> q;
    int used = 0;
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        R c = r.lc();
        q = q * b.lc() + UPoly<R>::monomial(c, static_cast<unsigned>(k));
        r = r * b.lc() - b.shifted(static_cast<unsigned>(k)) * c;
        ++used;
    }
    for (; used < out.exponent; ++used) {
        q = q * b.lc();
        r = r * b.lc();
    }
    out.quotient = std::move(q);
    out.remainder = std::move(r);
    return out;
}

/// Conversion between a univariate MultiPoly (in variable var; all other
/// variables must be absent) and the dense kernel form.
template <ScalarRing K>
UPoly<K> to_upoly(const MultiPoly<K>& p, size_t var) {
    std::vector<K> c(static_cast<size_t>(std::max(p.degree(var), 0)) + 1, K(0));
    for (const auto& [m, coef] : p.terms()) {
        for (size_t i = 0; i < m.size(); ++i)
            if (i != var && m[i] != 0)
                throw std::invalid_argument("to_upoly: polynomial is not univariate in the given variable");
        c[m[var]] = coef;
    }
    return UPoly<K>::from_coeffs(std::move(c));
}

/// Univariate view with the remaining variables pushed into the coefficients.
template <ScalarRing K>
UPoly<MultiPoly<K>> to_upoly_in(const MultiPoly<K>& p, size_t var) {
    std::vector<MultiPoly<K>> c = p.univariate_coeffs(var);
    if (c.empty()) return UPoly<MultiPoly<K>>();
    return UPoly<MultiPoly<K>>::from_coeffs(std::move(c));
}

template <ScalarRing K>
MultiPoly<K> from_upoly(const UPoly<K>& p, const std::vector<std::string>& vars, size_t var) {
    MultiPoly<K> r(vars);
    for (int i = 0; i <= p.degree(); ++i) {
        if (detail::szero(p.coeff(i))) continue;
        Mono m(vars.size(), 0);
        m[var] = static_cast<unsigned>(i);
        r += MultiPoly<K>::monomial(vars, std::move(m), p.coeff(i));
    }
    return r;
}

template <ScalarRing K>
MultiPoly<K> from_upoly_in(const UPoly<MultiPoly<K>>& p, size_t var) {
    MultiPoly<K> r;
    for (int i = 0; i <= p.degree(); ++i) {
        const MultiPoly<K>& c = p.coeff(i);
        if (c.is_zero()) continue;
        MultiPoly<K> xi = MultiPoly<K>::variable(c.vars(), var).pow(static_cast<unsigned>(i));
        r += c * xi;
    }
    return r;
}

}  // namespace roadmap
