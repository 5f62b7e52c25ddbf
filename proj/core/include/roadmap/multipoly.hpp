#pragma once

#include "roadmap/scalar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace roadmap {

/// Exponent vector; entry i is the power of the i-th declared variable.
using Mono = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic on the
/// exponent vector. Total, deterministic, degree-compatible.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Sparse multivariate polynomial over a scalar ring K with an explicit,
/// named variable order. All values are immutable in spirit: member
/// operations return new polynomials.
template <ScalarRing K>
class MultiPoly {
public:
    using TermMap = std::map<Mono, K, GrlexLess>;

    MultiPoly() = default;
    /// The zero polynomial in the given variables.
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    /// A variable-free constant (adopts the other operand's variables in
    /// arithmetic); lets generic ring code write MultiPoly(1), MultiPoly(-3).
    MultiPoly(int n) {
        if (n != 0) terms_.emplace(Mono{}, K(n));
    }

    static MultiPoly constant(std::vector<std::string> vars, K c) {
        MultiPoly p(std::move(vars));
        if (!roadmap::is_zero(c)) p.terms_.emplace(Mono(p.nvars(), 0), std::move(c));
        return p;
    }
    static MultiPoly variable(std::vector<std::string> vars, size_t idx) {
        MultiPoly p(std::move(vars));
        if (idx >= p.nvars()) throw std::invalid_argument("MultiPoly: variable index out of range");
        Mono m(p.nvars(), 0);
        m[idx] = 1;
        p.terms_.emplace(std::move(m), K(1));
        return p;
    }
    static MultiPoly monomial(std::vector<std::string> vars, Mono m, K c) {
        MultiPoly p(std::move(vars));
        if (m.size() != p.nvars()) throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
        if (!roadmap::is_zero(c)) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    size_t var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw std::invalid_argument("MultiPoly: unknown variable " + name);
    }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && total_degree() == 0;
    }
    /// The value of a constant polynomial (zero if empty).
    K constant_value() const {
        if (terms_.empty()) return K(0);
        if (!is_constant()) throw std::invalid_argument("MultiPoly: not a constant");
        return terms_.begin()->second;
    }

    /// Degree in one variable; -1 for the zero polynomial.
    int degree(size_t var) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
        return d;
    }
    int total_degree() const {
        if (terms_.empty()) return -1;
        unsigned d = 0;
        for (unsigned e : terms_.rbegin()->first) d += e;
        return static_cast<int>(d);
    }

    /// Coefficient of var^power, as a polynomial in the same variable list
    /// (the extracted variable no longer occurs in it).
    MultiPoly coeff_of(size_t var, unsigned power) const {
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m[var] != power) continue;
            Mono m2 = m;
            m2[var] = 0;
            r.terms_.emplace(std::move(m2), c);
        }
        return r;
    }
    MultiPoly leading_coeff(size_t var) const {
        int d = degree(var);
        if (d < 0) return MultiPoly(vars_);
        return coeff_of(var, static_cast<unsigned>(d));
    }
    /// Coefficients by power of var: result[i] is the coefficient of var^i.
    std::vector<MultiPoly> univariate_coeffs(size_t var) const {
        int d = degree(var);
        std::vector<MultiPoly> r;
        r.reserve(static_cast<size_t>(d + 1));
        for (int i = 0; i <= d; ++i) r.push_back(coeff_of(var, static_cast<unsigned>(i)));
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        if (vars_ != o.vars_) {
            if (nvars() == 0 && !o.vars_.empty()) {
                *this = with_vars(o.vars_);
            } else if (o.nvars() == 0) {
                return *this += o.with_vars(vars_);
            } else {
                throw std::invalid_argument("MultiPoly: mismatched variable orders");
            }
        }
        for (const auto& [m, c] : o.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end()) {
                terms_.emplace(m, c);
            } else {
                it->second += c;
                if (roadmap::is_zero(it->second)) terms_.erase(it);
            }
        }
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) { return *this += -o; }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ != b.vars_) {
            if (a.nvars() == 0 && !b.vars_.empty()) return a.with_vars(b.vars_) * b;
            if (b.nvars() == 0) return a * b.with_vars(a.vars_);
            throw std::invalid_argument("MultiPoly: mismatched variable orders");
        }
        MultiPoly r(a.vars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                K c = ca * cb;
                if (roadmap::is_zero(c)) continue;
                Mono m(ma.size());
                for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                auto it = r.terms_.find(m);
                if (it == r.terms_.end()) {
                    r.terms_.emplace(std::move(m), std::move(c));
                } else {
                    it->second += c;
                    if (roadmap::is_zero(it->second)) r.terms_.erase(it);
                }
            }
        }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly operator*(const K& s) const {
        MultiPoly r(vars_);
        if (roadmap::is_zero(s)) return r;
        for (const auto& [m, c] : terms_) {
            K cs = c * s;
            if (!roadmap::is_zero(cs)) r.terms_.emplace(m, std::move(cs));
        }
        return r;
    }
    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(vars_, K(1));
        MultiPoly base = *this;
        while (e) {
            if (e & 1u) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ != b.vars_) {
            if (a.nvars() == 0 && !b.vars_.empty()) return a.with_vars(b.vars_) == b;
            if (b.nvars() == 0) return a == b.with_vars(a.vars_);
            return false;
        }
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly derivative(size_t var) const {
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Mono m2 = m;
            m2[var] -= 1;
            K c2 = c * K(static_cast<int>(m[var]));
            if (!roadmap::is_zero(c2)) r.terms_.emplace(std::move(m2), std::move(c2));
        }
        return r;
    }

    /// Substitutes a scalar for one variable.
    MultiPoly substitute(size_t var, const K& value) const {
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) {
            K c2 = c;
            for (unsigned i = 0; i < m[var]; ++i) c2 = c2 * value;
            if (roadmap::is_zero(c2)) continue;
            Mono m2 = m;
            m2[var] = 0;
            MultiPoly t(vars_);
            t.terms_.emplace(std::move(m2), std::move(c2));
            r += t;
        }
        return r;
    }
    /// Substitutes a polynomial (same variable list) for one variable.
    MultiPoly substitute(size_t var, const MultiPoly& value) const {
        require_same_vars(value);
        int d = degree(var);
        if (d <= 0) return *this;
        // Horner on the univariate view in var.
        std::vector<MultiPoly> cs = univariate_coeffs(var);
        MultiPoly acc = cs.back();
        for (int i = d - 1; i >= 0; --i) acc = acc * value + cs[static_cast<size_t>(i)];
        return acc;
    }

    /// Exact evaluation at a full point.
    K eval(const std::vector<K>& point) const {
        if (point.size() != nvars()) throw std::invalid_argument("MultiPoly: evaluation point arity mismatch");
        K acc(0);
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (size_t i = 0; i < m.size(); ++i)
                for (unsigned e = 0; e < m[i]; ++e) t = t * point[i];
            acc += t;
        }
        return acc;
    }

    /// Reinterprets the polynomial over a different variable list, matching
    /// variables by name. Every variable actually occurring must be present
    /// in the new list.
    MultiPoly with_vars(std::vector<std::string> new_vars) const {
        MultiPoly r(std::move(new_vars));
        std::vector<int> where(vars_.size(), -1);
        for (size_t i = 0; i < vars_.size(); ++i)
            for (size_t j = 0; j < r.vars_.size(); ++j)
                if (vars_[i] == r.vars_[j]) { where[i] = static_cast<int>(j); break; }
        for (const auto& [m, c] : terms_) {
            Mono m2(r.nvars(), 0);
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (where[i] < 0)
                    throw std::invalid_argument("MultiPoly: unknown variable " + vars_[i]);
                m2[static_cast<size_t>(where[i])] = m[i];
            }
            auto it = r.terms_.find(m2);
            if (it == r.terms_.end()) {
                r.terms_.emplace(std::move(m2), c);
            } else {
                it->second += c;
                if (roadmap::is_zero(it->second)) r.terms_.erase(it);
            }
        }
        return r;
    }

    /// Text form in the shared input grammar (coefficients, + - * ^).
    std::string to_string() const;

private:
    void require_same_vars(const MultiPoly& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: mismatched variable orders");
    }
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Exact division a / b in K[vars]; throws std::invalid_argument if b does
/// not divide a. (Single-divisor term reduction suffices: when b | a, the
/// leading term of each partial remainder is divisible by b's leading term.)
template <ScalarRing K>
MultiPoly<K> exact_div(const MultiPoly<K>& a, const MultiPoly<K>& b) {
    if (b.is_zero()) throw std::invalid_argument("MultiPoly: division by zero");
    if (a.vars() != b.vars()) {
        if (a.nvars() == 0 && !b.vars().empty()) return exact_div(a.with_vars(b.vars()), b);
        if (b.nvars() == 0) return exact_div(a, b.with_vars(a.vars()));
        throw std::invalid_argument("MultiPoly: mismatched variable orders");
    }
    const auto& bt = *b.terms().rbegin();
    MultiPoly<K> q(a.vars());
    MultiPoly<K> r = a;
    while (!r.is_zero()) {
        const auto& rt = *r.terms().rbegin();
        Mono m(rt.first.size());
        for (size_t i = 0; i < m.size(); ++i) {
            if (rt.first[i] < bt.first[i]) throw std::invalid_argument("MultiPoly: inexact division");
            m[i] = rt.first[i] - bt.first[i];
        }
        MultiPoly<K> t = MultiPoly<K>::monomial(a.vars(), std::move(m), exact_div(rt.second, bt.second));
        q += t;
        r -= t * b;
    }
    return q;
}

template <ScalarRing K>
bool is_zero(const MultiPoly<K>& p) { return p.is_zero(); }

/// Applies a coefficient map, e.g. promotion Rational -> EpsScalar or the
/// eps -> 0 limit on every coefficient.
template <ScalarRing K2, ScalarRing K, class F>
MultiPoly<K2> map_coeffs(const MultiPoly<K>& p, F&& f) {
    MultiPoly<K2> r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        K2 c2 = f(c);
        if (!is_zero(c2)) r += MultiPoly<K2>::monomial(p.vars(), m, std::move(c2));
    }
    return r;
}

inline MultiPoly<EpsScalar> promote_eps(const MultiPoly<Rational>& p) {
    return map_coeffs<EpsScalar>(p, [](const Rational& c) { return EpsScalar(c); });
}

/// Pseudo-remainder of P by Q with respect to var: the remainder of b^e P by
/// Q where b is Q's leading coefficient in var and e = max(deg P - deg Q + 1, 0),
/// rounded up to the next even integer when sign_preserving is set (so the
/// multiplier b^e is a nonnegative square and sign conditions at common points
/// are unchanged). No coefficient division is performed.
template <ScalarRing K>
MultiPoly<K> pseudo_remainder(const MultiPoly<K>& p, const MultiPoly<K>& q, size_t var,
                              bool sign_preserving = false) {
    int dq = q.degree(var);
    if (dq < 1) throw std::invalid_argument("pseudo_remainder: not a divisor (constant in variable)");
    int dp = p.degree(var);
    int e = std::max(dp - dq + 1, 0);
    if (sign_preserving && (e % 2 != 0)) ++e;
    MultiPoly<K> b = q.leading_coeff(var);
    MultiPoly<K> r = p;
    int used = 0;
    while (r.degree(var) >= dq) {
        int dr = r.degree(var);
        MultiPoly<K> lead = r.leading_coeff(var);
        MultiPoly<K> shift = MultiPoly<K>::variable(r.vars(), var).pow(static_cast<unsigned>(dr - dq));
        r = r * b - lead * shift * q;
        ++used;
    }
    for (; used < e; ++used) r = r * b;
    return r;
}

/// The sequence (f, f', f'', ..., f^{(deg_var f)}) with respect to var.
template <ScalarRing K>
std::vector<MultiPoly<K>> derivative_sequence(const MultiPoly<K>& f, size_t var) {
    std::vector<MultiPoly<K>> r{f};
    int d = f.degree(var);
    for (int i = 0; i < d; ++i) r.push_back(r.back().derivative(var));
    return r;
}

/// For nonzero univariate P = a_p X^p + ... + a_q X^q (a_q lowest nonzero):
/// (sum |a_i/a_q|)^{-1}. Every nonzero real root of P has absolute value
/// strictly greater than this bound.
Rational cauchy_bound(const MultiPoly<Rational>& p);

template <ScalarRing K>
std::string to_string(const MultiPoly<K>& p) { return p.to_string(); }

template <ScalarRing K>
std::string MultiPoly<K>::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Leading (largest) terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = roadmap::to_string(c);
        bool negated = false;
        if (!cs.empty() && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (out.empty()) {
            if (negated) out += "-";
        } else {
            out += negated ? " - " : " + ";
        }
        bool compound = cs.find_first_of("+* ") != std::string::npos || cs.find('-', 1) != std::string::npos;
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += compound ? "(" + cs + ")" : cs;
        } else if (cs == "1" && !compound) {
            out += mono;
        } else {
            out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
        }
    }
    return out;
}

static_assert(ExactRing<MultiPoly<Rational>>);
static_assert(ExactRing<MultiPoly<EpsScalar>>);

}  // namespace roadmap
