#pragma once

#include "roadmap/rational.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace roadmap {

namespace detail {
// ADL shims: usable on any coefficient type from inside class scopes where
// member names would otherwise hide the free functions.
template <class T>
bool szero(const T& t) { return is_zero(t); }
template <class T>
int ssign(const T& t) { return sign(t); }
}  // namespace detail

/// Polynomial in one distinguished infinitesimal over a coefficient ring C,
/// ordered by 0 < eps < every positive element of C. Stored densely by
/// eps-power with no trailing zero coefficients (empty list means 0).
///
/// The public scalar tower of the library is EpsScalar = Eps<Rational>.
/// The recursive parameter exists so that a deformation phase can run on top
/// of an already-infinitesimal base ring (at most two levels are ever
/// instantiated); user-facing interfaces only ever see a single eps.
template <class C>
class Eps {
public:
    using coeff_type = C;

    Eps() = default;
    Eps(const C& constant) {
        if (!detail::szero(constant)) c_.push_back(constant);
    }
    Eps(int n) : Eps(C(n)) {}

    /// Builds from a coefficient list indexed by eps-power (trailing zeros trimmed).
    static Eps from_coeffs(std::vector<C> coeffs) {
        Eps r;
        r.c_ = std::move(coeffs);
        r.trim();
        return r;
    }

    /// The monomial c * eps^k.
    static Eps monomial(const C& c, unsigned k) {
        if (detail::szero(c)) return Eps();
        Eps r;
        r.c_.assign(k + 1, C(0));
        r.c_[k] = c;
        return r;
    }
    static Eps eps() { return monomial(C(1), 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree in eps; -1 for the zero element.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Order in eps (lowest power with nonzero coefficient); -1 for zero.
    int order() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!detail::szero(c_[i])) return static_cast<int>(i);
        return -1;
    }
    const C& coeff(unsigned k) const {
        static const C zero{};
        return k < c_.size() ? c_[k] : zero;
    }
    const std::vector<C>& coeffs() const { return c_; }

    /// Sign in the ordered extension: the sign of the lowest-order coefficient.
    int sign() const;

    /// Value at eps = 0 (the constant coefficient).
    C limit() const { return coeff(0); }

    /// Exact substitution eps := t.
    C eval(const C& t) const {
        C acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    Eps operator-() const {
        Eps r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Eps& operator+=(const Eps& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Eps& operator-=(const Eps& o) { return *this += -o; }
    Eps& operator*=(const Eps& o) { *this = *this * o; return *this; }

    friend Eps operator+(Eps a, const Eps& b) { a += b; return a; }
    friend Eps operator-(Eps a, const Eps& b) { a -= b; return a; }
    friend Eps operator*(const Eps& a, const Eps& b) {
        if (a.is_zero() || b.is_zero()) return Eps();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::szero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return from_coeffs(std::move(r));
    }

    friend bool operator==(const Eps& a, const Eps& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Eps& a, const Eps& b) { return !(a == b); }

    /// "eps" appears verbatim; coefficients use C's printing.
    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && detail::szero(c_.back())) c_.pop_back();
    }
    std::vector<C> c_;
};

/// The library's public infinitesimal scalar: rational coefficients by eps-power.
using EpsScalar = Eps<Rational>;

/// Observer invoked on every sign query of a genuinely infinitesimal-dependent
/// scalar (degree >= 1 in the innermost eps). The general roadmap construction
/// installs one to accumulate the ledger of eps-polynomials whose signs were
/// decided, from which the final positive substitution value is derived.
using EpsSignObserver = std::function<void(const EpsScalar&)>;

namespace detail {
EpsSignObserver*& eps_sign_observer();
}

/// RAII installer for the eps sign-query observer (thread-local).
class EpsSignLedgerScope {
public:
    explicit EpsSignLedgerScope(EpsSignObserver obs);
    ~EpsSignLedgerScope();
    EpsSignLedgerScope(const EpsSignLedgerScope&) = delete;
    EpsSignLedgerScope& operator=(const EpsSignLedgerScope&) = delete;

private:
    EpsSignObserver obs_;
    EpsSignObserver* prev_;
};

void notify_eps_sign_query(const EpsScalar& s);

template <class C>
int Eps<C>::sign() const {
    int o = order();
    if (o < 0) return 0;
    if constexpr (std::is_same_v<C, Rational>) {
        if (degree() >= 1) notify_eps_sign_query(*this);
    }
    return detail::ssign(c_[static_cast<size_t>(o)]);
}

template <class C>
int sign(const Eps<C>& a) { return a.sign(); }
template <class C>
bool is_zero(const Eps<C>& a) { return a.is_zero(); }

/// Exact polynomial division in C[eps]; throws if the division is not exact.
template <class C>
Eps<C> exact_div(const Eps<C>& a, const Eps<C>& b) {
    if (b.is_zero()) throw std::invalid_argument("Eps: division by zero");
    if (a.is_zero()) return Eps<C>();
    std::vector<C> rem(a.coeffs());
    int db = b.degree();
    int da = a.degree();
    if (da < db) throw std::invalid_argument("Eps: inexact division");
    std::vector<C> q(static_cast<size_t>(da - db) + 1, C(0));
    for (int i = da; i >= db; --i) {
        const C& top = rem[static_cast<size_t>(i)];
        if (detail::szero(top)) continue;
        C f = exact_div(top, b.coeff(static_cast<unsigned>(db)));
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= f * b.coeff(static_cast<unsigned>(j));
    }
    for (const auto& r : rem)
        if (!detail::szero(r)) throw std::invalid_argument("Eps: inexact division");
    return Eps<C>::from_coeffs(std::move(q));
}

template <class C>
std::string Eps<C>::to_string() const {
    using roadmap::to_string;
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (detail::szero(c_[i])) continue;
        if (!out.empty()) out += " + ";
        std::string cs = to_string(c_[i]);
        if (i == 0) {
            out += cs;
        } else {
            std::string pw = i == 1 ? "eps" : "eps^" + std::to_string(i);
            out += (cs == "1") ? pw : "(" + cs + ")*" + pw;
        }
    }
    return out;
}

template <class C>
std::string to_string(const Eps<C>& a) { return a.to_string(); }

/// Sign of a scalar as eps -> 0+ (the spec's scalar_sign on the tower).
inline int scalar_sign(const Rational& a) { return a.sign(); }
inline int scalar_sign(const EpsScalar& a) { return a.sign(); }

/// Value at eps = 0 for a polynomial infinitesimal quantity.
inline Rational limit_eps(const EpsScalar& a) { return a.limit(); }

/// Positivity radius of a nonzero eps-polynomial P = a_p eps^p + ... + a_q eps^q
/// (a_q the lowest nonzero coefficient): (sum_{q<=i<=p} |a_i/a_q|)^{-1}.
/// Every nonzero root of P has absolute value strictly larger than this.
Rational positivity_radius(const EpsScalar& p);

}  // namespace roadmap
