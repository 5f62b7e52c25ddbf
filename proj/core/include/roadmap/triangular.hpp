#pragma once

#include "roadmap/multipoly.hpp"
#include "roadmap/sign_determination.hpp"
#include "roadmap/upoly.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace roadmap {

/// A point t = (t_1, ..., t_m) with real algebraic coordinates, described by
/// a triangular system f_1(T_1), f_2(T_1,T_2), ..., f_m(T_1..T_m) together
/// with the Thom sign condition sigma_i identifying which root of
/// f_i(t_1..t_{i-1}, T_i) the coordinate t_i is. Levels are immutable values;
/// operations that replace a level polynomial return a new encoding of the
/// same point, which callers must adopt for all later computation.
template <ScalarRing K>
class TriangularThomEncoding {
public:
    TriangularThomEncoding() = default;

    TriangularThomEncoding(std::vector<std::string> vars, std::vector<MultiPoly<K>> polys,
                           std::vector<SignCondition> sigmas)
        : vars_(std::move(vars)), f_(std::move(polys)), sigma_(std::move(sigmas)) {
        if (f_.size() != vars_.size() || sigma_.size() != vars_.size())
            throw std::invalid_argument("TriangularThomEncoding: level count mismatch");
        for (size_t i = 0; i < f_.size(); ++i) validate_level(i);
    }

    size_t levels() const { return f_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(size_t level) const { return vars_.at(level); }
    const MultiPoly<K>& poly(size_t level) const { return f_.at(level); }
    const SignCondition& thom(size_t level) const { return sigma_.at(level); }

    /// True when every level polynomial has a constant strictly positive
    /// leading coefficient in its own variable (required by pseudo-reduction).
    bool quasi_monic() const {
        for (size_t i = 0; i < f_.size(); ++i) {
            MultiPoly<K> lc = f_[i].leading_coeff(i);
            if (!lc.is_constant()) return false;
            if (detail::ssign(lc.constant_value()) <= 0) return false;
        }
        return true;
    }

    TriangularThomEncoding prefix(size_t m) const {
        if (m > levels()) throw std::invalid_argument("TriangularThomEncoding: prefix too long");
        TriangularThomEncoding out;
        out.vars_.assign(vars_.begin(), vars_.begin() + static_cast<long>(m));
        for (size_t i = 0; i < m; ++i) {
            out.f_.push_back(f_[i].with_vars(out.vars_));
            out.sigma_.push_back(sigma_[i]);
        }
        return out;
    }

    /// Extends by one level: f_next must be a polynomial over
    /// vars() + {var_name} with positive degree in the new variable, and
    /// sigma the Thom sign condition of one of its roots over this point.
    TriangularThomEncoding extended(const std::string& var_name, MultiPoly<K> f_next,
                                    SignCondition sigma) const {
        TriangularThomEncoding out = *this;
        out.vars_.push_back(var_name);
        for (auto& f : out.f_) f = f.with_vars(out.vars_);
        out.f_.push_back(f_next.with_vars(out.vars_));
        out.sigma_.push_back(std::move(sigma));
        out.validate_level(out.levels() - 1);
        return out;
    }

    /// Same point, with the polynomial and sign condition of one level
    /// replaced (used when a factor of a level polynomial is discovered).
    TriangularThomEncoding with_level(size_t level, MultiPoly<K> f_new, SignCondition sigma) const {
        TriangularThomEncoding out = *this;
        out.f_.at(level) = f_new.with_vars(out.vars_);
        out.sigma_.at(level) = std::move(sigma);
        out.validate_level(level);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        for (size_t i = 0; i < f_.size(); ++i) {
            if (i) s += "; ";
            s += f_[i].to_string() + " : " + sigma_[i].to_string();
        }
        return s + "}";
    }

    friend bool operator==(const TriangularThomEncoding& a, const TriangularThomEncoding& b) {
        return a.vars_ == b.vars_ && a.f_ == b.f_ && a.sigma_ == b.sigma_;
    }

private:
    void validate_level(size_t i) {
        f_[i] = f_[i].with_vars(vars_);
        int d = f_[i].degree(i);
        if (d < 1)
            throw std::invalid_argument("TriangularThomEncoding: level polynomial is constant in its variable");
        for (size_t j = i + 1; j < vars_.size(); ++j)
            if (f_[i].degree(j) > 0)
                throw std::invalid_argument("TriangularThomEncoding: level polynomial uses a higher variable");
        if (sigma_[i].size() != static_cast<size_t>(d))
            throw std::invalid_argument("TriangularThomEncoding: sign condition length mismatch");
    }

    std::vector<std::string> vars_;
    std::vector<MultiPoly<K>> f_;
    std::vector<SignCondition> sigma_;
};

/// Exact signs of each polynomial (in the encoding's variables) at the
/// encoded point, one entry per input polynomial.
template <ScalarRing K>
SignCondition triangular_sign_determination(const TriangularThomEncoding<K>& enc,
                                            const std::vector<MultiPoly<K>>& polys);

/// Tarski query over the encoded point: the sum of sign(g(t, x)) over the
/// real roots x of f(t, .). f and g are univariate views over coefficients
/// in the encoding's variables; f's leading coefficient must not vanish at t.
template <ScalarRing K>
int triangular_tarski_query(const TriangularThomEncoding<K>& enc, const UPoly<MultiPoly<K>>& g,
                            const UPoly<MultiPoly<K>>& f);

/// Iterated sign-preserving pseudo-remainder of f by the levels of enc, top
/// variable first. The result r satisfies r(t) = factor * f(t) with factor a
/// strictly positive constant (the returned second component), and has
/// degree in T_i below deg(f_i) for every level. Requires a quasi-monic
/// encoding.
template <ScalarRing K>
std::pair<MultiPoly<K>, K> pseudo_reduce_with_factor(const MultiPoly<K>& f,
                                                     const TriangularThomEncoding<K>& enc);

template <ScalarRing K>
MultiPoly<K> pseudo_reduce(const MultiPoly<K>& f, const TriangularThomEncoding<K>& enc);

template <ScalarRing K>
struct PseudoInverse {
    MultiPoly<K> g;              ///< witness with f(t) * g(t) = c
    K c;                         ///< strictly positive constant
    TriangularThomEncoding<K> enc;  ///< same point; level polynomials may be factored
};

/// Pseudo-inverse of f at the encoded point: returns g and a strictly
/// positive constant c with f(t) * g(t) = c exactly. Level polynomials of
/// the encoding may be replaced by discovered factors along the way; the
/// returned encoding describes the same point and must be adopted by the
/// caller. Throws std::domain_error if f vanishes at the point.
template <ScalarRing K>
PseudoInverse<K> pseudo_invert(const MultiPoly<K>& f, const TriangularThomEncoding<K>& enc);

/// Rewrites a univariate view h (in the variable at index var of its
/// coefficients' variable list, over the base encoding) so its leading
/// coefficient is a strictly positive constant while keeping the same roots
/// at the encoded point: coefficients vanishing at the point are dropped, a
/// negative constant is flipped, and a non-constant leading coefficient is
/// cleared by pseudo-inverting it (which may refine the base encoding; the
/// returned encoding must be adopted). Throws std::logic_error if h is
/// constant at the point.
template <ScalarRing K>
std::pair<UPoly<MultiPoly<K>>, TriangularThomEncoding<K>> make_quasi_monic(
    UPoly<MultiPoly<K>> h, size_t var, TriangularThomEncoding<K> base);

/// Thom sign condition, with respect to h, of the root of f_orig(t, .) whose
/// Thom condition is sigma_orig; that root must also be a root of h(t, .).
/// Used when a level polynomial is replaced by one with the same root whose
/// derivative signs may differ (a factor, or a rescaled polynomial).
template <ScalarRing K>
SignCondition thom_of_same_root(const TriangularThomEncoding<K>& base, const UPoly<MultiPoly<K>>& h,
                                const UPoly<MultiPoly<K>>& f_orig, const SignCondition& sigma_orig);

/// Thom encodings of all real roots of h(t, U) in increasing order, each
/// returned as the input encoding extended by one level (with h truncated to
/// its true degree at t as the level polynomial). Throws std::domain_error
/// if h(t, .) is identically zero.
template <ScalarRing K>
std::vector<TriangularThomEncoding<K>> triangular_thom_encodings(
    const TriangularThomEncoding<K>& enc, const MultiPoly<K>& h, const std::string& uvar);

/// Orders the last-level roots of two encodings that extend a common base
/// point in the same variable (the level polynomials may differ).
/// Returns -1, 0, +1.
template <ScalarRing K>
int compare_extensions(const TriangularThomEncoding<K>& a, const TriangularThomEncoding<K>& b);

template <ScalarRing K>
struct TriangularSamplePoints {
    /// Roots of the family members at t in increasing order, each an
    /// extension of the base encoding by the sample variable.
    std::vector<TriangularThomEncoding<K>> roots;
    /// samples[i] lies strictly between roots[i-1] and roots[i] (with the
    /// unbounded ends at the extremes); always roots.size() + 1 entries.
    std::vector<Rational> samples;
};

/// All roots of the family members over the encoded point, in increasing
/// order, plus one exact rational point strictly inside each complementary
/// open interval. Family members are polynomials over enc.vars() + {xvar}.
/// Throws std::domain_error if a member is identically zero at t.
template <ScalarRing K>
TriangularSamplePoints<K> triangular_sample_points(const TriangularThomEncoding<K>& enc,
                                                   const std::vector<MultiPoly<K>>& family,
                                                   const std::string& xvar);

namespace detail {

/// Rational constant embedded into the scalar tower.
template <ScalarRing K>
K scalar_from_rational(const Rational& x) {
    if constexpr (std::is_same_v<K, Rational>) {
        return x;
    } else {
        return K(scalar_from_rational<typename K::coeff_type>(x));
    }
}

}  // namespace detail

}  // namespace roadmap
