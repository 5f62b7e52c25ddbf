#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace roadmap {

/// Arbitrary-precision rational number, always kept in canonical form:
/// gcd(|numerator|, denominator) = 1 and denominator > 0.
///
/// A thin value wrapper around GMP's mpq_class; the wrapper exists because
/// mpq_class does not canonicalize on construction from a numerator /
/// denominator pair, and because downstream code wants a small, fixed
/// arithmetic surface (sign, exact arithmetic, string I/O).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Parses "n", "-n" or "n/d" with arbitrary-precision integers.
    static Rational from_string(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational pow(unsigned e) const;

    double to_double() const { return v_.get_d(); }
    /// Decimal string "n" or "n/d".
    std::string to_string() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline int sign(const Rational& a) { return a.sign(); }
inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline Rational abs(const Rational& a) { return a.abs(); }

/// Exact quotient; throws on division by zero. (Rationals form a field, so
/// "exact division" is ordinary division; the name exists for generic code
/// shared with non-field scalar rings.)
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

std::string to_string(const Rational& a);

}  // namespace roadmap
