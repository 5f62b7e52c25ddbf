#pragma once

#include "roadmap/eps_scalar.hpp"
#include "roadmap/rational.hpp"

#include <concepts>
#include <string>

namespace roadmap {

/// An integral domain with decidable zero test and exact division of
/// divisible pairs. This is all the subresultant kernels need of their
/// coefficients; polynomials over an ExactRing are again an ExactRing.
template <class K>
concept ExactRing = requires(const K& a, const K& b, K& m) {
    K();
    K(1);
    K(-3);
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    m += a;
    m -= a;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { exact_div(a, b) } -> std::convertible_to<K>;
    { to_string(a) } -> std::convertible_to<std::string>;
};

/// An ordered ExactRing: additionally has a decidable sign. Satisfied by
/// Rational and by Eps<C> over any ScalarRing C; these are the coefficient
/// rings of user-facing polynomials.
template <class K>
concept ScalarRing = ExactRing<K> && requires(const K& a) {
    { sign(a) } -> std::convertible_to<int>;
};

static_assert(ScalarRing<Rational>);
static_assert(ScalarRing<EpsScalar>);
static_assert(ScalarRing<Eps<EpsScalar>>);

}  // namespace roadmap
