#include "roadmap/eps_scalar.hpp"

namespace roadmap {

namespace detail {
EpsSignObserver*& eps_sign_observer() {
    thread_local EpsSignObserver* obs = nullptr;
    return obs;
}
}  // namespace detail

EpsSignLedgerScope::EpsSignLedgerScope(EpsSignObserver obs) : obs_(std::move(obs)) {
    prev_ = detail::eps_sign_observer();
    detail::eps_sign_observer() = &obs_;
}

EpsSignLedgerScope::~EpsSignLedgerScope() { detail::eps_sign_observer() = prev_; }

void notify_eps_sign_query(const EpsScalar& s) {
    if (auto* obs = detail::eps_sign_observer(); obs && *obs) (*obs)(s);
}

Rational positivity_radius(const EpsScalar& p) {
    int q = p.order();
    if (q < 0) throw std::invalid_argument("positivity_radius: zero polynomial");
    const Rational& aq = p.coeff(static_cast<unsigned>(q));
    Rational s(0);
    for (int i = q; i <= p.degree(); ++i)
        s += abs(p.coeff(static_cast<unsigned>(i)) / aq);
    return Rational(1) / s;
}

}  // namespace roadmap
