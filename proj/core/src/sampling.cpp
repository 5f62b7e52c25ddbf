#include "roadmap/sampling.hpp"

#include "roadmap/eps_scalar.hpp"
#include "roadmap/subresultant.hpp"
#include "roadmap/upoly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace roadmap {

namespace {

std::optional<Rational> as_rational(const Rational& v) { return v; }
template <class C>
std::optional<Rational> as_rational(const Eps<C>& v) {
    if (v.degree() > 0) return std::nullopt;
    return as_rational(v.coeff(0));
}

/// Substitutes every infinitesimal level by a fixed positive rational (a
/// different one per level). A nonzero result certifies a nonzero element;
/// that is the only direction ever relied on.
Rational rational_probe(const Rational& v, int) { return v; }
template <class C>
Rational rational_probe(const Eps<C>& v, int level) {
    C t = detail::scalar_from_rational<C>(Rational(1, 64 + 101 * static_cast<long>(level)));
    return rational_probe(v.eval(t), level + 1);
}

/// Exact normal form of coefficients modulo a quasi-monic triangular system
/// with rational leading coefficients: pseudo-reduction followed by division
/// by the accumulated (rational) factor, so repeated application is the
/// identity on reduced elements and the map is a ring homomorphism on the
/// quotient.
template <class K2>
class ModulusReducer {
public:
    ModulusReducer() = default;
    explicit ModulusReducer(TriangularThomEncoding<K2> enc) : enc_(std::move(enc)) {}

    void operator()(MultiPoly<K2>& p) const {
        if (!enc_ || p.is_zero()) return;
        auto [r, beta] = pseudo_reduce_with_factor(p, *enc_);
        auto b = as_rational(beta);
        if (!b || b->sign() == 0)
            throw std::invalid_argument(
                "bounded_algebraic_sampling: reduction factor is not an invertible rational");
        if (!(b->num() == 1 && b->den() == 1))
            r = r * MultiPoly<K2>::constant(
                        r.vars(), detail::scalar_from_rational<K2>(Rational(b->den(), b->num())));
        p = std::move(r);
    }

private:
    std::optional<TriangularThomEncoding<K2>> enc_;
};

/// Shared state of one sampling run: the deformation rewriting rules and the
/// monomial basis of the quotient algebra.
template <ScalarRing K>
struct Ctx {
    using K2 = Eps<K>;
    using Poly = MultiPoly<K2>;

    std::vector<std::string> all_vars;  // variable list of the input polynomial
    std::vector<size_t> free_idx;       // positions of the coordinates x_1..x_n
    unsigned dbar = 0;                  // even rewriting degree, larger than deg P
    std::vector<Poly> repl;             // x_1^dbar = repl[0]/zeta, x_i^{dbar-1} = repl[i]/zeta
    std::vector<Mono> basis;            // quotient basis monomials, grlex-ascending
    std::map<Mono, size_t, GrlexLess> basis_index;
    ModulusReducer<K2> redc;

    size_t n() const { return free_idx.size(); }
    size_t N() const { return basis.size(); }
    Poly zero() const { return Poly::constant(all_vars, K2(0)); }
    Poly one() const { return Poly::constant(all_vars, K2(1)); }
};

/// Rewrites q to its normal form in the quotient algebra: free-variable
/// exponents are brought below the basis bounds by the two rewriting rules,
/// each application costing one power of zeta in the common denominator.
/// Returns e with true value = q / zeta^e (after stripping shared powers).
template <ScalarRing K>
unsigned normal_form(const Ctx<K>& ctx, MultiPoly<Eps<K>>& q) {
    using K2 = Eps<K>;
    using Poly = MultiPoly<K2>;
    const unsigned dbar = ctx.dbar;
    unsigned e = 0;
    for (;;) {
        std::vector<std::pair<Mono, K2>> off;
        for (const auto& [m, c] : q.terms()) {
            if (m[ctx.free_idx[0]] >= dbar) {
                off.emplace_back(m, c);
                continue;
            }
            for (size_t i = 1; i < ctx.free_idx.size(); ++i)
                if (m[ctx.free_idx[i]] + 1 >= dbar) {
                    off.emplace_back(m, c);
                    break;
                }
        }
        if (off.empty()) break;
        Poly offpoly = ctx.zero();
        Poly add = ctx.zero();
        for (const auto& [m, c] : off) {
            offpoly += Poly::monomial(ctx.all_vars, m, c);
            Mono rest = m;
            size_t rule = 0;
            if (m[ctx.free_idx[0]] >= dbar) {
                rest[ctx.free_idx[0]] -= dbar;
            } else {
                rule = 1;
                while (rest[ctx.free_idx[rule]] + 1 < dbar) ++rule;
                rest[ctx.free_idx[rule]] -= dbar - 1;
            }
            add += Poly::monomial(ctx.all_vars, rest, c) * ctx.repl[rule];
        }
        // Every rewritten term gained a 1/zeta; scale the untouched part up.
        q = map_coeffs<K2>(q - offpoly, [](const K2& c) { return c * K2::eps(); }) + add;
        e += 1;
        ctx.redc(q);
    }
    if (e > 0 && !q.is_zero()) {
        int omin = std::numeric_limits<int>::max();
        for (const auto& [m, c] : q.terms()) omin = std::min(omin, c.order());
        unsigned s = std::min(e, static_cast<unsigned>(omin));
        if (s > 0) {
            q = map_coeffs<K2>(q, [s](const K2& c) {
                std::vector<K> v(c.coeffs().begin() + s, c.coeffs().end());
                return K2::from_coeffs(std::move(v));
            });
            e -= s;
        }
    }
    return e;
}

/// Coordinates of a normal form on the quotient basis; each coordinate is a
/// polynomial in the parameters only.
template <ScalarRing K>
std::vector<MultiPoly<Eps<K>>> split_basis(const Ctx<K>& ctx, const MultiPoly<Eps<K>>& q) {
    using Poly = MultiPoly<Eps<K>>;
    std::vector<Poly> out(ctx.N(), ctx.zero());
    for (const auto& [m, c] : q.terms()) {
        Mono key(m.size(), 0);
        Mono par = m;
        for (size_t idx : ctx.free_idx) {
            key[idx] = m[idx];
            par[idx] = 0;
        }
        auto it = ctx.basis_index.find(key);
        if (it == ctx.basis_index.end())
            throw std::logic_error("bounded_algebraic_sampling: normal form escaped the basis");
        out[it->second] += Poly::monomial(ctx.all_vars, std::move(par), c);
    }
    return out;
}

template <class Poly>
struct ScaledMatrix {
    std::vector<std::vector<Poly>> a;
    unsigned e = 0;  // true matrix = a / zeta^e
};

template <ScalarRing K>
MultiPoly<Eps<K>> eps_shift_up(const MultiPoly<Eps<K>>& p, unsigned k) {
    using K2 = Eps<K>;
    if (k == 0 || p.is_zero()) return p;
    return map_coeffs<K2>(p, [k](const K2& c) { return c * K2::monomial(K(1), k); });
}

/// Matrix of multiplication by x_i on the quotient basis, all columns brought
/// to one common zeta-denominator.
template <ScalarRing K>
ScaledMatrix<MultiPoly<Eps<K>>> mult_matrix(const Ctx<K>& ctx, size_t i) {
    using K2 = Eps<K>;
    using Poly = MultiPoly<K2>;
    const size_t N = ctx.N();
    std::vector<std::vector<Poly>> cols(N);
    std::vector<unsigned> ecol(N, 0);
    for (size_t c = 0; c < N; ++c) {
        Mono m = ctx.basis[c];
        m[ctx.free_idx[i]] += 1;
        Poly q = Poly::monomial(ctx.all_vars, std::move(m), K2(1));
        ecol[c] = normal_form(ctx, q);
        cols[c] = split_basis(ctx, q);
    }
    ScaledMatrix<Poly> out;
    out.e = *std::max_element(ecol.begin(), ecol.end());
    out.a.assign(N, std::vector<Poly>(N, ctx.zero()));
    for (size_t c = 0; c < N; ++c)
        for (size_t r = 0; r < N; ++r) out.a[r][c] = eps_shift_up(cols[c][r], out.e - ecol[c]);
    return out;
}

template <ScalarRing K>
ScaledMatrix<MultiPoly<Eps<K>>> mat_mult(const Ctx<K>& ctx,
                                         const ScaledMatrix<MultiPoly<Eps<K>>>& A,
                                         const ScaledMatrix<MultiPoly<Eps<K>>>& B) {
    using Poly = MultiPoly<Eps<K>>;
    const size_t N = ctx.N();
    ScaledMatrix<Poly> C;
    C.e = A.e + B.e;
    C.a.assign(N, std::vector<Poly>(N, ctx.zero()));
    for (size_t r = 0; r < N; ++r)
        for (size_t c = 0; c < N; ++c) {
            Poly acc = ctx.zero();
            for (size_t k = 0; k < N; ++k) acc += A.a[r][k] * B.a[k][c];
            ctx.redc(acc);
            C.a[r][c] = std::move(acc);
        }
    return C;
}

template <ScalarRing K>
MultiPoly<Eps<K>> mat_trace(const Ctx<K>& ctx, const ScaledMatrix<MultiPoly<Eps<K>>>& A) {
    auto t = ctx.zero();
    for (size_t i = 0; i < ctx.N(); ++i) t += A.a[i][i];
    return t;
}

template <ScalarRing K>
MultiPoly<Eps<K>> trace_product(const Ctx<K>& ctx, const ScaledMatrix<MultiPoly<Eps<K>>>& M,
                                const ScaledMatrix<MultiPoly<Eps<K>>>& A) {
    auto t = ctx.zero();
    for (size_t r = 0; r < ctx.N(); ++r)
        for (size_t c = 0; c < ctx.N(); ++c) t += M.a[r][c] * A.a[c][r];
    ctx.redc(t);
    return t;
}

template <ScalarRing K>
void min_order_into(const std::vector<MultiPoly<Eps<K>>>& polys, int& omin) {
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) omin = std::min(omin, c.order());
}

/// Extracts the coefficient of zeta^v from every scalar, reassembling the
/// U-coefficient list into one polynomial over params + {uvar}.
template <ScalarRing K>
MultiPoly<K> take_limit(const std::vector<std::string>& out_vars,
                        const std::vector<std::optional<size_t>>& param_pos,
                        const std::vector<MultiPoly<Eps<K>>>& ucoeffs, unsigned v) {
    MultiPoly<K> out = MultiPoly<K>::constant(out_vars, K(0));
    for (size_t d = 0; d < ucoeffs.size(); ++d) {
        for (const auto& [m, c] : ucoeffs[d].terms()) {
            K kc = c.coeff(v);
            if (roadmap::is_zero(kc)) continue;
            Mono mo(out_vars.size(), 0);
            for (size_t j = 0; j + 1 < out_vars.size(); ++j)
                if (param_pos[j]) mo[j] = m[*param_pos[j]];
            mo[out_vars.size() - 1] = static_cast<unsigned>(d);
            out += MultiPoly<K>::monomial(out_vars, std::move(mo), std::move(kc));
        }
    }
    return out;
}

/// Rational specialization of a scaled U-polynomial (parameters at fixed
/// rationals, infinitesimals at fixed small positive rationals), used for the
/// cheap squarefreeness certificate.
template <ScalarRing K>
UPoly<Rational> probe_upoly(const std::vector<MultiPoly<Eps<K>>>& ucoeffs) {
    std::vector<Rational> cs(ucoeffs.size(), Rational(0));
    for (size_t d = 0; d < ucoeffs.size(); ++d) {
        Rational acc(0);
        for (const auto& [m, c] : ucoeffs[d].terms()) {
            Rational term = rational_probe(c, 0);
            for (size_t j = 0; j < m.size(); ++j)
                if (m[j] > 0) term = term * Rational(static_cast<long>(3 + 2 * j), 1).pow(m[j]);
            acc += term;
        }
        cs[d] = acc;
    }
    return UPoly<Rational>::from_coeffs(std::move(cs));
}

template <ScalarRing K>
struct Candidate {
    ParamUnivariateRep<K> rep;
    bool certified = false;
};

/// One candidate root variable u = x_1 + ell*x_2 + ... + ell^{n-1}*x_n:
/// characteristic polynomial of multiplication by u from Newton's identities
/// on trace powers, coordinate tuple from traces against the coordinate
/// matrices, then the limit zeta -> 0 after clearing the smallest valuation.
template <ScalarRing K>
Candidate<K> build_candidate(const Ctx<K>& ctx,
                             const std::vector<ScaledMatrix<MultiPoly<Eps<K>>>>& Mx, long ell,
                             const std::vector<std::string>& params, const std::string& uvar) {
    using K2 = Eps<K>;
    using Poly = MultiPoly<K2>;
    const size_t N = ctx.N();
    const size_t n = ctx.n();

    ScaledMatrix<Poly> Mu;
    Mu.e = 0;
    for (const auto& M : Mx) Mu.e = std::max(Mu.e, M.e);
    Mu.a.assign(N, std::vector<Poly>(N, ctx.zero()));
    {
        K2 lp(1);
        const K2 lfac(static_cast<int>(ell));
        for (size_t i = 0; i < n; ++i) {
            if (!lp.is_zero())
                for (size_t r = 0; r < N; ++r)
                    for (size_t c = 0; c < N; ++c) {
                        Poly t = eps_shift_up(Mx[i].a[r][c], Mu.e - Mx[i].e);
                        Mu.a[r][c] +=
                            map_coeffs<K2>(t, [&lp](const K2& x) { return x * lp; });
                    }
            lp = lp * lfac;
        }
    }

    // ttil[j] = Tr(M_u^j) on denominator j*Mu.e; stil[i][j] = Tr(M_{x_i} M_u^j)
    // on denominator Mx[i].e + j*Mu.e.
    std::vector<Poly> ttil(N + 1, ctx.zero());
    std::vector<std::vector<Poly>> stil(n, std::vector<Poly>(N, ctx.zero()));
    ScaledMatrix<Poly> A;
    A.e = 0;
    A.a.assign(N, std::vector<Poly>(N, ctx.zero()));
    for (size_t i = 0; i < N; ++i) A.a[i][i] = ctx.one();
    for (size_t j = 0; j <= N; ++j) {
        if (j >= 1) ttil[j] = mat_trace(ctx, A);
        if (j < N) {
            for (size_t i = 0; i < n; ++i) stil[i][j] = trace_product(ctx, Mx[i], A);
            A = mat_mult(ctx, A, Mu);
        }
    }

    // Newton's identities on the scaled traces: ahat[j] = a_j * zeta^{j*Mu.e}
    // where sum_j a_j U^{N-j} is the characteristic polynomial of M_u.
    std::vector<Poly> ahat(N + 1, ctx.zero());
    ahat[0] = ctx.one();
    for (size_t j = 1; j <= N; ++j) {
        Poly acc = ttil[j];
        for (size_t s = 1; s < j; ++s) acc += ahat[s] * ttil[j - s];
        ctx.redc(acc);
        const K2 scale = detail::scalar_from_rational<K2>(Rational(-1, static_cast<long>(j)));
        ahat[j] = map_coeffs<K2>(acc, [&scale](const K2& c) { return c * scale; });
    }

    // fhat = zeta^{N*Mu.e} * charpoly, a genuine polynomial in zeta.
    std::vector<Poly> fc(N + 1, ctx.zero());
    for (size_t j = 0; j <= N; ++j)
        fc[N - j] = eps_shift_up(ahat[j], static_cast<unsigned>(N - j) * Mu.e);

    bool certified = true;
    if (n >= 2 && N >= 2) {
        UPoly<Rational> fp = probe_upoly<K>(fc);
        if (fp.degree() >= 2) {
            auto sres = signed_subresultants(fp, fp.derivative());
            certified = sres.principal[0].sign() != 0;
        }
    }

    // Coordinate tuple Ghat_i(U) = sum_{j+s<=N-1} S_{i,j} a_s U^{N-1-j-s},
    // every component on the single scale zeta^W; row 0 is the denominator
    // (the trace against the identity, an analogue of the derivative).
    unsigned Emax = 0;
    for (const auto& M : Mx) Emax = std::max(Emax, M.e);
    const unsigned W = Emax + static_cast<unsigned>(N - 1) * Mu.e;
    std::vector<std::vector<Poly>> gc(n + 1, std::vector<Poly>(N, ctx.zero()));
    const Poly nconst = Poly::constant(ctx.all_vars, K2(static_cast<int>(N)));
    for (size_t i = 0; i <= n; ++i) {
        const unsigned Ei = (i == 0) ? 0 : Mx[i - 1].e;
        for (size_t j = 0; j < N; ++j) {
            const Poly& S = (i == 0) ? (j == 0 ? nconst : ttil[j]) : stil[i - 1][j];
            if (S.is_zero()) continue;
            for (size_t s = 0; s + j < N; ++s) {
                if (ahat[s].is_zero()) continue;
                const unsigned shift = W - Ei - static_cast<unsigned>(j + s) * Mu.e;
                gc[i][N - 1 - j - s] += eps_shift_up(S * ahat[s], shift);
            }
        }
        for (auto& p : gc[i]) ctx.redc(p);
    }

    // Limit zeta -> 0 after clearing the smallest valuation: independently for
    // the defining polynomial, jointly for the tuple (ratios must survive).
    int vstar = std::numeric_limits<int>::max();
    min_order_into<K>(fc, vstar);
    int wstar = std::numeric_limits<int>::max();
    for (const auto& row : gc) min_order_into<K>(row, wstar);

    std::vector<std::string> out_vars = params;
    out_vars.push_back(uvar);
    std::vector<std::optional<size_t>> param_pos(params.size());
    for (size_t j = 0; j < params.size(); ++j)
        for (size_t i = 0; i < ctx.all_vars.size(); ++i)
            if (ctx.all_vars[i] == params[j]) param_pos[j] = i;

    Candidate<K> out;
    out.certified = certified;
    out.rep.params = params;
    out.rep.uvar = uvar;
    out.rep.f = take_limit<K>(out_vars, param_pos, fc, static_cast<unsigned>(vstar));
    out.rep.g.reserve(n + 1);
    for (size_t i = 0; i <= n; ++i)
        out.rep.g.push_back(take_limit<K>(out_vars, param_pos, gc[i], static_cast<unsigned>(wstar)));
    return out;
}

}  // namespace

template <ScalarRing K>
std::vector<ParamUnivariateRep<K>> bounded_algebraic_sampling(
    const MultiPoly<K>& P, const std::vector<std::string>& params, const std::string& uvar,
    bool nonnegative, const TriangularThomEncoding<K>* reduce_mod) {
    using K2 = Eps<K>;
    using Poly = MultiPoly<K2>;

    std::set<std::string> pset(params.begin(), params.end());
    if (pset.size() != params.size())
        throw std::invalid_argument("bounded_algebraic_sampling: duplicate parameter name");
    if (pset.count(uvar))
        throw std::invalid_argument("bounded_algebraic_sampling: uvar is a parameter");
    for (const auto& v : P.vars())
        if (v == uvar)
            throw std::invalid_argument("bounded_algebraic_sampling: uvar collides with a variable");

    Ctx<K> ctx;
    ctx.all_vars = P.vars();
    for (size_t i = 0; i < ctx.all_vars.size(); ++i)
        if (!pset.count(ctx.all_vars[i])) ctx.free_idx.push_back(i);
    if (ctx.free_idx.empty())
        throw std::invalid_argument("bounded_algebraic_sampling: no free variables");
    if (P.is_zero()) return {};

    if (reduce_mod && reduce_mod->levels() > 0) {
        if (!reduce_mod->quasi_monic())
            throw std::invalid_argument("bounded_algebraic_sampling: reduce_mod must be quasi-monic");
        std::vector<Poly> fs;
        std::vector<SignCondition> sg;
        for (size_t i = 0; i < reduce_mod->levels(); ++i) {
            const auto& v = reduce_mod->var(i);
            if (!pset.count(v))
                throw std::invalid_argument(
                    "bounded_algebraic_sampling: reduce_mod variable is not a parameter");
            if (!as_rational(reduce_mod->poly(i).leading_coeff(i).constant_value()))
                throw std::invalid_argument(
                    "bounded_algebraic_sampling: reduce_mod leading coefficient is not rational");
            fs.push_back(map_coeffs<K2>(reduce_mod->poly(i), [](const K& c) { return K2(c); }));
            sg.push_back(reduce_mod->thom(i));
        }
        ctx.redc = ModulusReducer<K2>(
            TriangularThomEncoding<K2>(reduce_mod->vars(), std::move(fs), std::move(sg)));
    }

    const size_t n = ctx.free_idx.size();
    const MultiPoly<K> pw = nonnegative ? P : P * P;
    int dp = 0;
    for (const auto& [m, c] : pw.terms()) {
        int d = 0;
        for (size_t idx : ctx.free_idx) d += static_cast<int>(m[idx]);
        dp = std::max(dp, d);
    }
    ctx.dbar = static_cast<unsigned>(dp + 1 + ((dp + 1) % 2));  // smallest even > dp

    // Rewriting rules from the deformed system P - zeta*G and its partials,
    // G = sum_i x_i^dbar + sum_{i>=2} x_i^2 + 2n (positive and proper).
    Poly p2 = map_coeffs<K2>(pw, [](const K& c) { return K2(c); });
    Poly g = Poly::constant(ctx.all_vars, K2(static_cast<int>(2 * n)));
    for (size_t i = 0; i < n; ++i) {
        Poly xi = Poly::variable(ctx.all_vars, ctx.free_idx[i]);
        g += xi.pow(ctx.dbar);
        if (i > 0) g += xi * xi;
    }
    const Poly zeta = Poly::constant(ctx.all_vars, K2::eps());
    ctx.repl.assign(n, ctx.zero());
    {
        Poly x1d = Poly::variable(ctx.all_vars, ctx.free_idx[0]).pow(ctx.dbar);
        ctx.repl[0] = p2 - zeta * (g - x1d);
    }
    for (size_t i = 1; i < n; ++i) {
        const size_t vi = ctx.free_idx[i];
        Poly dgi = g.derivative(vi);
        Poly dpi = p2.derivative(vi);
        K2 c = dgi.coeff_of(vi, ctx.dbar - 1).constant_value();
        Mono key(ctx.all_vars.size(), 0);
        key[vi] = ctx.dbar - 1;
        Poly lead = Poly::monomial(ctx.all_vars, std::move(key), c);
        auto cr = as_rational(c);
        const K2 inv = detail::scalar_from_rational<K2>(Rational(cr->den(), cr->num()));
        ctx.repl[i] = map_coeffs<K2>(dpi - zeta * (dgi - lead),
                                     [&inv](const K2& x) { return x * inv; });
    }

    // Quotient basis: x_1-exponent below dbar, others below dbar-1.
    {
        Mono m(ctx.all_vars.size(), 0);
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == n) {
                ctx.basis.push_back(m);
                return;
            }
            const unsigned bound = (i == 0) ? ctx.dbar : ctx.dbar - 1;
            for (unsigned e = 0; e < bound; ++e) {
                m[ctx.free_idx[i]] = e;
                rec(i + 1);
            }
            m[ctx.free_idx[i]] = 0;
        };
        rec(0);
        std::sort(ctx.basis.begin(), ctx.basis.end(), GrlexLess{});
        for (size_t i = 0; i < ctx.basis.size(); ++i) ctx.basis_index.emplace(ctx.basis[i], i);
    }

    std::vector<ScaledMatrix<Poly>> Mx;
    Mx.reserve(n);
    for (size_t i = 0; i < n; ++i) Mx.push_back(mult_matrix(ctx, i));

    std::vector<ParamUnivariateRep<K>> out;
    constexpr long kCandidateCap = 6;
    for (long ell = 0;; ++ell) {
        Candidate<K> cand = build_candidate(ctx, Mx, ell, params, uvar);
        out.push_back(std::move(cand.rep));
        if (n == 1) break;
        if (ell >= 1 && cand.certified) break;
        if (ell >= kCandidateCap) break;
    }
    return out;
}

// The run introduces one fresh infinitesimal above K, so instantiations stay
// within the two-level scalar tower.
template std::vector<ParamUnivariateRep<Rational>> bounded_algebraic_sampling<Rational>(
    const MultiPoly<Rational>&, const std::vector<std::string>&, const std::string&, bool,
    const TriangularThomEncoding<Rational>*);
template std::vector<ParamUnivariateRep<EpsScalar>> bounded_algebraic_sampling<EpsScalar>(
    const MultiPoly<EpsScalar>&, const std::vector<std::string>&, const std::string&, bool,
    const TriangularThomEncoding<EpsScalar>*);

}  // namespace roadmap
