#include "roadmap/representation.hpp"

#include "roadmap/eps_scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace roadmap {

namespace {

/// Coordinate index -> (block index, numerator index within the block).
template <ScalarRing K>
std::vector<std::pair<size_t, size_t>> coordinate_map(const BlockRepresentation<K>& blk) {
    std::vector<std::pair<size_t, size_t>> where;
    for (size_t i = 0; i < blk.blocks.size(); ++i) {
        if (blk.blocks[i].size() == 1)
            throw std::invalid_argument("substitute_block: block without numerators");
        for (size_t j = 1; j < blk.blocks[i].size(); ++j) where.emplace_back(i, j);
    }
    return where;
}

/// Raises each block's clearing exponent to cover Q's block degrees.
void grow_exponents(const Mono& m, const std::vector<std::pair<size_t, size_t>>& where,
                    size_t L, std::vector<unsigned>& e) {
    std::vector<unsigned> bd(e.size(), 0);
    for (size_t q = 0; q < L; ++q) bd[where[q].first] += m[q];
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], bd[i]);
}

template <ScalarRing K>
std::vector<std::string> output_vars(const MultiPoly<K>& Q, const BlockRepresentation<K>& blk,
                                     size_t L) {
    std::vector<std::string> out = blk.enc.vars();
    for (size_t i = L; i < Q.nvars(); ++i) {
        const std::string& name = Q.vars()[i];
        if (std::find(out.begin(), out.end(), name) != out.end())
            throw std::invalid_argument("substitute_block: variable name collision: " + name);
        out.push_back(name);
    }
    return out;
}

/// The per-term clearing: c * prod x_q^{m_q} becomes
/// c * prod f_{i(q), j(q)}^{m_q} * prod_i f_{i,0}^{e_i - (block-i degree)},
/// with untouched trailing variables carried through.
template <ScalarRing K>
MultiPoly<K> clear_term(const Mono& m, const K& c,
                        const std::vector<std::vector<MultiPoly<K>>>& lifted,
                        const std::vector<std::pair<size_t, size_t>>& where,
                        const std::vector<unsigned>& e,
                        const std::vector<std::string>& out_vars, size_t levels, size_t L) {
    Mono rest(out_vars.size(), 0);
    for (size_t q = L; q < m.size(); ++q) rest[levels + (q - L)] = m[q];
    MultiPoly<K> term = MultiPoly<K>::monomial(out_vars, std::move(rest), c);
    std::vector<unsigned> bd(e.size(), 0);
    for (size_t q = 0; q < L; ++q) {
        if (m[q] == 0) continue;
        term = term * lifted[where[q].first][where[q].second].pow(m[q]);
        bd[where[q].first] += m[q];
    }
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > bd[i]) term = term * lifted[i][0].pow(e[i] - bd[i]);
    return term;
}

/// Lifts the block polynomials into the output variables and verifies that
/// every denominator that will actually be raised is nonzero at the point.
template <ScalarRing K>
std::vector<std::vector<MultiPoly<K>>> lift_blocks(const BlockRepresentation<K>& blk,
                                                   const std::vector<unsigned>& e,
                                                   const std::vector<std::string>& out_vars) {
    std::vector<std::vector<MultiPoly<K>>> lifted(blk.blocks.size());
    for (size_t i = 0; i < blk.blocks.size(); ++i) {
        if (blk.blocks[i].empty()) continue;
        lifted[i].reserve(blk.blocks[i].size());
        for (const MultiPoly<K>& f : blk.blocks[i]) lifted[i].push_back(f.with_vars(out_vars));
        if (e[i] > 0 && triangular_sign_determination(
                            blk.enc, {blk.blocks[i][0].with_vars(blk.enc.vars())})[0] == 0)
            throw std::domain_error("substitute_block: denominator vanishes at the encoded point");
    }
    return lifted;
}

template <ScalarRing K>
void check_shape(const MultiPoly<K>& Q, const BlockRepresentation<K>& blk, size_t L) {
    if (blk.blocks.size() != blk.enc.levels())
        throw std::invalid_argument("substitute_block: blocks do not match encoding levels");
    if (Q.nvars() < L)
        throw std::invalid_argument("substitute_block: fewer variables than represented coordinates");
}

}  // namespace

template <ScalarRing K>
MultiPoly<K> substitute_block(const MultiPoly<K>& Q, const BlockRepresentation<K>& blk) {
    size_t L = blk.total_coords();
    check_shape(Q, blk, L);
    std::vector<std::pair<size_t, size_t>> where = coordinate_map(blk);
    std::vector<unsigned> e(blk.blocks.size(), 0);
    for (const auto& [m, c] : Q.terms()) grow_exponents(m, where, L, e);
    for (unsigned& ei : e)
        if (ei % 2) ++ei;
    std::vector<std::string> out_vars = output_vars(Q, blk, L);
    auto lifted = lift_blocks(blk, e, out_vars);
    MultiPoly<K> acc(out_vars);
    for (const auto& [m, c] : Q.terms())
        acc += clear_term(m, c, lifted, where, e, out_vars, blk.enc.levels(), L);
    return acc;
}

template <ScalarRing K>
std::vector<MultiPoly<K>> substitute_block_tuple(const std::vector<MultiPoly<K>>& tuple,
                                                 const BlockRepresentation<K>& blk) {
    if (tuple.empty()) return {};
    size_t L = blk.total_coords();
    for (const MultiPoly<K>& Q : tuple) {
        check_shape(Q, blk, L);
        if (Q.vars() != tuple[0].vars())
            throw std::invalid_argument("substitute_block_tuple: mismatched variable orders");
    }
    std::vector<std::pair<size_t, size_t>> where = coordinate_map(blk);
    // Shared exponent per block: smallest integer >= every component's block
    // degree. Unlike the scalar case it is not rounded to even; the common
    // factor's sign cancels in ratios.
    std::vector<unsigned> e(blk.blocks.size(), 0);
    for (const MultiPoly<K>& Q : tuple)
        for (const auto& [m, c] : Q.terms()) grow_exponents(m, where, L, e);
    std::vector<std::string> out_vars = output_vars(tuple[0], blk, L);
    auto lifted = lift_blocks(blk, e, out_vars);
    std::vector<MultiPoly<K>> out;
    out.reserve(tuple.size());
    for (const MultiPoly<K>& Q : tuple) {
        MultiPoly<K> acc(out_vars);
        for (const auto& [m, c] : Q.terms())
            acc += clear_term(m, c, lifted, where, e, out_vars, blk.enc.levels(), L);
        out.push_back(std::move(acc));
    }
    return out;
}

template <ScalarRing K>
std::vector<RealUnivariateRep<K>> realize_at(const TriangularThomEncoding<K>& enc,
                                             const ParamUnivariateRep<K>& rep) {
    if (rep.params != enc.vars())
        throw std::invalid_argument("realize_at: parameter names do not match the encoding");
    if (rep.g.empty()) throw std::invalid_argument("realize_at: empty tuple");
    std::vector<std::string> full = enc.vars();
    full.push_back(rep.uvar);
    std::vector<TriangularThomEncoding<K>> roots;
    try {
        roots = triangular_thom_encodings(enc, rep.f.with_vars(full), rep.uvar);
    } catch (const std::domain_error&) {
        return {};  // f identically zero here: this candidate represents nothing
    }
    size_t uidx = enc.levels();
    std::vector<RealUnivariateRep<K>> out;
    for (TriangularThomEncoding<K>& r : roots) {
        const SignCondition& sigma = r.thom(uidx);
        size_t z = 0;  // derivatives 1..z vanish at the root: multiplicity z + 1
        while (z < sigma.size() && sigma[z] == 0) ++z;
        // Differentiate the tuple just enough to make the denominator nonzero
        // at the root.  At a root of multiplicity z + 1 the denominator may
        // vanish to any order up to z; past z the ratios no longer describe
        // this root, so such a root carries no representable point.
        MultiPoly<K> den = rep.g[0].with_vars(r.vars());
        size_t d = 0;
        while (d <= z && triangular_sign_determination(r, {den})[0] == 0) {
            den = den.derivative(uidx);
            ++d;
        }
        if (d > z) continue;
        std::vector<MultiPoly<K>> tup;
        tup.reserve(rep.g.size());
        for (const MultiPoly<K>& gj : rep.g) {
            MultiPoly<K> t = gj.with_vars(r.vars());
            for (size_t s = 0; s < d; ++s) t = t.derivative(uidx);
            tup.push_back(std::move(t));
        }
        out.push_back({std::move(r), std::move(tup)});
    }
    return out;
}

template <ScalarRing K>
int sign_at_rep_point(const RealUnivariateRep<K>& rep, const MultiPoly<K>& Q) {
    const size_t base = rep.enc.levels() - 1;
    if (base > 0 && Q.nvars() == base + rep.coords()) {
        // Mixed form: the first `base` variables are the coordinates of the
        // underlying tower point (positionally), the rest the represented
        // coordinates. Substitute the tuple ratios with an even clearing
        // power of the denominator so the sign is preserved.
        const auto& evars = rep.enc.vars();
        int dmax = 0;
        for (const auto& [m, c] : Q.terms()) {
            int d = 0;
            for (size_t j = base; j < m.size(); ++j) d += static_cast<int>(m[j]);
            dmax = std::max(dmax, d);
        }
        const unsigned e = static_cast<unsigned>(dmax + (dmax % 2));
        MultiPoly<K> acc = MultiPoly<K>::constant(evars, K(0));
        for (const auto& [m, c] : Q.terms()) {
            Mono mb(evars.size(), 0);
            for (size_t j = 0; j < base; ++j) mb[j] = m[j];
            MultiPoly<K> t = MultiPoly<K>::monomial(evars, std::move(mb), c);
            unsigned used = 0;
            for (size_t j = base; j < m.size(); ++j) {
                if (m[j] == 0) continue;
                t = t * rep.g[j - base + 1].with_vars(evars).pow(m[j]);
                used += m[j];
            }
            t = t * rep.g[0].with_vars(evars).pow(e - used);
            acc += t;
        }
        return triangular_sign_determination(rep.enc, {acc})[0];
    }
    if (Q.nvars() != rep.coords())
        throw std::invalid_argument("sign_at_rep_point: arity does not match coordinate count");
    BlockRepresentation<K> blk{rep.enc, std::vector<std::vector<MultiPoly<K>>>(rep.enc.levels())};
    blk.blocks.back() = rep.g;
    MultiPoly<K> cleared = substitute_block(Q, blk);
    return triangular_sign_determination(rep.enc, {cleared})[0];
}

template <ScalarRing K>
int compare_rep_coordinate(const RealUnivariateRep<K>& a, const RealUnivariateRep<K>& b,
                           size_t i) {
    if (i >= a.coords() || i >= b.coords())
        throw std::invalid_argument("compare_rep_coordinate: coordinate index out of range");
    if (a.enc == b.enc) {
        const auto& vars = a.enc.vars();
        MultiPoly<K> diff = a.g[i + 1].with_vars(vars) * b.g[0].with_vars(vars) -
                            b.g[i + 1].with_vars(vars) * a.g[0].with_vars(vars);
        SignCondition s = triangular_sign_determination(
            a.enc, {diff, a.g[0].with_vars(vars), b.g[0].with_vars(vars)});
        return s[0] * s[1] * s[2];
    }
    // Distinct root levels over the same underlying point: stack b's root
    // level on top of a's tower (renaming if the root variables collide) and
    // compare there.
    size_t lb = b.enc.levels() - 1;
    std::string ub = b.uvar();
    MultiPoly<K> fb = b.enc.poly(lb);
    std::vector<MultiPoly<K>> gb = b.g;
    if (std::find(a.enc.vars().begin(), a.enc.vars().end(), ub) != a.enc.vars().end()) {
        std::string fresh = ub + "#";
        while (std::find(a.enc.vars().begin(), a.enc.vars().end(), fresh) != a.enc.vars().end())
            fresh += "#";
        fb = rename_var(fb, ub, fresh);
        for (MultiPoly<K>& g : gb) g = rename_var(g, ub, fresh);
        ub = fresh;
    }
    TriangularThomEncoding<K> both = a.enc.extended(ub, fb, b.enc.thom(lb));
    const auto& vars = both.vars();
    MultiPoly<K> diff = a.g[i + 1].with_vars(vars) * gb[0].with_vars(vars) -
                        gb[i + 1].with_vars(vars) * a.g[0].with_vars(vars);
    SignCondition s = triangular_sign_determination(
        both, {diff, a.g[0].with_vars(vars), gb[0].with_vars(vars)});
    return s[0] * s[1] * s[2];
}

template <ScalarRing K>
bool equal_rep_points(const RealUnivariateRep<K>& a, const RealUnivariateRep<K>& b) {
    if (a.coords() != b.coords()) return false;
    for (size_t i = 0; i < a.coords(); ++i)
        if (compare_rep_coordinate(a, b, i) != 0) return false;
    return true;
}

template <ScalarRing K>
std::vector<MultiPoly<K>> pseudo_reduce_tuple(const std::vector<MultiPoly<K>>& tuple,
                                              const TriangularThomEncoding<K>& enc) {
    std::vector<MultiPoly<K>> red;
    std::vector<K> beta;
    red.reserve(tuple.size());
    beta.reserve(tuple.size());
    for (const MultiPoly<K>& t : tuple) {
        auto [r, b] = pseudo_reduce_with_factor(t, enc);
        red.push_back(std::move(r));
        beta.push_back(std::move(b));
    }
    // Rescale crosswise so every component carries the common positive
    // factor prod(beta): R_j = red_j * prod_{l != j} beta_l. (Ring
    // multiplications only; no scalar division needed.)
    for (size_t j = 0; j < red.size(); ++j) {
        K m(1);
        for (size_t l = 0; l < beta.size(); ++l)
            if (l != j) m = m * beta[l];
        red[j] = red[j] * MultiPoly<K>::constant(red[j].vars(), std::move(m));
    }
    return red;
}

template <ScalarRing K>
MultiPoly<K> rename_var(const MultiPoly<K>& p, const std::string& from, const std::string& to) {
    std::vector<std::string> nv = p.vars();
    bool found = false;
    for (std::string& n : nv) {
        if (n == to) throw std::invalid_argument("rename_var: name collision: " + to);
        if (n == from) {
            n = to;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("rename_var: unknown variable " + from);
    MultiPoly<K> r(nv);
    for (const auto& [m, c] : p.terms()) r += MultiPoly<K>::monomial(nv, m, c);
    return r;
}

#define ROADMAP_INSTANTIATE_REPRESENTATION(K)                                                      \
    template struct BlockRepresentation<K>;                                                        \
    template struct RealUnivariateRep<K>;                                                          \
    template struct ParamUnivariateRep<K>;                                                         \
    template MultiPoly<K> substitute_block<K>(const MultiPoly<K>&, const BlockRepresentation<K>&); \
    template std::vector<MultiPoly<K>> substitute_block_tuple<K>(                                  \
        const std::vector<MultiPoly<K>>&, const BlockRepresentation<K>&);                          \
    template std::vector<RealUnivariateRep<K>> realize_at<K>(const TriangularThomEncoding<K>&,     \
                                                             const ParamUnivariateRep<K>&);        \
    template int sign_at_rep_point<K>(const RealUnivariateRep<K>&, const MultiPoly<K>&);           \
    template int compare_rep_coordinate<K>(const RealUnivariateRep<K>&,                            \
                                           const RealUnivariateRep<K>&, size_t);                   \
    template bool equal_rep_points<K>(const RealUnivariateRep<K>&, const RealUnivariateRep<K>&);   \
    template std::vector<MultiPoly<K>> pseudo_reduce_tuple<K>(const std::vector<MultiPoly<K>>&,    \
                                                              const TriangularThomEncoding<K>&);   \
    template MultiPoly<K> rename_var<K>(const MultiPoly<K>&, const std::string&,                   \
                                        const std::string&);

ROADMAP_INSTANTIATE_REPRESENTATION(Rational)
ROADMAP_INSTANTIATE_REPRESENTATION(EpsScalar)
ROADMAP_INSTANTIATE_REPRESENTATION(Eps<EpsScalar>)

#undef ROADMAP_INSTANTIATE_REPRESENTATION

}  // namespace roadmap
