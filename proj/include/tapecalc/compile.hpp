#pragma once

#include "tapecalc/tape.hpp"

namespace tapecalc {

// The isomorphism onto matrix normal form: lifted arrows become 1x1 Dirac
// matrices, generators the split/merge/kill/initial matrices, Seq matrix
// composition and Plus the direct sum.
template <class B>
StochMatrix<B> compile(const Tape<B>& t) {
    using M = StochMatrix<B>;
    switch (t->kind) {
    case TapeKind::Id:
        return M::identity({t->u});
    case TapeKind::Id0:
        return M::identity({});
    case TapeKind::Lift:
        return M({B::dom(t->arrow)}, {B::cod(t->arrow)},
                 {PlusHom<B>::dirac(t->arrow)});
    case TapeKind::Sigma:
        return swap_plus<B>({t->u}, {t->v});
    case TapeKind::Seq:
        return compose(compile(t->lhs), compile(t->rhs));
    case TapeKind::Plus:
        return direct_sum(compile(t->lhs), compile(t->rhs));
    case TapeKind::Cobang:
        return gen_cobang<B>({t->u});
    case TapeKind::Codiag:
        return gen_codiag<B>({t->u});
    case TapeKind::DiagP:
        return gen_diagp<B>({t->u}, t->p);
    case TapeKind::Bang:
        return gen_bang<B>({t->u});
    }
    throw Error("compile: unreachable");
}

// Complete equivalence of tape terms: equality of compiled matrices. Only
// meaningful over bases with decidable arrow equality.
template <class B>
bool equiv(const Tape<B>& t, const Tape<B>& s) {
    if constexpr (!B::decidable_eq)
        throw UnsupportedError("equiv: base arrow equality is not decidable");
    if (!(t->dom == s->dom && t->cod == s->cod))
        throw TypeError("equiv: terms have different types");
    return compile(t) == compile(s);
}

template <class B>
struct ColumnForm {
    std::vector<Rational>   weights;   // per-row mass p_i, null rows get 0
    std::vector<PlusHom<B>> residuals; // mass-normalized row subdistributions
};

// Decomposition of a single-monomial-domain term into per-row masses and
// normalized residual subdistributions.
template <class B>
ColumnForm<B> normal_form(const Tape<B>& t) {
    if (t->dom.size() != 1)
        throw TypeError("normal_form: domain must be a single monomial");
    StochMatrix<B> m = compile(t);
    ColumnForm<B>  out;
    for (std::size_t j = 0; j < m.rows(); ++j) {
        const auto&    d = m.entry(j, 0);
        const Rational p = d.mass();
        out.weights.push_back(p);
        PlusHom<B> residual;
        for (const auto& [f, w] : d.weights())
            residual.bump(f, w / p);
        out.residuals.push_back(std::move(residual));
    }
    return out;
}

// Canonical term for one column of a matrix: a probabilistic fan-out into
// the rows followed by, per row, the branch realizing its normalized
// subdistribution. Compiling the result reproduces the column exactly.
template <class B>
Tape<B> from_column(const typename B::Object& dom,
                    const ObjWord<B>&         cod,
                    const std::vector<PlusHom<B>>& rows) {
    using TB = TapeBuilder<B>;
    if (rows.size() != cod.size())
        throw TypeError("from_column: one subdistribution per row required");
    std::vector<Rational> ps;
    Rational              total(0);
    for (const auto& d : rows) {
        ps.push_back(d.mass());
        total += d.mass();
    }
    if (total > Rational(1))
        throw MassError("from_column: column mass exceeds 1");

    std::vector<Tape<B>> branches;
    for (std::size_t j = 0; j < rows.size(); ++j) {
        const auto& d = rows[j];
        if (d.is_null()) {
            branches.push_back(TB::star({dom}, {cod[j]}));
            continue;
        }
        std::vector<Tape<B>>  lifts;
        std::vector<Rational> qs;
        for (const auto& [f, w] : d.weights()) {
            lifts.push_back(TB::lift(f));
            qs.push_back(w / ps[j]);
        }
        if (lifts.size() == 1) {
            branches.push_back(lifts[0]);
        } else {
            branches.push_back(TB::seq_n({TB::diag_n({dom}, qs), TB::plus_n(lifts),
                                          TB::codiag_n({cod[j]}, lifts.size())}));
        }
    }
    branches.push_back(TB::bang(dom));
    return TB::seq(TB::diag_vec({dom}, ps), TB::plus_n(branches));
}

} // namespace tapecalc
