#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tapecalc/stoch_matrix.hpp"

namespace tapecalc {

enum class TapeKind { Id, Id0, Lift, Sigma, Seq, Plus, Cobang, Codiag, DiagP, Bang };

template <class B>
struct TapeNode;

template <class B>
using Tape = std::shared_ptr<const TapeNode<B>>;

// Term of the two-layer tape grammar, typed at construction. Generators act
// on single base objects (monomials); polynomial-level structure is derived.
// DiagP keeps its probability strictly inside (0,1); the boundary splits are
// the derived forms cobang + id and id + cobang.
template <class B>
struct TapeNode {
    using Object = typename B::Object;
    using Arrow  = typename B::Arrow;

    TapeKind   kind;
    Object     u{};
    Object     v{};    // Sigma only
    Arrow      arrow{}; // Lift only
    Rational   p;       // DiagP only
    Tape<B>    lhs;
    Tape<B>    rhs;
    ObjWord<B> dom;
    ObjWord<B> cod;
};

template <class B>
struct TapeType {
    ObjWord<B> dom;
    ObjWord<B> cod;

    friend bool operator==(const TapeType&, const TapeType&) = default;
};

template <class B>
TapeType<B> type_of(const Tape<B>& t) {
    return {t->dom, t->cod};
}

// Diagnostic rendering; the DSL-faithful printer lives with the parser.
template <class B>
std::string tape_str(const Tape<B>& t) {
    switch (t->kind) {
    case TapeKind::Id:     return "idT " + B::object_str(t->u);
    case TapeKind::Id0:    return "id0";
    case TapeKind::Lift:   return "[ " + B::arrow_str(t->arrow) + " ]";
    case TapeKind::Sigma:  return "symT " + B::object_str(t->u) + " " + B::object_str(t->v);
    case TapeKind::Seq:    return "(" + tape_str(t->lhs) + " ; " + tape_str(t->rhs) + ")";
    case TapeKind::Plus:   return "(" + tape_str(t->lhs) + " + " + tape_str(t->rhs) + ")";
    case TapeKind::Cobang: return "init " + B::object_str(t->u);
    case TapeKind::Codiag: return "merge " + B::object_str(t->u);
    case TapeKind::DiagP:  return "split " + t->p.str() + " " + B::object_str(t->u);
    case TapeKind::Bang:   return "kill " + B::object_str(t->u);
    }
    return "?";
}

template <class B>
bool tape_eq(const Tape<B>& a, const Tape<B>& b) {
    if (a.get() == b.get())
        return true;
    if (a->kind != b->kind)
        return false;
    typename B::ArrowLess less;
    switch (a->kind) {
    case TapeKind::Id0:    return true;
    case TapeKind::Id:
    case TapeKind::Cobang:
    case TapeKind::Codiag:
    case TapeKind::Bang:   return a->u == b->u;
    case TapeKind::Sigma:  return a->u == b->u && a->v == b->v;
    case TapeKind::Lift:   return !less(a->arrow, b->arrow) && !less(b->arrow, a->arrow);
    case TapeKind::DiagP:  return a->u == b->u && a->p == b->p;
    case TapeKind::Seq:
    case TapeKind::Plus:   return tape_eq(a->lhs, b->lhs) && tape_eq(a->rhs, b->rhs);
    }
    return false;
}

// Term constructors and the derived combinators of the tape calculus.
template <class B>
struct TapeBuilder {
    using Obj = typename B::Object;
    using Arr = typename B::Arrow;
    using T   = Tape<B>;
    using W   = ObjWord<B>;

    static T id(Obj u) {
        return node({TapeKind::Id, u, {}, {}, {}, nullptr, nullptr, {u}, {u}});
    }

    static T id0() { return node({TapeKind::Id0, {}, {}, {}, {}, nullptr, nullptr, {}, {}}); }

    static T lift(Arr c) {
        W d{B::dom(c)}, co{B::cod(c)};
        return node({TapeKind::Lift, {}, {}, std::move(c), {}, nullptr, nullptr, std::move(d),
                     std::move(co)});
    }

    static T sigma(Obj u, Obj v) {
        return node({TapeKind::Sigma, u, v, {}, {}, nullptr, nullptr, {u, v}, {v, u}});
    }

    static T seq(T a, T b) {
        if (!(a->cod == b->dom))
            throw TypeError("tape seq: cod " + word_str<B>(a->cod) + " of " + tape_str(a) +
                            " does not match dom " + word_str<B>(b->dom) + " of " + tape_str(b));
        W d = a->dom, c = b->cod;
        return node({TapeKind::Seq, {}, {}, {}, {}, std::move(a), std::move(b), std::move(d),
                     std::move(c)});
    }

    static T plus(T a, T b) {
        W d = a->dom;
        d.insert(d.end(), b->dom.begin(), b->dom.end());
        W c = a->cod;
        c.insert(c.end(), b->cod.begin(), b->cod.end());
        return node({TapeKind::Plus, {}, {}, {}, {}, std::move(a), std::move(b), std::move(d),
                     std::move(c)});
    }

    static T cobang(Obj u) {
        return node({TapeKind::Cobang, u, {}, {}, {}, nullptr, nullptr, {}, {u}});
    }

    static T codiag(Obj u) {
        return node({TapeKind::Codiag, u, {}, {}, {}, nullptr, nullptr, {u, u}, {u}});
    }

    static T bang(Obj u) {
        return node({TapeKind::Bang, u, {}, {}, {}, nullptr, nullptr, {u}, {}});
    }

    // Probabilistic split; accepts the closed interval and desugars the
    // boundary cases to cobang + id and id + cobang.
    static T diagp(Obj u, const Rational& p) {
        require_prob(p, "diagp");
        if (p.is_zero())
            return plus(cobang(u), id(u));
        if (p.is_one())
            return plus(id(u), cobang(u));
        return node({TapeKind::DiagP, u, {}, {}, p, nullptr, nullptr, {u}, {u, u}});
    }

    static T seq_n(const std::vector<T>& ts) {
        T out = ts.at(0);
        for (std::size_t i = 1; i < ts.size(); ++i)
            out = seq(out, ts[i]);
        return out;
    }

    static T plus_n(const std::vector<T>& ts) {
        if (ts.empty())
            return id0();
        T out = ts[0];
        for (std::size_t i = 1; i < ts.size(); ++i)
            out = plus(out, ts[i]);
        return out;
    }

    static T id_word(const W& p) {
        std::vector<T> parts;
        for (const auto& u : p)
            parts.push_back(id(u));
        return plus_n(parts);
    }

    static T bang_word(const W& p) {
        std::vector<T> parts;
        for (const auto& u : p)
            parts.push_back(bang(u));
        return plus_n(parts);
    }

    static T cobang_word(const W& p) {
        std::vector<T> parts;
        for (const auto& u : p)
            parts.push_back(cobang(u));
        return plus_n(parts);
    }

    // sigma(U, Q): U (+) Q -> Q (+) U, one object against a word.
    static T sigma_obj_word(Obj u, const W& q) {
        if (q.empty())
            return id(u);
        W qrest(q.begin() + 1, q.end());
        return seq(plus(sigma(u, q[0]), id_word(qrest)),
                   plus(id(q[0]), sigma_obj_word(u, qrest)));
    }

    static T sigma_word(const W& p, const W& q) {
        if (p.empty())
            return id_word(q);
        if (q.empty())
            return id_word(p);
        W prest(p.begin() + 1, p.end());
        return seq(plus(id(p[0]), sigma_word(prest, q)),
                   plus(sigma_obj_word(p[0], q), id_word(prest)));
    }

    static T codiag_word(const W& p) {
        if (p.empty())
            return id0();
        W rest(p.begin() + 1, p.end());
        if (rest.empty())
            return codiag(p[0]);
        return seq(plus_n({id(p[0]), sigma_word(rest, {p[0]}), id_word(rest)}),
                   plus(codiag(p[0]), codiag_word(rest)));
    }

    static T diagp_word(const W& p, const Rational& prob) {
        require_prob(prob, "diagp_word");
        if (p.empty())
            return id0();
        W rest(p.begin() + 1, p.end());
        if (rest.empty())
            return diagp(p[0], prob);
        return seq(plus(diagp(p[0], prob), diagp_word(rest, prob)),
                   plus_n({id(p[0]), sigma_word({p[0]}, rest), id_word(rest)}));
    }

    static T star(const W& p, const W& q) { return seq(bang_word(p), cobang_word(q)); }

    static T plus_p(const T& a, const T& b, const Rational& prob) {
        if (!(a->dom == b->dom && a->cod == b->cod))
            throw TypeError("plus_p: type mismatch");
        return seq_n({diagp_word(a->dom, prob), plus(a, b), codiag_word(a->cod)});
    }

    static T scale_t(const T& a, const Rational& prob) {
        require_prob(prob, "scale_t");
        if (prob.is_one())
            return a;
        if (prob.is_zero())
            return star(a->dom, a->cod);
        return seq(diagp_word(a->dom, prob), plus(a, bang_word(a->dom)));
    }

    // n-branch probabilistic fan-out: masses p_1..p_n with sum <= 1, any
    // leftover mass dropped. Used by pairings.
    static T diag_n(const W& p, const std::vector<Rational>& ps) {
        check_prob_vector(ps);
        return diag_n_unchecked(p, ps);
    }

    // (n+1)-branch fan-out: masses p_1..p_n and 1 - sum on the last branch.
    static T diag_vec(const W& p, const std::vector<Rational>& ps) {
        check_prob_vector(ps);
        return diag_vec_unchecked(p, ps);
    }

    static T codiag_n(const W& q, std::size_t n) {
        if (n == 0)
            return cobang_word(q);
        if (n == 1)
            return id_word(q);
        return seq(plus(id_word(q), codiag_n(q, n - 1)), codiag_word(q));
    }

    static T proj(const std::vector<W>& ps, std::size_t i) {
        check_index(ps, i);
        std::vector<T> parts;
        for (std::size_t j = 0; j < ps.size(); ++j)
            parts.push_back(j == i ? id_word(ps[j]) : bang_word(ps[j]));
        return plus_n(parts);
    }

    static T inj(const std::vector<W>& ps, std::size_t i) {
        check_index(ps, i);
        std::vector<T> parts;
        for (std::size_t j = 0; j < ps.size(); ++j)
            parts.push_back(j == i ? id_word(ps[j]) : cobang_word(ps[j]));
        return plus_n(parts);
    }

    static T pairing(const std::vector<T>& ts, const std::vector<Rational>& ps) {
        if (ts.empty() || ts.size() != ps.size())
            throw TypeError("pairing: needs one probability per term");
        for (const auto& t : ts)
            if (!(t->dom == ts[0]->dom))
                throw TypeError("pairing: terms must share their domain");
        return seq(diag_n(ts[0]->dom, ps), plus_n(ts));
    }

    static T copairing(const std::vector<T>& ts) {
        if (ts.empty())
            throw TypeError("copairing: needs at least one term");
        for (const auto& t : ts)
            if (!(t->cod == ts[0]->cod))
                throw TypeError("copairing: terms must share their codomain");
        return seq(plus_n(ts), codiag_n(ts[0]->cod, ts.size()));
    }

    // --- monoidal layer (bases with a tensor) ---

    static T whisker_left(Obj u, const T& t)
        requires(B::has_tensor)
    {
        switch (t->kind) {
        case TapeKind::Id:     return id(B::tensor_obj(u, t->u));
        case TapeKind::Id0:    return id0();
        case TapeKind::Lift:   return lift(B::tensor(B::identity(u), t->arrow));
        case TapeKind::Sigma:  return sigma(B::tensor_obj(u, t->u), B::tensor_obj(u, t->v));
        case TapeKind::Seq:    return seq(whisker_left(u, t->lhs), whisker_left(u, t->rhs));
        case TapeKind::Plus:   return plus(whisker_left(u, t->lhs), whisker_left(u, t->rhs));
        case TapeKind::Cobang: return cobang(B::tensor_obj(u, t->u));
        case TapeKind::Codiag: return codiag(B::tensor_obj(u, t->u));
        case TapeKind::DiagP:  return diagp(B::tensor_obj(u, t->u), t->p);
        case TapeKind::Bang:   return bang(B::tensor_obj(u, t->u));
        }
        throw Error("whisker_left: unreachable");
    }

    static T whisker_right(Obj u, const T& t)
        requires(B::has_tensor)
    {
        switch (t->kind) {
        case TapeKind::Id:     return id(B::tensor_obj(t->u, u));
        case TapeKind::Id0:    return id0();
        case TapeKind::Lift:   return lift(B::tensor(t->arrow, B::identity(u)));
        case TapeKind::Sigma:  return sigma(B::tensor_obj(t->u, u), B::tensor_obj(t->v, u));
        case TapeKind::Seq:    return seq(whisker_right(u, t->lhs), whisker_right(u, t->rhs));
        case TapeKind::Plus:   return plus(whisker_right(u, t->lhs), whisker_right(u, t->rhs));
        case TapeKind::Cobang: return cobang(B::tensor_obj(t->u, u));
        case TapeKind::Codiag: return codiag(B::tensor_obj(t->u, u));
        case TapeKind::DiagP:  return diagp(B::tensor_obj(t->u, u), t->p);
        case TapeKind::Bang:   return bang(B::tensor_obj(t->u, u));
        }
        throw Error("whisker_right: unreachable");
    }

    static W tensor_word(const W& p, const W& q)
        requires(B::has_tensor)
    {
        W out;
        for (const auto& u : p)
            for (const auto& v : q)
                out.push_back(B::tensor_obj(u, v));
        return out;
    }

    static W scale_word(Obj u, const W& q)
        requires(B::has_tensor)
    {
        W out;
        for (const auto& v : q)
            out.push_back(B::tensor_obj(u, v));
        return out;
    }

    // Structural permutation P (x) (Q (+) R) -> P (x) Q (+) P (x) R.
    static T delta_l(const W& p, const W& q, const W& r)
        requires(B::has_tensor)
    {
        if (p.empty())
            return id0();
        W    prest(p.begin() + 1, p.end());
        W    qr = q;
        qr.insert(qr.end(), r.begin(), r.end());
        T first = plus(id_word(scale_word(p[0], qr)), delta_l(prest, q, r));
        T second = plus_n({id_word(scale_word(p[0], q)),
                           sigma_word(scale_word(p[0], r), tensor_word(prest, q)),
                           id_word(tensor_word(prest, r))});
        return seq(first, second);
    }

    static T delta_l_inv(const W& p, const W& q, const W& r)
        requires(B::has_tensor)
    {
        if (p.empty())
            return id0();
        W prest(p.begin() + 1, p.end());
        T first = plus_n({id_word(scale_word(p[0], q)),
                          sigma_word(tensor_word(prest, q), scale_word(p[0], r)),
                          id_word(tensor_word(prest, r))});
        return seq(first, plus(id_word(scale_word(p[0], q)),
                               plus(id_word(scale_word(p[0], r)), delta_l_inv(prest, q, r))));
    }

    // Tensor symmetry P (x) Q -> Q (x) P, built from the left distributor
    // and lifted base symmetries on monomials.
    static T sigma_times(const W& p, const W& q)
        requires(B::has_tensor)
    {
        if (q.empty())
            return id0();
        W qrest(q.begin() + 1, q.end());
        std::vector<T> blocks;
        for (const auto& u : p)
            blocks.push_back(lift(B::symmetry(u, q[0])));
        blocks.push_back(sigma_times(p, qrest));
        return seq(delta_l(p, {q[0]}, qrest), plus_n(blocks));
    }

    static T whisker_left_poly(const W& s, const T& t)
        requires(B::has_tensor)
    {
        std::vector<T> parts;
        for (const auto& w : s)
            parts.push_back(whisker_left(w, t));
        return plus_n(parts);
    }

    static T whisker_right_poly(const W& s, const T& t)
        requires(B::has_tensor)
    {
        if (s.empty())
            return id0();
        if (s.size() == 1)
            return whisker_right(s[0], t);
        W srest(s.begin() + 1, s.end());
        return seq_n({delta_l(t->dom, {s[0]}, srest),
                      plus(whisker_right(s[0], t), whisker_right_poly(srest, t)),
                      delta_l_inv(t->cod, {s[0]}, srest)});
    }

    static T tensor_t(const T& a, const T& b)
        requires(B::has_tensor)
    {
        return seq(whisker_left_poly(a->dom, b), whisker_right_poly(b->cod, a));
    }

private:
    static T node(TapeNode<B> n) { return std::make_shared<const TapeNode<B>>(std::move(n)); }

    static void check_prob_vector(const std::vector<Rational>& ps) {
        Rational total(0);
        for (const auto& q : ps) {
            require_prob(q, "diag vector");
            total += q;
        }
        if (total > Rational(1))
            throw MassError("diag vector: probabilities sum to " + total.str() + " > 1");
    }

    static void check_index(const std::vector<W>& ps, std::size_t i) {
        if (i >= ps.size())
            throw TypeError("projection/injection index out of range");
    }

    // Renormalized tail: q_i = p_{i+1} / (1 - p_1), or 0 when p_1 = 1.
    static std::vector<Rational> renorm_tail(const std::vector<Rational>& ps) {
        std::vector<Rational> qs;
        const Rational        rest = ps[0].one_minus();
        for (std::size_t i = 1; i < ps.size(); ++i)
            qs.push_back(rest.is_zero() ? Rational(0) : ps[i] / rest);
        return qs;
    }

    static T diag_n_unchecked(const W& p, const std::vector<Rational>& ps) {
        if (ps.empty())
            return bang_word(p);
        return seq(diagp_word(p, ps[0]), plus(id_word(p), diag_n_unchecked(p, renorm_tail(ps))));
    }

    static T diag_vec_unchecked(const W& p, const std::vector<Rational>& ps) {
        if (ps.empty())
            return id_word(p);
        return seq(diagp_word(p, ps[0]),
                   plus(id_word(p), diag_vec_unchecked(p, renorm_tail(ps))));
    }
};

} // namespace tapecalc
