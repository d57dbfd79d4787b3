#include "tapecalc/circuit.hpp"

namespace tapecalc {
namespace circ {

namespace {

Circuit make(CircuitTerm t) { return std::make_shared<const CircuitTerm>(std::move(t)); }

void require_sort(const SigPtr& sig, char a) {
    if (!sig->sorts.count(a))
        throw TypeError("signature " + sig->name + ": unknown sort '" + std::string(1, a) + "'");
}

} // namespace

Circuit id_sort(const SigPtr& sig, char a) {
    require_sort(sig, a);
    CircuitTerm t;
    t.kind = CircuitTerm::Kind::IdSort;
    t.sig  = sig;
    t.a    = a;
    t.dom = t.cod = std::string(1, a);
    return make(std::move(t));
}

Circuit id_unit(const SigPtr& sig) {
    CircuitTerm t;
    t.kind = CircuitTerm::Kind::IdUnit;
    t.sig  = sig;
    return make(std::move(t));
}

Circuit gen(const SigPtr& sig, const std::string& name, std::optional<Rational> param) {
    const auto& gt = sig->gen(name);
    if (gt.parametric) {
        if (!param)
            throw TypeError("generator '" + name + "' requires a probability parameter");
        if (!param->is_prob_open())
            throw MassError("generator '" + name + "': parameter " + param->str() +
                            " outside (0,1)");
    } else if (param) {
        throw TypeError("generator '" + name + "' takes no parameter");
    }
    CircuitTerm t;
    t.kind  = CircuitTerm::Kind::Gen;
    t.sig   = sig;
    t.name  = name;
    t.param = std::move(param);
    t.dom   = gt.ar;
    t.cod   = gt.coar;
    return make(std::move(t));
}

Circuit sym(const SigPtr& sig, char a, char b) {
    require_sort(sig, a);
    require_sort(sig, b);
    CircuitTerm t;
    t.kind = CircuitTerm::Kind::Sym;
    t.sig  = sig;
    t.a    = a;
    t.b    = b;
    t.dom  = std::string{a, b};
    t.cod  = std::string{b, a};
    return make(std::move(t));
}

Circuit seq(const Circuit& c, const Circuit& d) {
    if (c->cod != d->dom)
        throw TypeError("circuit seq: cod '" + c->cod + "' of " + circuit_str(c) +
                        " does not match dom '" + d->dom + "' of " + circuit_str(d));
    CircuitTerm t;
    t.kind = CircuitTerm::Kind::Seq;
    t.sig  = c->sig;
    t.dom  = c->dom;
    t.cod  = d->cod;
    t.lhs  = c;
    t.rhs  = d;
    return make(std::move(t));
}

Circuit par(const Circuit& c, const Circuit& d) {
    CircuitTerm t;
    t.kind = CircuitTerm::Kind::Par;
    t.sig  = c->sig;
    t.dom  = c->dom + d->dom;
    t.cod  = c->cod + d->cod;
    t.lhs  = c;
    t.rhs  = d;
    return make(std::move(t));
}

Circuit id_word(const SigPtr& sig, const std::string& w) {
    if (w.empty())
        return id_unit(sig);
    Circuit c = id_sort(sig, w[0]);
    for (std::size_t i = 1; i < w.size(); ++i)
        c = par(c, id_sort(sig, w[i]));
    return c;
}

namespace {

// a w -> w a
Circuit sym_sort_word(const SigPtr& sig, char a, const std::string& w) {
    if (w.empty())
        return id_sort(sig, a);
    Circuit step = par(sym(sig, a, w[0]), id_word(sig, w.substr(1)));
    return seq(step, par(id_sort(sig, w[0]), sym_sort_word(sig, a, w.substr(1))));
}

} // namespace

Circuit sym_word(const SigPtr& sig, const std::string& w1, const std::string& w2) {
    if (w1.empty())
        return id_word(sig, w2);
    if (w2.empty())
        return id_word(sig, w1);
    Circuit tail = par(id_sort(sig, w1[0]), sym_word(sig, w1.substr(1), w2));
    return seq(tail, par(sym_sort_word(sig, w1[0], w2), id_word(sig, w1.substr(1))));
}

} // namespace circ

int circuit_cmp(const Circuit& c, const Circuit& d) {
    if (c.get() == d.get())
        return 0;
    if (c->kind != d->kind)
        return c->kind < d->kind ? -1 : 1;
    switch (c->kind) {
    case CircuitTerm::Kind::IdUnit:
        return 0;
    case CircuitTerm::Kind::IdSort:
        return c->a == d->a ? 0 : (c->a < d->a ? -1 : 1);
    case CircuitTerm::Kind::Sym:
        if (c->a != d->a)
            return c->a < d->a ? -1 : 1;
        return c->b == d->b ? 0 : (c->b < d->b ? -1 : 1);
    case CircuitTerm::Kind::Gen: {
        if (int n = c->name.compare(d->name))
            return n < 0 ? -1 : 1;
        if (c->param.has_value() != d->param.has_value())
            return c->param.has_value() ? 1 : -1;
        if (c->param && *c->param != *d->param)
            return *c->param < *d->param ? -1 : 1;
        return 0;
    }
    case CircuitTerm::Kind::Seq:
    case CircuitTerm::Kind::Par: {
        if (int n = circuit_cmp(c->lhs, d->lhs))
            return n;
        return circuit_cmp(c->rhs, d->rhs);
    }
    }
    return 0;
}

bool circuit_eq(const Circuit& c, const Circuit& d) { return circuit_cmp(c, d) == 0; }

std::string circuit_str(const Circuit& c) {
    switch (c->kind) {
    case CircuitTerm::Kind::IdSort:
        return std::string("id ") + c->a;
    case CircuitTerm::Kind::IdUnit:
        return "id1";
    case CircuitTerm::Kind::Gen:
        return c->param ? c->name + " " + c->param->str() : c->name;
    case CircuitTerm::Kind::Sym:
        return std::string("sym ") + c->a + " " + c->b;
    case CircuitTerm::Kind::Seq:
        return "(" + circuit_str(c->lhs) + " ; " + circuit_str(c->rhs) + ")";
    case CircuitTerm::Kind::Par:
        return "(" + circuit_str(c->lhs) + " * " + circuit_str(c->rhs) + ")";
    }
    return "?";
}

FnTable eval_circuit(const Interpretation& interp, const Circuit& c) {
    switch (c->kind) {
    case CircuitTerm::Kind::IdSort:
        return FnTable::identity(interp.sort_width.at(c->a));
    case CircuitTerm::Kind::IdUnit:
        return FnTable::identity(0);
    case CircuitTerm::Kind::Gen:
        return interp.gen_table(*c);
    case CircuitTerm::Kind::Sym:
        return FnTable::symmetry(interp.sort_width.at(c->a), interp.sort_width.at(c->b));
    case CircuitTerm::Kind::Seq:
        return compose(eval_circuit(interp, c->lhs), eval_circuit(interp, c->rhs));
    case CircuitTerm::Kind::Par:
        return tensor(eval_circuit(interp, c->lhs), eval_circuit(interp, c->rhs));
    }
    throw Error("eval_circuit: unreachable");
}

} // namespace tapecalc
