#include "tapecalc/boolcirc.hpp"

namespace tapecalc {

const SigPtr& pb_signature() {
    static const SigPtr sig = [] {
        auto s   = std::make_shared<Signature>();
        s->name  = "PB";
        s->sorts = {'A'};
        s->gens["and"]     = {"AA", "A", false};
        s->gens["not"]     = {"A", "A", false};
        s->gens["flip1"]   = {"", "A", false};
        s->gens["copy"]    = {"A", "AA", false};
        s->gens["discard"] = {"A", "", false};
        s->gens["flip"]    = {"", "A", true};
        return s;
    }();
    return sig;
}

bool contains_flip(const Circuit& c) {
    switch (c->kind) {
    case CircuitTerm::Kind::Gen:
        return c->name == "flip";
    case CircuitTerm::Kind::Seq:
    case CircuitTerm::Kind::Par:
        return contains_flip(c->lhs) || contains_flip(c->rhs);
    default:
        return false;
    }
}

FnTable and_table() { return FnTable(2, 1, {0, 0, 0, 1}); }
FnTable not_table() { return FnTable(1, 1, {1, 0}); }
FnTable copy_table() { return FnTable(1, 2, {0, 3}); }
FnTable discard_table() { return FnTable(1, 0, {0, 0}); }
FnTable const_table(bool bit) { return FnTable::constant(1, bit ? 1 : 0); }
FnTable or_table() { return FnTable(2, 1, {0, 1, 1, 1}); }

FnTable duplicate_table(std::size_t n) {
    std::vector<std::uint64_t> t(std::size_t{1} << n);
    for (std::uint64_t b = 0; b < t.size(); ++b)
        t[b] = b | (b << n);
    return FnTable(n, 2 * n, std::move(t));
}

const Interpretation& pb_interp() {
    static const Interpretation interp = [] {
        Interpretation in;
        in.sort_width = {{'A', 1}};
        in.gen_table  = [](const CircuitTerm& g) -> FnTable {
            if (g.name == "and")
                return and_table();
            if (g.name == "not")
                return not_table();
            if (g.name == "flip1")
                return const_table(true);
            if (g.name == "copy")
                return copy_table();
            if (g.name == "discard")
                return discard_table();
            if (g.name == "flip")
                throw TypeError("flip has no deterministic table; use eval_pb or encode");
            throw TypeError("unknown PB generator '" + g.name + "'");
        };
        return in;
    }();
    return interp;
}

FnTable eval_gate_free(const Circuit& c) { return eval_circuit(pb_interp(), c); }

namespace {

Circuit g(const char* name) { return circ::gen(pb_signature(), name); }
Circuit idA() { return circ::id_sort(pb_signature(), 'A'); }
Circuit id_w(const std::string& w) { return circ::id_word(pb_signature(), w); }

} // namespace

Circuit or_gate() {
    return circ::seq(circ::seq(circ::par(g("not"), g("not")), g("and")), g("not"));
}

Circuit flip0_circuit() { return circ::seq(g("flip1"), g("not")); }

Circuit perm_circuit(const std::string& word, const std::vector<std::size_t>& perm) {
    const SigPtr& sig = pb_signature();
    if (perm.size() != word.size())
        throw TypeError("perm_circuit: permutation size mismatch");
    std::vector<std::size_t> current(word.size());
    for (std::size_t i = 0; i < current.size(); ++i)
        current[i] = i;
    std::string cur_word = word;
    Circuit     out      = id_w(word);
    bool        touched  = false;
    for (std::size_t k = 0; k < perm.size(); ++k) {
        std::size_t j = k;
        while (current[j] != perm[k])
            ++j;
        // Bubble wire perm[k] from position j down to position k.
        for (; j > k; --j) {
            Circuit layer = circ::par(
                circ::par(id_w(cur_word.substr(0, j - 1)),
                          circ::sym(sig, cur_word[j - 1], cur_word[j])),
                id_w(cur_word.substr(j + 1)));
            out = touched ? circ::seq(out, layer) : layer;
            touched = true;
            std::swap(current[j - 1], current[j]);
            std::swap(cur_word[j - 1], cur_word[j]);
        }
    }
    return out;
}

Circuit copy_word_circuit(const std::string& word) {
    const SigPtr& sig = pb_signature();
    if (word.empty())
        return circ::id_unit(sig);
    const std::string rest = word.substr(1);
    Circuit head = g("copy");
    if (rest.empty())
        return head;
    Circuit split = circ::par(head, copy_word_circuit(rest));
    Circuit fix   = circ::par(circ::par(idA(), circ::sym_word(sig, std::string(1, word[0]), rest)),
                              id_w(rest));
    return circ::seq(split, fix);
}

Circuit ncopier(std::size_t n) {
    if (n == 0)
        return g("discard");
    if (n == 1)
        return idA();
    return circ::seq(g("copy"), circ::par(idA(), ncopier(n - 1)));
}

Circuit mux_circuit() {
    // (x,y,z): copy the selector, route to (x,y,x,z), take (x&y) | (~x&z).
    Circuit fan   = circ::par(g("copy"), id_w("AA"));
    Circuit route = perm_circuit("AAAA", {0, 2, 1, 3});
    Circuit arms  = circ::par(g("and"), circ::seq(circ::par(g("not"), idA()), g("and")));
    return circ::seq(circ::seq(circ::seq(fan, route), arms), or_gate());
}

Circuit mux_m(std::size_t m) {
    if (m == 0)
        return g("discard");
    // Split off (x, y1, z1), recurse on the remaining buses.
    const std::size_t n = 2 * m + 1;
    Circuit fan = circ::par(g("copy"), id_w(std::string(n - 1, 'A')));
    std::vector<std::size_t> perm = {0, 2, m + 2, 1};
    for (std::size_t i = 1; i < m; ++i)
        perm.push_back(2 + i);
    for (std::size_t i = 1; i < m; ++i)
        perm.push_back(m + 2 + i);
    Circuit route = perm_circuit(std::string(n + 1, 'A'), perm);
    return circ::seq(circ::seq(fan, route), circ::par(mux_circuit(), mux_m(m - 1)));
}

namespace {

Circuit discard_word(std::size_t n) {
    if (n == 0)
        return circ::id_unit(pb_signature());
    Circuit out = g("discard");
    for (std::size_t i = 1; i < n; ++i)
        out = circ::par(out, g("discard"));
    return out;
}

Circuit const_circuit(bool bit) { return bit ? g("flip1") : flip0_circuit(); }

Circuit and_reduce(std::size_t n) {
    if (n == 1)
        return idA();
    return circ::seq(circ::par(g("and"), id_w(std::string(n - 2, 'A'))), and_reduce(n - 1));
}

// A^n -> A testing input == minterm, n >= 1.
Circuit minterm_circuit(std::size_t n, std::uint64_t minterm) {
    Circuit literals = (minterm & 1) ? idA() : g("not");
    for (std::size_t j = 1; j < n; ++j)
        literals = circ::par(literals, (minterm >> j & 1) ? idA() : g("not"));
    return circ::seq(literals, and_reduce(n));
}

// A^n -> A computing one output bit of a table from its minterm set. Folds
// the minterm tests over a single working copy of the bus, so the widest
// intermediate layer has 2n+1 wires.
Circuit bit_circuit(std::size_t n, const std::vector<std::uint64_t>& minterms) {
    if (minterms.empty())
        return circ::seq(discard_word(n), const_circuit(false));
    if (minterms.size() == (std::size_t{1} << n))
        return circ::seq(discard_word(n), const_circuit(true));
    const std::string bus(n, 'A');
    Circuit c = circ::par(id_w(bus), const_circuit(false)); // bus, acc
    for (std::uint64_t mt : minterms) {
        c = circ::seq(c, circ::par(copy_word_circuit(bus), idA()));
        c = circ::seq(c, circ::par(id_w(bus), circ::par(minterm_circuit(n, mt), idA())));
        c = circ::seq(c, circ::par(id_w(bus), or_gate()));
    }
    return circ::seq(c, circ::par(discard_word(n), idA()));
}

} // namespace

Circuit table_to_circuit(const FnTable& t) {
    if (t.m == 0)
        return discard_word(t.n);
    if (t.n == 0) {
        Circuit out = const_circuit(t.table[0] & 1);
        for (std::size_t k = 1; k < t.m; ++k)
            out = circ::par(out, const_circuit(t.table[0] >> k & 1));
        return out;
    }
    std::vector<std::vector<std::uint64_t>> minterms(t.m);
    for (std::uint64_t b = 0; b < t.inputs(); ++b)
        for (std::size_t k = 0; k < t.m; ++k)
            if (t.table[b] >> k & 1)
                minterms[k].push_back(b);
    // Output bits are produced high index first, so each new bit lands just
    // below the bus and the finished outputs stack in order.
    const std::string bus(t.n, 'A');
    Circuit     c = id_w(bus);
    std::string outs;
    for (std::size_t k = t.m; k-- > 0;) {
        c    = circ::seq(c, circ::par(copy_word_circuit(bus), id_w(outs)));
        c    = circ::seq(c, circ::par(id_w(bus),
                                      circ::par(bit_circuit(t.n, minterms[k]), id_w(outs))));
        outs = "A" + outs;
    }
    return circ::seq(c, circ::par(discard_word(t.n), id_w(outs)));
}

namespace {

KleisliMap table_to_kleisli(const FnTable& t) {
    std::map<KleisliMap::Elem, KleisliMap::Dist> out;
    for (std::uint64_t b = 0; b < t.inputs(); ++b)
        out.emplace(KleisliMap::Elem{0, b}, KleisliMap::Dist::dirac({0, t.table[b]}));
    return KleisliMap({t.n}, {t.m}, std::move(out));
}

} // namespace

KleisliMap eval_pb(const Circuit& c) {
    switch (c->kind) {
    case CircuitTerm::Kind::IdSort:
        return KleisliMap::identity({1});
    case CircuitTerm::Kind::IdUnit:
        return KleisliMap::identity({0});
    case CircuitTerm::Kind::Sym:
        return table_to_kleisli(FnTable::symmetry(1, 1));
    case CircuitTerm::Kind::Gen: {
        if (c->name == "flip") {
            KleisliMap::Dist d;
            d.bump({0, 1}, *c->param);
            d.bump({0, 0}, c->param->one_minus());
            return KleisliMap({0}, {1}, {{KleisliMap::Elem{0, 0}, d}});
        }
        return table_to_kleisli(pb_interp().gen_table(*c));
    }
    case CircuitTerm::Kind::Seq:
        return kleisli_compose(eval_pb(c->lhs), eval_pb(c->rhs));
    case CircuitTerm::Kind::Par:
        return kleisli_tensor(eval_pb(c->lhs), eval_pb(c->rhs));
    }
    throw Error("eval_pb: unreachable");
}

BTape lift_circuit(const Circuit& c) {
    if (contains_flip(c))
        throw TypeError("tape cells hold flip-free circuits; use encode for flip");
    return BTapeBuilder::lift(eval_gate_free(c));
}

BTape flip_tape(const Rational& p) {
    if (!p.is_prob_open())
        throw MassError("flip_tape: probability " + p.str() + " outside (0,1)");
    using TB = BTapeBuilder;
    return TB::seq(TB::seq(TB::diagp(0, p),
                           TB::plus(TB::lift(const_table(true)), TB::lift(const_table(false)))),
                   TB::codiag(1));
}

BTape encode(const Circuit& c) {
    using TB = BTapeBuilder;
    switch (c->kind) {
    case CircuitTerm::Kind::Seq:
        return TB::seq(encode(c->lhs), encode(c->rhs));
    case CircuitTerm::Kind::Par:
        return TB::tensor_t(encode(c->lhs), encode(c->rhs));
    case CircuitTerm::Kind::Gen:
        if (c->name == "flip")
            return flip_tape(*c->param);
        [[fallthrough]];
    default:
        return lift_circuit(c);
    }
}

EquivResult semantic_equiv(const BTape& t, const BTape& s) {
    if (!(t->dom == s->dom && t->cod == s->cod))
        throw TypeError("semantic_equiv: terms have different types");
    KleisliMap f = to_kleisli(compile(t));
    KleisliMap g = to_kleisli(compile(s));
    EquivResult r;
    r.dom = f.dom;
    r.cod = f.cod;
    for (const auto& x : KleisliMap::elements(f.dom)) {
        if (!(f.at(x) == g.at(x))) {
            r.equal   = false;
            r.witness = x;
            r.lhs     = f.at(x);
            r.rhs     = g.at(x);
            return r;
        }
    }
    return r;
}

std::vector<BTape> boolean_vectors(std::size_t n) {
    using TB = BTapeBuilder;
    if (n == 0)
        return {TB::id(0)};
    std::vector<BTape> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        BTape v = TB::lift(const_table(bits & 1));
        for (std::size_t i = 1; i < n; ++i)
            v = TB::tensor_t(v, TB::lift(const_table(bits >> i & 1)));
        out.push_back(std::move(v));
    }
    return out;
}

bool mux_axiom_check(const BTape& t) {
    using TB = BTapeBuilder;
    if (t->dom.size() != 1 || t->cod.size() != 1 || t->dom[0] == 0)
        throw TypeError("mux_axiom_check: expects a tape A^(n+1) -> A^m");
    const std::size_t n = t->dom[0] - 1;
    const std::size_t m = t->cod[0];

    BTape t1 = TB::seq(TB::tensor_t(TB::lift(const_table(true)), TB::id(n)), t);
    BTape t0 = TB::seq(TB::tensor_t(TB::lift(const_table(false)), TB::id(n)), t);
    BTape inner = TB::seq(TB::lift(duplicate_table(n)), TB::tensor_t(t1, t0));
    BTape rhs = TB::seq(TB::tensor_t(TB::id(1), inner), TB::lift(eval_gate_free(mux_m(m))));
    return semantic_equiv(t, rhs).equal;
}

} // namespace tapecalc
