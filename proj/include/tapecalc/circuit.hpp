#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "tapecalc/fn_table.hpp"
#include "tapecalc/rational.hpp"

namespace tapecalc {

// A monoidal signature: sorts plus generators typed by words of sorts.
// Sort names are single uppercase letters; words are juxtaposition ("AAB").
struct Signature {
    struct GenType {
        std::string ar;
        std::string coar;
        bool        parametric = false; // carries a probability, like flip
    };

    std::string                    name;
    std::set<char>                 sorts;
    std::map<std::string, GenType> gens;

    bool valid_word(const std::string& w) const {
        for (char s : w)
            if (!sorts.count(s))
                return false;
        return true;
    }

    const GenType& gen(const std::string& g) const {
        auto it = gens.find(g);
        if (it == gens.end())
            throw TypeError("signature " + name + ": unknown generator '" + g + "'");
        return it->second;
    }
};

using SigPtr = std::shared_ptr<const Signature>;

struct CircuitTerm;
using Circuit = std::shared_ptr<const CircuitTerm>;

// String diagram term over a signature, typed at construction. Sym is kept
// between single sorts; word-level symmetries are derived inductively.
struct CircuitTerm {
    enum class Kind { IdSort, IdUnit, Gen, Sym, Seq, Par };

    Kind                    kind;
    SigPtr                  sig;
    std::string             dom;
    std::string             cod;
    std::string             name;  // Gen
    std::optional<Rational> param; // parametric generators only
    char                    a = 0; // IdSort, Sym
    char                    b = 0; // Sym
    Circuit                 lhs;
    Circuit                 rhs;
};

namespace circ {

Circuit id_sort(const SigPtr& sig, char a);
Circuit id_unit(const SigPtr& sig);
Circuit gen(const SigPtr& sig, const std::string& name,
            std::optional<Rational> param = std::nullopt);
Circuit sym(const SigPtr& sig, char a, char b);
Circuit seq(const Circuit& c, const Circuit& d);
Circuit par(const Circuit& c, const Circuit& d);

Circuit id_word(const SigPtr& sig, const std::string& w);
// Derived symmetry w1 w2 -> w2 w1 via adjacent transpositions.
Circuit sym_word(const SigPtr& sig, const std::string& w1, const std::string& w2);

} // namespace circ

// Three-way structural comparison; parameters and children included.
int  circuit_cmp(const Circuit& c, const Circuit& d);
bool circuit_eq(const Circuit& c, const Circuit& d);

std::string circuit_str(const Circuit& c);

// Deterministic interpretation of a signature into function tables.
struct Interpretation {
    std::map<char, std::size_t>                      sort_width;
    std::function<FnTable(const CircuitTerm&)>       gen_table;

    std::size_t width(const std::string& w) const {
        std::size_t n = 0;
        for (char s : w)
            n += sort_width.at(s);
        return n;
    }
};

FnTable eval_circuit(const Interpretation& interp, const Circuit& c);

// The base of string diagrams over a signature. Arrow equality is structural
// only, which is sound but not complete for the diagrammatic quotient, so
// this base supports just the matrix operations that never compare arrows.
struct CircuitBase {
    struct Object {
        SigPtr      sig;
        std::string word;

        friend bool operator==(const Object& x, const Object& y) { return x.word == y.word; }
        friend auto operator<=>(const Object& x, const Object& y) { return x.word <=> y.word; }
    };
    using Arrow = Circuit;
    struct ArrowLess {
        bool operator()(const Circuit& c, const Circuit& d) const { return circuit_cmp(c, d) < 0; }
    };

    static constexpr bool has_tensor   = true;
    static constexpr bool decidable_eq = false;
    static constexpr bool finite_homs  = false;

    static Object dom(const Arrow& c) { return {c->sig, c->dom}; }
    static Object cod(const Arrow& c) { return {c->sig, c->cod}; }

    static Arrow identity(const Object& u) { return circ::id_word(u.sig, u.word); }
    static Arrow compose(const Arrow& c, const Arrow& d) { return circ::seq(c, d); }

    static Object tensor_obj(const Object& u, const Object& v) {
        return {u.sig, u.word + v.word};
    }
    static Arrow tensor(const Arrow& c, const Arrow& d) { return circ::par(c, d); }
    static Arrow symmetry(const Object& u, const Object& v) {
        return circ::sym_word(u.sig, u.word, v.word);
    }

    [[noreturn]] static std::vector<Arrow> hom(const Object&, const Object&) {
        throw UnsupportedError("CircuitBase: hom-sets are infinite");
    }

    static std::string object_str(const Object& u) { return u.word.empty() ? "1" : u.word; }
    static std::string arrow_str(const Arrow& c) { return circuit_str(c); }
};

} // namespace tapecalc
