#pragma once

#include <optional>
#include <vector>

#include "tapecalc/circuit.hpp"
#include "tapecalc/compile.hpp"
#include "tapecalc/kleisli.hpp"

namespace tapecalc {

// The probabilistic Boolean signature: a single sort A and generators
// and: AA->A, not: A->A, flip1: 1->A, copy: A->AA, discard: A->1, plus the
// parametric family flip p: 1->A for rational p in (0,1). Flip-free circuits
// are the deterministic fragment.
const SigPtr& pb_signature();

bool contains_flip(const Circuit& c);

FnTable and_table();
FnTable not_table();
FnTable copy_table();
FnTable discard_table();
FnTable const_table(bool bit); // 1 -> A
FnTable or_table();
// b |-> (b, b) on an n-bit bus.
FnTable duplicate_table(std::size_t n);

// Deterministic semantics of flip-free circuits; rejects flip.
const Interpretation& pb_interp();
FnTable               eval_gate_free(const Circuit& c);

// Derived gates, all flip-free circuits over the signature above.
Circuit or_gate();
Circuit flip0_circuit(); // flip1 ; not

// Output slot k reads input wire perm[k]; built from adjacent symmetries.
Circuit perm_circuit(const std::string& word, const std::vector<std::size_t>& perm);
Circuit copy_word_circuit(const std::string& word); // U -> UU
Circuit ncopier(std::size_t n);                     // A -> A^n
Circuit mux_circuit();                              // (x,y,z) -> y if x else z
Circuit mux_m(std::size_t m);                       // A^(2m+1) -> A^m, bus select

// A circuit computing the given table, via a disjunctive normal form per
// output bit. eval_gate_free(table_to_circuit(t)) == t.
Circuit table_to_circuit(const FnTable& t);

// Probabilistic semantics: structural recursion into the Kleisli category.
// The result is always total (mass 1) since every generator is.
KleisliMap eval_pb(const Circuit& c);

using BTape        = Tape<Set2Base>;
using BTapeBuilder = TapeBuilder<Set2Base>;

// Lift of a flip-free circuit as a one-cell tape.
BTape lift_circuit(const Circuit& c);

// The probabilistic split realizing flip p as a tape: a p-weighted choice
// between the constant-1 and constant-0 cells, merged.
BTape flip_tape(const Rational& p);

// Homomorphic image of a probabilistic circuit in the tape calculus;
// preserves the Kleisli semantics.
BTape encode(const Circuit& c);

struct EquivResult {
    bool                            equal = true;
    KleisliMap::Poly                dom;
    KleisliMap::Poly                cod;
    std::optional<KleisliMap::Elem> witness;
    KleisliMap::Dist                lhs;
    KleisliMap::Dist                rhs;
};

// Decides semantic equality of Boolean-base tapes by comparing their
// Kleisli maps on every input element; complete for this base.
EquivResult semantic_equiv(const BTape& t, const BTape& s);

// The 2^n constant tapes 1 -> A^n; precomposition with all of them decides
// tape equality.
std::vector<BTape> boolean_vectors(std::size_t n);

// The multiplexer law: t equals the mux-recombination of its two
// selector-fixed restrictions.
bool mux_axiom_check(const BTape& t);

} // namespace tapecalc
