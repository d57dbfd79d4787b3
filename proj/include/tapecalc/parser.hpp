#pragma once

#include <string>

#include "tapecalc/boolcirc.hpp"

namespace tapecalc {

// Concrete syntax.
//
// circuits:  c ::= id WORD | id1 | <gen> | flip <p> | sym A B | c ; c | c * c
// tapes:     t ::= [ c ] | idT <mono> | id0 | symT <mono> <mono> | t ; t
//                | t + t | merge <mono> | init <mono> | split <p> <mono>
//                | kill <mono>
//
// Sort names are single uppercase letters, words their juxtaposition; the
// unit monomial is written 1. Tensor binds tighter than ;, parentheses
// group. Probabilities are exact fractions "num/den", "0" or "1".
Circuit parse_circuit(const std::string& text, const SigPtr& sig = pb_signature());

// Tapes over the Boolean base; cells hold flip-free circuits.
BTape parse_tape(const std::string& text);

std::string print_circuit(const Circuit& c);
std::string print_tape(const BTape& t);

// A readable flip-free circuit denoting the table: recognizes the named
// gates and identities, otherwise synthesizes a disjunctive normal form.
Circuit circuit_for_table(const FnTable& t);

} // namespace tapecalc
