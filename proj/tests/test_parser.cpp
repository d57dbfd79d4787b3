#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tapecalc/checks.hpp"
#include "tapecalc/json_io.hpp"
#include "tapecalc/parser.hpp"

using namespace tapecalc;

TEST_CASE("tape parsing") {
    BTape t = parse_tape("split 1/2 A");
    CHECK(t->kind == TapeKind::DiagP);
    CHECK(t->p == rat(1, 2));
    CHECK(t->u == 1);

    BTape s = parse_tape("[ and ] ; [ not ]");
    REQUIRE(s->kind == TapeKind::Seq);
    CHECK(s->lhs->kind == TapeKind::Lift);
    CHECK(s->lhs->arrow == and_table());
    CHECK(s->rhs->arrow == not_table());

    CHECK(parse_tape("idT 1")->u == 0);
    CHECK(parse_tape("idT AAA")->u == 3);
    CHECK(parse_tape("symT A AA")->v == 2);
    CHECK(parse_tape("merge AA")->kind == TapeKind::Codiag);
    CHECK(parse_tape("init A")->kind == TapeKind::Cobang);
    CHECK(parse_tape("kill A")->kind == TapeKind::Bang);
    CHECK(parse_tape("split 1/3 1")->u == 0);

    // tensor binds tighter than composition
    BTape u = parse_tape("idT A + idT A ; merge A");
    CHECK(u->kind == TapeKind::Seq);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_tape("split 3/2 A"), MassError);
    CHECK_THROWS_AS(parse_tape("merge"), ParseError);
    CHECK_THROWS_AS(parse_tape("idT B"), ParseError);
    CHECK_THROWS_AS(parse_tape("( idT A"), ParseError);
    CHECK_THROWS_AS(parse_tape("idT A extra"), ParseError);
    CHECK_THROWS_AS(parse_tape("[ flip 1/2 ]"), TypeError);

    try {
        parse_tape("idT A ;\n  frobnicate A");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 3);
    }

    CHECK_THROWS_AS(parse_circuit("nand"), ParseError);
    CHECK_THROWS_AS(parse_circuit("sym AB A"), ParseError);
    CHECK_THROWS_AS(parse_circuit("and ; and"), TypeError);
}

TEST_CASE("circuit parsing") {
    Circuit c = parse_circuit("flip 1/2 ; not");
    CHECK(c->kind == CircuitTerm::Kind::Seq);
    CHECK(c->lhs->name == "flip");
    CHECK(*c->lhs->param == rat(1, 2));

    CHECK(parse_circuit("id AAB", [] {
              auto s   = std::make_shared<Signature>();
              s->name  = "t";
              s->sorts = {'A', 'B'};
              return SigPtr(s);
          }())
              ->dom == "AAB");

    KleisliMap k = eval_pb(parse_circuit("flip 1/2 ; not"));
    KleisliMap::Dist expected;
    expected.bump({0, 1}, rat(1, 2));
    expected.bump({0, 0}, rat(1, 2));
    CHECK(k.at({0, 0}) == expected);
}

TEST_CASE("custom signatures from JSON") {
    SigPtr sig = signature_from_json(R"({
        "sorts": ["A", "B"],
        "generators": {"f": {"ar": "AAB", "coar": "A"}, "g": {"ar": "", "coar": "B"}}
    })");
    Circuit c = parse_circuit("(id A * id A * g) ; f", sig);
    CHECK(c->dom == "AA");
    CHECK(c->cod == "A");
    CHECK_THROWS_AS(signature_from_json(R"({"sorts":["AB"],"generators":{}})"), Error);
    CHECK_THROWS_AS(signature_from_json("not json"), Error);
    CHECK_THROWS_AS(signature_from_json(R"({"sorts":["A"],"generators":{"f":{"ar":"C","coar":"A"}}})"),
                    Error);
}

TEST_CASE("printing round-trips on a fixed corpus") {
    const char* corpus[] = {
        "split 1/2 A",
        "idT 1",
        "id0",
        "symT A AA",
        "(idT A + idT A) ; merge A",
        "init AA",
        "kill A",
        "split 7/11 AA",
        "[ and ]",
        "[ (not * not) ; and ; not ]",
        "[ copy ; (discard * id A) ]",
        "((split 1/2 1 ; ([ flip1 ] + [ flip1 ; not ])) ; merge A)",
        "[ sym A A ]",
        "(split 1/3 AA ; ([ and ] + [ (not * not) ; and ; not ])) ; merge A",
        "[ id1 ]",
    };
    for (const char* text : corpus) {
        BTape t = parse_tape(text);
        CHECK(tape_eq(t, parse_tape(print_tape(t))));
    }

    const char* circuits[] = {
        "and", "not", "copy", "discard", "flip1", "flip 2/3",
        "id A", "id1", "sym A A",
        "(copy ; (not * id A)) ; and",
        "flip 1/2 ; copy ; and",
        "(id A * flip 1/3) ; and",
    };
    for (const char* text : circuits) {
        Circuit c = parse_circuit(text);
        CHECK(circuit_eq(c, parse_circuit(print_circuit(c))));
    }
}

TEST_CASE("printing round-trips on random terms") {
    auto r = checks::parser_roundtrip(51, 60);
    CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("printing lifted cells recovers readable gates") {
    CHECK(print_tape(BTapeBuilder::lift(and_table())) == "[ and ]");
    CHECK(print_tape(BTapeBuilder::lift(or_table())) == "[ (((not * not) ; and) ; not) ]");
    CHECK(print_tape(BTapeBuilder::lift(FnTable::identity(0))) == "[ id1 ]");
    CHECK(print_tape(BTapeBuilder::lift(const_table(false))) == "[ (flip1 ; not) ]");

    // arbitrary tables synthesize to a circuit with the same table
    checks::Rng rng(52);
    FnTable     t = checks::random_table(rng, 2, 2);
    BTape       lifted = BTapeBuilder::lift(t);
    CHECK(tape_eq(lifted, parse_tape(print_tape(lifted))));
}
