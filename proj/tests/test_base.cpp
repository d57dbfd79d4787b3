#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tapecalc/boolcirc.hpp"
#include "tapecalc/checks.hpp"
#include "tapecalc/free_monoid.hpp"
#include "tapecalc/plus_hom.hpp"

using namespace tapecalc;

TEST_CASE("function table composition") {
    // not ; not = id, checked over every input
    FnTable nn = compose(not_table(), not_table());
    for (std::uint64_t b = 0; b < 2; ++b)
        CHECK(nn(b) == b);
    CHECK(nn == FnTable::identity(1));

    CHECK(compose(FnTable::identity(2), and_table()) == and_table());
    CHECK_THROWS_AS(compose(and_table(), and_table()), TypeError);
}

TEST_CASE("function table tensor") {
    CHECK(tensor(FnTable::identity(2), FnTable::identity(1)) == FnTable::identity(3));
    CHECK(tensor(and_table(), FnTable::identity(0)) == and_table());

    // not (x) not on input 01 (top wire 0, second wire 1) gives 10
    FnTable t = tensor(not_table(), not_table());
    CHECK(t(parse_bits("01")) == parse_bits("10"));
    for (std::uint64_t b = 0; b < 4; ++b)
        CHECK(t(b) == (((b & 1) ^ 1) | (((b >> 1 & 1) ^ 1) << 1)));
}

TEST_CASE("block symmetry") {
    FnTable s = FnTable::symmetry(1, 2);
    for (std::uint64_t u = 0; u < 2; ++u)
        for (std::uint64_t v = 0; v < 4; ++v)
            CHECK(s(u | v << 1) == (v | u << 2));
    CHECK(compose(FnTable::symmetry(2, 1), FnTable::symmetry(1, 2)) == FnTable::identity(3));
}

TEST_CASE("circuit evaluation") {
    const SigPtr& sig = pb_signature();
    FnTable a = eval_gate_free(circ::gen(sig, "and"));
    CHECK(a(parse_bits("11")) == 1);
    CHECK(a(parse_bits("10")) == 0);
    CHECK(eval_gate_free(circ::id_sort(sig, 'A')) == FnTable::identity(1));

    // (not * not) ; and ; not computes or, against a brute-force oracle
    FnTable o = eval_gate_free(or_gate());
    for (std::uint64_t x = 0; x < 2; ++x)
        for (std::uint64_t y = 0; y < 2; ++y)
            CHECK(o(x | y << 1) == (x | y));
    CHECK(o == or_table());
}

TEST_CASE("circuit typing is eager") {
    const SigPtr& sig = pb_signature();
    CHECK_THROWS_AS(circ::seq(circ::gen(sig, "and"), circ::gen(sig, "and")), TypeError);
    CHECK_THROWS_AS(circ::gen(sig, "nand"), TypeError);
    CHECK_THROWS_AS(circ::gen(sig, "flip"), TypeError);            // needs a parameter
    CHECK_THROWS_AS(circ::gen(sig, "flip", Rational(1)), MassError); // open interval
    CHECK_THROWS_AS(circ::gen(sig, "and", rat(1, 2)), TypeError);
    CHECK_THROWS_AS(eval_gate_free(circ::gen(sig, "flip", rat(1, 2))), TypeError);
}

TEST_CASE("derived word symmetry evaluates to the block swap") {
    const SigPtr& sig = pb_signature();
    CHECK(eval_gate_free(circ::sym_word(sig, "A", "AA")) == FnTable::symmetry(1, 2));
    CHECK(eval_gate_free(circ::sym_word(sig, "AA", "AAA")) == FnTable::symmetry(2, 3));
    CHECK(eval_gate_free(circ::sym_word(sig, "", "AA")) == FnTable::identity(2));
}

TEST_CASE("interchange consequence under evaluation") {
    checks::Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        Circuit c1 = checks::random_pb_circuit(rng, 4, 3, false);
        Circuit c2 = table_to_circuit(checks::random_table(rng, c1->cod.size(), rng.below(3)));
        Circuit d1 = checks::random_pb_circuit(rng, 4, 2, false);
        Circuit d2 = table_to_circuit(checks::random_table(rng, d1->cod.size(), rng.below(3)));
        FnTable lhs = eval_gate_free(circ::par(circ::seq(c1, c2), circ::seq(d1, d2)));
        FnTable rhs = eval_gate_free(circ::seq(circ::par(c1, d1), circ::par(c2, d2)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("semantic circuit equality is a congruence") {
    const SigPtr& sig = pb_signature();
    Circuit a = or_gate();
    Circuit b = circ::seq(circ::sym(sig, 'A', 'A'), or_gate()); // or is commutative
    REQUIRE(eval_gate_free(a) == eval_gate_free(b));
    CHECK(eval_gate_free(circ::seq(circ::par(a, a), circ::gen(sig, "and"))) ==
          eval_gate_free(circ::seq(circ::par(b, b), circ::gen(sig, "and"))));
}

TEST_CASE("plus homs over the free monoid") {
    using FM = FreeMonoidBase;
    using H  = PlusHom<FM>;

    CHECK(plus_compose<FM>(H::dirac("a"), H::dirac("ab")) == H::dirac("aab"));
    CHECK(plus_compose<FM>(H::dirac(""), H::dirac("x")) == H::dirac("x"));

    H d;
    d.bump("a", rat(1, 2));
    d.bump("ab", rat(1, 2));
    H expected;
    expected.bump("ac", rat(1, 2));
    expected.bump("abc", rat(1, 2));
    CHECK(plus_compose<FM>(d, H::dirac("c")) == expected);
    CHECK(plus_compose<FM>(d, H()) == H());
    CHECK(plus_compose<FM>(d, H::dirac("c")).mass() == d.mass());
}

TEST_CASE("plus homs respect the enrichment") {
    using FM = FreeMonoidBase;
    using H  = PlusHom<FM>;
    checks::Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        H f, g, h;
        f.bump("a", rng.prob());
        g.bump("b", rng.prob());
        h.bump("c", rat(1, 2));
        h.bump("cc", rat(1, 4));
        Rational p = rng.prob();
        CHECK(plus_compose<FM>(convex_sum(f, g, p), h) ==
              convex_sum(plus_compose<FM>(f, h), plus_compose<FM>(g, h), p));
    }
}

TEST_CASE("plus tensor over the Boolean base") {
    using H = PlusHom<Set2Base>;
    CHECK(plus_tensor<Set2Base>(H::dirac(not_table()), H::dirac(and_table())) ==
          H::dirac(tensor(not_table(), and_table())));

    H a, b;
    a.bump(not_table(), rat(1, 2));
    b.bump(FnTable::identity(1), rat(1, 3));
    H expected;
    expected.bump(tensor(not_table(), FnTable::identity(1)), rat(1, 6));
    CHECK(plus_tensor<Set2Base>(a, b) == expected);
    CHECK(plus_tensor<Set2Base>(H(), b) == H());
}

TEST_CASE("hom enumeration") {
    CHECK(Set2Base::hom(1, 1).size() == 4);
    auto h00 = Set2Base::hom(0, 0);
    REQUIRE(h00.size() == 1);
    CHECK(h00[0] == FnTable::identity(0));
    CHECK(Set2Base::hom(2, 1).size() == 16);
    CHECK_THROWS_AS(FreeMonoidBase::hom({}, {}), UnsupportedError);
    CHECK_THROWS_AS(Set2Base::hom(10, 10), UnsupportedError);
}

TEST_CASE("category laws on random instances") {
    checks::Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        std::size_t n = rng.below(3), m = rng.below(3), k = rng.below(3), l = rng.below(3);
        FnTable f = checks::random_table(rng, n, m);
        FnTable g = checks::random_table(rng, m, k);
        FnTable h = checks::random_table(rng, k, l);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        CHECK(compose(FnTable::identity(n), f) == f);
        CHECK(compose(f, FnTable::identity(m)) == f);
    }
}
