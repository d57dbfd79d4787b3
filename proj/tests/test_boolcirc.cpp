#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tapecalc/checks.hpp"
#include "tapecalc/parser.hpp"

using namespace tapecalc;

namespace {
using TB   = BTapeBuilder;
using Dist = KleisliMap::Dist;
using Elem = KleisliMap::Elem;

Dist flip_dist(const Rational& p) {
    Dist d;
    d.bump({0, 1}, p);
    d.bump({0, 0}, p.one_minus());
    return d;
}
} // namespace

TEST_CASE("kleisli operations") {
    KleisliMap i2 = KleisliMap::identity({2});
    KleisliMap a  = eval_pb(circ::gen(pb_signature(), "and"));
    CHECK(kleisli_compose(i2, a) == a);
    CHECK(kleisli_compose(a, KleisliMap::identity({1})) == a);

    // tensor of deterministic maps is the pairing table
    KleisliMap n  = eval_pb(circ::gen(pb_signature(), "not"));
    KleisliMap nn = kleisli_tensor(n, n);
    for (std::uint64_t b = 0; b < 4; ++b) {
        std::uint64_t expect = (b ^ 3);
        CHECK(nn.at({0, b}) == Dist::dirac({0, expect}));
    }

    // a left-tagged input of an oplus ignores the right map
    KleisliMap s = kleisli_oplus(n, a);
    CHECK(s.at({0, 0}) == Dist::dirac({0, 1}));
    CHECK(s.at({1, 3}) == Dist::dirac({1, 1}));
    CHECK_THROWS_AS(kleisli_compose(a, a), TypeError);
}

TEST_CASE("eval_pb on generators") {
    KleisliMap f = eval_pb(circ::gen(pb_signature(), "flip", rat(1, 3)));
    CHECK(f.at({0, 0}) == flip_dist(rat(1, 3)));

    KleisliMap c = eval_pb(circ::gen(pb_signature(), "copy"));
    CHECK(c.at({0, 0}) == Dist::dirac({0, 0}));
    CHECK(c.at({0, 1}) == Dist::dirac({0, 3}));

    // flip p ; not flips the bias
    KleisliMap fn = eval_pb(parse_circuit("flip 2/7 ; not"));
    CHECK(fn.at({0, 0}) == flip_dist(rat(5, 7)));

    // total: all PB generators preserve mass 1
    checks::Rng rng(41);
    for (int i = 0; i < 20; ++i) {
        KleisliMap k = eval_pb(checks::random_pb_circuit(rng, 8, 3, true));
        for (const auto& [x, d] : k.table)
            CHECK(d.mass().is_one());
    }
}

TEST_CASE("derived gates") {
    CHECK(eval_gate_free(or_gate()) == or_table());
    CHECK(eval_gate_free(flip0_circuit()) == const_table(false));

    FnTable m = eval_gate_free(mux_circuit());
    for (std::uint64_t x = 0; x < 2; ++x)
        for (std::uint64_t y = 0; y < 2; ++y)
            for (std::uint64_t z = 0; z < 2; ++z)
                CHECK(m(x | y << 1 | z << 2) == (x ? y : z));

    // m-ary multiplexer selects whole buses; m = 0 discards the selector
    CHECK(eval_gate_free(mux_m(0)) == discard_table());
    CHECK(eval_gate_free(mux_m(1)) == m);
    FnTable m2 = eval_gate_free(mux_m(2));
    for (std::uint64_t x = 0; x < 2; ++x)
        for (std::uint64_t y = 0; y < 4; ++y)
            for (std::uint64_t z = 0; z < 4; ++z)
                CHECK(m2(x | y << 1 | z << 3) == (x ? y : z));

    for (std::size_t n = 0; n <= 3; ++n) {
        FnTable cp = eval_gate_free(ncopier(n));
        for (std::uint64_t b = 0; b < 2; ++b) {
            std::uint64_t expect = 0;
            for (std::size_t i = 0; i < n; ++i)
                expect |= b << i;
            CHECK(cp(b) == expect);
        }
    }

    CHECK(eval_gate_free(copy_word_circuit("AA")) == duplicate_table(2));
    CHECK(eval_gate_free(copy_word_circuit("AAA")) == duplicate_table(3));
}

TEST_CASE("wire permutations") {
    checks::Rng rng(42);
    for (int i = 0; i < 20; ++i) {
        std::size_t              n = 1 + rng.below(4);
        std::vector<std::size_t> perm(n);
        for (std::size_t k = 0; k < n; ++k)
            perm[k] = k;
        for (std::size_t k = n; k > 1; --k)
            std::swap(perm[k - 1], perm[rng.below(k)]);
        FnTable t = eval_gate_free(perm_circuit(std::string(n, 'A'), perm));
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            std::uint64_t expect = 0;
            for (std::size_t k = 0; k < n; ++k)
                expect |= (b >> perm[k] & 1) << k;
            CHECK(t(b) == expect);
        }
    }
}

TEST_CASE("table synthesis roundtrip") {
    checks::Rng rng(43);
    for (int i = 0; i < 40; ++i) {
        FnTable t = checks::random_table(rng, rng.below(4), rng.below(4));
        CHECK(eval_gate_free(table_to_circuit(t)) == t);
    }
}

TEST_CASE("flip tape and encoding") {
    auto r = checks::flip_tape_check();
    CHECK_MESSAGE(r.ok, r.detail);

    // flip-free circuits encode into Seq/Lift structure only
    Circuit c = parse_circuit("(copy ; (not * id A)) ; and");
    BTape   e = encode(c);
    std::function<bool(const BTape&)> only_lifts = [&](const BTape& t) {
        if (t->kind == TapeKind::Seq || t->kind == TapeKind::Plus)
            return only_lifts(t->lhs) && only_lifts(t->rhs);
        return t->kind == TapeKind::Lift;
    };
    CHECK(only_lifts(e));

    // frozen example: flip 1/2 ; copy ; and has the fair coin semantics
    KleisliMap k = to_kleisli(compile(encode(parse_circuit("flip 1/2 ; copy ; and"))));
    CHECK(k.at({0, 0}) == flip_dist(rat(1, 2)));

    CHECK_THROWS_AS(lift_circuit(parse_circuit("flip 1/2")), TypeError);
    CHECK_THROWS_AS(flip_tape(Rational(1)), MassError);

    auto enc = checks::encode_correct(44, 60);
    CHECK_MESSAGE(enc.ok, enc.detail);
}

TEST_CASE("semantic equivalence") {
    auto ap = checks::andpor_check();
    CHECK_MESSAGE(ap.ok, ap.detail);

    EquivResult ne = semantic_equiv(flip_tape(rat(1, 2)), flip_tape(rat(1, 3)));
    CHECK_FALSE(ne.equal);
    REQUIRE(ne.witness.has_value());
    CHECK(*ne.witness == Elem{0, 0});
    CHECK(ne.lhs == flip_dist(rat(1, 2)));
    CHECK(ne.rhs == flip_dist(rat(1, 3)));

    CHECK(semantic_equiv(flip_tape(rat(1, 2)), flip_tape(rat(1, 2))).equal);
    CHECK_THROWS_AS(semantic_equiv(flip_tape(rat(1, 2)), TB::id(1)), TypeError);

    auto cc = checks::control_contrast(45, 10);
    CHECK_MESSAGE(cc.ok, cc.detail);
}

TEST_CASE("boolean vectors") {
    CHECK(boolean_vectors(0).size() == 1);
    CHECK(boolean_vectors(3).size() == 8);
    for (const BTape& b : boolean_vectors(3)) {
        auto m = compile(b);
        REQUIRE(m.rows() == 1);
        CHECK(m.entry(0, 0).is_dirac());
        KleisliMap k = to_kleisli(m);
        CHECK(k.at({0, 0}).mass().is_one());
    }

    // the 2^n vectors are pairwise distinct constants
    auto vs = boolean_vectors(2);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            CHECK_FALSE(semantic_equiv(vs[i], vs[j]).equal);

    auto r = checks::completeness_surrogate(46, 40);
    CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("J is a bijection at arity zero") {
    // distinct columns of type 1 -> A^2 have distinct Kleisli maps, and
    // every subdistribution on 2^2 is reachable
    checks::Rng rng(47);
    auto        tables = enumerate_tables(0, 2);
    REQUIRE(tables.size() == 4);
    for (int i = 0; i < 30; ++i) {
        PlusHom<Set2Base> d1, d2;
        Rational          b1(1), b2(1);
        for (int k = 0; k < 2; ++k) {
            Rational w1 = b1 * rng.prob();
            b1          = b1 - w1;
            d1.bump(tables[rng.below(4)], w1);
            Rational w2 = b2 * rng.prob();
            b2          = b2 - w2;
            d2.bump(tables[rng.below(4)], w2);
        }
        BTape t1 = from_column<Set2Base>(0, {2}, {d1});
        BTape t2 = from_column<Set2Base>(0, {2}, {d2});
        CHECK((compile(t1) == compile(t2)) == semantic_equiv(t1, t2).equal);

        // reachability: the Kleisli distribution matches d1 pointwise
        Dist expected;
        for (const auto& [f, w] : d1.weights())
            expected.bump({0, f(0)}, w);
        CHECK(to_kleisli(compile(t1)).at({0, 0}) == expected);
    }
}

TEST_CASE("multiplexer law") {
    CHECK(mux_axiom_check(TB::lift(and_table())));
    CHECK(mux_axiom_check(TB::seq(TB::tensor_t(TB::id(1), flip_tape(rat(1, 3))),
                                  TB::lift(and_table()))));

    // the ANDpOR tape
    BTape andpor = TB::seq(TB::seq(TB::diagp(2, rat(1, 3)),
                                   TB::plus(TB::lift(and_table()), TB::lift(or_table()))),
                           TB::codiag(1));
    CHECK(mux_axiom_check(andpor));

    auto r = checks::mux_axiom(48, 25);
    CHECK_MESSAGE(r.ok, r.detail);
}
