#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tapecalc/checks.hpp"
#include "tapecalc/compile.hpp"

using namespace tapecalc;

namespace {
using TB    = BTapeBuilder;
using BMat  = StochMatrix<Set2Base>;
using BHom  = PlusHom<Set2Base>;
using BWord = ObjWord<Set2Base>;
}

TEST_CASE("typing") {
    BTape d = TB::diagp(1, rat(1, 2));
    CHECK(type_of(d) == TapeType<Set2Base>{{1}, {1, 1}});
    CHECK(type_of(TB::id0()) == TapeType<Set2Base>{{}, {}});
    CHECK(type_of(TB::sigma(1, 2)) == TapeType<Set2Base>{{1, 2}, {2, 1}});
    CHECK_THROWS_AS(TB::seq(TB::bang(1), TB::codiag(1)), TypeError);
    CHECK_THROWS_AS(TB::diagp(1, rat(3, 2)), MassError);
}

TEST_CASE("boundary splits are derived forms") {
    CHECK(TB::diagp(1, Rational(0))->kind == TapeKind::Plus);
    CHECK(compile(TB::diagp(1, Rational(0))) == gen_diagp<Set2Base>({1}, Rational(0)));
    CHECK(compile(TB::diagp(1, Rational(1))) == gen_diagp<Set2Base>({1}, Rational(1)));
}

TEST_CASE("compile on generators") {
    CHECK(compile(TB::lift(and_table())) == BMat({2}, {1}, {BHom::dirac(and_table())}));
    CHECK(compile(TB::seq(TB::diagp(1, rat(1, 4)), TB::codiag(1))) == BMat::identity({1}));
    CHECK(compile(TB::sigma(1, 2)) == swap_plus<Set2Base>({1}, {2}));
    CHECK(compile(TB::cobang(2)) == gen_cobang<Set2Base>({2}));
    CHECK(compile(TB::bang(2)) == gen_bang<Set2Base>({2}));
}

TEST_CASE("compile is functorial on random terms") {
    checks::Rng rng(21);
    for (int i = 0; i < 30; ++i) {
        BWord p = checks::random_word(rng, 2, 2);
        BWord q = checks::random_word(rng, 2, 2);
        BWord r = checks::random_word(rng, 2, 2);
        BTape a = checks::random_tape(rng, p, q, 2);
        BTape b = checks::random_tape(rng, q, r, 2);
        CHECK(compile(TB::seq(a, b)) == compose(compile(a), compile(b)));
        CHECK(compile(TB::plus(a, b)) == direct_sum(compile(a), compile(b)));
    }
}

TEST_CASE("diag_vec unfolds the renormalized recursion") {
    // q1 = (1/3)/(1/2) = 2/3, leaving mass 1/6 on the last branch
    BMat m = compile(TB::diag_vec({1}, {rat(1, 2), rat(1, 3)}));
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 1);
    BHom id1 = BHom::dirac(FnTable::identity(1));
    CHECK(m.entry(0, 0) == scale(id1, rat(1, 2)));
    CHECK(m.entry(1, 0) == scale(id1, rat(1, 3)));
    CHECK(m.entry(2, 0) == scale(id1, rat(1, 6)));

    CHECK_THROWS_AS(TB::diag_vec({1}, {rat(2, 3), rat(2, 3)}), MassError);
}

TEST_CASE("pairings and projections") {
    checks::Rng rng(22);
    BWord       p{1};
    BTape t1 = checks::random_tape(rng, p, {1}, 2);
    BTape t2 = checks::random_tape(rng, p, {2, 0}, 2);

    CHECK(compile(TB::pairing({t1}, {Rational(1)})) == compile(t1));

    Rational pr = rat(1, 3), qr = rat(1, 2);
    BTape    h  = TB::pairing({t1, t2}, {pr, qr});
    std::vector<BWord> cods = {{1}, {2, 0}};
    CHECK(compile(TB::seq(h, TB::proj(cods, 0))) == scale(compile(t1), pr));
    CHECK(compile(TB::seq(h, TB::proj(cods, 1))) == scale(compile(t2), qr));
    CHECK_THROWS_AS(TB::proj(cods, 2), TypeError);
    CHECK_THROWS_AS(TB::pairing({t1, t2}, {rat(2, 3), rat(1, 2)}), MassError);

    // copairing against injections
    BTape s1 = checks::random_tape(rng, {1}, {2}, 2);
    BTape s2 = checks::random_tape(rng, {0}, {2}, 2);
    BTape cp = TB::copairing({s1, s2});
    std::vector<BWord> doms = {{1}, {0}};
    CHECK(compile(TB::seq(TB::inj(doms, 0), cp)) == compile(s1));
    CHECK(compile(TB::seq(TB::inj(doms, 1), cp)) == compile(s2));
}

TEST_CASE("enrichment operations") {
    checks::Rng rng(23);
    BWord       p{1, 0};
    BWord       q{1};
    BTape t = checks::random_tape(rng, p, q, 2);
    BTape s = checks::random_tape(rng, p, q, 2);

    CHECK(compile(TB::plus_p(t, s, rat(1, 3))) ==
          convex_sum(compile(t), compile(s), rat(1, 3)));
    CHECK(compile(TB::scale_t(t, rat(2, 5))) == scale(compile(t), rat(2, 5)));
    CHECK(compile(TB::star(p, q)) == BMat::star(p, q));
}

TEST_CASE("equivalence is decided by compilation") {
    checks::Rng rng(24);
    BTape t = checks::random_tape(rng, {1}, {1, 1}, 2);
    BTape s = checks::random_tape(rng, {1}, {1, 1}, 2);

    CHECK(equiv(t, t));
    CHECK(equiv(TB::plus_p(t, t, rat(1, 3)), t));

    Rational r = rat(1, 2);
    CHECK(equiv(TB::scale_t(t, r), TB::scale_t(s, r)) == equiv(t, s));

    CHECK_THROWS_AS(equiv(t, TB::id(1)), TypeError);

    // a congruence for seq, plus and tensor: t and its idempotent sum are
    // equivalent but distinct terms, and stay equivalent in any context
    BTape t2 = TB::plus_p(t, t, rat(1, 3));
    REQUIRE(equiv(t, t2));
    BTape c = checks::random_tape(rng, {1, 1}, {2}, 2);
    CHECK(equiv(TB::seq(t, c), TB::seq(t2, c)));
    BTape u = checks::random_tape(rng, {2}, {0}, 2);
    CHECK(equiv(TB::plus(t, u), TB::plus(t2, u)));
    CHECK(equiv(TB::tensor_t(t, u), TB::tensor_t(t2, u)));
}

TEST_CASE("equiv requires decidable base equality") {
    const SigPtr& sig = pb_signature();
    using CT = TapeBuilder<CircuitBase>;
    CircuitBase::Object a{sig, "A"};
    Tape<CircuitBase>   t = CT::id(a);
    CHECK_THROWS_AS(equiv(t, t), UnsupportedError);
}

TEST_CASE("normal form") {
    auto nf = normal_form(TB::lift(and_table()));
    REQUIRE(nf.weights.size() == 1);
    CHECK(nf.weights[0].is_one());
    CHECK(nf.residuals[0] == BHom::dirac(and_table()));

    auto z = normal_form(TB::star({1}, {1, 2}));
    CHECK(z.weights == std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(z.residuals[0].is_null());

    checks::Rng rng(25);
    BTape t = checks::random_tape(rng, {1}, {1, 2}, 3);
    auto  n = normal_form(t);
    BMat  m = compile(t);
    for (std::size_t j = 0; j < m.rows(); ++j) {
        CHECK(n.weights[j] == m.entry(j, 0).mass());
        CHECK(scale(n.residuals[j], n.weights[j]) == m.entry(j, 0));
    }
    CHECK_THROWS_AS(normal_form(TB::id_word({1, 1})), TypeError);
}

TEST_CASE("from_column rebuilds columns exactly") {
    auto r = checks::roundtrip_bijection(26, 50);
    CHECK_MESSAGE(r.ok, r.detail);

    // multi-row column
    checks::Rng rng(27);
    BWord cod{1, 0, 2};
    std::vector<BHom> rows(3);
    rows[0].bump(not_table(), rat(1, 3));
    rows[2].bump(checks::random_table(rng, 1, 2), rat(1, 2));
    BTape t = from_column<Set2Base>(1, cod, rows);
    BMat  m = compile(t);
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(m.entry(j, 0) == rows[j]);
}

TEST_CASE("whiskering and tensor") {
    checks::Rng rng(28);

    CHECK(compile(TB::whisker_left(2, TB::id(1))) == BMat::identity({3}));
    CHECK(compile(TB::whisker_right(2, TB::lift(not_table()))) ==
          compile(TB::lift(tensor(not_table(), FnTable::identity(2)))));

    // delta_l on a fixed instance is the identity permutation matrix check
    BWord p{1, 2}, q{1}, r2{0, 1};
    BMat  d = compile(TB::delta_l(p, q, r2));
    CHECK(d.rows() == 6);
    CHECK(compile(TB::seq(TB::delta_l(p, q, r2), TB::delta_l_inv(p, q, r2))) ==
          BMat::identity(TB::tensor_word(p, {1, 0, 1})));

    auto iso = checks::rig_tensor_iso(29, 30);
    CHECK_MESSAGE(iso.ok, iso.detail);
    auto laws = checks::rig_struct_laws(30, 15);
    CHECK_MESSAGE(laws.ok, laws.detail);
}

TEST_CASE("word-level generators compile to the generator matrices") {
    BWord p{1, 2, 0};
    CHECK(compile(TB::diagp_word(p, Rational(0))) == gen_diagp<Set2Base>(p, Rational(0)));
    CHECK(compile(TB::diagp_word(p, Rational(1))) == gen_diagp<Set2Base>(p, Rational(1)));
    CHECK(compile(TB::diagp_word(p, rat(2, 5))) == gen_diagp<Set2Base>(p, rat(2, 5)));
    CHECK(compile(TB::codiag_word(p)) == gen_codiag<Set2Base>(p));
    CHECK(compile(TB::cobang_word(p)) == gen_cobang<Set2Base>(p));
    CHECK(compile(TB::bang_word(p)) == gen_bang<Set2Base>(p));
    CHECK(compile(TB::sigma_word(p, {2, 1})) == swap_plus<Set2Base>(p, {2, 1}));
}

TEST_CASE("generator axiom tables hold under compilation") {
    auto r = checks::generator_laws(31, 40);
    CHECK_MESSAGE(r.ok, r.detail);
}
