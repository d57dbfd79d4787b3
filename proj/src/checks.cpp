#include "tapecalc/checks.hpp"

#include <chrono>
#include <sstream>

#include "tapecalc/parser.hpp"

namespace tapecalc::checks {

namespace {

using TB   = BTapeBuilder;
using BMat = StochMatrix<Set2Base>;
using BHom = PlusHom<Set2Base>;
using FM   = FreeMonoidBase;
using FMat = StochMatrix<FM>;
using FHom = PlusHom<FM>;

CheckResult fail(std::string msg) { return {false, std::move(msg)}; }

CheckResult ok() { return {}; }

#define REQUIRE_LAW(cond, what)                                                                  \
    do {                                                                                         \
        if (!(cond))                                                                             \
            return fail(std::string(what) + " failed at iteration " + std::to_string(it));      \
    } while (0)

} // namespace

Subdist<std::string> random_subdist(Rng& rng) {
    static const char* keys[] = {"a", "b", "c", "d", "e"};
    Subdist<std::string> d;
    Rational             budget(1);
    const std::size_t    terms = rng.below(4);
    for (std::size_t i = 0; i < terms; ++i) {
        Rational w = budget * rng.prob();
        budget     = budget - w;
        d.bump(keys[rng.below(5)], w);
    }
    return d;
}

FnTable random_table(Rng& rng, std::size_t n, std::size_t m) {
    std::vector<std::uint64_t> t(std::size_t{1} << n);
    for (auto& out : t)
        out = rng.below(std::size_t{1} << m);
    return FnTable(n, m, std::move(t));
}

BWord random_word(Rng& rng, std::size_t max_len, std::size_t max_width) {
    BWord w(rng.below(max_len + 1));
    for (auto& u : w)
        u = rng.below(max_width + 1);
    return w;
}

BWord random_word_nonempty(Rng& rng, std::size_t max_len, std::size_t max_width) {
    BWord w(1 + rng.below(max_len));
    for (auto& u : w)
        u = rng.below(max_width + 1);
    return w;
}

StochMatrix<Set2Base> random_matrix(Rng& rng, const BWord& dom, const BWord& cod) {
    std::vector<BHom> cells(dom.size() * cod.size());
    for (std::size_t i = 0; i < dom.size(); ++i) {
        Rational          budget(1);
        const std::size_t terms = rng.below(4);
        for (std::size_t t = 0; t < terms && !cod.empty(); ++t) {
            Rational w = budget * rng.prob();
            budget     = budget - w;
            std::size_t j = rng.below(cod.size());
            cells[j * dom.size() + i].bump(random_table(rng, dom[i], cod[j]), w);
        }
    }
    return BMat(dom, cod, std::move(cells));
}

namespace {

BHom random_cell(Rng& rng, std::size_t u, std::size_t v, const Rational& mass) {
    BHom d;
    if (mass.is_zero())
        return d;
    if (rng.coin()) {
        d.bump(random_table(rng, u, v), mass);
        return d;
    }
    Rational q = rng.prob();
    d.bump(random_table(rng, u, v), mass * q);
    d.bump(random_table(rng, u, v), mass * q.one_minus());
    return d;
}

BTape canonical_tape(Rng& rng, const BWord& dom, const BWord& cod) {
    if (dom.empty())
        return TB::cobang_word(cod);
    std::vector<BTape> cols;
    for (std::size_t i = 0; i < dom.size(); ++i) {
        std::vector<BHom> rows;
        Rational          budget(1);
        for (std::size_t j = 0; j < cod.size(); ++j) {
            Rational w(0);
            switch (rng.below(4)) {
            case 0: break;
            case 1: w = budget; break;
            default: w = budget * rng.prob(); break;
            }
            budget = budget - w;
            rows.push_back(random_cell(rng, dom[i], cod[j], w));
        }
        cols.push_back(from_column<Set2Base>(dom[i], cod, rows));
    }
    if (cols.size() == 1)
        return cols[0];
    return TB::seq(TB::plus_n(cols), TB::codiag_n(cod, cols.size()));
}

} // namespace

BTape random_tape(Rng& rng, const BWord& dom, const BWord& cod, int depth) {
    if (depth <= 0 || rng.below(3) == 0)
        return canonical_tape(rng, dom, cod);
    switch (rng.below(4)) {
    case 0: {
        BWord mid = random_word(rng, 3, 2);
        return TB::seq(random_tape(rng, dom, mid, depth - 1),
                       random_tape(rng, mid, cod, depth - 1));
    }
    case 1: {
        std::size_t a = rng.below(dom.size() + 1);
        std::size_t b = rng.below(cod.size() + 1);
        BWord       d1(dom.begin(), dom.begin() + a), d2(dom.begin() + a, dom.end());
        BWord       c1(cod.begin(), cod.begin() + b), c2(cod.begin() + b, cod.end());
        return TB::plus(random_tape(rng, d1, c1, depth - 1), random_tape(rng, d2, c2, depth - 1));
    }
    case 2:
        return TB::plus_p(random_tape(rng, dom, cod, depth - 1),
                          random_tape(rng, dom, cod, depth - 1), rng.prob());
    default:
        return TB::scale_t(random_tape(rng, dom, cod, depth - 1), rng.prob());
    }
}

namespace {

// One mass-1 column: weights sum to exactly 1 across the rows.
BTape canonical_total_column(Rng& rng, std::size_t u, const BWord& cod) {
    std::vector<BHom> rows(cod.size());
    Rational          budget(1);
    for (std::size_t j = 0; j + 1 < cod.size(); ++j) {
        Rational w = rng.coin() ? budget * rng.prob() : Rational(0);
        budget     = budget - w;
        rows[j]    = random_cell(rng, u, cod[j], w);
    }
    rows[cod.size() - 1] = random_cell(rng, u, cod.back(), budget);
    return from_column<Set2Base>(u, cod, rows);
}

BTape canonical_total_tape(Rng& rng, const BWord& dom, const BWord& cod) {
    if (dom.empty())
        return TB::cobang_word(cod);
    std::vector<BTape> cols;
    for (std::size_t i = 0; i < dom.size(); ++i)
        cols.push_back(canonical_total_column(rng, dom[i], cod));
    if (cols.size() == 1)
        return cols[0];
    return TB::seq(TB::plus_n(cols), TB::codiag_n(cod, cols.size()));
}

} // namespace

BTape random_total_tape(Rng& rng, const BWord& dom, const BWord& cod, int depth) {
    if (cod.empty())
        throw TypeError("random_total_tape: total maps need a nonempty codomain");
    if (depth <= 0 || rng.below(3) == 0)
        return canonical_total_tape(rng, dom, cod);
    switch (rng.below(3)) {
    case 0: {
        BWord mid = random_word(rng, 2, 2);
        if (mid.empty())
            mid.push_back(rng.below(3));
        return TB::seq(random_total_tape(rng, dom, mid, depth - 1),
                       random_total_tape(rng, mid, cod, depth - 1));
    }
    case 1:
        return TB::plus_p(random_total_tape(rng, dom, cod, depth - 1),
                          random_total_tape(rng, dom, cod, depth - 1), rng.prob());
    default:
        return canonical_total_tape(rng, dom, cod);
    }
}

Circuit random_pb_circuit(Rng& rng, std::size_t max_gens, std::size_t max_inputs,
                          bool with_flip) {
    const SigPtr& sig = pb_signature();
    Circuit c = circ::id_word(sig, std::string(rng.below(max_inputs + 1), 'A'));
    std::size_t gens   = 0;
    std::size_t layers = 1 + rng.below(4);
    for (std::size_t l = 0; l < layers && gens < max_gens; ++l) {
        Circuit     layer;
        std::size_t pos   = 0;
        const auto  width = c->cod.size();
        auto append = [&](const Circuit& piece) {
            layer = layer ? circ::par(layer, piece) : piece;
        };
        // Keep intermediate widths small so truth tables stay tiny.
        const bool may_widen = width < 6;
        while (pos < width) {
            std::size_t choice = rng.below(8);
            if (choice == 0 && pos + 2 <= width && gens < max_gens) {
                append(circ::gen(sig, "and"));
                pos += 2;
                ++gens;
            } else if (choice == 1 && gens < max_gens) {
                append(circ::gen(sig, "not"));
                ++pos;
                ++gens;
            } else if (choice == 2 && gens < max_gens && may_widen) {
                append(circ::gen(sig, "copy"));
                ++pos;
                ++gens;
            } else if (choice == 3 && gens < max_gens) {
                append(circ::gen(sig, "discard"));
                ++pos;
                ++gens;
            } else if (choice == 4 && pos + 2 <= width) {
                append(circ::sym(sig, 'A', 'A'));
                pos += 2;
            } else {
                append(circ::id_sort(sig, 'A'));
                ++pos;
            }
        }
        if (gens < max_gens && may_widen && rng.below(3) == 0) {
            ++gens;
            append(with_flip && rng.coin() ? circ::gen(sig, "flip", rng.prob_open())
                                           : circ::gen(sig, "flip1"));
        }
        if (layer)
            c = circ::seq(c, layer);
    }
    return c;
}

namespace {

FHom fm_cell(std::initializer_list<std::pair<std::string, Rational>> ws) {
    FHom d;
    for (const auto& [w, p] : ws)
        d.bump(w, p);
    return d;
}

} // namespace

CheckResult worked_matrix_example() {
    const FM::Object u{};
    // M: 2 -> 2 and N: 2 -> 3 over the free monoid on {a,b,c}.
    FMat m({u, u}, {u, u},
           {fm_cell({{"a", rat(1, 2)}}), fm_cell({{"c", Rational(1)}}),
            fm_cell({{"ab", rat(1, 2)}}), FHom()});
    FMat n({u, u}, {u, u, u},
           {fm_cell({{"a", rat(1, 2)}}), fm_cell({{"c", rat(1, 2)}}),
            fm_cell({{"ab", rat(1, 3)}}), FHom(),
            FHom(), fm_cell({{"", rat(1, 3)}})});
    FMat expected({u, u}, {u, u, u},
                  {fm_cell({{"aa", rat(1, 4)}, {"abc", rat(1, 4)}}), fm_cell({{"ca", rat(1, 2)}}),
                   fm_cell({{"aab", rat(1, 6)}}), fm_cell({{"cab", rat(1, 3)}}),
                   fm_cell({{"ab", rat(1, 6)}}), FHom()});

    const auto start    = std::chrono::steady_clock::now();
    FMat       composed = compose(m, n);
    const auto elapsed  = std::chrono::steady_clock::now() - start;

    if (!(composed == expected))
        return fail("composed matrix differs from the expected entries");

    // The same matrix from the tape term (split 1/2 + id);(a + ab + c);(id + sym);(merge + id).
    using FT = TapeBuilder<FM>;
    Tape<FM> t = FT::seq_n({FT::plus(FT::diagp(u, rat(1, 2)), FT::id(u)),
                            FT::plus_n({FT::lift("a"), FT::lift("ab"), FT::lift("c")}),
                            FT::plus(FT::id(u), FT::sigma(u, u)),
                            FT::plus(FT::codiag(u), FT::id(u))});
    if (!(compile(t) == m))
        return fail("tape form does not compile to the matrix M");

    if (elapsed > std::chrono::milliseconds(1))
        return fail("composition took longer than 1 ms");
    return ok();
}

CheckResult flip_tape_check() {
    for (const Rational& p : {rat(1, 2), rat(1, 3), rat(7, 11)}) {
        KleisliMap k = to_kleisli(compile(flip_tape(p)));
        KleisliMap::Dist expected;
        expected.bump({0, 1}, p);
        expected.bump({0, 0}, p.one_minus());
        if (!(k.at({0, 0}) == expected))
            return fail("flip_tape(" + p.str() + ") has the wrong distribution");
    }
    return ok();
}

CheckResult andpor_check() {
    for (const Rational& p : {rat(1, 2), rat(1, 3), rat(7, 11)}) {
        BTape tape = TB::seq(TB::seq(TB::diagp(2, p),
                                     TB::plus(TB::lift(and_table()), TB::lift(or_table()))),
                             TB::codiag(1));
        KleisliMap k = to_kleisli(compile(tape));
        for (std::uint64_t x = 0; x < 2; ++x)
            for (std::uint64_t y = 0; y < 2; ++y) {
                // Independent truth-table oracle; masses merge when x = y.
                KleisliMap::Dist expected;
                expected.bump({0, x & y}, p);
                expected.bump({0, x | y}, p.one_minus());
                if (!(k.at({0, x | (y << 1)}) == expected))
                    return fail("ANDpOR differs from the oracle at p=" + p.str());
                if (!k.at({0, x | (y << 1)}).mass().is_one())
                    return fail("ANDpOR is not total at p=" + p.str());
            }
    }
    return ok();
}

namespace {

// The nested +_p recursion the n-ary sum must agree with.
Subdist<std::string> nested_sum(const std::vector<std::pair<Rational, Subdist<std::string>>>& ts) {
    if (ts.empty())
        return Subdist<std::string>::null();
    const Rational& p1 = ts[0].first;
    std::vector<std::pair<Rational, Subdist<std::string>>> tail;
    for (std::size_t i = 1; i < ts.size(); ++i)
        tail.emplace_back(p1.is_one() ? Rational(0) : ts[i].first / p1.one_minus(),
                          ts[i].second);
    return convex_sum(ts[0].second, nested_sum(tail), p1);
}

} // namespace

CheckResult pca_laws(std::uint64_t seed, std::size_t iters) {
    Rng rng(seed);
    for (std::size_t it = 0; it < iters; ++it) {
        auto     x = random_subdist(rng);
        auto     y = random_subdist(rng);
        auto     z = random_subdist(rng);
        Rational p = rng.prob();
        Rational q = rng.prob();

        REQUIRE_LAW(convex_sum(x, y, p) == convex_sum(y, x, p.one_minus()), "commutativity");
        REQUIRE_LAW(convex_sum(x, x, p) == x, "idempotency");

        const Rational pq = p * q;
        if (!pq.is_one()) {
            Rational qt = p * q.one_minus() / pq.one_minus();
            REQUIRE_LAW(convex_sum(convex_sum(x, y, q), z, p) ==
                            convex_sum(x, convex_sum(y, z, qt), pq),
                        "associativity");
        }

        REQUIRE_LAW(convex_sum(x, y, p).mass() ==
                        p * x.mass() + p.one_minus() * y.mass(),
                    "mass linearity");
        REQUIRE_LAW(scale(scale(x, p), q) == scale(x, p * q), "scale composition");

        // Direct formula oracle for the convex sum.
        auto s = convex_sum(x, y, p);
        for (const char* k : {"a", "b", "c", "d", "e"}) {
            REQUIRE_LAW(s.weight(k) == p * x.weight(k) + p.one_minus() * y.weight(k),
                        "convex sum formula");
        }

        // n-ary sum vs the nested recursion.
        std::vector<std::pair<Rational, Subdist<std::string>>> terms;
        Rational budget(1);
        for (std::size_t i = 0; i < rng.below(4); ++i) {
            Rational w = budget * rng.prob();
            budget     = budget - w;
            terms.emplace_back(w, random_subdist(rng));
        }
        REQUIRE_LAW(nary_sum(terms) == nested_sum(terms), "n-ary sum recursion");

        // Cancellativity of scaling on subdistributions.
        Rational r = rng.coin() ? Rational(1) : rng.prob_open();
        REQUIRE_LAW((scale(x, r) == scale(y, r)) == (x == y), "cancellativity");
    }
    return ok();
}

CheckResult matrix_cancellativity(std::uint64_t seed, std::size_t iters) {
    Rng rng(seed);
    for (std::size_t it = 0; it < iters; ++it) {
        BWord dom = random_word(rng, 3, 2);
        BWord cod = random_word(rng, 3, 2);
        BMat  m   = random_matrix(rng, dom, cod);
        BMat  n   = rng.coin() ? random_matrix(rng, dom, cod) : m;
        Rational r = rng.coin() ? Rational(1) : rng.prob_open();
        REQUIRE_LAW((scale(m, r) == scale(n, r)) == (m == n), "matrix cancellativity");
    }
    return ok();
}

CheckResult matrix_laws(std::uint64_t seed, std::size_t iters) {
    Rng rng(seed);
    for (std::size_t it = 0; it < iters; ++it) {
        BWord p = random_word(rng, 2, 2);
        BWord q = random_word(rng, 2, 2);
        BWord r = random_word(rng, 2, 2);
        BWord s = random_word(rng, 2, 2);

        BMat m  = random_matrix(rng, p, q);
        BMat n  = random_matrix(rng, q, r);
        BMat o  = random_matrix(rng, r, s);
        BMat m2 = random_matrix(rng, p, q);

        REQUIRE_LAW(compose(compose(m, n), o) == compose(m, compose(n, o)), "associativity");
        REQUIRE_LAW(compose(BMat::identity(p), m) == m, "left identity");
        REQUIRE_LAW(compose(m, BMat::identity(q)) == m, "right identity");

        REQUIRE_LAW(compose(direct_sum(m, n), direct_sum(BMat::identity(q), o)) ==
                        direct_sum(compose(m, BMat::identity(q)), compose(n, o)),
                    "direct sum interchange");

        REQUIRE_LAW(compose(swap_plus<Set2Base>(p, q), swap_plus<Set2Base>(q, p)) ==
                        BMat::identity([&] {
                            BWord pq = p;
                            pq.insert(pq.end(), q.begin(), q.end());
                            return pq;
                        }()),
                    "swap involution");
        REQUIRE_LAW(swap_plus<Set2Base>({}, q) == BMat::identity(q), "swap with empty word");

        // Swap conjugates direct sums.
        BMat f = random_matrix(rng, p, r);
        BMat g = random_matrix(rng, q, s);
        REQUIRE_LAW(compose(compose(swap_plus<Set2Base>(p, q), direct_sum(g, f)),
                            swap_plus<Set2Base>(s, r)) == direct_sum(f, g),
                    "swap conjugation");

        // Null absorption.
        REQUIRE_LAW(compose(BMat::star(p, q), n) == BMat::star(p, r), "star absorption right");
        REQUIRE_LAW(compose(m, BMat::star(q, r)) == BMat::star(p, r), "star absorption left");

        // Coproduct and convex product structure maps.
        BMat i1 = direct_sum(BMat::identity(p), gen_cobang<Set2Base>(q));
        BMat i2 = direct_sum(gen_cobang<Set2Base>(p), BMat::identity(q));
        BMat p1 = direct_sum(BMat::identity(p), gen_bang<Set2Base>(q));
        BMat p2 = direct_sum(gen_bang<Set2Base>(p), BMat::identity(q));
        REQUIRE_LAW(compose(i1, p1) == BMat::identity(p), "iota1;pi1 = id");
        REQUIRE_LAW(compose(i2, p2) == BMat::identity(q), "iota2;pi2 = id");
        REQUIRE_LAW(compose(i1, p2) == BMat::star(p, q), "iota1;pi2 = star");
        REQUIRE_LAW(compose(i2, p1) == BMat::star(q, p), "iota2;pi1 = star");

        // Enrichment: entrywise convex sum equals the split/merge route.
        Rational prob = rng.prob();
        REQUIRE_LAW(convex_sum(m, m2, prob) ==
                        compose(compose(gen_diagp<Set2Base>(p, prob), direct_sum(m, m2)),
                                gen_codiag<Set2Base>(q)),
                    "convex sum two routes");
        REQUIRE_LAW(convex_sum(m, m, prob) == m, "matrix idempotency");
        REQUIRE_LAW(compose(gen_diagp<Set2Base>(p, prob), gen_codiag<Set2Base>(p)) ==
                        BMat::identity(p),
                    "split;merge = id");

        // Composition preserves the enrichment.
        REQUIRE_LAW(compose(convex_sum(m, m2, prob), n) ==
                        convex_sum(compose(m, n), compose(m2, n), prob),
                    "right distributivity");
        BMat pre = random_matrix(rng, r, p);
        REQUIRE_LAW(compose(pre, convex_sum(m, m2, prob)) ==
                        convex_sum(compose(pre, m), compose(pre, m2), prob),
                    "left distributivity");

        REQUIRE_LAW(scale(m, Rational(1)) == m, "scale by one");
        REQUIRE_LAW(scale(m, Rational(0)) == BMat::star(p, q), "scale by zero");

        // Functoriality of the pushforward along circuits -> tables.
        {
            const SigPtr& sig = pb_signature();
            auto cobj = [&](std::size_t w) {
                return CircuitBase::Object{sig, std::string(w, 'A')};
            };
            ObjWord<CircuitBase> cp, cq, cr;
            for (auto w : p)
                cp.push_back(cobj(w));
            for (auto w : q)
                cq.push_back(cobj(w));
            for (auto w : r)
                cr.push_back(cobj(w));
            auto rand_cmat = [&](const ObjWord<CircuitBase>& d, const ObjWord<CircuitBase>& c) {
                std::vector<PlusHom<CircuitBase>> cells(d.size() * c.size());
                for (std::size_t i = 0; i < d.size(); ++i) {
                    Rational budget(1);
                    for (std::size_t k = 0; k < 2 && !c.empty(); ++k) {
                        Rational w = budget * rng.prob();
                        budget     = budget - w;
                        std::size_t j = rng.below(c.size());
                        cells[j * d.size() + i].bump(
                            table_to_circuit(random_table(rng, d[i].word.size(),
                                                          c[j].word.size())),
                            w);
                    }
                }
                return StochMatrix<CircuitBase>(d, c, std::move(cells));
            };
            auto fobj = [](const CircuitBase::Object& u) { return u.word.size(); };
            auto farr = [](const Circuit& c) { return eval_gate_free(c); };
            StochMatrix<CircuitBase> cm = rand_cmat(cp, cq);
            StochMatrix<CircuitBase> cn = rand_cmat(cq, cr);
            REQUIRE_LAW(map_base<Set2Base>(compose(cm, cn), fobj, farr) ==
                            compose(map_base<Set2Base>(cm, fobj, farr),
                                    map_base<Set2Base>(cn, fobj, farr)),
                        "map_base functoriality");
            auto idobj = [](const CircuitBase::Object& u) { return u; };
            auto idarr = [](const Circuit& c) { return c; };
            REQUIRE_LAW(map_base<CircuitBase>(cm, idobj, idarr) == cm,
                        "map_base identity functor");
        }
    }
    return ok();
}

CheckResult generator_laws(std::uint64_t seed, std::size_t iters) {
    Rng rng(seed);
    for (std::size_t it = 0; it < iters; ++it) {
        BWord p = random_word(rng, 3, 2);
        BWord q = random_word(rng, 3, 2);
        BWord pq = p;
        pq.insert(pq.end(), q.begin(), q.end());
        Rational pr = rng.prob_open();
        Rational qr = rng.prob_open();

        auto eq = [](const BTape& a, const BTape& b) { return compile(a) == compile(b); };

        // Monoid axioms.
        REQUIRE_LAW(eq(TB::seq(TB::plus(TB::id_word(p), TB::codiag_word(p)), TB::codiag_word(p)),
                       TB::seq(TB::plus(TB::codiag_word(p), TB::id_word(p)), TB::codiag_word(p))),
                    "merge associativity");
        REQUIRE_LAW(eq(TB::seq(TB::plus(TB::cobang_word(p), TB::id_word(p)), TB::codiag_word(p)),
                       TB::id_word(p)),
                    "merge unit");
        REQUIRE_LAW(eq(TB::seq(TB::sigma_word(p, p), TB::codiag_word(p)), TB::codiag_word(p)),
                    "merge symmetry");
        REQUIRE_LAW(eq(TB::cobang_word(pq), TB::plus(TB::cobang_word(p), TB::cobang_word(q))),
                    "initial coherence");
        REQUIRE_LAW(eq(TB::codiag_word(pq),
                       TB::seq(TB::plus_n({TB::id_word(p), TB::sigma_word(q, p), TB::id_word(q)}),
                               TB::plus(TB::codiag_word(p), TB::codiag_word(q)))),
                    "merge coherence");
        REQUIRE_LAW(compile(TB::codiag_word({})) == BMat::identity({}), "merge zero coherence");
        REQUIRE_LAW(compile(TB::cobang_word({})) == BMat::identity({}), "initial zero coherence");

        // Co-pca axioms, including the associativity reweighting.
        const Rational pt = pr * qr;
        const Rational qt = pr * qr.one_minus() / pt.one_minus();
        REQUIRE_LAW(eq(TB::seq(TB::diagp_word(p, pr),
                               TB::plus(TB::diagp_word(p, qr), TB::id_word(p))),
                       TB::seq(TB::diagp_word(p, pt),
                               TB::plus(TB::id_word(p), TB::diagp_word(p, qt)))),
                    "split associativity");
        REQUIRE_LAW(eq(TB::seq(TB::diagp_word(p, pr), TB::codiag_word(p)), TB::id_word(p)),
                    "split idempotency");
        REQUIRE_LAW(eq(TB::seq(TB::diagp_word(p, pr), TB::sigma_word(p, p)),
                       TB::diagp_word(p, pr.one_minus())),
                    "split symmetry");
        REQUIRE_LAW(eq(TB::bang_word(pq), TB::plus(TB::bang_word(p), TB::bang_word(q))),
                    "kill coherence");
        REQUIRE_LAW(eq(TB::diagp_word(pq, pr),
                       TB::seq(TB::plus(TB::diagp_word(p, pr), TB::diagp_word(q, pr)),
                               TB::plus_n({TB::id_word(p), TB::sigma_word(p, q), TB::id_word(q)}))),
                    "split coherence");

        // Naturality against a random tape f: P -> Q.
        BTape f = random_tape(rng, p, q, 2);
        REQUIRE_LAW(eq(TB::seq(f, TB::diagp_word(q, pr)),
                       TB::seq(TB::diagp_word(p, pr), TB::plus(f, f))),
                    "split naturality");
        REQUIRE_LAW(eq(TB::seq(f, TB::bang_word(q)), TB::bang_word(p)), "kill naturality");
        REQUIRE_LAW(eq(TB::seq(TB::cobang_word(p), f), TB::cobang_word(q)),
                    "initial naturality");
        REQUIRE_LAW(eq(TB::seq(TB::codiag_word(p), f),
                       TB::seq(TB::plus(f, f), TB::codiag_word(q))),
                    "merge naturality");

        // Symmetric monoidal axioms for the tape symmetry.
        REQUIRE_LAW(eq(TB::seq(TB::sigma_word(p, q), TB::sigma_word(q, p)), TB::id_word(pq)),
                    "symmetry involution");
        BWord r = random_word(rng, 2, 2);
        REQUIRE_LAW(eq(TB::seq(TB::plus(f, TB::id_word(r)), TB::sigma_word(q, r)),
                       TB::seq(TB::sigma_word(p, r), TB::plus(TB::id_word(r), f))),
                    "symmetry naturality");
    }
    return ok();
}

CheckResult convex_universal(std::uint64_t seed, std::size_t iters) {
    Rng rng(seed);
    for (std::size_t it = 0; it < iters; ++it) {
        BWord p  = rng.below(8) == 0 ? BWord{} : random_word_nonempty(rng, 2, 2);
        BWord q1 = random_word(rng, 2, 2);
        BWord q2 = random_word(rng, 2, 2);
        if (q1.empty() && q2.empty())
            q1.push_back(1);
        BMat t1 = random_matrix(rng, p, q1);
        BMat t2 = random_matrix(rng, p, q2);
        Rational pr = rng.prob();
        Rational qr = (Rational(1) - pr) * rng.prob();

        BMat pairing = compose(compile(TB::diag_n(p, {pr, qr})), direct_sum(t1, t2));
        BMat pi1     = direct_sum(BMat::identity(q1), gen_bang<Set2Base>(q2));
        BMat pi2     = direct_sum(gen_bang<Set2Base>(q1), BMat::identity(q2));
        REQUIRE_LAW(compose(pairing, pi1) == scale(t1, pr), "pairing projection 1");
        REQUIRE_LAW(compose(pairing, pi2) == scale(t2, qr), "pairing projection 2");

        if (p.empty())
            continue;

        // Any perturbation of the pairing breaks a projection equation.
        std::vector<BHom> cells;
        for (std::size_t j = 0; j < pairing.rows(); ++j)
            for (std::size_t i = 0; i < pairing.cols(); ++i)
                cells.push_back(pairing.entry(j, i));
        bool perturbed = false;
        for (std::size_t tries = 0; tries < 8 && !perturbed; ++tries) {
            std::size_t idx = rng.below(cells.size());
            auto&       cell = cells[idx];
            if (!cell.is_null()) {
                auto [arrow, w] = *cell.weights().begin();
                cell.bump(arrow, Rational(0) - w * rat(1, 2));
                perturbed = true;
            } else {
                std::size_t i = idx % pairing.cols();
                if (pairing.column_mass(i) < Rational(1)) {
                    std::size_t j = idx / pairing.cols();
                    cell.bump(random_table(rng, pairing.dom()[i], pairing.cod()[j]),
                              (Rational(1) - pairing.column_mass(i)) * rat(1, 2));
                    perturbed = true;
                }
            }
        }
        if (!perturbed)
            continue;
        BMat other(pairing.dom(), pairing.cod(), std::move(cells));
        REQUIRE_LAW(!(compose(other, pi1) == scale(t1, pr)) ||
                        !(compose(other, pi2) == scale(t2, qr)),
                    "pairing uniqueness");
    }
    return ok();
}

CheckResult rig_tensor_iso(std::uint64_t seed, std::size_t iters) {
    Rng  rng(seed);
    auto word = [&rng] {
        // Mostly nonempty types; the empty word stays as an edge case.
        return rng.below(8) == 0 ? BWord{} : random_word_nonempty(rng, 2, 2);
    };
    for (std::size_t it = 0; it < iters; ++it) {
        BTape t1 = random_tape(rng, word(), word(), 4);
        BTape t2 = random_tape(rng, word(), word(), 4);
        REQUIRE_LAW(compile(TB::tensor_t(t1, t2)) == tensor(compile(t1), compile(t2)),
                    "tensor compilation");
    }
    return ok();
}

CheckResult rig_struct_laws(std::uint64_t seed, std::size_t iters) {
    Rng rng(seed);
    for (std::size_t it = 0; it < iters; ++it) {
        BWord p = random_word(rng, 2, 2);
        BWord q = random_word(rng, 2, 2);
        BWord r = random_word(rng, 2, 2);

        // The tape symmetry compiles to the block swap matrix exactly.
        REQUIRE_LAW(compile(TB::sigma_word(p, q)) == swap_plus<Set2Base>(p, q),
                    "word symmetry matrix");

        // The left distributor is a permutation of Dirac identities onto the
        // distributed polynomial.
        BMat d = compile(TB::delta_l(p, q, r));
        {
            BWord expect = TB::tensor_word(p, q);
            BWord pr2    = TB::tensor_word(p, r);
            expect.insert(expect.end(), pr2.begin(), pr2.end());
            REQUIRE_LAW(d.cod() == expect, "distributor codomain");
        }
        REQUIRE_LAW(d.rows() == d.cols(), "distributor squareness");
        for (std::size_t i = 0; i < d.cols(); ++i) {
            std::size_t nonzero = 0;
            for (std::size_t j = 0; j < d.rows(); ++j) {
                const auto& cell = d.entry(j, i);
                if (cell.is_null())
                    continue;
                ++nonzero;
                REQUIRE_LAW(cell.is_dirac() &&
                                cell.weights().begin()->first ==
                                    Set2Base::identity(d.dom()[i]),
                            "distributor entries are Dirac identities");
            }
            REQUIRE_LAW(nonzero == 1, "distributor permutation columns");
        }
        BWord qr = q;
        qr.insert(qr.end(), r.begin(), r.end());
        REQUIRE_LAW(compile(TB::seq(TB::delta_l(p, q, r), TB::delta_l_inv(p, q, r))) ==
                        BMat::identity(TB::tensor_word(p, qr)),
                    "distributor inverse");

        // Tensor symmetry is involutive under compilation.
        REQUIRE_LAW(compile(TB::seq(TB::sigma_times(p, q), TB::sigma_times(q, p))) ==
                        BMat::identity(TB::tensor_word(p, q)),
                    "tensor symmetry involution");

        // Whiskering an identity is an identity.
        if (!p.empty())
            REQUIRE_LAW(compile(TB::whisker_left(p[0], TB::id(q.empty() ? 0 : q[0]))) ==
                            BMat::identity({Set2Base::tensor_obj(p[0], q.empty() ? 0 : q[0])}),
                        "whiskered identity");

        // Interchange of the two compositions at matrix level.
        BWord s  = random_word(rng, 2, 2);
        BMat  m  = random_matrix(rng, p, q);
        BMat  n  = random_matrix(rng, q, r);
        BMat  m2 = random_matrix(rng, r, s);
        BMat  n2 = random_matrix(rng, s, p);
        REQUIRE_LAW(tensor(compose(m, n), compose(m2, n2)) ==
                        compose(tensor(m, m2), tensor(n, n2)),
                    "tensor interchange");

        // Column masses multiply.
        BMat t = tensor(m, m2);
        for (std::size_t i = 0; i < m.cols(); ++i)
            for (std::size_t j = 0; j < m2.cols(); ++j)
                REQUIRE_LAW(t.column_mass(i * m2.cols() + j) ==
                                m.column_mass(i) * m2.column_mass(j),
                            "tensor column masses");

        // Lifted cells tensor to the lift of the base tensor.
        FnTable a = random_table(rng, rng.below(3), rng.below(3));
        FnTable b = random_table(rng, rng.below(3), rng.below(3));
        REQUIRE_LAW(compile(TB::tensor_t(TB::lift(a), TB::lift(b))) ==
                        compile(TB::lift(tensor(a, b))),
                    "tensor of lifted cells");

        // Strict associativity and unitality of the matrix tensor.
        REQUIRE_LAW(tensor(tensor(m, n), m2) == tensor(m, tensor(n, m2)),
                    "tensor associativity");
        REQUIRE_LAW(tensor(m, BMat::identity({0})) == m, "tensor right unit");
        REQUIRE_LAW(tensor(BMat::identity({0}), m) == m, "tensor left unit");
    }
    return ok();
}

CheckResult encode_correct(std::uint64_t seed, std::size_t iters) {
    Rng rng(seed);
    for (std::size_t it = 0; it < iters; ++it) {
        Circuit c = random_pb_circuit(rng, 10, 3, true);
        REQUIRE_LAW(to_kleisli(compile(encode(c))) == eval_pb(c), "encoding semantics");
    }
    return ok();
}

CheckResult completeness_surrogate(std::uint64_t seed, std::size_t iters) {
    Rng rng(seed);
    for (std::size_t it = 0; it < iters; ++it) {
        const std::size_t n   = rng.below(4);
        BWord             dom = {n};
        BWord             cod = random_word(rng, 2, 2);
        BTape             s   = random_tape(rng, dom, cod, 3);
        BTape t = rng.coin() ? TB::plus_p(s, s, rng.prob()) : random_tape(rng, dom, cod, 3);

        bool full = semantic_equiv(s, t).equal;
        bool all  = true;
        for (const BTape& b : boolean_vectors(n))
            all = all && semantic_equiv(TB::seq(b, s), TB::seq(b, t)).equal;
        REQUIRE_LAW(full == all, "boolean vector surrogate");
    }
    return ok();
}

// The multiplexer law quantifies over the tapes that encode circuits, which
// are all mass-preserving; it is false for mass-dropping tapes.
CheckResult mux_axiom(std::uint64_t seed, std::size_t iters) {
    Rng rng(seed);
    for (std::size_t it = 0; it < iters; ++it) {
        const std::size_t n = rng.below(3);
        const std::size_t m = rng.below(3);
        BTape t = random_total_tape(rng, {n + 1}, {m}, 3);
        REQUIRE_LAW(mux_axiom_check(t), "multiplexer law");
    }
    return ok();
}

CheckResult control_contrast(std::uint64_t seed, std::size_t iters) {
    Rng rng(seed);
    for (std::size_t it = 0; it < iters; ++it) {
        Rational p     = rng.prob_open();
        BTape    c     = random_tape(rng, {0}, {1}, 2);
        BTape    failb = TB::star({0}, {1});

        // Multiplexer with a failing data input: the product kills everything.
        BTape lhs = TB::seq(TB::tensor_t(TB::tensor_t(flip_tape(p), c), failb),
                            TB::lift(eval_gate_free(mux_circuit())));
        KleisliMap lk = to_kleisli(compile(lhs));
        REQUIRE_LAW(lk.at({0, 0}).is_null(), "mux with failure is null");

        // Tape-level choice keeps the c branch with probability p.
        BTape rhs = TB::seq(TB::seq(TB::diagp(0, p), TB::plus(c, failb)), TB::codiag(1));
        KleisliMap rk       = to_kleisli(compile(rhs));
        KleisliMap ck       = to_kleisli(compile(c));
        REQUIRE_LAW(rk.at({0, 0}) == scale(ck.at({0, 0}), p), "tape choice scales the branch");
    }
    return ok();
}

CheckResult roundtrip_bijection(std::uint64_t seed, std::size_t iters) {
    Rng  rng(seed);
    auto tables = enumerate_tables(1, 2);
    for (std::size_t it = 0; it < iters; ++it) {
        BHom     d;
        Rational budget(1);
        for (std::size_t k = 0; k < rng.below(4); ++k) {
            Rational w = budget * rng.prob();
            budget     = budget - w;
            d.bump(tables[rng.below(tables.size())], w);
        }
        BTape t = from_column<Set2Base>(1, {2}, {d});
        BMat  m = compile(t);
        REQUIRE_LAW(m.rows() == 1 && m.cols() == 1, "column shape");
        REQUIRE_LAW(m.entry(0, 0) == d, "column roundtrip");
    }
    return ok();
}

CheckResult parser_roundtrip(std::uint64_t seed, std::size_t iters) {
    Rng rng(seed);
    for (std::size_t it = 0; it < iters; ++it) {
        BTape t = random_tape(rng, random_word(rng, 2, 2), random_word(rng, 2, 2), 3);
        BTape back = parse_tape(print_tape(t));
        REQUIRE_LAW(tape_eq(t, back), "tape print/parse roundtrip");

        Circuit c     = random_pb_circuit(rng, 6, 3, true);
        Circuit cback = parse_circuit(print_circuit(c));
        REQUIRE_LAW(circuit_eq(c, cback), "circuit print/parse roundtrip");
    }
    return ok();
}

std::vector<SuiteLine> run_suite(const std::string& suite, std::uint64_t seed,
                                 std::size_t iters) {
    std::vector<SuiteLine> lines;
    auto add = [&](const std::string& name, CheckResult r) {
        lines.push_back({name, std::move(r)});
    };
    if (suite == "pca") {
        add("pca-laws", pca_laws(seed, iters));
    } else if (suite == "matrix") {
        add("worked-example", worked_matrix_example());
        add("matrix-laws", matrix_laws(seed, std::max<std::size_t>(1, iters / 10)));
        add("generator-laws", generator_laws(seed + 1, std::max<std::size_t>(1, iters / 10)));
        add("cancellativity", matrix_cancellativity(seed + 2, iters));
        add("convex-universal", convex_universal(seed + 3, iters));
    } else if (suite == "rig") {
        add("tensor-iso", rig_tensor_iso(seed, std::max<std::size_t>(1, iters / 10)));
        add("structure-laws", rig_struct_laws(seed + 1, std::max<std::size_t>(1, iters / 10)));
    } else if (suite == "bool") {
        add("flip-tape", flip_tape_check());
        add("andpor", andpor_check());
        add("encode", encode_correct(seed, std::max<std::size_t>(1, iters / 5)));
        add("booleans-lemma", completeness_surrogate(seed + 1, std::max<std::size_t>(1, iters / 10)));
        add("mux-axiom", mux_axiom(seed + 2, std::max<std::size_t>(1, iters / 20)));
        add("control-contrast", control_contrast(seed + 3, std::max<std::size_t>(1, iters / 10)));
        add("column-bijection", roundtrip_bijection(seed + 4, iters));
    } else {
        add(suite, fail("unknown suite '" + suite + "' (expected pca, matrix, rig or bool)"));
    }
    return lines;
}

} // namespace tapecalc::checks
