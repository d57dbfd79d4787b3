#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tapecalc/checks.hpp"
#include "tapecalc/json_io.hpp"
#include "tapecalc/parser.hpp"

namespace {

using namespace tapecalc;

std::string read_input(const std::string& file, const std::string& expr) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in)
            throw Error("cannot open '" + file + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    if (expr.empty())
        throw Error("expected an expression or -f FILE");
    return expr;
}

std::string mono(std::size_t w) { return w == 0 ? "1" : std::string(w, 'A'); }

std::string poly(const ObjWord<Set2Base>& p) {
    if (p.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? " + " : "") + mono(p[i]);
    return s;
}

void print_kleisli(const KleisliMap& k, bool decimal) {
    const bool unit_in = k.dom.size() == 1 && k.dom[0] == 0;
    for (const auto& [x, d] : k.table) {
        if (!unit_in)
            std::cout << elem_str(k.dom, x) << " -> ";
        std::cout << dist_str(k.cod, d);
        if (decimal && !d.is_null()) {
            std::cout << "  (~";
            bool first = true;
            for (auto it = d.weights().rbegin(); it != d.weights().rend(); ++it) {
                std::cout << (first ? "" : ", ") << it->second.approx();
                first = false;
            }
            std::cout << ")";
        }
        std::cout << "\n";
    }
}

int cmd_parse(const std::string& text, bool as_circuit, const SigPtr& sig) {
    if (as_circuit) {
        std::cout << print_circuit(parse_circuit(text, sig)) << "\n";
    } else {
        std::cout << print_tape(parse_tape(text)) << "\n";
    }
    return 0;
}

int cmd_typecheck(const std::string& text, bool as_circuit, const SigPtr& sig) {
    if (as_circuit) {
        Circuit c = parse_circuit(text, sig);
        std::cout << (c->dom.empty() ? "1" : c->dom) << " -> "
                  << (c->cod.empty() ? "1" : c->cod) << "\n";
    } else {
        BTape t = parse_tape(text);
        std::cout << poly(t->dom) << " -> " << poly(t->cod) << "\n";
    }
    return 0;
}

int cmd_compile(const std::string& text, const std::string& json_out, bool decimal) {
    BTape t = parse_tape(text);
    auto  m = compile(t);
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out)
            throw Error("cannot write '" + json_out + "'");
        out << matrix_to_json(m).dump(2) << "\n";
        std::cout << "wrote " << json_out << "\n";
        return 0;
    }
    std::cout << m;
    if (decimal) {
        std::cout << "column masses:";
        for (std::size_t i = 0; i < m.cols(); ++i)
            std::cout << " " << m.column_mass(i).str() << " (~" << m.column_mass(i).approx()
                      << ")";
        std::cout << "\n";
    }
    return 0;
}

int cmd_eval(const std::string& text, const std::string& input, bool decimal) {
    Circuit    c = parse_circuit(text);
    KleisliMap k = eval_pb(c);
    if (!input.empty()) {
        KleisliMap::Elem x{0, parse_bits(input)};
        if (input.size() != k.dom[0])
            throw Error("input '" + input + "' has width " + std::to_string(input.size()) +
                        ", the circuit expects " + std::to_string(k.dom[0]));
        std::cout << dist_str(k.cod, k.at(x)) << "\n";
        return 0;
    }
    print_kleisli(k, decimal);
    return 0;
}

// Accepts a tape, or a probabilistic circuit which is then encoded.
BTape parse_tape_or_pb(const std::string& text) {
    std::exception_ptr tape_err;
    try {
        return parse_tape(text);
    } catch (const Error&) {
        tape_err = std::current_exception();
    }
    try {
        return encode(parse_circuit(text));
    } catch (const Error&) {
        std::rethrow_exception(tape_err);
    }
}

int cmd_equiv(const std::string& file1, const std::string& file2) {
    BTape t = parse_tape_or_pb(read_input(file1, ""));
    BTape s = parse_tape_or_pb(read_input(file2, ""));
    EquivResult r = semantic_equiv(t, s);
    if (r.equal) {
        std::cout << "equivalent\n";
        return 0;
    }
    std::cout << "not equivalent\n";
    std::cout << "witness input: " << elem_str(r.dom, *r.witness) << "\n";
    std::cout << "left:  " << dist_str(r.cod, r.lhs) << "\n";
    std::cout << "right: " << dist_str(r.cod, r.rhs) << "\n";
    return 1;
}

int cmd_encode(const std::string& text) {
    Circuit c = parse_circuit(text);
    std::cout << print_tape(encode(c)) << "\n";
    return 0;
}

int cmd_demo(const std::string& name) {
    if (name == "matrices") {
        using FM  = FreeMonoidBase;
        using FT  = TapeBuilder<FM>;
        using FHom = PlusHom<FM>;
        const FM::Object u{};
        auto cell = [](std::initializer_list<std::pair<std::string, Rational>> ws) {
            FHom d;
            for (const auto& [w, p] : ws)
                d.bump(w, p);
            return d;
        };
        StochMatrix<FM> m({u, u}, {u, u},
                          {cell({{"a", rat(1, 2)}}), cell({{"c", Rational(1)}}),
                           cell({{"ab", rat(1, 2)}}), FHom()});
        StochMatrix<FM> n({u, u}, {u, u, u},
                          {cell({{"a", rat(1, 2)}}), cell({{"c", rat(1, 2)}}),
                           cell({{"ab", rat(1, 3)}}), FHom(),
                           FHom(), cell({{"", rat(1, 3)}})});
        std::cout << "M: 2 -> 2 over the free monoid\n" << m << "\n";
        std::cout << "N: 2 -> 3\n" << n << "\n";
        std::cout << "M ; N\n" << compose(m, n) << "\n";
        Tape<FM> t = FT::seq_n({FT::plus(FT::diagp(u, rat(1, 2)), FT::id(u)),
                                FT::plus_n({FT::lift("a"), FT::lift("ab"), FT::lift("c")}),
                                FT::plus(FT::id(u), FT::sigma(u, u)),
                                FT::plus(FT::codiag(u), FT::id(u))});
        std::cout << "tape (split 1/2 + id);(a + ab + c);(id + sym);(merge + id) compiles to M: "
                  << (compile(t) == m ? "yes" : "NO") << "\n";
        return 0;
    }
    if (name == "andor") {
        const Rational p = rat(1, 3);
        BTape tape = BTapeBuilder::seq(
            BTapeBuilder::seq(BTapeBuilder::diagp(2, p),
                              BTapeBuilder::plus(BTapeBuilder::lift(and_table()),
                                                 BTapeBuilder::lift(or_table()))),
            BTapeBuilder::codiag(1));
        std::cout << "tape: " << print_tape(tape) << "\n\n";
        std::cout << "matrix normal form:\n" << compile(tape) << "\n";
        std::cout << "semantics (and with probability " << p << ", or with " << p.one_minus()
                  << "):\n";
        print_kleisli(to_kleisli(compile(tape)), false);
        return 0;
    }
    throw Error("unknown demo '" + name + "' (expected matrices or andor)");
}

int cmd_randcheck(const std::string& suite, std::uint64_t seed, std::size_t iters) {
    bool all_ok = true;
    for (const auto& line : checks::run_suite(suite, seed, iters)) {
        all_ok = all_ok && line.result.ok;
        std::cout << (line.result.ok ? "PASS" : "FAIL") << " " << line.name;
        if (!line.result.ok)
            std::cout << ": " << line.result.detail;
        std::cout << "\n";
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tape diagrams as stochastic matrices of string diagrams"};
    app.require_subcommand(1);

    std::string expr, file, sig_file, json_out, input, suite = "pca", demo_name;
    bool        as_circuit = false, decimal = false;
    std::string file2;
    std::uint64_t seed  = 42;
    std::size_t   iters = 100;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("expr", expr, "term text");
        cmd->add_option("-f,--file", file, "read the term from a file");
    };

    CLI::App* parse = app.add_subcommand("parse", "parse a term and print it back");
    add_input(parse);
    parse->add_flag("--circuit", as_circuit, "parse as a circuit instead of a tape");
    parse->add_option("--sig", sig_file, "signature JSON for circuit parsing");

    CLI::App* typecheck = app.add_subcommand("typecheck", "print the type of a term");
    add_input(typecheck);
    typecheck->add_flag("--circuit", as_circuit, "typecheck as a circuit");
    typecheck->add_option("--sig", sig_file, "signature JSON for circuit parsing");

    CLI::App* compilec = app.add_subcommand("compile", "compile a tape to its matrix");
    add_input(compilec);
    compilec->add_option("--json", json_out, "write the matrix as JSON to this file");
    compilec->add_flag("--decimal", decimal, "also print approximate decimals");

    CLI::App* evalc = app.add_subcommand("eval", "evaluate a probabilistic circuit");
    add_input(evalc);
    evalc->add_option("--input", input, "input bits, top wire first");
    evalc->add_flag("--decimal", decimal, "also print approximate decimals");

    CLI::App* equivc = app.add_subcommand("equiv", "decide semantic equivalence of two tapes");
    std::string f1;
    equivc->add_option("lhs", f1, "first tape file")->required();
    equivc->add_option("rhs", file2, "second tape file")->required();

    CLI::App* encodec = app.add_subcommand("encode", "encode a probabilistic circuit as a tape");
    add_input(encodec);

    CLI::App* democ = app.add_subcommand("demo", "run a worked example");
    democ->add_option("name", demo_name, "matrices | andor")->required();

    CLI::App* randc = app.add_subcommand("randcheck", "run a randomized law suite");
    randc->add_option("--suite", suite, "pca | matrix | rig | bool");
    randc->add_option("--seed", seed, "random seed");
    randc->add_option("--iters", iters, "iteration count");

    CLI11_PARSE(app, argc, argv);

    try {
        SigPtr sig = pb_signature();
        if (!sig_file.empty())
            sig = signature_from_json(read_input(sig_file, ""));
        if (parse->parsed())
            return cmd_parse(read_input(file, expr), as_circuit, sig);
        if (typecheck->parsed())
            return cmd_typecheck(read_input(file, expr), as_circuit, sig);
        if (compilec->parsed())
            return cmd_compile(read_input(file, expr), json_out, decimal);
        if (evalc->parsed())
            return cmd_eval(read_input(file, expr), input, decimal);
        if (equivc->parsed())
            return cmd_equiv(f1, file2);
        if (encodec->parsed())
            return cmd_encode(read_input(file, expr));
        if (democ->parsed())
            return cmd_demo(demo_name);
        if (randc->parsed())
            return cmd_randcheck(suite, seed, iters);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
