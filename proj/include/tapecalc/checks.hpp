#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tapecalc/boolcirc.hpp"
#include "tapecalc/free_monoid.hpp"

namespace tapecalc::checks {

// Seeded generator; all draws go through below() so runs are reproducible.
struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::mt19937_64 eng;

    std::size_t below(std::size_t n) { return n ? eng() % n : 0; }
    bool        coin() { return below(2) == 1; }

    Rational prob(unsigned max_den = 8) {
        unsigned den = 1 + static_cast<unsigned>(below(max_den));
        return Rational(static_cast<long>(below(den + 1)), den);
    }

    Rational prob_open(unsigned max_den = 8) {
        unsigned den = 2 + static_cast<unsigned>(below(max_den));
        return Rational(1 + static_cast<long>(below(den - 1)), den);
    }
};

struct CheckResult {
    bool        ok = true;
    std::string detail;
};

using BWord = ObjWord<Set2Base>;

Subdist<std::string>  random_subdist(Rng& rng);
FnTable               random_table(Rng& rng, std::size_t n, std::size_t m);
BWord                 random_word(Rng& rng, std::size_t max_len, std::size_t max_width);
StochMatrix<Set2Base> random_matrix(Rng& rng, const BWord& dom, const BWord& cod);
BTape                 random_tape(Rng& rng, const BWord& dom, const BWord& cod, int depth);
// Mass-preserving tapes, the image of total maps; cod must be nonempty.
BTape random_total_tape(Rng& rng, const BWord& dom, const BWord& cod, int depth);
Circuit               random_pb_circuit(Rng& rng, std::size_t max_gens, std::size_t max_inputs,
                                        bool with_flip);

// The worked free-monoid composition and its tape form.
CheckResult worked_matrix_example();
CheckResult flip_tape_check();
CheckResult andpor_check();

CheckResult pca_laws(std::uint64_t seed, std::size_t iters);
CheckResult matrix_cancellativity(std::uint64_t seed, std::size_t iters);
CheckResult matrix_laws(std::uint64_t seed, std::size_t iters);
CheckResult generator_laws(std::uint64_t seed, std::size_t iters);
CheckResult convex_universal(std::uint64_t seed, std::size_t iters);
CheckResult rig_tensor_iso(std::uint64_t seed, std::size_t iters);
CheckResult rig_struct_laws(std::uint64_t seed, std::size_t iters);
CheckResult encode_correct(std::uint64_t seed, std::size_t iters);
CheckResult completeness_surrogate(std::uint64_t seed, std::size_t iters);
CheckResult mux_axiom(std::uint64_t seed, std::size_t iters);
CheckResult control_contrast(std::uint64_t seed, std::size_t iters);
CheckResult roundtrip_bijection(std::uint64_t seed, std::size_t iters);
CheckResult parser_roundtrip(std::uint64_t seed, std::size_t iters);

struct SuiteLine {
    std::string name;
    CheckResult result;
};

// Suites: pca, matrix, rig, bool.
std::vector<SuiteLine> run_suite(const std::string& suite, std::uint64_t seed,
                                 std::size_t iters);

} // namespace tapecalc::checks
