// Acceptance suite: exact-arithmetic end-to-end checks at fixed seeds and
// sizes, one pass/fail line each.

#include <chrono>
#include <cstdio>
#include <string>

#include "tapecalc/checks.hpp"

namespace {

int failures = 0;

void report(int index, const char* name, const tapecalc::checks::CheckResult& r,
            double seconds) {
    if (!r.ok)
        ++failures;
    std::printf("%s  %2d %-28s (%.2fs)%s%s\n", r.ok ? "PASS" : "FAIL", index, name, seconds,
                r.ok ? "" : "  ", r.ok ? "" : r.detail.c_str());
}

template <typename F>
void criterion(int index, const char* name, F&& run) {
    const auto start = std::chrono::steady_clock::now();
    tapecalc::checks::CheckResult r;
    try {
        r = run();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(index, name, r, seconds);
}

} // namespace

int main() {
    using namespace tapecalc::checks;

    criterion(1, "worked-matrix-example", [] { return worked_matrix_example(); });
    criterion(2, "flip-tape-semantics", [] { return flip_tape_check(); });
    criterion(3, "andpor-kleisli-oracle", [] { return andpor_check(); });
    criterion(4, "pca-law-suite", [] {
        CheckResult r = pca_laws(1001, 1000);
        if (!r.ok)
            return r;
        return matrix_cancellativity(1002, 500);
    });
    criterion(5, "generator-law-suite", [] { return generator_laws(1003, 500); });
    criterion(6, "rig-isomorphism", [] {
        const auto  start = std::chrono::steady_clock::now();
        CheckResult r     = rig_tensor_iso(1004, 300);
        if (!r.ok)
            return r;
        if (std::chrono::steady_clock::now() - start > std::chrono::seconds(60))
            return CheckResult{false, "exceeded the 60 s budget"};
        return r;
    });
    criterion(7, "convex-universal-property", [] { return convex_universal(1005, 300); });
    criterion(8, "encoding-correctness", [] { return encode_correct(1006, 200); });
    criterion(9, "completeness-surrogate", [] { return completeness_surrogate(1007, 200); });
    criterion(10, "mux-axiom-soundness", [] { return mux_axiom(1008, 100); });
    criterion(11, "control-flow-contrast", [] { return control_contrast(1009, 20); });
    criterion(12, "column-roundtrip-bijection", [] { return roundtrip_bijection(1010, 100); });

    if (failures) {
        std::printf("%d criteria failed\n", failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
