#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "tapecalc/errors.hpp"

namespace tapecalc {

// Total function 2^n -> 2^m as an explicit truth table. Inputs are indexed
// in binary with bit 0 = top wire; outputs use the same convention. The
// ordering is part of the serialization contract.
struct FnTable {
    std::size_t                n = 0;
    std::size_t                m = 0;
    std::vector<std::uint64_t> table; // size 1<<n, entries < 1<<m

    FnTable() { table.assign(1, 0); }

    FnTable(std::size_t n, std::size_t m, std::vector<std::uint64_t> t)
        : n(n), m(m), table(std::move(t)) {
        validate();
    }

    static constexpr std::size_t kMaxWidth = 24;

    static FnTable identity(std::size_t n) {
        check_width(n);
        std::vector<std::uint64_t> t(std::size_t{1} << n);
        for (std::size_t i = 0; i < t.size(); ++i)
            t[i] = i;
        return FnTable(n, n, std::move(t));
    }

    // Block swap (u, v) -> (v, u) with u the low a bits.
    static FnTable symmetry(std::size_t a, std::size_t b) {
        check_width(a + b);
        std::vector<std::uint64_t> t(std::size_t{1} << (a + b));
        for (std::uint64_t i = 0; i < t.size(); ++i) {
            std::uint64_t u = i & ((std::uint64_t{1} << a) - 1);
            std::uint64_t v = i >> a;
            t[i]            = v | (u << b);
        }
        return FnTable(a + b, a + b, std::move(t));
    }

    static FnTable constant(std::size_t m, std::uint64_t bits) {
        return FnTable(0, m, {bits});
    }

    std::uint64_t operator()(std::uint64_t in) const { return table[in]; }

    std::size_t inputs() const { return table.size(); }

    friend bool operator==(const FnTable& a, const FnTable& b) = default;
    friend auto operator<=>(const FnTable& a, const FnTable& b) = default;

    void validate() const {
        check_width(n);
        check_width(m);
        if (table.size() != (std::size_t{1} << n))
            throw Error("FnTable: table size does not match input width");
        for (std::uint64_t out : table)
            if (m < 64 && out >> m)
                throw Error("FnTable: output exceeds output width");
    }

    static void check_width(std::size_t w) {
        if (w > kMaxWidth)
            throw Error("FnTable: width " + std::to_string(w) + " too large");
    }
};

inline FnTable compose(const FnTable& f, const FnTable& g) {
    if (f.m != g.n)
        throw TypeError("FnTable compose: widths " + std::to_string(f.m) + " vs " +
                        std::to_string(g.n));
    std::vector<std::uint64_t> t(f.table.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = g.table[f.table[i]];
    return FnTable(f.n, g.m, std::move(t));
}

// Componentwise pairing; f acts on the low input/output bits.
inline FnTable tensor(const FnTable& f, const FnTable& g) {
    FnTable::check_width(f.n + g.n);
    FnTable::check_width(f.m + g.m);
    std::vector<std::uint64_t> t(std::size_t{1} << (f.n + g.n));
    for (std::uint64_t i = 0; i < t.size(); ++i) {
        std::uint64_t lo = i & ((std::uint64_t{1} << f.n) - 1);
        std::uint64_t hi = i >> f.n;
        t[i]             = f.table[lo] | (g.table[hi] << f.m);
    }
    return FnTable(f.n + g.n, f.m + g.m, std::move(t));
}

// All tables 2^n -> 2^m, exactly once. Count is (2^m)^(2^n).
std::vector<FnTable> enumerate_tables(std::size_t n, std::size_t m);

// Output bits as a string, position 0 = top wire.
std::string bits_string(std::uint64_t bits, std::size_t width);
std::uint64_t parse_bits(const std::string& s);

std::ostream& operator<<(std::ostream& os, const FnTable& t);

// The Boolean base: objects are bit widths n standing for 2^n, arrows are
// function tables. Circuits over the Boolean signature compare by the table
// they denote, so this base is the semantic quotient of those circuits.
struct Set2Base {
    using Object    = std::size_t;
    using Arrow     = FnTable;
    using ArrowLess = std::less<FnTable>;

    static constexpr bool has_tensor       = true;
    static constexpr bool decidable_eq     = true;
    static constexpr bool finite_homs      = true;

    static Object dom(const Arrow& f) { return f.n; }
    static Object cod(const Arrow& f) { return f.m; }

    static Arrow identity(Object n) { return FnTable::identity(n); }
    static Arrow compose(const Arrow& f, const Arrow& g) { return tapecalc::compose(f, g); }

    static Object unit() { return 0; }
    static Object tensor_obj(Object a, Object b) { return a + b; }
    static Arrow  tensor(const Arrow& f, const Arrow& g) { return tapecalc::tensor(f, g); }
    static Arrow  symmetry(Object a, Object b) { return FnTable::symmetry(a, b); }

    static std::vector<Arrow> hom(Object n, Object m) { return enumerate_tables(n, m); }

    static std::string object_str(Object n);
    static std::string arrow_str(const Arrow& f);
};

} // namespace tapecalc
