#pragma once

#include <compare>
#include <string>

#include "tapecalc/errors.hpp"

namespace tapecalc {

// The one-object category of words over an alphabet; composition is
// concatenation and the identity is the empty word. Not monoidal as a base
// and its hom-sets are infinite.
struct FreeMonoidBase {
    struct Object {
        friend bool operator==(const Object&, const Object&) = default;
        friend auto operator<=>(const Object&, const Object&) = default;
    };
    using Arrow     = std::string;
    using ArrowLess = std::less<std::string>;

    static constexpr bool has_tensor   = false;
    static constexpr bool decidable_eq = true;
    static constexpr bool finite_homs  = false;

    static Object dom(const Arrow&) { return {}; }
    static Object cod(const Arrow&) { return {}; }

    static Arrow identity(Object) { return ""; }
    static Arrow compose(const Arrow& f, const Arrow& g) { return f + g; }

    [[noreturn]] static std::vector<Arrow> hom(Object, Object) {
        throw UnsupportedError("FreeMonoidBase: hom-sets are infinite");
    }

    static std::string object_str(Object) { return "*"; }
    static std::string arrow_str(const Arrow& w) { return w.empty() ? "id" : w; }
};

} // namespace tapecalc
