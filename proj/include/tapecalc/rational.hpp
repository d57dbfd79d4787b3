#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "tapecalc/errors.hpp"

namespace tapecalc {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. All arithmetic is exact.
class Rational {
public:
    Rational() : value_(0) {}

    Rational(long num, long den) : value_(num, den) {
        if (den == 0)
            throw Error("Rational: zero denominator");
        value_.canonicalize();
    }

    explicit Rational(long num) : value_(num) {}

    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    // Accepts "num/den", "num" and optional leading '-'.
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty())
            throw Error("Rational: empty string");
        std::size_t slash = s.find('/');
        if (slash != std::string::npos) {
            std::string den = s.substr(slash + 1);
            if (den.empty() || den.find_first_not_of("0123456789") != std::string::npos)
                throw Error("Rational: bad denominator in '" + s + "'");
            if (den.find_first_not_of('0') == std::string::npos)
                throw Error("Rational: zero denominator in '" + s + "'");
        }
        std::size_t body = (s[0] == '-') ? 1 : 0;
        if (body == s.size() || s.find_first_not_of("0123456789/", body) != std::string::npos ||
            s.find('/', body) != slash)
            throw Error("Rational: malformed number '" + s + "'");
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw Error("Rational: malformed number '" + s + "'");
        v.canonicalize();
        return Rational(std::move(v));
    }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    // Probability range check, 0 <= v <= 1.
    bool is_prob() const { return sgn(value_) >= 0 && value_ <= 1; }
    bool is_prob_open() const { return sgn(value_) > 0 && value_ < 1; }

    Rational one_minus() const { return Rational(mpq_class(1 - value_)); }

    std::string num_str() const { return value_.get_num().get_str(); }
    std::string den_str() const { return value_.get_den().get_str(); }

    // "num/den" in lowest terms; integers print without the denominator.
    std::string str() const { return value_.get_str(); }

    double approx() const { return value_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ + b.value_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ - b.value_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ * b.value_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw Error("Rational: division by zero");
        return Rational(mpq_class(a.value_ / b.value_));
    }
    Rational& operator+=(const Rational& o) {
        value_ += o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        value_ *= o.value_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_;
};

inline Rational rat(long num, long den) { return Rational(num, den); }

// Throws unless p lies in [0,1].
inline void require_prob(const Rational& p, const char* what) {
    if (!p.is_prob())
        throw MassError(std::string(what) + ": probability " + p.str() + " outside [0,1]");
}

} // namespace tapecalc
