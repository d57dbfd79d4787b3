#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "tapecalc/rational.hpp"

namespace tapecalc {

// Finitely supported subdistribution: a map from keys to strictly positive
// rationals with total mass <= 1. Zero weights are never stored, so equality
// is plain map equality.
template <typename K, typename Cmp = std::less<K>>
class Subdist {
public:
    using Map = std::map<K, Rational, Cmp>;

    Subdist() = default;

    static Subdist dirac(K k) {
        Subdist d;
        d.weights_.emplace(std::move(k), Rational(1));
        return d;
    }

    static Subdist null() { return Subdist(); }

    // Accumulates weights, drops zeros, checks positivity and the mass bound.
    static Subdist make(std::initializer_list<std::pair<K, Rational>> entries) {
        Subdist d;
        for (const auto& [k, w] : entries)
            d.bump(k, w);
        d.check_mass();
        return d;
    }

    const Map& weights() const { return weights_; }

    Rational weight(const K& k) const {
        auto it = weights_.find(k);
        return it == weights_.end() ? Rational(0) : it->second;
    }

    Rational mass() const {
        Rational m(0);
        for (const auto& [k, w] : weights_)
            m += w;
        return m;
    }

    std::vector<K> support() const {
        std::vector<K> ks;
        ks.reserve(weights_.size());
        for (const auto& [k, w] : weights_)
            ks.push_back(k);
        return ks;
    }

    bool is_null() const { return weights_.empty(); }
    bool is_dirac() const { return weights_.size() == 1 && weights_.begin()->second.is_one(); }

    // Keys compare by the map's ordering, so equality is equivalence under
    // Cmp rather than the key type's operator==.
    friend bool operator==(const Subdist& a, const Subdist& b) {
        if (a.weights_.size() != b.weights_.size())
            return false;
        Cmp  less;
        auto ita = a.weights_.begin();
        auto itb = b.weights_.begin();
        for (; ita != a.weights_.end(); ++ita, ++itb) {
            if (less(ita->first, itb->first) || less(itb->first, ita->first) ||
                ita->second != itb->second)
                return false;
        }
        return true;
    }

    // Adds w to the weight of k; negative results are rejected, zero results
    // are erased. Mass bound is the caller's responsibility.
    void bump(const K& k, const Rational& w) {
        if (w.is_zero())
            return;
        auto [it, fresh] = weights_.emplace(k, w);
        if (!fresh) {
            it->second += w;
            if (it->second.is_zero()) {
                weights_.erase(it);
                return;
            }
        }
        if (it->second < Rational(0)) {
            weights_.erase(it);
            throw MassError("Subdist: negative weight");
        }
    }

    void check_mass() const {
        if (mass() > Rational(1))
            throw MassError("Subdist: total mass exceeds 1");
    }

private:
    Map weights_;
};

template <typename K, typename Cmp>
Subdist<K, Cmp> convex_sum(const Subdist<K, Cmp>& d1, const Subdist<K, Cmp>& d2,
                           const Rational& p) {
    require_prob(p, "convex_sum");
    Subdist<K, Cmp> out;
    const Rational q = p.one_minus();
    for (const auto& [k, w] : d1.weights())
        out.bump(k, p * w);
    for (const auto& [k, w] : d2.weights())
        out.bump(k, q * w);
    return out;
}

template <typename K, typename Cmp>
Subdist<K, Cmp> scale(const Subdist<K, Cmp>& d, const Rational& p) {
    require_prob(p, "scale");
    Subdist<K, Cmp> out;
    for (const auto& [k, w] : d.weights())
        out.bump(k, p * w);
    return out;
}

// Pointwise weighted sum with total coefficient mass <= 1.
template <typename K, typename Cmp>
Subdist<K, Cmp> nary_sum(const std::vector<std::pair<Rational, Subdist<K, Cmp>>>& terms) {
    Rational total(0);
    for (const auto& [p, d] : terms) {
        require_prob(p, "nary_sum");
        total += p;
    }
    if (total > Rational(1))
        throw MassError("nary_sum: coefficients sum to " + total.str() + " > 1");
    Subdist<K, Cmp> out;
    for (const auto& [p, d] : terms)
        for (const auto& [k, w] : d.weights())
            out.bump(k, p * w);
    return out;
}

// Pointwise sum; only legal where the combined mass stays below 1.
template <typename K, typename Cmp>
Subdist<K, Cmp> add(const Subdist<K, Cmp>& d1, const Subdist<K, Cmp>& d2) {
    Subdist<K, Cmp> out = d1;
    for (const auto& [k, w] : d2.weights())
        out.bump(k, w);
    out.check_mass();
    return out;
}

// Pushforward along f; weights of keys with equal image are summed.
template <typename K2, typename C2 = std::less<K2>, typename K, typename Cmp, typename F>
Subdist<K2, C2> pushforward(const Subdist<K, Cmp>& d, F&& f) {
    Subdist<K2, C2> out;
    for (const auto& [k, w] : d.weights())
        out.bump(f(k), w);
    return out;
}

// Pushforward of the product distribution along a binary map.
template <typename K2, typename C2 = std::less<K2>, typename K, typename Cmp, typename F>
Subdist<K2, C2> pushforward_pairs(const Subdist<K, Cmp>& d1, const Subdist<K, Cmp>& d2, F&& f) {
    Subdist<K2, C2> out;
    for (const auto& [k1, w1] : d1.weights())
        for (const auto& [k2, w2] : d2.weights())
            out.bump(f(k1, k2), w1 * w2);
    return out;
}

template <typename K, typename Cmp>
    requires requires(std::ostream& os, const K& k) { os << k; }
std::ostream& operator<<(std::ostream& os, const Subdist<K, Cmp>& d) {
    if (d.is_null())
        return os << "{}";
    os << "{";
    bool first = true;
    for (const auto& [k, w] : d.weights()) {
        if (!first)
            os << ", ";
        first = false;
        os << k << ": " << w;
    }
    return os << "}";
}

} // namespace tapecalc
