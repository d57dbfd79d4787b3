#include "tapecalc/kleisli.hpp"

#include <sstream>

namespace tapecalc {

KleisliMap::KleisliMap(Poly d, Poly c, std::map<Elem, Dist> t)
    : dom(std::move(d)), cod(std::move(c)), table(std::move(t)) {
    for (const auto& x : elements(dom))
        if (!table.count(x))
            throw Error("KleisliMap: missing input element " + elem_str(dom, x));
    if (table.size() != elements(dom).size())
        throw Error("KleisliMap: spurious input elements");
    for (const auto& [x, d2] : table)
        for (const auto& [y, w] : d2.weights())
            if (y.first >= cod.size() || (cod[y.first] < 64 && y.second >> cod[y.first]))
                throw Error("KleisliMap: output element out of range");
}

std::vector<KleisliMap::Elem> KleisliMap::elements(const Poly& p) {
    std::vector<Elem> es;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << p[i]); ++b)
            es.emplace_back(i, b);
    return es;
}

KleisliMap KleisliMap::identity(Poly p) {
    std::map<Elem, Dist> t;
    for (const auto& x : elements(p))
        t.emplace(x, Dist::dirac(x));
    return KleisliMap(p, p, std::move(t));
}

const KleisliMap::Dist& KleisliMap::at(const Elem& x) const {
    auto it = table.find(x);
    if (it == table.end())
        throw Error("KleisliMap: no such input element");
    return it->second;
}

std::string elem_str(const KleisliMap::Poly& p, const KleisliMap::Elem& x) {
    std::string s = p.size() > 1 ? std::to_string(x.first) + ":" : "";
    if (p[x.first] == 0)
        return s.empty() ? "()" : s + "()";
    return s + bits_string(x.second, p[x.first]);
}

std::string dist_str(const KleisliMap::Poly& cod, const KleisliMap::Dist& d) {
    if (d.is_null())
        return "{}";
    // Descending key order reads naturally for single bits: {1: p, 0: 1-p}.
    std::string s = "{";
    const auto& w = d.weights();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it != w.rbegin())
            s += ", ";
        s += elem_str(cod, it->first) + ": " + it->second.str();
    }
    return s + "}";
}

std::ostream& operator<<(std::ostream& os, const KleisliMap& f) {
    for (const auto& [x, d] : f.table)
        os << elem_str(f.dom, x) << " -> " << dist_str(f.cod, d) << "\n";
    return os;
}

KleisliMap kleisli_compose(const KleisliMap& f, const KleisliMap& g) {
    if (f.cod != g.dom)
        throw TypeError("kleisli_compose: type mismatch");
    std::map<KleisliMap::Elem, KleisliMap::Dist> t;
    for (const auto& [x, dx] : f.table) {
        KleisliMap::Dist out;
        for (const auto& [y, w] : dx.weights())
            for (const auto& [z, v] : g.at(y).weights())
                out.bump(z, w * v);
        t.emplace(x, std::move(out));
    }
    return KleisliMap(f.dom, g.cod, std::move(t));
}

namespace {

KleisliMap::Poly poly_product(const KleisliMap::Poly& p, const KleisliMap::Poly& q) {
    KleisliMap::Poly out;
    for (std::size_t n : p)
        for (std::size_t m : q)
            out.push_back(n + m);
    return out;
}

KleisliMap::Elem pair_elem(const KleisliMap::Poly& p, const KleisliMap::Poly& q,
                           const KleisliMap::Elem& x, const KleisliMap::Elem& y) {
    return {x.first * q.size() + y.first, x.second | (y.second << p[x.first])};
}

} // namespace

KleisliMap kleisli_tensor(const KleisliMap& f, const KleisliMap& g) {
    std::map<KleisliMap::Elem, KleisliMap::Dist> t;
    for (const auto& [x1, d1] : f.table)
        for (const auto& [x2, d2] : g.table) {
            KleisliMap::Dist out;
            for (const auto& [y1, w1] : d1.weights())
                for (const auto& [y2, w2] : d2.weights())
                    out.bump(pair_elem(f.cod, g.cod, y1, y2), w1 * w2);
            t.emplace(pair_elem(f.dom, g.dom, x1, x2), std::move(out));
        }
    return KleisliMap(poly_product(f.dom, g.dom), poly_product(f.cod, g.cod), std::move(t));
}

KleisliMap kleisli_oplus(const KleisliMap& f, const KleisliMap& g) {
    KleisliMap::Poly dom = f.dom;
    dom.insert(dom.end(), g.dom.begin(), g.dom.end());
    KleisliMap::Poly cod = f.cod;
    cod.insert(cod.end(), g.cod.begin(), g.cod.end());
    std::map<KleisliMap::Elem, KleisliMap::Dist> t;
    for (const auto& [x, d] : f.table)
        t.emplace(x, d);
    for (const auto& [x, d] : g.table) {
        KleisliMap::Dist out;
        for (const auto& [y, w] : d.weights())
            out.bump({y.first + f.cod.size(), y.second}, w);
        t.emplace(KleisliMap::Elem{x.first + f.dom.size(), x.second}, std::move(out));
    }
    return KleisliMap(std::move(dom), std::move(cod), std::move(t));
}

KleisliMap to_kleisli(const StochMatrix<Set2Base>& m) {
    std::map<KleisliMap::Elem, KleisliMap::Dist> t;
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << m.dom()[i]); ++b) {
            KleisliMap::Dist out;
            for (std::size_t j = 0; j < m.rows(); ++j)
                for (const auto& [f, w] : m.entry(j, i).weights())
                    out.bump({j, f(b)}, w);
            t.emplace(KleisliMap::Elem{i, b}, std::move(out));
        }
    return KleisliMap(m.dom(), m.cod(), std::move(t));
}

} // namespace tapecalc
