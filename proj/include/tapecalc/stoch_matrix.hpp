#pragma once

#include <ostream>
#include <sstream>
#include <vector>

#include "tapecalc/plus_hom.hpp"

namespace tapecalc {

template <class B>
using ObjWord = std::vector<typename B::Object>;

template <class B>
std::string word_str(const ObjWord<B>& w) {
    if (w.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += "+";
        s += B::object_str(w[i]);
    }
    return s;
}

// Typed matrix of subdistributions over base arrows: the (j,i) entry lives
// over hom(dom[i], cod[j]) and every column has total mass <= 1. The 0xn and
// mx0 matrices are the unique maps to and from the empty word.
template <class B>
class StochMatrix {
public:
    using Object = typename B::Object;
    using Arrow  = typename B::Arrow;
    using Entry  = PlusHom<B>;

    StochMatrix(ObjWord<B> dom, ObjWord<B> cod, std::vector<Entry> entries)
        : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
        validate();
    }

    static StochMatrix identity(ObjWord<B> p) {
        const std::size_t  n = p.size();
        std::vector<Entry> e(n * n);
        for (std::size_t i = 0; i < n; ++i)
            e[i * n + i] = plus_identity<B>(p[i]);
        return StochMatrix(p, p, std::move(e));
    }

    static StochMatrix star(ObjWord<B> p, ObjWord<B> q) {
        std::vector<Entry> e(p.size() * q.size());
        return StochMatrix(std::move(p), std::move(q), std::move(e));
    }

    const ObjWord<B>& dom() const { return dom_; }
    const ObjWord<B>& cod() const { return cod_; }
    std::size_t       cols() const { return dom_.size(); }
    std::size_t       rows() const { return cod_.size(); }

    const Entry& entry(std::size_t row, std::size_t col) const {
        return entries_[row * cols() + col];
    }

    Rational column_mass(std::size_t col) const {
        Rational m(0);
        for (std::size_t j = 0; j < rows(); ++j)
            m += entry(j, col).mass();
        return m;
    }

    friend bool operator==(const StochMatrix& a, const StochMatrix& b) = default;

private:
    void validate() const {
        if (entries_.size() != rows() * cols())
            throw Error("StochMatrix: entry grid does not match type");
        for (std::size_t j = 0; j < rows(); ++j)
            for (std::size_t i = 0; i < cols(); ++i)
                for (const auto& [f, w] : entry(j, i).weights())
                    if (!(B::dom(f) == dom_[i]) || !(B::cod(f) == cod_[j]))
                        throw TypeError("StochMatrix: entry (" + std::to_string(j) + "," +
                                        std::to_string(i) + ") holds an arrow of the wrong type");
        for (std::size_t i = 0; i < cols(); ++i)
            if (column_mass(i) > Rational(1))
                throw MassError("StochMatrix: column " + std::to_string(i) + " has mass " +
                                column_mass(i).str() + " > 1");
    }

    ObjWord<B>         dom_;
    ObjWord<B>         cod_;
    std::vector<Entry> entries_;
};

template <class B>
StochMatrix<B> compose(const StochMatrix<B>& m, const StochMatrix<B>& n) {
    if (!(m.cod() == n.dom()))
        throw TypeError("matrix compose: cod " + word_str<B>(m.cod()) + " does not match dom " +
                        word_str<B>(n.dom()));
    std::vector<typename StochMatrix<B>::Entry> e(n.rows() * m.cols());
    for (std::size_t u = 0; u < n.rows(); ++u)
        for (std::size_t i = 0; i < m.cols(); ++i) {
            auto& cell = e[u * m.cols() + i];
            for (std::size_t j = 0; j < m.rows(); ++j) {
                const PlusHom<B> prod = plus_compose<B>(m.entry(j, i), n.entry(u, j));
                for (const auto& [h, w] : prod.weights())
                    cell.bump(h, w);
            }
        }
    return StochMatrix<B>(m.dom(), n.cod(), std::move(e));
}

template <class B>
StochMatrix<B> direct_sum(const StochMatrix<B>& m, const StochMatrix<B>& n) {
    ObjWord<B> dom = m.dom();
    dom.insert(dom.end(), n.dom().begin(), n.dom().end());
    ObjWord<B> cod = m.cod();
    cod.insert(cod.end(), n.cod().begin(), n.cod().end());
    std::vector<typename StochMatrix<B>::Entry> e(dom.size() * cod.size());
    for (std::size_t j = 0; j < m.rows(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            e[j * dom.size() + i] = m.entry(j, i);
    for (std::size_t j = 0; j < n.rows(); ++j)
        for (std::size_t i = 0; i < n.cols(); ++i)
            e[(m.rows() + j) * dom.size() + (m.cols() + i)] = n.entry(j, i);
    return StochMatrix<B>(std::move(dom), std::move(cod), std::move(e));
}

template <class B>
StochMatrix<B> swap_plus(const ObjWord<B>& p, const ObjWord<B>& q) {
    ObjWord<B> dom = p;
    dom.insert(dom.end(), q.begin(), q.end());
    ObjWord<B> cod = q;
    cod.insert(cod.end(), p.begin(), p.end());
    std::vector<typename StochMatrix<B>::Entry> e(dom.size() * cod.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        e[(q.size() + i) * dom.size() + i] = plus_identity<B>(p[i]);
    for (std::size_t i = 0; i < q.size(); ++i)
        e[i * dom.size() + (p.size() + i)] = plus_identity<B>(q[i]);
    return StochMatrix<B>(std::move(dom), std::move(cod), std::move(e));
}

// Generator matrices. For |P| = k the split is 2k x k, the merge k x 2k; the
// kill and initial maps have zero rows and zero columns respectively.
template <class B>
StochMatrix<B> gen_codiag(const ObjWord<B>& p) {
    ObjWord<B> dom = p;
    dom.insert(dom.end(), p.begin(), p.end());
    std::vector<typename StochMatrix<B>::Entry> e(dom.size() * p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        e[i * dom.size() + i]            = plus_identity<B>(p[i]);
        e[i * dom.size() + p.size() + i] = plus_identity<B>(p[i]);
    }
    return StochMatrix<B>(std::move(dom), p, std::move(e));
}

template <class B>
StochMatrix<B> gen_cobang(const ObjWord<B>& p) {
    return StochMatrix<B>(ObjWord<B>{}, p, {});
}

template <class B>
StochMatrix<B> gen_bang(const ObjWord<B>& p) {
    return StochMatrix<B>(p, ObjWord<B>{}, {});
}

template <class B>
StochMatrix<B> gen_diagp(const ObjWord<B>& p, const Rational& prob) {
    require_prob(prob, "gen_diagp");
    ObjWord<B> cod = p;
    cod.insert(cod.end(), p.begin(), p.end());
    std::vector<typename StochMatrix<B>::Entry> e(p.size() * cod.size());
    const Rational q = prob.one_minus();
    for (std::size_t i = 0; i < p.size(); ++i) {
        e[i * p.size() + i] = scale(plus_identity<B>(p[i]), prob);
        e[(p.size() + i) * p.size() + i] = scale(plus_identity<B>(p[i]), q);
    }
    return StochMatrix<B>(p, std::move(cod), std::move(e));
}

template <class B>
StochMatrix<B> scale(const StochMatrix<B>& m, const Rational& p) {
    require_prob(p, "matrix scale");
    std::vector<typename StochMatrix<B>::Entry> e;
    e.reserve(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.rows(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            e.push_back(scale(m.entry(j, i), p));
    return StochMatrix<B>(m.dom(), m.cod(), std::move(e));
}

template <class B>
StochMatrix<B> convex_sum(const StochMatrix<B>& m, const StochMatrix<B>& n, const Rational& p) {
    if (!(m.dom() == n.dom() && m.cod() == n.cod()))
        throw TypeError("matrix convex_sum: type mismatch");
    require_prob(p, "matrix convex_sum");
    std::vector<typename StochMatrix<B>::Entry> e;
    e.reserve(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.rows(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            e.push_back(convex_sum(m.entry(j, i), n.entry(j, i), p));
    return StochMatrix<B>(m.dom(), m.cod(), std::move(e));
}

// Kronecker product over the base tensor. Row and column index pairs are
// ordered left-major, matching the polynomial product P (x) Q = (+)_i (+)_j U_i V_j.
template <class B>
    requires(B::has_tensor)
StochMatrix<B> tensor(const StochMatrix<B>& m, const StochMatrix<B>& n) {
    ObjWord<B> dom;
    for (const auto& u : m.dom())
        for (const auto& v : n.dom())
            dom.push_back(B::tensor_obj(u, v));
    ObjWord<B> cod;
    for (const auto& u : m.cod())
        for (const auto& v : n.cod())
            cod.push_back(B::tensor_obj(u, v));
    std::vector<typename StochMatrix<B>::Entry> e(dom.size() * cod.size());
    for (std::size_t i2 = 0; i2 < m.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < n.rows(); ++j2)
            for (std::size_t i1 = 0; i1 < m.cols(); ++i1)
                for (std::size_t j1 = 0; j1 < n.cols(); ++j1)
                    e[(i2 * n.rows() + j2) * dom.size() + (i1 * n.cols() + j1)] =
                        plus_tensor<B>(m.entry(i2, i1), n.entry(j2, j1));
    return StochMatrix<B>(std::move(dom), std::move(cod), std::move(e));
}

// Pushforward along a base functor; weights of arrows with equal image merge.
template <class C, class B, typename FObj, typename FArr>
StochMatrix<C> map_base(const StochMatrix<B>& m, FObj&& fobj, FArr&& farr) {
    ObjWord<C> dom;
    for (const auto& u : m.dom())
        dom.push_back(fobj(u));
    ObjWord<C> cod;
    for (const auto& u : m.cod())
        cod.push_back(fobj(u));
    std::vector<typename StochMatrix<C>::Entry> e;
    e.reserve(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.rows(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            e.push_back(pushforward<typename C::Arrow, typename C::ArrowLess>(m.entry(j, i),
                                                                              farr));
    return StochMatrix<C>(std::move(dom), std::move(cod), std::move(e));
}

template <class B>
std::string entry_str(const PlusHom<B>& d) {
    if (d.is_null())
        return "0";
    std::string s;
    bool        first = true;
    for (const auto& [f, w] : d.weights()) {
        if (!first)
            s += " + ";
        first = false;
        s += w.str() + "·" + B::arrow_str(f);
    }
    return s;
}

// Byte length minus the extra UTF-8 byte of each dot separator.
template <class B>
std::size_t entry_display_width(const std::string& s) {
    std::size_t w = s.size();
    for (char c : s)
        if (static_cast<unsigned char>(c) == 0xc2)
            --w;
    return w;
}

template <class B>
std::ostream& operator<<(std::ostream& os, const StochMatrix<B>& m) {
    os << word_str<B>(m.dom()) << " -> " << word_str<B>(m.cod()) << "\n";
    std::vector<std::size_t> widths(m.cols(), 1);
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j)
            widths[i] =
                std::max(widths[i], entry_display_width<B>(entry_str<B>(m.entry(j, i))));
    for (std::size_t j = 0; j < m.rows(); ++j) {
        os << "( ";
        for (std::size_t i = 0; i < m.cols(); ++i) {
            std::string s = entry_str<B>(m.entry(j, i));
            os << s << std::string(widths[i] - entry_display_width<B>(s), ' ')
               << (i + 1 < m.cols() ? " , " : "");
        }
        os << " )\n";
    }
    return os;
}

} // namespace tapecalc
