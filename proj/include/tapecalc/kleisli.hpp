#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "tapecalc/fn_table.hpp"
#include "tapecalc/stoch_matrix.hpp"
#include "tapecalc/subdist.hpp"

namespace tapecalc {

// Arrow of the Kleisli category of subdistributions between polynomials of
// Boolean widths. Elements of a polynomial (+)_i 2^(n_i) are tagged bit
// vectors (i, b); every input element is present in the table.
struct KleisliMap {
    using Poly = std::vector<std::size_t>;
    using Elem = std::pair<std::size_t, std::uint64_t>;
    using Dist = Subdist<Elem>;

    Poly                 dom;
    Poly                 cod;
    std::map<Elem, Dist> table;

    KleisliMap() = default;
    KleisliMap(Poly dom, Poly cod, std::map<Elem, Dist> table);

    static std::vector<Elem> elements(const Poly& p);
    static KleisliMap        identity(Poly p);

    const Dist& at(const Elem& x) const;

    friend bool operator==(const KleisliMap& a, const KleisliMap& b) = default;
};

std::string elem_str(const KleisliMap::Poly& p, const KleisliMap::Elem& x);
std::string dist_str(const KleisliMap::Poly& cod, const KleisliMap::Dist& d);
std::ostream& operator<<(std::ostream& os, const KleisliMap& f);

// Composition sums over the middle variable.
KleisliMap kleisli_compose(const KleisliMap& f, const KleisliMap& g);

// Monoidal product; runs the two maps independently. Polynomial products are
// ordered left-major and paired bits put f's wires in the low positions.
KleisliMap kleisli_tensor(const KleisliMap& f, const KleisliMap& g);

// Coproduct; a left-tagged input ignores g and vice versa.
KleisliMap kleisli_oplus(const KleisliMap& f, const KleisliMap& g);

// Semantics of a Boolean-base matrix: column i and input b of width n_i map
// to the subdistribution giving (j, b') the total weight of tables f in
// entry (j,i) with f(b) = b'.
KleisliMap to_kleisli(const StochMatrix<Set2Base>& m);

} // namespace tapecalc
