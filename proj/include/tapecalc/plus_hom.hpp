#pragma once

#include "tapecalc/subdist.hpp"

namespace tapecalc {

// Hom-sets of the free PCA-enrichment over a base: subdistributions of base
// arrows between fixed endpoints.
template <class B>
using PlusHom = Subdist<typename B::Arrow, typename B::ArrowLess>;

template <class B>
PlusHom<B> plus_identity(const typename B::Object& u) {
    return PlusHom<B>::dirac(B::identity(u));
}

// Pushforward of the product distribution along base composition; the mass
// of the result is the product of the masses.
template <class B>
PlusHom<B> plus_compose(const PlusHom<B>& d1, const PlusHom<B>& d2) {
    return pushforward_pairs<typename B::Arrow, typename B::ArrowLess>(
        d1, d2, [](const auto& f, const auto& g) { return B::compose(f, g); });
}

template <class B>
    requires(B::has_tensor)
PlusHom<B> plus_tensor(const PlusHom<B>& d1, const PlusHom<B>& d2) {
    return pushforward_pairs<typename B::Arrow, typename B::ArrowLess>(
        d1, d2, [](const auto& f, const auto& g) { return B::tensor(f, g); });
}

} // namespace tapecalc
