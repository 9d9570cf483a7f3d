#include "conecert/monomial_basis.hpp"

#include <sstream>

namespace conecert {

MonomialBasis::MonomialBasis(int n, int p, int q) : n_(n), p_(p), q_(q) {
    if (n < 1) throw std::invalid_argument("MonomialBasis: n must be >= 1");
    if (p < 0 || q < 0) {
        // P_{p,q} with a negative grade is the zero space; keep an empty basis.
        return;
    }
    const auto alphas = multi_indices_of_degree(n, p);
    const auto betas = multi_indices_of_degree(n, q);
    keys_.reserve(alphas.size() * betas.size());
    for (const auto& a : alphas)
        for (const auto& b : betas) keys_.push_back(TermKey{a, b});
    for (int j = 0; j < dim(); ++j) index_.emplace(keys_[static_cast<std::size_t>(j)], j);
}

BiPoly MonomialBasis::monomial(int j) const {
    const TermKey& k = key(j);
    return BiPoly::monomial(n_, k.alpha, k.beta, ExactComplex(1));
}

int MonomialBasis::index_of(const TermKey& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
}

ExactVector MonomialBasis::coordinates(const BiPoly& poly) const {
    if (poly.n() != n_)
        throw std::invalid_argument("MonomialBasis::coordinates: dimension mismatch");
    ExactVector v = ExactVector::Constant(dim(), ExactComplex(0));
    for (const auto& [key, c] : poly.terms()) {
        const int j = index_of(key);
        if (j < 0) {
            std::ostringstream msg;
            msg << "MonomialBasis::coordinates: polynomial has a term outside P_{" << p_ << ","
                << q_ << "}";
            throw std::invalid_argument(msg.str());
        }
        v(j) = c;
    }
    return v;
}

BiPoly MonomialBasis::from_coordinates(const ExactVector& coords) const {
    if (coords.size() != dim())
        throw std::invalid_argument("MonomialBasis::from_coordinates: size mismatch");
    BiPoly::TermMap terms;
    for (int j = 0; j < dim(); ++j)
        if (!coords(j).is_zero()) terms.emplace(key(j), coords(j));
    return BiPoly(n_, std::move(terms));
}

long bigraded_dim(int n, int p, int q) {
    if (p < 0 || q < 0) return 0;
    auto choose = [](int top, int k) {
        long acc = 1;
        for (int i = 1; i <= k; ++i) acc = acc * (top - k + i) / i;
        return acc;
    };
    return choose(p + n - 1, n - 1) * choose(q + n - 1, n - 1);
}

}  // namespace conecert
