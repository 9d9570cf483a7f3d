#pragma once

#include <map>

#include "conecert/bipoly.hpp"
#include "conecert/eigen_support.hpp"

namespace conecert {

// Ordered monomial basis of P_{p,q} on C^n: all (alpha, beta) with
// |alpha| = p, |beta| = q, alpha major, decreasing lex in each index.
class MonomialBasis {
public:
    MonomialBasis(int n, int p, int q);

    int n() const { return n_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int dim() const { return static_cast<int>(keys_.size()); }
    const std::vector<TermKey>& keys() const { return keys_; }
    const TermKey& key(int j) const { return keys_[static_cast<std::size_t>(j)]; }
    BiPoly monomial(int j) const;

    int index_of(const TermKey& key) const;  // -1 when absent

    // Coordinates of a bihomogeneous polynomial of bidegree (p,q).
    ExactVector coordinates(const BiPoly& poly) const;
    BiPoly from_coordinates(const ExactVector& coords) const;

private:
    int n_, p_, q_;
    std::vector<TermKey> keys_;
    std::map<TermKey, int, TermOrder> index_;
};

// dim P_{p,q} = C(p+n-1, n-1) * C(q+n-1, n-1).
long bigraded_dim(int n, int p, int q);

}  // namespace conecert
