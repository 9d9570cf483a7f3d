#pragma once

#include "conecert/exact_linalg.hpp"
#include "conecert/monomial_basis.hpp"

namespace conecert {

// Fischer pairing on P_{p,q}: <z^a zb^b, z^c zb^d> = a! b! when the monomials
// match, else 0. Sesquilinear, conjugate-linear in the second slot, positive
// definite. (The paper's literal R(d)Sbar formula is degenerate off the
// diagonal p = q; this is the standard Bargmann-Fischer convention.)
ExactComplex fischer_inner(const BiPoly& r, const BiPoly& s);

struct HarmonicBasis {
    MonomialBasis domain;      // P_{p,q}
    MonomialBasis codomain;    // P_{p-1,q-1}
    ExactMatrix laplacian;     // codomain.dim x domain.dim
    ExactMatrix kernel;        // domain.dim x dim, canonical echelon basis
    std::vector<BiPoly> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

// Exact kernel of Delta: P_{p,q} -> P_{p-1,q-1}.
HarmonicBasis harmonic_basis(int n, int p, int q);

struct HarmonicDecomposition {
    int p = 0, q = 0;
    // components[j] in H_{p-j, q-j}; source = sum_j |z|^{2j} components[j].
    std::vector<BiPoly> components;
};

// Unique Fischer decomposition of a bihomogeneous polynomial, computed by one
// exact solve of P = sum_j |z|^{2j} P_j with P_j constrained to ker Delta.
HarmonicDecomposition fischer_decompose(const BiPoly& poly,
                                        PivotRule rule = PivotRule::MaxNumeratorBits);

// Batch decomposer for a fixed (n, p, q): inverts the square lift matrix once
// and decomposes each input by a single exact mat-vec.
class FischerDecomposer {
public:
    FischerDecomposer(int n, int p, int q, PivotRule rule = PivotRule::MaxNumeratorBits);
    HarmonicDecomposition decompose(const BiPoly& poly) const;

private:
    int n_, p_, q_;
    MonomialBasis target_;
    std::vector<HarmonicBasis> spaces_;
    std::vector<int> offsets_;
    ExactMatrix inverse_;
};

BiPoly recompose(const HarmonicDecomposition& dec, int n);

// Gram matrix of a set of polynomials under fischer_inner (diagnostics).
ExactMatrix fischer_gram(const std::vector<BiPoly>& polys);

}  // namespace conecert
