#pragma once

#include <map>
#include <variant>

#include "conecert/fischer.hpp"

namespace conecert {

// A = zb_2 d/dzb_1 + z_1 d/dz_2 (bidegree preserving, nilpotent);
// B = d^2 / dzb_1 dz_2 (maps (p,q) -> (p-1,q-1)). Both need n >= 2.
BiPoly apply_A(const BiPoly& poly);
BiPoly apply_B(const BiPoly& poly);

struct OperatorMatrix {
    MonomialBasis domain;
    MonomialBasis codomain;
    ExactMatrix entries;  // codomain.dim x domain.dim, column j = op(domain[j])

    BiPoly apply(const BiPoly& poly) const;
};

struct OpA {};
struct OpB {};
struct OpLaplacian {};
struct OpMultH { ExactComplex a; int s = 1; };        // Q -> H^s Q
struct OpDeltaMultH { ExactComplex a; int s = 1; };   // Q -> Delta(H^s Q)
struct OpEigenShift { ExactComplex a; };              // a A + (n+p+q) I
using OperatorKind = std::variant<OpA, OpB, OpLaplacian, OpMultH, OpDeltaMultH, OpEigenShift>;

// Exact matrix of the operator on P_{p,q} over graded-lex monomial bases.
OperatorMatrix operator_matrix(int n, int p, int q, const OperatorKind& kind);

// Delta(HQ) - 4(a A Q + (n+p+q) Q) for harmonic bihomogeneous Q; identically
// zero, so Delta(HQ) = 0 is equivalent to the eigen-equation
// a A Q + (n+p+q) Q = 0.
BiPoly eigen_residual(const BiPoly& q_harmonic, const ExactComplex& a);

// Rotation sigma_theta = diag(e^{i theta/2}, e^{-i theta/2}, I_{n-2}).
//
// P(sigma_theta z) = sum_m e^{i m theta / 2} * parts[m] with the integer
// grading m = (alpha_1 - beta_1) - (alpha_2 - beta_2); exact for every theta
// and invariant under Delta term by term.
std::map<int, BiPoly> sigma_phase_parts(const BiPoly& poly);

// Exact rotated polynomial for theta = t * pi. Each term needs its phase
// e^{i pi t m / 2} to land in Z[i], i.e. t*m integral; otherwise throws and
// the caller should use sigma_phase_parts or the numeric evaluation.
BiPoly sigma_rotate(const BiPoly& poly, const Rational& t_pi);

// P(sigma_theta z) evaluated numerically at arbitrary theta.
std::complex<double> sigma_rotate_evaluate(const BiPoly& poly, double theta,
                                           std::span<const std::complex<double>> z);

}  // namespace conecert
