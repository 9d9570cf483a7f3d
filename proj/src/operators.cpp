#include "conecert/operators.hpp"

#include <sstream>

namespace conecert {

namespace {

void require_n2(const BiPoly& poly, const char* what) {
    if (poly.n() < 2) {
        std::ostringstream msg;
        msg << what << ": requires n >= 2, got n=" << poly.n();
        throw std::invalid_argument(msg.str());
    }
}

// i^k as an exact Gaussian rational.
ExactComplex i_power(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return ExactComplex(1);
        case 1: return ExactComplex::i_unit();
        case 2: return ExactComplex(-1);
        default: return -ExactComplex::i_unit();
    }
}

}  // namespace

BiPoly apply_A(const BiPoly& poly) {
    require_n2(poly, "apply_A");
    const int n = poly.n();
    return BiPoly::variable_bar(n, 1) * poly.differentiate(0, Wirtinger::Antiholomorphic) +
           BiPoly::variable(n, 0) * poly.differentiate(1, Wirtinger::Holomorphic);
}

BiPoly apply_B(const BiPoly& poly) {
    require_n2(poly, "apply_B");
    return poly.differentiate(0, Wirtinger::Antiholomorphic)
        .differentiate(1, Wirtinger::Holomorphic);
}

BiPoly OperatorMatrix::apply(const BiPoly& poly) const {
    return codomain.from_coordinates(entries * domain.coordinates(poly));
}

OperatorMatrix operator_matrix(int n, int p, int q, const OperatorKind& kind) {
    if (n < 2) throw std::invalid_argument("operator_matrix: requires n >= 2");
    struct Spec {
        int cp, cq;                              // codomain bidegree
        std::function<BiPoly(const BiPoly&)> op;
    };
    const Spec spec = std::visit(
        [&](const auto& k) -> Spec {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, OpA>) {
                return {p, q, [](const BiPoly& x) { return apply_A(x); }};
            } else if constexpr (std::is_same_v<T, OpB>) {
                return {p - 1, q - 1, [](const BiPoly& x) { return apply_B(x); }};
            } else if constexpr (std::is_same_v<T, OpLaplacian>) {
                return {p - 1, q - 1, [](const BiPoly& x) { return x.laplacian(); }};
            } else if constexpr (std::is_same_v<T, OpMultH>) {
                if (k.s < 1) throw std::invalid_argument("operator_matrix: mult_H needs s >= 1");
                const BiPoly hs = BiPoly::cone_h(n, k.a).pow(k.s);
                return {p + k.s, q + k.s, [hs](const BiPoly& x) { return hs * x; }};
            } else if constexpr (std::is_same_v<T, OpDeltaMultH>) {
                if (k.s < 1)
                    throw std::invalid_argument("operator_matrix: delta_mult_H needs s >= 1");
                const BiPoly hs = BiPoly::cone_h(n, k.a).pow(k.s);
                return {p + k.s - 1, q + k.s - 1,
                        [hs](const BiPoly& x) { return (hs * x).laplacian(); }};
            } else {
                static_assert(std::is_same_v<T, OpEigenShift>);
                if (k.a.is_zero())
                    throw std::invalid_argument("operator_matrix: eigen_shift needs a != 0");
                const ExactComplex shift(rational_of(n + p + q));
                const ExactComplex a = k.a;
                return {p, q,
                        [a, shift](const BiPoly& x) { return apply_A(x).scaled(a) + x.scaled(shift); }};
            }
        },
        kind);

    MonomialBasis domain(n, p, q);
    MonomialBasis codomain(n, spec.cp, spec.cq);
    ExactMatrix m = ExactMatrix::Constant(codomain.dim(), domain.dim(), ExactComplex(0));
    for (int j = 0; j < domain.dim(); ++j) {
        const BiPoly image = spec.op(domain.monomial(j));
        for (const auto& [key, c] : image.terms()) m(codomain.index_of(key), j) = c;
    }
    return OperatorMatrix{std::move(domain), std::move(codomain), std::move(m)};
}

BiPoly eigen_residual(const BiPoly& q_harmonic, const ExactComplex& a) {
    require_n2(q_harmonic, "eigen_residual");
    if (!q_harmonic.laplacian().is_zero())
        throw std::invalid_argument("eigen_residual: Q is not harmonic");
    const auto bd = q_harmonic.bidegree();
    if (!bd && !q_harmonic.is_zero())
        throw std::invalid_argument("eigen_residual: Q is not bihomogeneous");
    const int n = q_harmonic.n();
    const int p = bd ? bd->first : 0;
    const int q = bd ? bd->second : 0;
    const BiPoly hq = BiPoly::cone_h(n, a) * q_harmonic;
    const BiPoly rhs =
        (apply_A(q_harmonic).scaled(a) + q_harmonic.scaled(ExactComplex(rational_of(n + p + q))))
            .scaled(ExactComplex(4));
    return hq.laplacian() - rhs;
}

std::map<int, BiPoly> sigma_phase_parts(const BiPoly& poly) {
    require_n2(poly, "sigma_phase_parts");
    std::map<int, BiPoly> parts;
    for (const auto& [key, c] : poly.terms()) {
        const int m = (key.alpha[0] - key.beta[0]) - (key.alpha[1] - key.beta[1]);
        auto [it, inserted] = parts.try_emplace(m, poly.n());
        it->second = it->second + BiPoly::monomial(poly.n(), key.alpha, key.beta, c);
    }
    return parts;
}

BiPoly sigma_rotate(const BiPoly& poly, const Rational& t_pi) {
    require_n2(poly, "sigma_rotate");
    BiPoly out(poly.n());
    for (const auto& [key, c] : poly.terms()) {
        const int m = (key.alpha[0] - key.beta[0]) - (key.alpha[1] - key.beta[1]);
        const Rational tm = t_pi * m;  // phase is e^{i pi tm / 2}
        if (tm.get_den() != 1) {
            std::ostringstream msg;
            msg << "sigma_rotate: phase e^{i pi " << format_rational(Rational(tm / 2))
                << "} is not a Gaussian rational; use sigma_phase_parts or numeric evaluation";
            throw std::domain_error(msg.str());
        }
        out = out + BiPoly::monomial(poly.n(), key.alpha, key.beta, c * i_power(tm.get_num().get_si()));
    }
    return out;
}

std::complex<double> sigma_rotate_evaluate(const BiPoly& poly, double theta,
                                           std::span<const std::complex<double>> z) {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [m, part] : sigma_phase_parts(poly))
        acc += std::exp(std::complex<double>(0.0, m * theta / 2.0)) * part.evaluate(z);
    return acc;
}

}  // namespace conecert
