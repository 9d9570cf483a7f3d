#include "conecert/fischer.hpp"

#include <sstream>

namespace conecert {

ExactComplex fischer_inner(const BiPoly& r, const BiPoly& s) {
    const auto br = r.bidegree();
    const auto bs = s.bidegree();
    if (r.n() != s.n()) throw std::invalid_argument("fischer_inner: dimension mismatch");
    if (!r.is_zero() && !s.is_zero() && (!br || !bs || *br != *bs)) {
        std::ostringstream msg;
        msg << "fischer_inner: bidegree mismatch between " << r.to_string() << " and "
            << s.to_string();
        throw std::invalid_argument(msg.str());
    }
    ExactComplex acc;
    for (const auto& [key, c] : r.terms()) {
        const ExactComplex sc = s.coeff(key);
        if (sc.is_zero()) continue;
        const Rational weight = key.alpha.factorial_product() * key.beta.factorial_product();
        acc += c * sc.conj() * ExactComplex(weight);
    }
    return acc;
}

HarmonicBasis harmonic_basis(int n, int p, int q) {
    if (n < 1 || p < 0 || q < 0)
        throw std::invalid_argument("harmonic_basis: requires n >= 1 and p, q >= 0");
    MonomialBasis domain(n, p, q);
    MonomialBasis codomain(n, p - 1, q - 1);

    ExactMatrix lap = ExactMatrix::Constant(codomain.dim(), domain.dim(), ExactComplex(0));
    for (int j = 0; j < domain.dim(); ++j) {
        const BiPoly image = domain.monomial(j).laplacian();
        for (const auto& [key, c] : image.terms()) lap(codomain.index_of(key), j) = c;
    }

    ExactMatrix kernel = kernel_basis(lap);
    std::vector<BiPoly> basis;
    basis.reserve(static_cast<std::size_t>(kernel.cols()));
    for (int j = 0; j < kernel.cols(); ++j) basis.push_back(domain.from_coordinates(kernel.col(j)));
    return HarmonicBasis{std::move(domain), std::move(codomain), std::move(lap),
                         std::move(kernel), std::move(basis)};
}

FischerDecomposer::FischerDecomposer(int n, int p, int q, PivotRule rule)
    : n_(n), p_(p), q_(q), target_(n, p, q) {
    const int levels = std::min(p, q) + 1;
    int unknowns = 0;
    for (int j = 0; j < levels; ++j) {
        spaces_.push_back(harmonic_basis(n, p - j, q - j));
        offsets_.push_back(unknowns);
        unknowns += spaces_.back().dim();
    }
    // dim P_{p,q} = sum_j dim H_{p-j,q-j}: the lift matrix is square and
    // invertible, so RREF of [M | I] yields [I | M^{-1}].
    if (unknowns != target_.dim())
        throw std::logic_error("FischerDecomposer: lift matrix is not square");
    ExactMatrix aug = ExactMatrix::Constant(target_.dim(), 2 * target_.dim(), ExactComplex(0));
    for (int j = 0; j < levels; ++j) {
        const BiPoly radial = BiPoly::norm_squared(n).pow(j);
        for (int b = 0; b < spaces_[static_cast<std::size_t>(j)].dim(); ++b) {
            const BiPoly lifted =
                radial * spaces_[static_cast<std::size_t>(j)].basis[static_cast<std::size_t>(b)];
            const int col = offsets_[static_cast<std::size_t>(j)] + b;
            for (const auto& [key, c] : lifted.terms()) aug(target_.index_of(key), col) = c;
        }
    }
    for (int d = 0; d < target_.dim(); ++d) aug(d, target_.dim() + d) = ExactComplex(1);
    const EchelonResult ech = reduced_row_echelon(std::move(aug), rule);
    if (ech.rank() != target_.dim())
        throw std::logic_error("FischerDecomposer: lift matrix is singular");
    inverse_ = ech.rref.rightCols(target_.dim());
}

HarmonicDecomposition FischerDecomposer::decompose(const BiPoly& poly) const {
    const auto bd = poly.bidegree();
    if (!poly.is_zero() && (!bd || bd->first != p_ || bd->second != q_))
        throw std::invalid_argument("FischerDecomposer: bidegree mismatch");
    const ExactVector x = inverse_ * target_.coordinates(poly);
    HarmonicDecomposition dec;
    dec.p = p_;
    dec.q = q_;
    for (std::size_t j = 0; j < spaces_.size(); ++j) {
        const auto& space = spaces_[j];
        BiPoly comp(n_);
        for (int b = 0; b < space.dim(); ++b) {
            const ExactComplex c = x(offsets_[j] + b);
            if (!c.is_zero()) comp = comp + space.basis[static_cast<std::size_t>(b)].scaled(c);
        }
        dec.components.push_back(std::move(comp));
    }
    return dec;
}

HarmonicDecomposition fischer_decompose(const BiPoly& poly, PivotRule rule) {
    const auto bd = poly.bidegree();
    if (!bd && !poly.is_zero())
        throw std::invalid_argument("fischer_decompose: input is not bihomogeneous");
    const int p = bd ? bd->first : 0;
    const int q = bd ? bd->second : 0;
    return FischerDecomposer(poly.n(), p, q, rule).decompose(poly);
}

BiPoly recompose(const HarmonicDecomposition& dec, int n) {
    BiPoly acc(n);
    for (std::size_t j = 0; j < dec.components.size(); ++j)
        acc = acc + BiPoly::norm_squared(n).pow(static_cast<int>(j)) * dec.components[j];
    return acc;
}

ExactMatrix fischer_gram(const std::vector<BiPoly>& polys) {
    const int m = static_cast<int>(polys.size());
    ExactMatrix g = ExactMatrix::Constant(m, m, ExactComplex(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            g(i, j) = fischer_inner(polys[static_cast<std::size_t>(i)],
                                    polys[static_cast<std::size_t>(j)]);
    return g;
}

}  // namespace conecert
