#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "conecert/exact_complex.hpp"
#include "conecert/multi_index.hpp"

namespace conecert {

// Monomial z^alpha zbar^beta.
struct TermKey {
    MultiIndex alpha;
    MultiIndex beta;

    friend bool operator==(const TermKey&, const TermKey&) = default;
};

// Graded order, alpha major: total degree, then |alpha|, then alpha in
// decreasing lex, then beta in decreasing lex. Fixes serialization and the
// monomial basis enumeration.
struct TermOrder {
    bool operator()(const TermKey& a, const TermKey& b) const {
        const int da = a.alpha.degree() + a.beta.degree();
        const int db = b.alpha.degree() + b.beta.degree();
        if (da != db) return da < db;
        if (a.alpha.degree() != b.alpha.degree()) return a.alpha.degree() < b.alpha.degree();
        if (a.alpha != b.alpha) return b.alpha < a.alpha;
        return b.beta < a.beta;
    }
};

enum class Wirtinger { Holomorphic, Antiholomorphic };

// Exact polynomial in z_1..z_n, zbar_1..zbar_n. Canonical form: no stored
// zero coefficients; the zero polynomial is an empty map with an explicit n.
// Values are immutable in spirit: every operation returns a new BiPoly.
class BiPoly {
public:
    using TermMap = std::map<TermKey, ExactComplex, TermOrder>;

    explicit BiPoly(int n) : n_(check_dim(n)) {}
    BiPoly(int n, TermMap terms);

    static BiPoly zero(int n) { return BiPoly(n); }
    static BiPoly constant(int n, ExactComplex c);
    static BiPoly monomial(int n, MultiIndex alpha, MultiIndex beta, ExactComplex c);
    // z_k (0-based).
    static BiPoly variable(int n, int k);
    static BiPoly variable_bar(int n, int k);
    // |z|^2 = sum_k z_k zbar_k.
    static BiPoly norm_squared(int n);
    // H(z) = a z_1 zbar_2 + |z|^2, the cone polynomial. Requires n >= 2, a != 0.
    static BiPoly cone_h(int n, const ExactComplex& a);

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    ExactComplex coeff(const TermKey& key) const;

    BiPoly operator+(const BiPoly& rhs) const;
    BiPoly operator-(const BiPoly& rhs) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& rhs) const;
    BiPoly scaled(const ExactComplex& c) const;
    // Function conjugation: swaps alpha <-> beta and conjugates coefficients.
    BiPoly conjugated() const;
    BiPoly pow(int s) const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    // Wirtinger derivative d/dz_k or d/dzbar_k (0-based k).
    BiPoly differentiate(int k, Wirtinger kind) const;
    // Delta = 4 sum_k d^2/dz_k dzbar_k.
    BiPoly laplacian() const;
    // (sum_k z_k dP/dz_k, sum_k zbar_k dP/dzbar_k); requires bihomogeneous input.
    std::pair<BiPoly, BiPoly> euler_degrees() const;

    std::complex<double> evaluate(std::span<const std::complex<double>> z) const;

    // Bidegree (p,q) if bihomogeneous.
    std::optional<std::pair<int, int>> bidegree() const;
    // All bidegrees present, sorted.
    std::vector<std::pair<int, int>> bidegree_components() const;

    std::string to_string() const;

private:
    static int check_dim(int n);
    void insert_term(MultiIndex alpha, MultiIndex beta, ExactComplex c);

    int n_;
    TermMap terms_;
};

struct GradeInfo {
    std::optional<std::pair<int, int>> bidegree;
    // P(e^{i theta} z) = e^{i(p-q) theta} P(z) when bihomogeneous.
    std::optional<int> phase_exponent;
    std::vector<std::pair<int, int>> components;
};

GradeInfo grade_info(const BiPoly& poly);

}  // namespace conecert
