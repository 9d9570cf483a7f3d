#include "conecert/bipoly.hpp"

#include <sstream>

namespace conecert {

namespace {

void check_same_dim(const BiPoly& a, const BiPoly& b, const char* op) {
    if (a.n() != b.n()) {
        std::ostringstream msg;
        msg << "BiPoly " << op << ": dimension mismatch, lhs n=" << a.n() << " vs rhs n=" << b.n();
        throw std::invalid_argument(msg.str());
    }
}

void check_var(const BiPoly& p, int k) {
    if (k < 0 || k >= p.n()) {
        std::ostringstream msg;
        msg << "BiPoly: variable index " << k << " out of range for n=" << p.n();
        throw std::out_of_range(msg.str());
    }
}

std::complex<double> int_pow(std::complex<double> b, int e) {
    std::complex<double> acc{1.0, 0.0};
    for (int i = 0; i < e; ++i) acc *= b;
    return acc;
}

}  // namespace

int BiPoly::check_dim(int n) {
    if (n < 1) throw std::invalid_argument("BiPoly: ambient dimension must be >= 1");
    return n;
}

BiPoly::BiPoly(int n, TermMap terms) : n_(check_dim(n)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.alpha.size() != n_ || it->first.beta.size() != n_)
            throw std::invalid_argument("BiPoly: multi-index length does not match n");
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
}

void BiPoly::insert_term(MultiIndex alpha, MultiIndex beta, ExactComplex c) {
    if (c.is_zero()) return;
    TermKey key{std::move(alpha), std::move(beta)};
    auto [it, inserted] = terms_.try_emplace(std::move(key), std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly BiPoly::constant(int n, ExactComplex c) {
    BiPoly out(n);
    out.insert_term(MultiIndex(n), MultiIndex(n), std::move(c));
    return out;
}

BiPoly BiPoly::monomial(int n, MultiIndex alpha, MultiIndex beta, ExactComplex c) {
    if (alpha.size() != n || beta.size() != n)
        throw std::invalid_argument("BiPoly::monomial: multi-index length does not match n");
    BiPoly out(n);
    out.insert_term(std::move(alpha), std::move(beta), std::move(c));
    return out;
}

BiPoly BiPoly::variable(int n, int k) {
    BiPoly out(n);
    check_var(out, k);
    out.insert_term(MultiIndex(n).bumped(k, 1), MultiIndex(n), ExactComplex(1));
    return out;
}

BiPoly BiPoly::variable_bar(int n, int k) {
    BiPoly out(n);
    check_var(out, k);
    out.insert_term(MultiIndex(n), MultiIndex(n).bumped(k, 1), ExactComplex(1));
    return out;
}

BiPoly BiPoly::norm_squared(int n) {
    BiPoly out(n);
    for (int k = 0; k < n; ++k)
        out.insert_term(MultiIndex(n).bumped(k, 1), MultiIndex(n).bumped(k, 1), ExactComplex(1));
    return out;
}

BiPoly BiPoly::cone_h(int n, const ExactComplex& a) {
    if (n < 2) throw std::invalid_argument("cone_h: requires n >= 2");
    if (a.is_zero())
        throw std::invalid_argument("cone_h: a = 0 degenerates H to |z|^2 with zero set {0}");
    BiPoly out = norm_squared(n);
    out.insert_term(MultiIndex(n).bumped(0, 1), MultiIndex(n).bumped(1, 1), a);
    return out;
}

ExactComplex BiPoly::coeff(const TermKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? ExactComplex() : it->second;
}

BiPoly BiPoly::operator+(const BiPoly& rhs) const {
    check_same_dim(*this, rhs, "add");
    BiPoly out = *this;
    for (const auto& [key, c] : rhs.terms_) out.insert_term(key.alpha, key.beta, c);
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& rhs) const {
    check_same_dim(*this, rhs, "sub");
    BiPoly out = *this;
    for (const auto& [key, c] : rhs.terms_) out.insert_term(key.alpha, key.beta, -c);
    return out;
}

BiPoly BiPoly::operator-() const { return scaled(ExactComplex(-1)); }

BiPoly BiPoly::operator*(const BiPoly& rhs) const {
    check_same_dim(*this, rhs, "mul");
    BiPoly out(n_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : rhs.terms_) {
            MultiIndex alpha(n_), beta(n_);
            for (int k = 0; k < n_; ++k) {
                alpha[k] = ka.alpha[k] + kb.alpha[k];
                beta[k] = ka.beta[k] + kb.beta[k];
            }
            out.insert_term(std::move(alpha), std::move(beta), ca * cb);
        }
    }
    return out;
}

BiPoly BiPoly::scaled(const ExactComplex& c) const {
    BiPoly out(n_);
    if (c.is_zero()) return out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

BiPoly BiPoly::conjugated() const {
    BiPoly out(n_);
    for (const auto& [key, v] : terms_) out.terms_.emplace(TermKey{key.beta, key.alpha}, v.conj());
    return out;
}

BiPoly BiPoly::pow(int s) const {
    if (s < 0) throw std::invalid_argument("BiPoly::pow: negative exponent");
    BiPoly acc = constant(n_, ExactComplex(1));
    for (int i = 0; i < s; ++i) acc = acc * *this;
    return acc;
}

BiPoly BiPoly::differentiate(int k, Wirtinger kind) const {
    check_var(*this, k);
    BiPoly out(n_);
    const bool holo = kind == Wirtinger::Holomorphic;
    for (const auto& [key, c] : terms_) {
        const MultiIndex& idx = holo ? key.alpha : key.beta;
        const int e = idx[k];
        if (e == 0) continue;
        MultiIndex alpha = key.alpha;
        MultiIndex beta = key.beta;
        (holo ? alpha : beta)[k] -= 1;
        out.insert_term(std::move(alpha), std::move(beta), c * ExactComplex(e));
    }
    return out;
}

BiPoly BiPoly::laplacian() const {
    BiPoly out(n_);
    for (int k = 0; k < n_; ++k) {
        const BiPoly mixed =
            differentiate(k, Wirtinger::Holomorphic).differentiate(k, Wirtinger::Antiholomorphic);
        out = out + mixed.scaled(ExactComplex(4));
    }
    return out;
}

std::pair<BiPoly, BiPoly> BiPoly::euler_degrees() const {
    if (!is_zero() && !bidegree())
        throw std::invalid_argument("euler_degrees: input is not bihomogeneous");
    BiPoly holo(n_), anti(n_);
    for (int k = 0; k < n_; ++k) {
        holo = holo + variable(n_, k) * differentiate(k, Wirtinger::Holomorphic);
        anti = anti + variable_bar(n_, k) * differentiate(k, Wirtinger::Antiholomorphic);
    }
    return {holo, anti};
}

std::complex<double> BiPoly::evaluate(std::span<const std::complex<double>> z) const {
    if (static_cast<int>(z.size()) != n_)
        throw std::invalid_argument("BiPoly::evaluate: point length does not match n");
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [key, c] : terms_) {
        std::complex<double> term = c.to_complex();
        for (int k = 0; k < n_; ++k) {
            if (key.alpha[k]) term *= int_pow(z[k], key.alpha[k]);
            if (key.beta[k]) term *= int_pow(std::conj(z[k]), key.beta[k]);
        }
        acc += term;
    }
    return acc;
}

std::optional<std::pair<int, int>> BiPoly::bidegree() const {
    auto comps = bidegree_components();
    if (comps.size() == 1) return comps.front();
    return std::nullopt;
}

std::vector<std::pair<int, int>> BiPoly::bidegree_components() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [key, c] : terms_) {
        std::pair<int, int> pq{key.alpha.degree(), key.beta.degree()};
        if (out.empty() || out.back() != pq) out.push_back(pq);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << format_exact_complex(c) << ")";
        for (int k = 0; k < n_; ++k) {
            if (key.alpha[k] == 1) os << " z" << k + 1;
            if (key.alpha[k] > 1) os << " z" << k + 1 << "^" << key.alpha[k];
            if (key.beta[k] == 1) os << " zb" << k + 1;
            if (key.beta[k] > 1) os << " zb" << k + 1 << "^" << key.beta[k];
        }
    }
    return os.str();
}

GradeInfo grade_info(const BiPoly& poly) {
    GradeInfo info;
    info.components = poly.bidegree_components();
    info.bidegree = poly.bidegree();
    if (info.bidegree)
        info.phase_exponent = info.bidegree->first - info.bidegree->second;
    return info;
}

}  // namespace conecert
