#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "conecert/random_poly.hpp"

using namespace conecert;

namespace {

BiPoly z(int n, int k) { return BiPoly::variable(n, k); }
BiPoly zb(int n, int k) { return BiPoly::variable_bar(n, k); }

std::complex<double> eval(const BiPoly& p, std::initializer_list<std::complex<double>> pt) {
    std::vector<std::complex<double>> v(pt);
    return p.evaluate(std::span<const std::complex<double>>(v.data(), v.size()));
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(format_rational(parse_rational("3")) == "3/1");
    CHECK(format_rational(parse_rational("6/4")) == "3/2");
    CHECK(format_rational(parse_rational("-0.25")) == "-1/4");
    CHECK(parse_rational("0.5") == rational_of(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("exact complex arithmetic and round trip") {
    const ExactComplex a(rational_of(1, 2), rational_of(-3));
    const ExactComplex b(rational_of(2), rational_of(5, 7));
    CHECK((a + b) - b == a);
    CHECK(a * b / b == a);
    CHECK(format_exact_complex(ExactComplex(3)) == "3/1+0/1i");
    CHECK(parse_exact_complex("3/1+0/1i") == ExactComplex(3));
    CHECK(parse_exact_complex("1+i") == ExactComplex(rational_of(1), rational_of(1)));
    CHECK(parse_exact_complex("-5/2") == ExactComplex(rational_of(-5, 2)));
    CHECK(parse_exact_complex("0.5-0.25i") ==
          ExactComplex(rational_of(1, 2), rational_of(-1, 4)));
    CHECK(parse_exact_complex("i") == ExactComplex::i_unit());
}

TEST_CASE("arithmetic examples: mul, conj, identity") {
    const int n = 2;
    CHECK(z(n, 0) * zb(n, 1) ==
          BiPoly::monomial(n, MultiIndex{1, 0}, MultiIndex{0, 1}, ExactComplex(1)));
    CHECK((z(n, 0) * zb(n, 1)).conjugated() ==
          BiPoly::monomial(n, MultiIndex{0, 1}, MultiIndex{1, 0}, ExactComplex(1)));
    const BiPoly h = BiPoly::cone_h(n, ExactComplex(3));
    CHECK(h * BiPoly::constant(n, ExactComplex(1)) == h);
    CHECK_THROWS_AS(z(2, 0) * z(3, 0), std::invalid_argument);
}

TEST_CASE("wirtinger derivatives") {
    const int n = 2;
    const BiPoly p = z(n, 0) * z(n, 0) * zb(n, 1);  // z1^2 zb2
    CHECK(p.differentiate(0, Wirtinger::Holomorphic) ==
          (z(n, 0) * zb(n, 1)).scaled(ExactComplex(2)));
    CHECK((z(n, 0) * zb(n, 1)).differentiate(0, Wirtinger::Antiholomorphic).is_zero());
    for (int k = 0; k < n; ++k)
        CHECK(BiPoly::norm_squared(n).differentiate(k, Wirtinger::Antiholomorphic) == z(n, k));
    CHECK_THROWS_AS(p.differentiate(5, Wirtinger::Holomorphic), std::out_of_range);
}

TEST_CASE("laplacian examples") {
    CHECK((z(2, 0) * zb(2, 1)).laplacian().is_zero());
    CHECK(BiPoly::norm_squared(2).laplacian() == BiPoly::constant(2, ExactComplex(8)));
    CHECK(BiPoly::norm_squared(3).laplacian() == BiPoly::constant(3, ExactComplex(12)));
    // c_2 = 8(n+1) with n=2: Delta(|z|^4) = 24 |z|^2.
    CHECK(BiPoly::norm_squared(2).pow(2).laplacian() ==
          BiPoly::norm_squared(2).scaled(ExactComplex(24)));
}

TEST_CASE("evaluate examples") {
    const int n = 2;
    CHECK(eval(BiPoly::norm_squared(n), {{1, 0}, {0, 1}}).real() == doctest::Approx(2.0));
    const BiPoly p = (z(n, 0) * zb(n, 1)).scaled(ExactComplex(3)) + BiPoly::norm_squared(n);
    CHECK(std::abs(eval(p, {{1, 0}, {-1, 0}}) - std::complex<double>(-1.0, 0.0)) < 1e-14);
    // root of t^2 + 3t + 1 = 0 lies on the cone of H = 3 z1 zb2 + |z|^2
    const double t = (-3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(eval(p, {{1, 0}, {t, 0}})) < 1e-12);
}

TEST_CASE("grade info") {
    const int n = 2;
    const auto g1 = grade_info(z(n, 0) * zb(n, 1));
    CHECK(g1.bidegree == std::pair{1, 1});
    CHECK(g1.phase_exponent == 0);
    const auto g2 = grade_info(z(n, 0) * z(n, 1));
    CHECK(g2.bidegree == std::pair{2, 0});
    CHECK(g2.phase_exponent == 2);
    const auto g3 = grade_info(z(n, 0) + zb(n, 0));
    CHECK_FALSE(g3.bidegree.has_value());
    CHECK(g3.components == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
}

TEST_CASE("euler degrees") {
    const int n = 2;
    const BiPoly p = z(n, 0) * zb(n, 1);
    const auto [ph, pa] = p.euler_degrees();
    CHECK(ph == p);
    CHECK(pa == p);
    const auto [sh, sa] = (z(n, 0) * z(n, 0)).euler_degrees();
    CHECK(sh == (z(n, 0) * z(n, 0)).scaled(ExactComplex(2)));
    CHECK(sa.is_zero());
    const auto [ch, ca] = BiPoly::constant(n, ExactComplex(7)).euler_degrees();
    CHECK(ch.is_zero());
    CHECK(ca.is_zero());
    CHECK_THROWS_AS((z(n, 0) + zb(n, 0)).euler_degrees(), std::invalid_argument);
}

TEST_CASE("property: product rule for the laplacian") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const int p1 = static_cast<int>(rng() % 3), q1 = static_cast<int>(rng() % 3);
        const int p2 = static_cast<int>(rng() % 3), q2 = static_cast<int>(rng() % 3);
        const BiPoly a = random_bipoly(n, p1, q1, rng);
        const BiPoly b = random_bipoly(n, p2, q2, rng);
        BiPoly cross(n);
        for (int k = 0; k < n; ++k) {
            cross = cross + a.differentiate(k, Wirtinger::Holomorphic) *
                                b.differentiate(k, Wirtinger::Antiholomorphic);
            cross = cross + a.differentiate(k, Wirtinger::Antiholomorphic) *
                                b.differentiate(k, Wirtinger::Holomorphic);
        }
        const BiPoly lhs = (a * b).laplacian();
        const BiPoly rhs = a.laplacian() * b + a * b.laplacian() + cross.scaled(ExactComplex(4));
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("property: mixed wirtinger partials commute") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const BiPoly p = random_bipoly(n, 1 + static_cast<int>(rng() % 3),
                                       1 + static_cast<int>(rng() % 3), rng);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const BiPoly a = p.differentiate(j, Wirtinger::Holomorphic)
                                     .differentiate(k, Wirtinger::Antiholomorphic);
                const BiPoly b = p.differentiate(k, Wirtinger::Antiholomorphic)
                                     .differentiate(j, Wirtinger::Holomorphic);
                CHECK(a == b);
            }
    }
}

TEST_CASE("property: evaluate is a ring homomorphism") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2;
        const BiPoly a = random_bipoly(n, static_cast<int>(rng() % 3),
                                       static_cast<int>(rng() % 3), rng);
        const BiPoly b = random_bipoly(n, static_cast<int>(rng() % 3),
                                       static_cast<int>(rng() % 3), rng);
        std::vector<std::complex<double>> pt;
        for (int k = 0; k < n; ++k)
            pt.emplace_back(std::cos(0.7 * trial + k), std::sin(1.3 * trial - k));
        const std::span<const std::complex<double>> s(pt.data(), pt.size());
        CHECK(std::abs((a * b).evaluate(s) - a.evaluate(s) * b.evaluate(s)) < 1e-12);
        CHECK(std::abs((a + b).evaluate(s) - (a.evaluate(s) + b.evaluate(s))) < 1e-12);
    }
}

TEST_CASE("property: phase identity under scalar rotation") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2;
        const int p = static_cast<int>(rng() % 4), q = static_cast<int>(rng() % 4);
        const BiPoly poly = random_bipoly(n, p, q, rng);
        std::vector<std::complex<double>> pt{{0.4, -0.3}, {0.8, 0.25}};
        const std::span<const std::complex<double>> s(pt.data(), pt.size());
        const std::complex<double> base = poly.evaluate(s);
        for (int i = 0; i < 16; ++i) {
            const double theta = 2.0 * std::numbers::pi * i / 16.0;
            const std::complex<double> rot = std::exp(std::complex<double>(0.0, theta));
            std::vector<std::complex<double>> rotated{rot * pt[0], rot * pt[1]};
            const std::span<const std::complex<double>> rs(rotated.data(), rotated.size());
            const std::complex<double> expected =
                std::exp(std::complex<double>(0.0, (p - q) * theta)) * base;
            CHECK(std::abs(poly.evaluate(rs) - expected) < 1e-12);
        }
    }
}

TEST_CASE("zero polynomial keeps its dimension") {
    const BiPoly zero = BiPoly::zero(3);
    CHECK(zero.n() == 3);
    CHECK((zero + zero).n() == 3);
    CHECK((z(3, 0) - z(3, 0)).n() == 3);
    CHECK((z(3, 0) - z(3, 0)).is_zero());
}
