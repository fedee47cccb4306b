#include <doctest.h>

#include <cmath>

#include "fanodelta/flags.hpp"
#include "gen.hpp"

using namespace fano;

namespace {

BiPoly T() { return BiPoly::x(); }
BiPoly V() { return BiPoly::v(); }
BiPoly C(const Rational& c) { return BiPoly::constant(c); }

const LinForm one_minus_u{1, -1};

// Swaps the two variables of a polynomial.
BiPoly swapped(const BiPoly& p) {
    BiPoly out;
    for (const auto& [k, c] : p.terms()) out.add_term(k.second, k.first, c);
    return out;
}

Rational integrate_rectangle(const BiPoly& p, const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d) {
    const BiPoly anti = p.antiderivative_v();
    const UniPoly inner = anti.substitute_v(UniPoly::constant(d)) - anti.substitute_v(UniPoly::constant(c));
    return integrate_u(inner, a, b);
}

double relative_error(double approx, const Rational& exact) {
    const double e = exact.to_double();
    return std::abs(approx - e) / std::max(std::abs(e), 1e-300);
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("2856/2856") == Rational(1));
    CHECK_THROWS_WITH_AS(Rational::parse("1/0"), doctest::Contains("zero denominator"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1//2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact beyond machine precision") {
    Rational acc;
    for (long k = 1; k <= 60; ++k) acc += Rational(1, k * (k + 1));
    CHECK(acc == Rational(60, 61));
    const Rational big = pow(Rational(2856, 2855), 40);
    CHECK(big * pow(Rational(2855, 2856), 40) == Rational(1));
}

TEST_CASE("poly_eval examples") {
    CHECK(poly_eval(T() * V(), 0, 0) == Rational(0));
    const BiPoly one_minus = C(1) - T();
    CHECK(poly_eval(one_minus * one_minus, Rational(1, 2), Rational(3)) == Rational(1, 4));
    const BiPoly w = Rational(1, 6) * (C(1) - T() + Rational(5) * V());
    CHECK(poly_eval(w * w, 0, Rational(1, 2)) == Rational(49, 144));
}

TEST_CASE("integrate_v examples") {
    const BiPoly tv = T() - V();
    const UniPoly cube = UniPoly({1, -3, 3, -1});  // (1-u)^3
    CHECK(integrate_v(tv * tv, one_minus_u, 0, 1) == Rational(1, 3) * cube);

    // integrand of the first segment of a type IIa profile, integrated up to t/2
    const BiPoly p = Rational(2, 3) * T() * T() - Rational(1, 3) * T() * V() - Rational(5, 6) * V() * V();
    CHECK(integrate_v(p, one_minus_u, 0, Rational(1, 2)) == Rational(37, 144) * cube);

    CHECK(integrate_v(p, one_minus_u, Rational(1, 3), Rational(1, 3)).is_zero());
    CHECK_THROWS_WITH_AS(integrate_v(p, one_minus_u, 1, 0), doctest::Contains("empty or negative interval"),
                         std::invalid_argument);
}

TEST_CASE("integrate_u examples") {
    CHECK(integrate_u(UniPoly({1, -3, 3, -1}), 0, 1) == Rational(1, 4));
    CHECK(integrate_u(UniPoly({1, -9, 27, -27}), 0, Rational(1, 3)) == Rational(1, 12));
    CHECK(integrate_u(UniPoly({5, 7}), 0, 0) == Rational(0));
    CHECK_THROWS(integrate_u(UniPoly({1}), 1, 0));
}

TEST_CASE("quadrature oracle on catalog integrals") {
    const Region r{one_minus_u, 0, 1, 0, 1};
    CHECK(quadrature_check(BiPoly{}, r) == 0.0);

    // Each catalog S_V is (3/A3) times a sum of region integrals; check both the pieces and the totals.
    struct Case {
        FlagTypeIIa spec;
        Rational s_v;
    };
    const Case cases[] = {
        {{1, 1, 1, 1, Rational(-5, 6), Rational(1, 2), Rational(1), 3, Rational(0), Rational(7, 6)}, Rational(11, 56)},
        {{1, 1, 1, 1, Rational(-8, 15), Rational(3, 10), Rational(3, 5), 5, Rational(3, 5), Rational(11, 30)},
         Rational(31, 88)},
    };
    for (const auto& c : cases) {
        const ZariskiProfile p = profile_type_IIa(c.spec);
        Rational exact;
        double approx = 0;
        for (const auto& s : p.segments) {
            const Region reg{p.t_of_u, s.lo, s.hi, 0, p.tau_u};
            const Rational e = integrate_region(s.vol2, reg);
            const double q = quadrature_check(s.vol2, reg);
            CHECK(relative_error(q, e) < 1e-9);
            exact += e;
            approx += q;
        }
        CHECK(Rational(3) / p.A3 * exact == c.s_v);
        CHECK(relative_error(3.0 / p.A3.to_double() * approx, c.s_v) < 1e-9);
    }
}

TEST_CASE("gauss_legendre weights integrate polynomials exactly") {
    const auto [x, w] = gauss_legendre(8);
    double sum = 0, x14 = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += w[i];
        x14 += w[i] * std::pow(x[i], 14);
    }
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(x14 == doctest::Approx(2.0 / 15).epsilon(1e-13));
}

TEST_CASE("property: evaluation is a ring homomorphism") {
    test::Gen g(11);
    for (int trial = 0; trial < 300; ++trial) {
        const BiPoly p = g.bipoly(), q = g.bipoly();
        const Rational u = g.rational(), v = g.rational();
        CHECK(poly_eval(p + q, u, v) == poly_eval(p, u, v) + poly_eval(q, u, v));
        CHECK(poly_eval(p - q, u, v) == poly_eval(p, u, v) - poly_eval(q, u, v));
        CHECK(poly_eval(p * q, u, v) == poly_eval(p, u, v) * poly_eval(q, u, v));
        const Rational s = g.rational();
        CHECK(poly_eval(s * p, u, v) == s * poly_eval(p, u, v));
    }
}

TEST_CASE("property: substitution commutes with evaluation") {
    test::Gen g(12);
    for (int trial = 0; trial < 200; ++trial) {
        const BiPoly p = g.bipoly();
        const LinForm t{g.rational(), g.rational()};
        const Rational u = g.rational(), v = g.rational(), alpha = g.rational(), c = g.rational();
        CHECK(p.compose_first(t).eval(u, v) == p.eval(t.eval(u), v));
        CHECK(p.on_ray(alpha).eval(u) == p.eval(u, alpha * u));
        CHECK(p.scale_first(c).eval(u, v) == p.eval(c * u, v));
        const UniPoly h = g.unipoly();
        CHECK(p.substitute_v(h).eval(u) == p.eval(u, h.eval(u)));
    }
}

TEST_CASE("property: Fubini on rational rectangles") {
    test::Gen g(13);
    for (int trial = 0; trial < 200; ++trial) {
        const BiPoly p = g.bipoly();
        Rational a = g.rational(), b = g.rational(), c = g.rational(), d = g.rational();
        if (b < a) std::swap(a, b);
        if (d < c) std::swap(c, d);
        CHECK(integrate_rectangle(p, a, b, c, d) == integrate_rectangle(swapped(p), c, d, a, b));
    }
}

TEST_CASE("property: fundamental theorem in v") {
    test::Gen g(14);
    for (int trial = 0; trial < 200; ++trial) {
        const BiPoly p = g.bipoly();
        const LinForm t{g.rational(), g.rational()};
        Rational a = g.rational(), b = g.rational();
        if (b < a) std::swap(a, b);
        const UniPoly lhs = integrate_v(p.derivative_v(), t, a, b);
        const Rational u = g.rational();
        const Rational tu = t.eval(u);
        CHECK(lhs.eval(u) == p.eval(tu, b * tu) - p.eval(tu, a * tu));
        CHECK(p.antiderivative_v().derivative_v() == p);
    }
}

TEST_CASE("property: quadrature agrees with the exact integral") {
    test::Gen g(15);
    int compared = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const BiPoly p = g.bipoly();
        Rational lo = g.rational(3, 4), hi = g.rational(3, 4), ulo = g.rational(3, 4), uhi = g.rational(3, 4);
        if (hi < lo) std::swap(lo, hi);
        if (uhi < ulo) std::swap(ulo, uhi);
        const Region r{LinForm{g.rational(), g.rational()}, lo, hi, ulo, uhi};
        const Rational exact = integrate_region(p, r);
        if (exact.is_zero()) continue;
        // cancellation can make the relative error meaningless for tiny exact values
        if (std::abs(exact.to_double()) < 1e-6) continue;
        CHECK(relative_error(quadrature_check(p, r), exact) < 1e-9);
        ++compared;
    }
    CHECK(compared > 200);
}
