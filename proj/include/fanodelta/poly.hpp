#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fanodelta/rational.hpp"

namespace fano {

// Dense univariate polynomial, coefficient i multiplies u^i.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& u) const;
    double eval_double(double u) const;
    UniPoly antiderivative() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

// c + s*u
struct LinForm {
    Rational constant;
    Rational slope;

    Rational eval(const Rational& u) const { return constant + slope * u; }
    UniPoly as_poly() const { return UniPoly({constant, slope}); }
    friend bool operator==(const LinForm&, const LinForm&) = default;
};

// Sparse polynomial in two variables (x, v). Profiles use x = t.
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    static BiPoly constant(const Rational& c);
    static BiPoly x();
    static BiPoly v();
    static BiPoly term(const Rational& c, int i, int j);

    void add_term(int i, int j, const Rational& c);
    Rational coeff(int i, int j) const;
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational eval(const Rational& x, const Rational& v) const;
    double eval_double(double x, double v) const;

    BiPoly derivative_v() const;
    BiPoly antiderivative_v() const;
    // p(c + s*u, v) as a polynomial in (u, v)
    BiPoly compose_first(const LinForm& t) const;
    // p(c*x, v)
    BiPoly scale_first(const Rational& c) const;
    // p(u, g(u)) as a polynomial in u
    UniPoly substitute_v(const UniPoly& g) const;
    // p(x, alpha*x) as a polynomial in x
    UniPoly on_ray(const Rational& alpha) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rational& s, const BiPoly& p);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

private:
    std::map<Key, Rational> terms_;
};

Rational poly_eval(const BiPoly& p, const Rational& u, const Rational& v);

// Integral of p(t(u), v) dv over [lo*t(u), hi*t(u)], returned as a polynomial in u.
UniPoly integrate_v(const BiPoly& p, const LinForm& t, const Rational& lo, const Rational& hi);

Rational integrate_u(const UniPoly& q, const Rational& lo, const Rational& hi);

// Region { (u, v) : u_lo <= u <= u_hi, lo_frac*t(u) <= v <= hi_frac*t(u) }
struct Region {
    LinForm t;
    Rational lo_frac;
    Rational hi_frac;
    Rational u_lo;
    Rational u_hi;
};

// Exact double integral of p(t(u), v) over the region.
Rational integrate_region(const BiPoly& p, const Region& r);

// Gauss-Legendre estimate of the same double integral.
double quadrature_check(const BiPoly& p, const Region& r, int nodes = 16);

// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

}  // namespace fano
