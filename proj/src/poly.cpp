#include "fanodelta/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace fano {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(i)];
}

Rational UniPoly::eval(const Rational& u) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

double UniPoly::eval_double(double u) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + it->to_double();
    return acc;
}

UniPoly UniPoly::antiderivative() const {
    std::vector<Rational> out(c_.size() + 1);
    for (size_t i = 0; i < c_.size(); ++i) out[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    std::vector<Rational> out = p.c_;
    for (auto& c : out) c *= s;
    return UniPoly(std::move(out));
}

BiPoly BiPoly::constant(const Rational& c) { return term(c, 0, 0); }
BiPoly BiPoly::x() { return term(1, 1, 0); }
BiPoly BiPoly::v() { return term(1, 0, 1); }

BiPoly BiPoly::term(const Rational& c, int i, int j) {
    BiPoly p;
    p.add_term(i, j, c);
    return p;
}

void BiPoly::add_term(int i, int j, const Rational& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational BiPoly::eval(const Rational& x, const Rational& v) const {
    Rational acc;
    for (const auto& [k, c] : terms_) acc += c * pow(x, k.first) * pow(v, k.second);
    return acc;
}

double BiPoly::eval_double(double x, double v) const {
    double acc = 0.0;
    for (const auto& [k, c] : terms_) acc += c.to_double() * std::pow(x, k.first) * std::pow(v, k.second);
    return acc;
}

BiPoly BiPoly::derivative_v() const {
    BiPoly out;
    for (const auto& [k, c] : terms_)
        if (k.second > 0) out.add_term(k.first, k.second - 1, c * Rational(k.second));
    return out;
}

BiPoly BiPoly::antiderivative_v() const {
    BiPoly out;
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second + 1, c / Rational(k.second + 1));
    return out;
}

BiPoly BiPoly::compose_first(const LinForm& t) const {
    UniPoly tu = t.as_poly();
    BiPoly out;
    for (const auto& [k, c] : terms_) {
        UniPoly power = UniPoly::constant(c);
        for (int i = 0; i < k.first; ++i) power = power * tu;
        for (int d = 0; d <= power.degree(); ++d) out.add_term(d, k.second, power.coeff(d));
    }
    return out;
}

BiPoly BiPoly::scale_first(const Rational& c) const {
    BiPoly out;
    for (const auto& [k, a] : terms_) out.add_term(k.first, k.second, a * pow(c, k.first));
    return out;
}

UniPoly BiPoly::substitute_v(const UniPoly& g) const {
    UniPoly out;
    for (const auto& [k, c] : terms_) {
        UniPoly piece = UniPoly::monomial(c, k.first);
        for (int j = 0; j < k.second; ++j) piece = piece * g;
        out += piece;
    }
    return out;
}

UniPoly BiPoly::on_ray(const Rational& alpha) const {
    return substitute_v(UniPoly::monomial(alpha, 1));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BiPoly operator*(const Rational& s, const BiPoly& p) {
    BiPoly out;
    for (const auto& [k, c] : p.terms_) out.add_term(k.first, k.second, s * c);
    return out;
}

Rational poly_eval(const BiPoly& p, const Rational& u, const Rational& v) { return p.eval(u, v); }

UniPoly integrate_v(const BiPoly& p, const LinForm& t, const Rational& lo, const Rational& hi) {
    if (hi < lo) throw std::invalid_argument("empty or negative interval");
    BiPoly anti = p.compose_first(t).antiderivative_v();
    UniPoly tu = t.as_poly();
    return anti.substitute_v(hi * tu) - anti.substitute_v(lo * tu);
}

Rational integrate_u(const UniPoly& q, const Rational& lo, const Rational& hi) {
    if (hi < lo) throw std::invalid_argument("empty or negative interval");
    UniPoly anti = q.antiderivative();
    return anti.eval(hi) - anti.eval(lo);
}

Rational integrate_region(const BiPoly& p, const Region& r) {
    return integrate_u(integrate_v(p, r.t, r.lo_frac, r.hi_frac), r.u_lo, r.u_hi);
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    std::vector<double> nodes(static_cast<size_t>(n)), weights(static_cast<size_t>(n));
    const double pi = std::acos(-1.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            double step = p0 / dp;
            z -= step;
            if (std::fabs(step) < 1e-16) break;
        }
        double w = 2.0 / ((1.0 - z * z) * dp * dp);
        nodes[static_cast<size_t>(i)] = -z;
        nodes[static_cast<size_t>(n - 1 - i)] = z;
        weights[static_cast<size_t>(i)] = w;
        weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    return {nodes, weights};
}

double quadrature_check(const BiPoly& p, const Region& r, int nodes) {
    if (p.is_zero()) return 0.0;
    auto [xs, ws] = gauss_legendre(nodes);
    const double a = r.u_lo.to_double(), b = r.u_hi.to_double();
    const double c0 = r.t.constant.to_double(), c1 = r.t.slope.to_double();
    const double lo = r.lo_frac.to_double(), hi = r.hi_frac.to_double();
    double total = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        double u = 0.5 * (b - a) * xs[i] + 0.5 * (a + b);
        double t = c0 + c1 * u;
        double vlo = lo * t, vhi = hi * t;
        double inner = 0.0;
        for (size_t j = 0; j < xs.size(); ++j) {
            double v = 0.5 * (vhi - vlo) * xs[j] + 0.5 * (vlo + vhi);
            inner += ws[j] * p.eval_double(t, v);
        }
        total += ws[i] * 0.5 * (vhi - vlo) * inner;
    }
    return 0.5 * (b - a) * total;
}

}  // namespace fano
