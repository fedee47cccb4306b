#include "fanodelta/delta.hpp"

#include <stdexcept>

namespace fano {

const Term& DeltaVerdict::active_term() const {
    for (const auto& t : terms)
        if (t.value && *t.value == bound) return t;
    throw std::logic_error("verdict has no active term");
}

SBreakdown s_values(const ZariskiProfile& profile) {
    Rational vol, deg_sq, f_int;
    for (const auto& seg : profile.segments) {
        auto outer = [&](const BiPoly& integrand) {
            return integrate_u(integrate_v(integrand, profile.t_of_u, seg.lo, seg.hi), 0, profile.tau_u);
        };
        vol += outer(seg.vol2);
        deg_sq += outer(seg.deg1 * seg.deg1);
        if (!seg.ordN.is_zero()) f_int += outer(seg.deg1 * seg.ordN);
    }
    SBreakdown s;
    s.S_A_Y = profile.tau_u / Rational(4);
    s.S_V = Rational(3) / profile.A3 * vol;
    s.F_P = Rational(6) / profile.A3 * f_int;
    s.S_W = Rational(3) / profile.A3 * deg_sq + s.F_P;
    s.s_w_upper_bound = profile.s_w_upper_bound;
    return s;
}

DeltaVerdict assemble(std::vector<Term> terms, std::optional<SBreakdown> s) {
    DeltaVerdict v;
    std::optional<Rational> best;
    for (const auto& t : terms)
        if (t.value && (!best || *t.value < *best)) best = t.value;
    if (!best) throw std::invalid_argument("every min-term is infinite");
    v.terms = std::move(terms);
    v.bound = *best;
    v.exceeds_one = v.bound > Rational(1);
    v.s = std::move(s);
    return v;
}

namespace {

std::optional<Rational> ratio(const Rational& num, const Rational& den) {
    if (den.is_zero()) return std::nullopt;
    return num / den;
}

}  // namespace

DeltaVerdict verdict_for_profile(const ZariskiProfile& profile) {
    SBreakdown s = s_values(profile);
    std::vector<Term> terms = {
        {"surface", ratio(1, s.S_A_Y)},
        {"curve", ratio(profile.curve_weight, s.S_V)},
        {"point", ratio(profile.a_weight, s.S_W)},
    };
    return assemble(std::move(terms), s);
}

DeltaVerdict delta_bound(const FlagSpec& spec) { return verdict_for_profile(build_profile(spec)); }

std::vector<Rational> type_I_closed_terms(const FlagTypeI& s) {
    return {Rational(4 * s.l_Y), Rational(4 * s.l_H, s.e),
            Rational(4 * s.e) / (Rational(s.r_P) * Rational(s.l_Y) * Rational(s.l_H) * s.A3)};
}

Rational f_term_closed_form(const FlagTypeIIa& s) {
    if (s.nu.is_zero()) throw std::invalid_argument("nu must be nonzero");
    const Rational n(s.n), lH(s.l_H);
    return n * n * n / (Rational(4 * s.l_Y) * lH * lH * lH * s.A3) * s.mu * (s.nu * s.nu + s.lambda * s.mu) /
           (s.nu * s.nu) * s.ord;
}

IIbClosedForms type_IIb_closed_forms(const FlagTypeIIb& s) {
    const Rational m(s.m), n(s.n), lH(s.l_H);
    const Rational& lam = s.lambda;
    const Rational& nu = s.nu;
    const Rational denom = Rational(4 * s.l_Y) * lH * lH * lH * s.A3;
    IIbClosedForms c;
    c.S_V = m * m * (Rational(3) * n * nu + m * lam) / denom;
    c.S_W = m * (m * m * lam * lam + Rational(3) * m * n * lam * nu + Rational(3) * n * n * nu * nu) / denom;
    c.terms = {Rational(4 * s.l_Y), Rational(1) / c.S_V, Rational(1) / (Rational(s.r_P) * c.S_W)};
    return c;
}

BLClosedForms bl_closed_forms(int r_int, int e_int) {
    if (r_int < 2) throw std::invalid_argument("BL flag needs r >= 2");
    const Rational r(r_int), e(e_int);
    BLClosedForms c;
    c.S_V = (r * r + Rational(4) * r * e + Rational(2) * e * e) / (Rational(4) * e * r * (e + r));
    c.S_W_upper = (e + r) / (Rational(4) * e);
    c.F_upper = r * r / (Rational(4) * e * (e + r));
    c.delta = Rational(4) * e / (e + r);
    return c;
}

Rational alpha_to_delta(const Rational& alpha_lower) {
    if (alpha_lower <= Rational(0)) throw std::invalid_argument("alpha bound must be positive");
    return Rational(4, 3) * alpha_lower;
}

Rational isolating_alpha_bound(int r, int n_class, int e_max, const Rational& A3) {
    if (r <= 0 || n_class <= 0 || e_max <= 0 || A3 <= Rational(0))
        throw std::invalid_argument("isolating-class inputs must be positive");
    Rational c = Rational(1) / (Rational(r) * Rational(n_class) * Rational(e_max) * A3);
    return min(Rational(1), c);
}

nlohmann::json verdict_to_json(const DeltaVerdict& v) {
    nlohmann::json j;
    if (v.s) {
        j["S_A_Y"] = v.s->S_A_Y.str();
        j["S_V"] = v.s->S_V.str();
        j["S_W"] = v.s->S_W.str();
        j["F_P"] = v.s->F_P.str();
        j["S_W_is_upper_bound"] = v.s->s_w_upper_bound;
    }
    j["terms"] = nlohmann::json::array();
    for (const auto& t : v.terms) j["terms"].push_back({t.label, t.value ? t.value->str() : "inf"});
    j["bound"] = v.bound.str();
    j["exceeds_one"] = v.exceeds_one;
    return j;
}

DeltaVerdict verdict_from_json(const nlohmann::json& j) {
    auto rat = [&](const std::string& key) {
        if (!j.contains(key) || !j[key].is_string()) throw std::invalid_argument(key + ": missing or not a string");
        try {
            return Rational::parse(j[key].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(key + ": " + e.what());
        }
    };
    DeltaVerdict v;
    if (j.contains("S_V")) {
        SBreakdown s{rat("S_A_Y"), rat("S_V"), rat("S_W"), rat("F_P"), j.value("S_W_is_upper_bound", false)};
        v.s = s;
    }
    if (!j.contains("terms") || !j["terms"].is_array()) throw std::invalid_argument("terms: missing or not an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_string())
            throw std::invalid_argument("terms: expected [label, value] pairs");
        std::string value = t[1].get<std::string>();
        v.terms.push_back({t[0].get<std::string>(), value == "inf" ? std::nullopt : std::optional(Rational::parse(value))});
    }
    v.bound = rat("bound");
    if (!j.contains("exceeds_one") || !j["exceeds_one"].is_boolean())
        throw std::invalid_argument("exceeds_one: missing or not a boolean");
    v.exceeds_one = j["exceeds_one"].get<bool>();
    return v;
}

}  // namespace fano
