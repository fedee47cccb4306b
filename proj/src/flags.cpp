#include "fanodelta/flags.hpp"

#include <algorithm>
#include <stdexcept>

namespace fano {

namespace {

BiPoly t_minus_v() { return BiPoly::x() - BiPoly::v(); }

Rational R(long n) { return Rational(n); }

}  // namespace

void validate_profile(const ZariskiProfile& p) {
    if (p.A3 <= Rational(0)) throw ProfileError("A3 must be positive");
    if (p.tau_u <= Rational(0)) throw ProfileError("tau_u must be positive");
    if (p.t_of_u.eval(0) <= Rational(0)) throw ProfileError("t_of_u must be positive at u = 0");
    if (p.t_of_u.eval(p.tau_u) < Rational(0)) throw ProfileError("t_of_u is negative at u = tau_u");
    if (p.a_weight <= Rational(0)) throw ProfileError("a_weight must be positive");
    if (p.curve_weight <= Rational(0)) throw ProfileError("curve_weight must be positive");
    if (p.segments.empty()) throw ProfileError("profile has no segments");
    if (!p.segments.front().lo.is_zero()) throw ProfileError("segment 0 must start at 0");
    if (!p.segments.front().ordN.on_ray(0).is_zero()) throw ProfileError("segment 0: ordN must vanish at v = 0");
    const bool vol2_vanishes = std::all_of(p.segments.begin(), p.segments.end(),
                                           [](const ProfileSegment& s) { return s.vol2.is_zero(); });
    if (!vol2_vanishes && p.segments.front().vol2.eval(p.t_of_u.eval(0), 0) <= Rational(0))
        throw ProfileError("segment 0: vol2 must be positive at u = 0, v = 0");

    for (size_t i = 0; i < p.segments.size(); ++i) {
        const auto& s = p.segments[i];
        if (s.hi <= s.lo) throw ProfileError("segment " + std::to_string(i) + ": empty or reversed interval");
        if (i + 1 == p.segments.size()) break;
        const auto& next = p.segments[i + 1];
        const std::string where = "boundary " + s.hi.str() + " between segments " + std::to_string(i) + " and " +
                                  std::to_string(i + 1);
        if (next.lo != s.hi) throw ProfileError(where + ": gap or overlap");
        if (s.vol2.on_ray(s.hi) != next.vol2.on_ray(s.hi)) throw ProfileError(where + ": vol2 is discontinuous");
        if (s.deg1.on_ray(s.hi) != next.deg1.on_ray(s.hi)) throw ProfileError(where + ": deg1 is discontinuous");
        if (s.ordN.on_ray(s.hi) != next.ordN.on_ray(s.hi)) throw ProfileError(where + ": ordN is discontinuous");
    }
    const auto& last = p.segments.back();
    if (!last.vol2.on_ray(last.hi).is_zero())
        throw ProfileError("segment " + std::to_string(p.segments.size() - 1) + ": vol2 does not vanish at the last boundary " +
                           last.hi.str());
}

ZariskiProfile profile_type_I(const FlagTypeI& s) {
    if (s.l_Y <= 0 || s.l_H <= 0 || s.e <= 0 || s.r_P <= 0) throw std::invalid_argument("type I parameters must be positive");
    const Rational e(s.e), lH(s.l_H), lY(s.l_Y);
    ZariskiProfile p;
    p.A3 = s.A3;
    p.tau_u = Rational(1) / lY;
    p.t_of_u = {e / lH, -e * lY / lH};
    ProfileSegment seg;
    seg.lo = 0;
    seg.hi = 1;
    seg.vol2 = (lH * lH / (e * e) * lY * s.A3) * (t_minus_v() * t_minus_v());
    seg.deg1 = (lY * lH * lH * s.A3 / (e * e)) * t_minus_v();
    p.segments.push_back(std::move(seg));
    p.a_weight = Rational(1, s.r_P);
    validate_profile(p);
    return p;
}

ZariskiProfile profile_type_IIa(const FlagTypeIIa& s) {
    if (s.l_Y <= 0 || s.l_H <= 0 || s.m <= 0 || s.n <= 0 || s.r_P <= 0)
        throw std::invalid_argument("not a valid IIa configuration: integer parameters must be positive");
    const Rational m(s.m), n(s.n);
    const Rational& lam = s.lambda;
    const Rational& mu = s.mu;
    const Rational& nu = s.nu;
    if (!check_negative_definite(-mu, 0, 1)) throw std::invalid_argument("not a valid IIa configuration: mu must be positive");
    if (!(m * nu > n * mu)) throw std::invalid_argument("not a valid IIa configuration: need m*nu > n*mu");
    if (!(nu * nu + lam * mu > Rational(0)))
        throw std::invalid_argument("not a valid IIa configuration: need nu^2 + lambda*mu > 0");
    if (!(R(2) * m * n * nu + m * m * lam - n * n * mu > Rational(0)))
        throw std::invalid_argument("not a valid IIa configuration: (H|_Y)^2 must be positive");

    ZariskiProfile p;
    p.A3 = s.A3;
    p.tau_u = Rational(1, s.l_Y);
    p.t_of_u = {m / Rational(s.l_H), -m * Rational(s.l_Y) / Rational(s.l_H)};

    const Rational split = (m * nu - n * mu) / (m * nu);
    const Rational C = (R(2) * m * n * nu + m * m * lam - n * n * mu) / (m * m);
    const Rational k = (n * nu + m * lam) / m;
    const Rational q = (nu * nu + lam * mu) / mu;
    const BiPoly t = BiPoly::x(), v = BiPoly::v();

    ProfileSegment first;
    first.lo = 0;
    first.hi = split;
    first.vol2 = C * (t * t) - (R(2) * k) * (t * v) + lam * (v * v);
    first.deg1 = k * t - lam * v;

    ProfileSegment second;
    second.lo = split;
    second.hi = 1;
    second.vol2 = q * (t_minus_v() * t_minus_v());
    second.deg1 = q * t_minus_v();
    second.ordN = (s.ord / (m * mu)) * ((m * nu) * v - (m * nu - n * mu) * t);

    p.segments = {first, second};
    p.a_weight = Rational(1, s.r_P);
    validate_profile(p);
    return p;
}

ZariskiProfile profile_type_IIb(const FlagTypeIIb& s) {
    if (s.l_Y <= 0 || s.l_H <= 0 || s.m <= 0 || s.n <= 0 || s.r_P <= 0)
        throw std::invalid_argument("not a valid IIb configuration: integer parameters must be positive");
    const Rational m(s.m), n(s.n);
    if (!(s.nu > Rational(0))) throw std::invalid_argument("not a valid IIb configuration: nu must be positive");
    if (!(n * s.nu > -m * s.lambda)) throw std::invalid_argument("not a valid IIb configuration: need n*nu > -m*lambda");

    ZariskiProfile p;
    p.A3 = s.A3;
    p.tau_u = Rational(1, s.l_Y);
    p.t_of_u = {m / Rational(s.l_H), -m * Rational(s.l_Y) / Rational(s.l_H)};
    const BiPoly t = BiPoly::x();
    ProfileSegment seg;
    seg.lo = 0;
    seg.hi = 1;
    seg.vol2 = s.lambda * (t_minus_v() * t_minus_v()) + (R(2) * n / m * s.nu) * (t * t_minus_v());
    seg.deg1 = s.lambda * t_minus_v() + (n / m * s.nu) * t;
    p.segments.push_back(std::move(seg));
    p.a_weight = Rational(1, s.r_P);
    validate_profile(p);
    return p;
}

ZariskiProfile profile_type_BL(const FlagTypeBL& s) {
    if (s.r < 2) throw std::invalid_argument("BL flag needs r >= 2");
    if (s.e < 1) throw std::invalid_argument("BL flag needs e >= 1");
    const Rational r(s.r), e(s.e);
    const Rational d = R(2) * r + e;
    const Rational er = e + r;

    ZariskiProfile p;
    p.A3 = d / ((r - R(1)) * e * r);
    p.tau_u = Rational(1) / (r - R(1));
    p.t_of_u = {er / (e * r), -er * (r - R(1)) / (e * r)};

    const Rational split = e * d / (er * er);
    const BiPoly t = BiPoly::x(), v = BiPoly::v();

    ProfileSegment first;
    first.lo = 0;
    first.hi = split;
    first.vol2 = (e * r * d / (er * er)) * (t * t) - r * (v * v);
    first.deg1 = r * v;

    // ord_Q(N|_C) <= e + r gives the upper-bound integrand for the F term.
    ProfileSegment second;
    second.lo = split;
    second.hi = 1;
    second.vol2 = (e * d / r) * (t_minus_v() * t_minus_v());
    second.deg1 = (e * d / r) * t_minus_v();
    second.ordN = (er * er / r) * (v - split * t);

    p.segments = {first, second};
    p.a_weight = 1;
    p.curve_weight = 2;
    p.s_w_upper_bound = true;
    validate_profile(p);
    return p;
}

ZariskiProfile profile_custom(const ZariskiProfile& raw) {
    validate_profile(raw);
    return raw;
}

ZariskiProfile build_profile(const FlagSpec& spec) {
    return std::visit(
        [](const auto& s) -> ZariskiProfile {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FlagTypeI>) return profile_type_I(s);
            else if constexpr (std::is_same_v<T, FlagTypeIIa>) return profile_type_IIa(s);
            else if constexpr (std::is_same_v<T, FlagTypeIIb>) return profile_type_IIb(s);
            else if constexpr (std::is_same_v<T, FlagTypeBL>) return profile_type_BL(s);
            else return profile_custom(s.profile);
        },
        spec);
}

ZariskiProfile rescale_boundaries(const ZariskiProfile& p, const Rational& c) {
    if (c <= Rational(0)) throw std::invalid_argument("rescaling factor must be positive");
    ZariskiProfile out = p;
    out.t_of_u = {p.t_of_u.constant / c, p.t_of_u.slope / c};
    for (auto& s : out.segments) {
        s.lo *= c;
        s.hi *= c;
        s.vol2 = s.vol2.scale_first(c);
        s.deg1 = s.deg1.scale_first(c);
        s.ordN = s.ordN.scale_first(c);
    }
    return out;
}

bool check_negative_definite(const Rational& diag, const Rational& offdiag, int k) {
    if (k < 1) throw std::invalid_argument("matrix size must be positive");
    if (k == 1) return diag < Rational(0);
    return diag - offdiag < Rational(0) && diag + Rational(k - 1) * offdiag < Rational(0);
}

Rational intersection_from_adjunction(const Rational& K_dot_curve, int p_a, const std::vector<int>& indices) {
    if (p_a < 0) throw std::invalid_argument("arithmetic genus must be nonnegative");
    Rational out = -K_dot_curve + Rational(2 * p_a - 2);
    for (int r : indices) {
        if (r < 2) throw std::invalid_argument("singular index must be at least 2");
        out += Rational(r - 1, r);
    }
    return out;
}

Residual solve_residual_intersections(const Rational& H_sq, int m, int n, const Rational& gamma_sq,
                                      const Rational& H_dot_gamma) {
    if (n == 0) throw std::invalid_argument("residual multiplicity n must be nonzero");
    const Rational M(m), N(n);
    Residual out;
    out.nu = (H_dot_gamma - M * gamma_sq) / N;
    const Rational H_dot_delta = (H_sq - M * H_dot_gamma) / N;
    out.delta_sq = (H_dot_delta - M * out.nu) / N;
    return out;
}

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key)) throw ProfileError(path + key + ": missing");
    const json& x = j.at(key);
    if (!x.is_string()) throw ProfileError(path + key + ": expected a \"p/q\" string");
    try {
        return Rational::parse(x.get<std::string>());
    } catch (const std::exception& e) {
        throw ProfileError(path + key + ": " + e.what());
    }
}

json poly_to_json(const BiPoly& p) {
    json out = json::array();
    for (const auto& [k, c] : p.terms()) out.push_back(json::array({k.first, k.second, c.str()}));
    return out;
}

BiPoly poly_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) throw ProfileError(path + ": expected an array of [i, j, \"coeff\"]");
    BiPoly p;
    for (size_t n = 0; n < j.size(); ++n) {
        const json& t = j[n];
        const std::string here = path + "[" + std::to_string(n) + "]";
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() || !t[2].is_string())
            throw ProfileError(here + ": expected [i, j, \"coeff\"]");
        int i = t[0].get<int>(), k = t[1].get<int>();
        if (i < 0 || k < 0) throw ProfileError(here + ": negative exponent");
        try {
            p.add_term(i, k, Rational::parse(t[2].get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ProfileError(here + ": " + e.what());
        }
    }
    return p;
}

}  // namespace

nlohmann::json profile_to_json(const ZariskiProfile& p) {
    json j;
    j["A3"] = p.A3.str();
    j["tau_u"] = p.tau_u.str();
    j["t_of_u"] = {{"constant", p.t_of_u.constant.str()}, {"slope", p.t_of_u.slope.str()}};
    j["a_weight"] = p.a_weight.str();
    j["curve_weight"] = p.curve_weight.str();
    j["s_w_upper_bound"] = p.s_w_upper_bound;
    j["segments"] = json::array();
    for (const auto& s : p.segments)
        j["segments"].push_back({{"lo", s.lo.str()},
                                 {"hi", s.hi.str()},
                                 {"vol2", poly_to_json(s.vol2)},
                                 {"deg1", poly_to_json(s.deg1)},
                                 {"ordN", poly_to_json(s.ordN)}});
    return j;
}

ZariskiProfile profile_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ProfileError("profile must be a JSON object");
    ZariskiProfile p;
    p.A3 = rational_field(j, "A3", "");
    p.tau_u = rational_field(j, "tau_u", "");
    if (!j.contains("t_of_u") || !j["t_of_u"].is_object()) throw ProfileError("t_of_u: missing or not an object");
    p.t_of_u = {rational_field(j["t_of_u"], "constant", "t_of_u."), rational_field(j["t_of_u"], "slope", "t_of_u.")};
    p.a_weight = rational_field(j, "a_weight", "");
    if (j.contains("curve_weight")) p.curve_weight = rational_field(j, "curve_weight", "");
    if (j.contains("s_w_upper_bound")) {
        if (!j["s_w_upper_bound"].is_boolean()) throw ProfileError("s_w_upper_bound: expected a boolean");
        p.s_w_upper_bound = j["s_w_upper_bound"].get<bool>();
    }
    if (!j.contains("segments") || !j["segments"].is_array()) throw ProfileError("segments: missing or not an array");
    for (size_t n = 0; n < j["segments"].size(); ++n) {
        const json& s = j["segments"][n];
        const std::string path = "segments[" + std::to_string(n) + "].";
        if (!s.is_object()) throw ProfileError(path.substr(0, path.size() - 1) + ": expected an object");
        ProfileSegment seg;
        seg.lo = rational_field(s, "lo", path);
        seg.hi = rational_field(s, "hi", path);
        for (const char* key : {"vol2", "deg1"})
            if (!s.contains(key)) throw ProfileError(path + key + ": missing");
        seg.vol2 = poly_from_json(s["vol2"], path + "vol2");
        seg.deg1 = poly_from_json(s["deg1"], path + "deg1");
        if (s.contains("ordN")) seg.ordN = poly_from_json(s["ordN"], path + "ordN");
        p.segments.push_back(std::move(seg));
    }
    return p;
}

}  // namespace fano
