#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fanodelta/poly.hpp"

namespace fano {

struct FlagTypeI {
    int l_Y = 1, l_H = 1, e = 1, r_P = 1;
    Rational A3;
};

struct FlagTypeIIa {
    int l_Y = 1, l_H = 1, m = 1, n = 1;
    Rational lambda, mu, nu;
    int r_P = 1;
    Rational ord;
    Rational A3;
};

struct FlagTypeIIb {
    int l_Y = 1, l_H = 1, m = 1, n = 1;
    Rational lambda, nu;
    int r_P = 1;
    Rational A3;
};

struct FlagTypeBL {
    int r = 2, e = 1;
};

struct ProfileSegment {
    Rational lo, hi;  // fractions of t(u)
    BiPoly vol2;      // (P(u,v)^2) in (t, v)
    BiPoly deg1;      // (P(u,v) . curve)
    BiPoly ordN;      // ord_P(N(u,v)|_curve)
    friend bool operator==(const ProfileSegment&, const ProfileSegment&) = default;
};

struct ZariskiProfile {
    Rational A3;
    Rational tau_u;
    LinForm t_of_u;
    std::vector<ProfileSegment> segments;
    Rational a_weight{1};
    Rational curve_weight{1};
    bool s_w_upper_bound = false;
    friend bool operator==(const ZariskiProfile&, const ZariskiProfile&) = default;
};

struct FlagCustom {
    ZariskiProfile profile;
};

using FlagSpec = std::variant<FlagTypeI, FlagTypeIIa, FlagTypeIIb, FlagTypeBL, FlagCustom>;

class ProfileError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Throws ProfileError naming the failing segment or boundary.
void validate_profile(const ZariskiProfile& p);

ZariskiProfile profile_type_I(const FlagTypeI& s);
ZariskiProfile profile_type_IIa(const FlagTypeIIa& s);
ZariskiProfile profile_type_IIb(const FlagTypeIIb& s);
ZariskiProfile profile_type_BL(const FlagTypeBL& s);
ZariskiProfile profile_custom(const ZariskiProfile& raw);
ZariskiProfile build_profile(const FlagSpec& spec);

// Same integrals, boundaries written as multiples of t(u)/c.
ZariskiProfile rescale_boundaries(const ZariskiProfile& p, const Rational& c);

bool check_negative_definite(const Rational& diag, const Rational& offdiag, int k);

Rational intersection_from_adjunction(const Rational& K_dot_curve, int p_a, const std::vector<int>& indices);

struct Residual {
    Rational nu;
    Rational delta_sq;
};

Residual solve_residual_intersections(const Rational& H_sq, int m, int n, const Rational& gamma_sq,
                                      const Rational& H_dot_gamma);

nlohmann::json profile_to_json(const ZariskiProfile& p);
ZariskiProfile profile_from_json(const nlohmann::json& j);

}  // namespace fano
