#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanodelta/flags.hpp"

namespace fano {

struct SBreakdown {
    Rational S_A_Y;
    Rational S_V;
    Rational S_W;
    Rational F_P;
    bool s_w_upper_bound = false;
    friend bool operator==(const SBreakdown&, const SBreakdown&) = default;
};

struct Term {
    std::string label;
    std::optional<Rational> value;  // empty means +infinity
    friend bool operator==(const Term&, const Term&) = default;
};

struct DeltaVerdict {
    std::vector<Term> terms;
    Rational bound;
    bool exceeds_one = false;
    std::optional<SBreakdown> s;
    friend bool operator==(const DeltaVerdict&, const DeltaVerdict&) = default;

    const Term& active_term() const;
};

SBreakdown s_values(const ZariskiProfile& profile);

// Minimum of the finite terms; throws if every term is infinite.
DeltaVerdict assemble(std::vector<Term> terms, std::optional<SBreakdown> s = std::nullopt);

DeltaVerdict verdict_for_profile(const ZariskiProfile& profile);
DeltaVerdict delta_bound(const FlagSpec& spec);

// min{4 l_Y, 4 l_H / e, 4e / (r_P l_Y l_H A3)}
std::vector<Rational> type_I_closed_terms(const FlagTypeI& s);

Rational f_term_closed_form(const FlagTypeIIa& s);

struct IIbClosedForms {
    Rational S_V;
    Rational S_W;
    std::vector<Rational> terms;
};
IIbClosedForms type_IIb_closed_forms(const FlagTypeIIb& s);

struct BLClosedForms {
    Rational S_V;
    Rational S_W_upper;
    Rational F_upper;
    Rational delta;
};
BLClosedForms bl_closed_forms(int r, int e);

Rational alpha_to_delta(const Rational& alpha_lower);
Rational isolating_alpha_bound(int r, int n_class, int e_max, const Rational& A3);

nlohmann::json verdict_to_json(const DeltaVerdict& v);
DeltaVerdict verdict_from_json(const nlohmann::json& j);

}  // namespace fano
