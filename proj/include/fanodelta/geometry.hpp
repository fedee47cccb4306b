#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanodelta/rational.hpp"

namespace fano {

using Weights = std::array<int, 5>;
using Exponent = std::array<int, 5>;

// Coordinate names x, y, z, t, w for x0..x4.
extern const std::array<const char*, 5> kCoordNames;

struct Family {
    std::optional<int> id;
    int d = 0;
    Weights a{};
};

// Validates positivity, the index-1 condition and well-formedness; sorts the weights.
Family make_family(int d, Weights weights, std::optional<int> id = std::nullopt);

// "d;a0,a1,a2,a3,a4"
Family parse_family_literal(std::string_view text);
std::string family_literal(const Family& f);

Rational anticanonical_cube(const Family& f);

int weighted_degree(const Weights& w, const Exponent& e);

std::vector<Exponent> monomials_of_degree(const Weights& w, int deg);
std::vector<Exponent> monomials_of_degree(const Family& f, int deg);

struct QuotientSingularity {
    int r = 0;
    std::array<int, 3> w{};  // normalized to (1, a, r-a) with a <= r-a
    std::string location;

    std::string type() const;  // "1/r(1,a,r-a)"
    bool same_type(const QuotientSingularity& o) const { return r == o.r && w == o.w; }
};

// Reduces weights mod r and normalizes a terminal type; throws on non-terminal input.
QuotientSingularity make_quotient(int r, std::array<int, 3> weights, std::string location = {});

// "1/r(w1,w2,w3)"
QuotientSingularity parse_point(std::string_view text);

struct KawamataData {
    int r = 0;
    int a = 0;
    Rational discrepancy;
    Rational exc_cube;
    Rational log_discrepancy;
};

KawamataData kawamata_data(const QuotientSingularity& s);

// Basket of a general quasismooth member. Weights may be given in any order.
std::vector<QuotientSingularity> enumerate_singularities(int d, const Weights& weights);
std::vector<QuotientSingularity> enumerate_singularities(const Family& f);

// "2x 1/2(1,1,1); 1/3(1,1,2)"
std::string basket_string(const std::vector<QuotientSingularity>& basket);

// Homogeneous polynomial of degree d in the family's coordinates.
class WeightedPoly {
public:
    explicit WeightedPoly(Family f) : family_(std::move(f)) {}

    const Family& family() const { return family_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    // Throws std::invalid_argument when the monomial has the wrong degree.
    void add_term(const Exponent& e, const Rational& c);
    Rational coefficient(const Exponent& e) const;
    bool is_zero() const { return terms_.empty(); }

private:
    Family family_;
    std::map<Exponent, Rational> terms_;
};

// Every monomial of degree d with a pseudo-random nonzero coefficient.
WeightedPoly general_member(const Family& f, std::uint64_t seed);

// Sets the listed coordinates to zero.
WeightedPoly restrict_to_stratum(const WeightedPoly& p, const std::vector<int>& vanishing);

}  // namespace fano
