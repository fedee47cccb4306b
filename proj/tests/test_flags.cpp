#include <doctest.h>

#include <fstream>

#include "fanodelta/delta.hpp"
#include "gen.hpp"

using namespace fano;

namespace {

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

ZariskiProfile n13_iv() {
    std::ifstream in(std::string(FANO_DELTA_DATA_DIR) + "/profiles/n13_iv.json");
    REQUIRE(in);
    return profile_from_json(nlohmann::json::parse(in));
}

FlagTypeI random_type_I(test::Gen& g) {
    return {g.integer(1, 7), g.integer(1, 3), g.integer(1, 5), g.integer(2, 11), g.positive(30, 60)};
}

FlagTypeIIa random_type_IIa(test::Gen& g) {
    FlagTypeIIa s;
    s.l_Y = g.integer(1, 5);
    s.l_H = g.integer(1, 3);
    s.m = g.integer(1, 3);
    s.n = g.integer(1, 3);
    s.mu = g.positive();
    s.nu = Rational(s.n) * s.mu / Rational(s.m) + g.positive();
    // lambda drawn above both floors: nu^2 + lambda*mu > 0 and 2mn*nu + m^2*lambda - n^2*mu > 0
    const Rational m(s.m), n(s.n);
    const Rational floor = max(-s.nu * s.nu / s.mu, (n * n * s.mu - Rational(2) * m * n * s.nu) / (m * m));
    s.lambda = floor + (max(Rational(1), floor + Rational(1)) - floor) * Rational(g.integer(1, 20), 20);
    s.r_P = g.integer(2, 11);
    s.ord = Rational(g.integer(0, 6), g.integer(1, 6));
    s.A3 = g.positive(30, 60);
    return s;
}

FlagTypeIIb random_type_IIb(test::Gen& g) {
    FlagTypeIIb s;
    s.l_Y = g.integer(1, 5);
    s.l_H = g.integer(1, 3);
    s.m = g.integer(1, 3);
    s.n = g.integer(1, 3);
    s.nu = g.positive();
    const Rational floor = -Rational(s.n) * s.nu / Rational(s.m);
    s.lambda = floor + g.positive();
    s.r_P = g.integer(2, 11);
    s.A3 = g.positive(30, 60);
    return s;
}

// Leading principal minors of the constant-diagonal matrix alternate in sign starting negative.
bool negative_definite_by_minors(const Rational& diag, const Rational& off, int k) {
    for (int size = 1; size <= k; ++size) {
        std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size, off));
        for (int i = 0; i < size; ++i) a[i][i] = diag;
        Rational det = 1;
        for (int col = 0; col < size; ++col) {
            int pivot = col;
            while (pivot < size && a[pivot][col].is_zero()) ++pivot;
            if (pivot == size) {
                det = 0;
                break;
            }
            if (pivot != col) {
                std::swap(a[pivot], a[col]);
                det = -det;
            }
            det *= a[col][col];
            for (int r = col + 1; r < size; ++r) {
                const Rational f = a[r][col] / a[col][col];
                for (int c = col; c < size; ++c) a[r][c] -= f * a[col][c];
            }
        }
        const bool want_negative = size % 2 == 1;
        if (want_negative ? !(det < Rational(0)) : !(det > Rational(0))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("type I profile examples") {
    const ZariskiProfile p = profile_type_I({1, 1, 1, 3, Rational(7, 6)});
    REQUIRE(p.segments.size() == 1);
    CHECK(p.segments[0].ordN.is_zero());
    CHECK(p.t_of_u == LinForm{1, -1});
    const DeltaVerdict v = delta_bound(FlagTypeI{1, 1, 1, 3, Rational(7, 6)});
    CHECK(v.terms[0].value == Rational(4));
    CHECK(v.terms[1].value == Rational(4));
    CHECK(v.bound == Rational(8, 7));
    CHECK(delta_bound(FlagTypeI{2, 1, 1, 5, Rational(11, 30)}).terms[2].value == Rational(12, 11));
    CHECK_THROWS(profile_type_I({0, 1, 1, 3, Rational(7, 6)}));
}

TEST_CASE("type IIa profile examples") {
    const ZariskiProfile p5 =
        profile_type_IIa({1, 1, 1, 1, Rational(-5, 6), Rational(1, 2), Rational(1), 3, Rational(0), Rational(7, 6)});
    REQUIRE(p5.segments.size() == 2);
    CHECK(p5.segments[0].hi == Rational(1, 2));
    CHECK(p5.segments[0].vol2.coeff(2, 0) == Rational(2, 3));
    CHECK(p5.segments[0].vol2.coeff(1, 1) == Rational(-1, 3));
    CHECK(p5.segments[0].vol2.coeff(0, 2) == Rational(-5, 6));
    CHECK(p5.segments[1].vol2.coeff(2, 0) == Rational(7, 6));
    CHECK(p5.segments[1].vol2 == Rational(7, 6) * (BiPoly::x() - BiPoly::v()) * (BiPoly::x() - BiPoly::v()));

    const ZariskiProfile p13 = profile_type_IIa(
        {1, 1, 1, 1, Rational(-8, 15), Rational(3, 10), Rational(3, 5), 5, Rational(3, 5), Rational(11, 30)});
    CHECK(p13.segments[0].hi == Rational(1, 2));
    CHECK(p13.segments[0].vol2.coeff(2, 0) == Rational(11, 30));
    CHECK(p13.segments[0].vol2.coeff(1, 1) == Rational(-2, 15));
    CHECK(p13.segments[0].vol2.coeff(0, 2) == Rational(-8, 15));
    CHECK(p13.segments[1].deg1.coeff(1, 0) == Rational(2, 3));

    // n*mu = m*nu collapses the second segment
    CHECK_THROWS_WITH(
        profile_type_IIa({1, 1, 1, 1, Rational(-1, 2), Rational(1, 2), Rational(1, 2), 3, Rational(0), Rational(1)}),
        doctest::Contains("not a valid IIa configuration"));
    CHECK_THROWS_WITH(
        profile_type_IIa({1, 1, 1, 1, Rational(-1, 2), Rational(0), Rational(1, 2), 3, Rational(0), Rational(1)}),
        doctest::Contains("not a valid IIa configuration"));
    CHECK_THROWS_WITH(
        profile_type_IIa({1, 1, 1, 1, Rational(-3), Rational(1, 10), Rational(1), 3, Rational(0), Rational(1)}),
        doctest::Contains("must be positive"));
}

TEST_CASE("type IIb profile examples") {
    const Rational A3(7, 60);
    const FlagTypeIIb s{1, 1, 1, 1, Rational(0), Rational(2, 3), 5, A3};
    const DeltaVerdict v = delta_bound(s);
    CHECK(v.s->S_V == Rational(3) * Rational(2, 3) / (Rational(4) * A3));
    CHECK(type_IIb_closed_forms(s).S_V == v.s->S_V);
    CHECK_THROWS_WITH(profile_type_IIb({1, 1, 1, 1, Rational(-1), Rational(1, 2), 5, A3}),
                      doctest::Contains("not a valid IIb configuration"));
    CHECK_THROWS(profile_type_IIb({1, 1, 1, 1, Rational(0), Rational(0), 5, A3}));
}

TEST_CASE("BL profile examples") {
    CHECK(delta_bound(FlagTypeBL{2, 1}).bound == Rational(4, 3));
    CHECK(delta_bound(FlagTypeBL{3, 4}).bound == Rational(16, 7));
    CHECK(delta_bound(FlagTypeBL{4, 7}).bound == Rational(28, 11));
    CHECK_THROWS(profile_type_BL({1, 3}));
    const ZariskiProfile p = profile_type_BL({5, 3});
    CHECK(p.tau_u == Rational(1, 4));
    CHECK(p.segments[0].hi == Rational(39, 64));
    CHECK(p.s_w_upper_bound);
}

TEST_CASE("custom profile for the weighted blow-up") {
    const ZariskiProfile p = profile_custom(n13_iv());
    CHECK(p.segments[0].hi == Rational(1, 5));
    CHECK(p.segments[1].hi == Rational(11, 5));
    // positive part ((11t - 5v)/10) P with P^2 = 1/3 and P.C = 1/6
    const BiPoly scale = Rational(1, 10) * (Rational(11) * BiPoly::x() - Rational(5) * BiPoly::v());
    CHECK(p.segments[1].vol2 == Rational(1, 3) * scale * scale);
    CHECK(p.segments[1].deg1 == Rational(1, 6) * scale);
    // ord_Q(N|_C) stays within its cap of 1 on the whole range
    CHECK(p.segments[1].ordN.on_ray(p.segments[1].hi).coeff(1) <= Rational(1));

    ZariskiProfile bad = p;
    bad.segments[1].vol2.add_term(2, 0, Rational(1, 100));
    bad.segments[0].vol2.add_term(2, 0, Rational(1, 100));
    CHECK_THROWS_WITH_AS(profile_custom(bad), doctest::Contains("does not vanish"), ProfileError);

    bad = p;
    bad.segments[1].lo = Rational(1, 4);
    CHECK_THROWS_WITH_AS(profile_custom(bad), doctest::Contains("gap"), ProfileError);

    bad = p;
    bad.segments[1].deg1.add_term(1, 0, Rational(1));
    bad.segments[1].deg1.add_term(0, 1, Rational(-1, 1) / Rational(11, 5));
    CHECK_THROWS_WITH_AS(profile_custom(bad), doctest::Contains("deg1 is discontinuous"), ProfileError);

    bad = p;
    bad.segments[0].ordN = BiPoly::x();
    CHECK_THROWS_WITH_AS(profile_custom(bad), doctest::Contains("segment 0"), ProfileError);

    bad = p;
    bad.segments.clear();
    CHECK_THROWS_AS(profile_custom(bad), ProfileError);
}

TEST_CASE("negative definiteness examples") {
    CHECK(check_negative_definite(Rational(-1, 2), 0, 1));
    CHECK_FALSE(check_negative_definite(0, 0, 1));
    CHECK(check_negative_definite(-1, 0, 3));
    CHECK_THROWS(check_negative_definite(-1, 0, 0));
}

TEST_CASE("property: negative definiteness agrees with leading minors") {
    const Rational values[] = {-2, -1, Rational(-1, 2), 0, Rational(1, 2), 1};
    int cases = 0;
    for (int k = 1; k <= 5; ++k)
        for (const auto& diag : values)
            for (const auto& off : values) {
                CAPTURE(k);
                CAPTURE(diag);
                CAPTURE(off);
                CHECK(check_negative_definite(diag, off, k) == negative_definite_by_minors(diag, off, k));
                ++cases;
            }
    CHECK(cases == 180);
}

TEST_CASE("adjunction examples") {
    CHECK(intersection_from_adjunction(0, 0, {3, 5}) == Rational(-8, 15));
    CHECK(intersection_from_adjunction(0, 1, {}) == Rational(0));
    CHECK(intersection_from_adjunction(Rational(1, 5), 0, {2, 5}) == Rational(-9, 10));
    CHECK_THROWS(intersection_from_adjunction(0, -1, {}));
    CHECK_THROWS(intersection_from_adjunction(0, 0, {1}));
}

TEST_CASE("residual intersection examples") {
    const Residual r5 = solve_residual_intersections(Rational(7, 6), 1, 1, Rational(-5, 6), Rational(1, 6));
    CHECK(r5.nu == Rational(1));
    // the printed (Delta^2) = -1/2 is not what these inputs give
    CHECK(r5.delta_sq == Rational(0));
    const Residual r13 = solve_residual_intersections(Rational(11, 30), 1, 3, Rational(-8, 15), Rational(1, 15));
    CHECK(r13.nu == Rational(1, 5));
    CHECK(r13.delta_sq == Rational(-1, 30));
    CHECK(solve_residual_intersections(1, 1, 1, Rational(1, 3), Rational(1, 3)).nu == Rational(0));
    CHECK_THROWS(solve_residual_intersections(1, 1, 0, 0, 0));
}

TEST_CASE("property: emitted profiles are valid and well shaped") {
    test::Gen g(21);
    for (int trial = 0; trial < 100; ++trial) {
        const ZariskiProfile pI = profile_type_I(random_type_I(g));
        CHECK_NOTHROW(validate_profile(pI));
        CHECK(pI.segments[0].ordN.is_zero());

        const FlagTypeIIa a = random_type_IIa(g);
        const ZariskiProfile pa = profile_type_IIa(a);
        CHECK_NOTHROW(validate_profile(pa));
        const auto& s1 = pa.segments[0];
        const auto& s2 = pa.segments[1];
        CHECK(s1.ordN.is_zero());
        CHECK(s1.deg1.on_ray(s1.hi) == s2.deg1.on_ray(s1.hi));
        CHECK(s2.vol2.on_ray(1).is_zero());
        // on the second segment deg1 decreases in v; on the first its slope is -lambda
        CHECK(s2.deg1.coeff(0, 1) <= Rational(0));
        CHECK(s1.deg1.coeff(0, 1) == -a.lambda);

        const ZariskiProfile pb = profile_type_IIb(random_type_IIb(g));
        CHECK_NOTHROW(validate_profile(pb));
        CHECK(pb.segments[0].ordN.is_zero());

        const ZariskiProfile bl = profile_type_BL({g.integer(2, 12), g.integer(1, 12)});
        CHECK_NOTHROW(validate_profile(bl));
        CHECK(bl.segments[0].vol2.on_ray(bl.segments[0].hi) == bl.segments[1].vol2.on_ray(bl.segments[0].hi));
        CHECK(bl.segments[0].deg1.on_ray(bl.segments[0].hi) == bl.segments[1].deg1.on_ray(bl.segments[0].hi));

        const Rational c = g.positive();
        CHECK_NOTHROW(validate_profile(rescale_boundaries(pa, c)));
    }
}

TEST_CASE("profile JSON round trip and diagnostics") {
    test::Gen g(22);
    for (int trial = 0; trial < 30; ++trial) {
        const ZariskiProfile p = profile_type_IIa(random_type_IIa(g));
        CHECK(profile_from_json(profile_to_json(p)) == p);
        const ZariskiProfile b = profile_type_BL({g.integer(2, 9), g.integer(1, 9)});
        CHECK(profile_from_json(nlohmann::json::parse(profile_to_json(b).dump())) == b);
    }
    CHECK(profile_from_json(profile_to_json(n13_iv())) == n13_iv());

    nlohmann::json j = profile_to_json(n13_iv());
    j["segments"][1]["vol2"][0][2] = "3/0";
    CHECK_THROWS_WITH_AS(profile_from_json(j), doctest::Contains("segments[1].vol2[0]"), ProfileError);
    j = profile_to_json(n13_iv());
    j["A3"] = "eleven";
    CHECK_THROWS_WITH_AS(profile_from_json(j), doctest::Contains("A3"), ProfileError);
    j = profile_to_json(n13_iv());
    j.erase("tau_u");
    CHECK_THROWS_WITH_AS(profile_from_json(j), doctest::Contains("tau_u: missing"), ProfileError);
    j = profile_to_json(n13_iv());
    j["segments"][0]["lo"] = 0;
    CHECK_THROWS_WITH_AS(profile_from_json(j), doctest::Contains("segments[0].lo"), ProfileError);
}
