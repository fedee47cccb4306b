#include "fanodelta/centers.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fano {

namespace {

using MPoly = std::map<Exponent, Rational>;

void add_to(MPoly& p, const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

MPoly mul(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponent e{};
            for (size_t i = 0; i < 5; ++i) e[i] = ea[i] + eb[i];
            add_to(out, e, ca * cb);
        }
    return out;
}

// Replace x_var by the polynomial q.
MPoly substitute(const MPoly& p, size_t var, const MPoly& q) {
    MPoly out;
    std::vector<MPoly> powers{MPoly{{Exponent{}, Rational(1)}}};
    for (const auto& [e, c] : p) {
        while (static_cast<int>(powers.size()) <= e[var]) powers.push_back(mul(powers.back(), q));
        Exponent rest = e;
        rest[var] = 0;
        for (const auto& [ep, cp] : powers[static_cast<size_t>(e[var])]) {
            Exponent f{};
            for (size_t i = 0; i < 5; ++i) f[i] = rest[i] + ep[i];
            add_to(out, f, c * cp);
        }
    }
    return out;
}

// Coefficient of x_k^power, as a polynomial free of x_k.
MPoly slice(const MPoly& p, size_t k, int power) {
    MPoly out;
    for (const auto& [e, c] : p)
        if (e[k] == power) {
            Exponent f = e;
            f[k] = 0;
            add_to(out, f, c);
        }
    return out;
}

Exponent unit(size_t i, int power = 1) {
    Exponent e{};
    e[i] = power;
    return e;
}

int max_power(const MPoly& p, size_t k) {
    int m = 0;
    for (const auto& [e, c] : p) m = std::max(m, e[k]);
    return m;
}

}  // namespace

std::string to_string(CenterKind k) {
    switch (k) {
        case CenterKind::QIExceptional: return "QI-exceptional";
        case CenterKind::QIDegenerate: return "QI-degenerate";
        case CenterKind::QINondegenerate: return "QI-nondegenerate";
        case CenterKind::EI: return "EI";
        case CenterKind::IEI: return "IEI";
        case CenterKind::None: return "none";
    }
    return "none";
}

std::string to_string(Maximality m) {
    switch (m) {
        case Maximality::Yes: return "yes";
        case Maximality::No: return "no";
        case Maximality::Unknown: return "unknown";
    }
    return "unknown";
}

CenterClass classify_qi(const WeightedPoly& p, int k_index) {
    const Family& fam = p.family();
    const auto k = static_cast<size_t>(k_index);
    std::vector<size_t> admissible;
    for (size_t j = 0; j < 5; ++j)
        if (j != k && fam.d == 2 * fam.a[k] + fam.a[j]) admissible.push_back(j);
    if (admissible.empty()) throw std::invalid_argument("not a QI center");

    MPoly F(p.terms().begin(), p.terms().end());

    auto linear_coeff = [&](const MPoly& f, size_t j) {
        auto it = f.find(unit(j));
        return it == f.end() ? Rational(0) : it->second;
    };

    MPoly f = slice(F, k, 2);
    bool exceptional = true;
    for (size_t i = 0; i < 5; ++i)
        if (i != k && !linear_coeff(f, i).is_zero()) exceptional = false;
    if (exceptional) return {CenterKind::QIExceptional, Maximality::No};

    // Absorb terms divisible by x_k^3 into x_k^2 * x_j by shifting x_j.
    for (int round = 0; max_power(F, k) >= 3; ++round) {
        if (round > 64) throw std::runtime_error("QI normalization did not terminate");
        f = slice(F, k, 2);
        size_t j = 5;
        for (size_t cand : admissible)
            if (!linear_coeff(f, cand).is_zero()) {
                j = cand;
                break;
            }
        if (j == 5) return {CenterKind::QIExceptional, Maximality::No};
        const Rational c = linear_coeff(f, j);
        MPoly high;  // F_{>=3} / x_k^2
        for (const auto& [e, coef] : F)
            if (e[k] >= 3) {
                Exponent g = e;
                g[k] -= 2;
                add_to(high, g, coef);
            }
        MPoly shift{{unit(j), Rational(1)}};
        for (const auto& [e, coef] : high) add_to(shift, e, -coef / c);
        F = substitute(F, j, shift);
    }

    f = slice(F, k, 2);
    MPoly g = slice(F, k, 1);
    size_t j = 5;
    for (size_t cand : admissible)
        if (!linear_coeff(f, cand).is_zero()) {
            j = cand;
            break;
        }
    if (j == 5) return {CenterKind::QIExceptional, Maximality::No};

    // f = c*x_j + f'; g is divisible by f iff g vanishes on x_j = -f'/c.
    const Rational c = linear_coeff(f, j);
    MPoly root;
    for (const auto& [e, coef] : f)
        if (e != unit(j)) add_to(root, e, -coef / c);
    MPoly remainder = substitute(g, j, root);
    if (remainder.empty()) return {CenterKind::QIDegenerate, Maximality::No};
    return {CenterKind::QINondegenerate, Maximality::Yes};
}

namespace {

bool is_family_23(const Family& f) { return f.d == 14 && f.a == Weights{1, 2, 3, 4, 5}; }

}  // namespace

CenterClass classify_iei(const WeightedPoly& p) {
    if (!is_family_23(p.family())) throw std::invalid_argument("IEI centers exist only on family 23");
    const bool z3w = monomial_present(p, {0, 0, 3, 0, 1});
    const bool z2t2 = monomial_present(p, {0, 0, 2, 2, 0});
    return {CenterKind::IEI, (!z3w && !z2t2) ? Maximality::Yes : Maximality::No};
}

bool monomial_present(const WeightedPoly& p, const Exponent& monomial) {
    int deg = weighted_degree(p.family().a, monomial);
    if (deg != p.family().d)
        throw std::invalid_argument("monomial degree " + std::to_string(deg) + " differs from family degree " +
                                    std::to_string(p.family().d));
    return !p.coefficient(monomial).is_zero();
}

std::optional<int> vertex_of(const Family& f, const QuotientSingularity& point) {
    for (const auto& s : enumerate_singularities(f))
        if (s.same_type(point) && s.location.rfind("P_", 0) == 0) {
            for (int i = 0; i < 5; ++i)
                if (s.location == std::string("P_") + kCoordNames[static_cast<size_t>(i)]) return i;
        }
    return std::nullopt;
}

namespace {

struct EIEntry {
    int family;
    const char* type;
};

// Elliptic-involution centers follow the family tables.
constexpr EIEntry kEICenters[] = {{20, "1/3(1,1,2)"}, {23, "1/4(1,1,3)"}, {40, "1/5(1,2,3)"}};

}  // namespace

std::string to_string(InvolutionType t) {
    switch (t) {
        case InvolutionType::QI: return "QI";
        case InvolutionType::EI: return "EI";
        case InvolutionType::IEI: return "IEI";
        case InvolutionType::None: return "-";
    }
    return "-";
}

InvolutionType involution_type(const Family& f, const QuotientSingularity& point) {
    auto k = vertex_of(f, point);
    if (!k) return InvolutionType::None;
    const int ak = f.a[static_cast<size_t>(*k)];
    for (size_t j = 0; j < 5; ++j)
        if (static_cast<int>(j) != *k && f.d == 2 * ak + f.a[j]) return InvolutionType::QI;
    if (is_family_23(f) && point.type() == "1/3(1,1,2)") return InvolutionType::IEI;
    if (f.id)
        for (const auto& e : kEICenters)
            if (e.family == *f.id && point.type() == e.type) return InvolutionType::EI;
    return InvolutionType::None;
}

CenterClass classify_point(const WeightedPoly& p, const QuotientSingularity& point) {
    const Family& f = p.family();
    switch (involution_type(f, point)) {
        case InvolutionType::QI: return classify_qi(p, *vertex_of(f, point));
        case InvolutionType::IEI: return classify_iei(p);
        case InvolutionType::EI: return {CenterKind::EI, Maximality::Unknown};
        case InvolutionType::None: break;
    }
    return {CenterKind::None, Maximality::No};
}

namespace {

enum class Cond { Ndgn, Present, Absent, QuasiLine, NoQuasiLine };

struct Condition {
    Cond kind;
    Exponent mono{};
    const char* name = "";
};

struct CaseRow {
    int family;
    const char* point;
    const char* label;
    std::vector<Condition> conditions;
};

Condition ndgn() { return {Cond::Ndgn, {}, "ndgn"}; }
Condition has(Exponent e, const char* name) { return {Cond::Present, e, name}; }
Condition lacks(Exponent e, const char* name) { return {Cond::Absent, e, name}; }
Condition quasi_line() { return {Cond::QuasiLine, {}, "quasi-line (1,3,4) in X"}; }
Condition no_quasi_line() { return {Cond::NoQuasiLine, {}, "no quasi-line (1,3,4)"}; }

const std::vector<CaseRow>& case_rows() {
    static const std::vector<CaseRow> rows = {
        {2, "1/2(1,1,1)", "i", {ndgn()}},
        {5, "1/2(1,1,1)", "i", {ndgn()}},
        {5, "1/3(1,1,2)", "ii", {ndgn(), has({0, 0, 0, 2, 1}, "t^2w")}},
        {5, "1/3(1,1,2)", "iii", {ndgn(), lacks({0, 0, 0, 2, 1}, "t^2w")}},
        {12, "1/3(1,1,2)", "i", {ndgn()}},
        {12, "1/4(1,1,3)", "ii", {ndgn()}},
        {13, "1/3(1,1,2)", "i", {has({0, 0, 0, 2, 1}, "t^2w")}},
        {13, "1/5(1,2,3)", "ii", {has({0, 0, 0, 2, 1}, "t^2w")}},
        {13, "1/5(1,2,3)", "iii", {ndgn(), lacks({0, 0, 0, 2, 1}, "t^2w"), has({0, 0, 3, 0, 1}, "z^3w")}},
        {13, "1/5(1,2,3)", "iv",
         {ndgn(), lacks({0, 0, 0, 2, 1}, "t^2w"), lacks({0, 0, 3, 0, 1}, "z^3w"), has({0, 0, 4, 1, 0}, "z^4t")}},
        {13, "1/5(1,2,3)", "v",
         {ndgn(), lacks({0, 0, 0, 2, 1}, "t^2w"), lacks({0, 0, 3, 0, 1}, "z^3w"), lacks({0, 0, 4, 1, 0}, "z^4t")}},
        {20, "1/3(1,1,2)", "i", {}},
        {20, "1/4(1,1,3)", "ii", {ndgn()}},
        {20, "1/5(1,1,4)", "iii", {}},
        {23, "1/3(1,1,2)", "i", {lacks({0, 0, 3, 0, 1}, "z^3w"), lacks({0, 0, 2, 2, 0}, "z^2t^2")}},
        {23, "1/4(1,1,3)", "ii", {no_quasi_line()}},
        {23, "1/4(1,1,3)", "iii", {quasi_line()}},
        {23, "1/5(1,2,3)", "iv", {ndgn(), no_quasi_line()}},
        {23, "1/5(1,2,3)", "v", {ndgn(), quasi_line()}},
        {25, "1/4(1,1,3)", "i", {ndgn()}},
        {25, "1/7(1,3,4)", "ii", {has({0, 0, 0, 2, 1}, "t^2w")}},
        {33, "1/5(1,2,3)", "i", {ndgn()}},
        {33, "1/7(1,2,5)", "ii", {has({0, 5, 0, 0, 1}, "y^5w")}},
        {33, "1/7(1,2,5)", "iii", {lacks({0, 5, 0, 0, 1}, "y^5w")}},
        {38, "1/5(1,2,3)", "i", {ndgn()}},
        {38, "1/8(1,3,5)", "ii", {}},
        {40, "1/5(1,2,3)", "i", {}},
        {40, "1/7(1,3,4)", "ii", {}},
        {58, "1/7(1,3,4)", "i", {has({0, 0, 0, 2, 1}, "t^2w")}},
        {58, "1/10(1,3,7)", "ii", {}},
    };
    return rows;
}

// The quasi-line (x = z = t = 0) lies in X exactly when y^7 and y^2w^2 are absent.
bool contains_quasi_line(const WeightedPoly& p) {
    return !monomial_present(p, {0, 7, 0, 0, 0}) && !monomial_present(p, {0, 2, 0, 0, 2});
}

bool holds(const Condition& c, const WeightedPoly& p, const CenterClass& cls) {
    switch (c.kind) {
        case Cond::Ndgn: return cls.kind == CenterKind::QINondegenerate;
        case Cond::Present: return monomial_present(p, c.mono);
        case Cond::Absent: return !monomial_present(p, c.mono);
        case Cond::QuasiLine: return contains_quasi_line(p);
        case Cond::NoQuasiLine: return !contains_quasi_line(p);
    }
    return false;
}

}  // namespace

std::vector<std::string> case_select(const Family& f, const QuotientSingularity& point, const WeightedPoly* p) {
    bool in_basket = false;
    for (const auto& s : enumerate_singularities(f)) in_basket = in_basket || s.same_type(point);
    if (!in_basket) throw std::invalid_argument("point " + point.type() + " is not in the basket of family " + family_literal(f));
    if (!f.id) throw std::invalid_argument("case tables exist only for catalog families");

    std::vector<const CaseRow*> rows;
    for (const auto& row : case_rows())
        if (row.family == *f.id && point.type() == row.point) rows.push_back(&row);

    std::vector<std::string> out;
    if (!p) {
        for (const auto* row : rows) out.emplace_back(row->label);
        return out;
    }
    CenterClass cls = classify_point(*p, point);
    for (const auto* row : rows) {
        bool ok = true;
        for (const auto& c : row->conditions) ok = ok && holds(c, *p, cls);
        if (ok) return {row->label};
    }
    if (cls.maximal == Maximality::No) return {"not-maximal"};
    return {"uncovered"};
}

std::string case_condition(int family_id, const std::string& point_type, const std::string& label) {
    for (const auto& row : case_rows()) {
        if (row.family != family_id || point_type != row.point || label != row.label) continue;
        std::string out;
        for (const auto& c : row.conditions) {
            if (!out.empty()) out += ", ";
            switch (c.kind) {
                case Cond::Present: out += std::string(c.name) + " in F"; break;
                case Cond::Absent: out += std::string(c.name) + " notin F"; break;
                default: out += c.name; break;
            }
        }
        return out.empty() ? "-" : out;
    }
    throw std::invalid_argument("no case " + label + " for " + point_type + " on family " + std::to_string(family_id));
}

WeightedPoly load_poly(const Family& f, std::istream& in) {
    WeightedPoly p(f);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string coeff;
        if (!(ls >> coeff)) continue;
        Exponent e{};
        for (auto& x : e)
            if (!(ls >> x) || x < 0) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected five exponents");
        std::string extra;
        if (ls >> extra) throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing text '" + extra + "'");
        try {
            p.add_term(e, Rational::parse(coeff));
        } catch (const std::invalid_argument& err) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + err.what());
        }
    }
    return p;
}

}  // namespace fano
