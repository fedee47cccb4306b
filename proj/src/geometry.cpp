#include "fanodelta/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fano {

const std::array<const char*, 5> kCoordNames = {"x", "y", "z", "t", "w"};

namespace {

int mod(int a, int r) { return ((a % r) + r) % r; }

int inverse_mod(int a, int r) {
    for (int b = 1; b < r; ++b)
        if (mod(a * b, r) == 1) return b;
    throw std::invalid_argument("weight not invertible mod r");
}

std::vector<int> parse_int_list(std::string_view s, std::string_view what) {
    std::vector<int> out;
    std::string item;
    std::istringstream in{std::string(s)};
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": malformed integer '" + item + "'");
        }
        if (pos != item.size()) throw std::invalid_argument(std::string(what) + ": malformed integer '" + item + "'");
        out.push_back(value);
    }
    return out;
}

}  // namespace

Family make_family(int d, Weights weights, std::optional<int> id) {
    if (d <= 0) throw std::invalid_argument("degree must be positive");
    for (int a : weights)
        if (a <= 0) throw std::invalid_argument("weights must be positive");
    std::sort(weights.begin(), weights.end());
    int total = std::accumulate(weights.begin(), weights.end(), 0);
    if (total - d != 1) throw std::invalid_argument("index-1 condition fails: sum of weights minus degree is " + std::to_string(total - d));
    for (int skip = 0; skip < 5; ++skip) {
        int g = 0;
        for (int i = 0; i < 5; ++i)
            if (i != skip) g = std::gcd(g, weights[static_cast<size_t>(i)]);
        if (g != 1) throw std::invalid_argument("family is not well formed");
    }
    return Family{id, d, weights};
}

Family parse_family_literal(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw std::invalid_argument("family literal must look like d;a0,a1,a2,a3,a4");
    auto ds = parse_int_list(text.substr(0, semi), "degree");
    auto ws = parse_int_list(text.substr(semi + 1), "weights");
    if (ds.size() != 1 || ws.size() != 5) throw std::invalid_argument("family literal must look like d;a0,a1,a2,a3,a4");
    return make_family(ds[0], {ws[0], ws[1], ws[2], ws[3], ws[4]});
}

std::string family_literal(const Family& f) {
    std::ostringstream os;
    os << f.d << ';';
    for (size_t i = 0; i < 5; ++i) os << (i ? "," : "") << f.a[i];
    return os.str();
}

Rational anticanonical_cube(const Family& f) {
    long prod = 1;
    for (int a : f.a) prod *= a;
    return Rational(f.d, prod);
}

int weighted_degree(const Weights& w, const Exponent& e) {
    int s = 0;
    for (size_t i = 0; i < 5; ++i) s += w[i] * e[i];
    return s;
}

std::vector<Exponent> monomials_of_degree(const Weights& w, int deg) {
    std::vector<Exponent> out;
    if (deg < 0) return out;
    Exponent e{};
    auto rec = [&](auto&& self, size_t i, int remaining) -> void {
        if (i == 4) {
            if (remaining % w[4] == 0) {
                e[4] = remaining / w[4];
                out.push_back(e);
            }
            return;
        }
        for (int k = 0; k * w[i] <= remaining; ++k) {
            e[i] = k;
            self(self, i + 1, remaining - k * w[i]);
        }
        e[i] = 0;
    };
    rec(rec, 0, deg);
    return out;
}

std::vector<Exponent> monomials_of_degree(const Family& f, int deg) { return monomials_of_degree(f.a, deg); }

std::string QuotientSingularity::type() const {
    std::ostringstream os;
    os << "1/" << r << '(' << w[0] << ',' << w[1] << ',' << w[2] << ')';
    return os.str();
}

QuotientSingularity make_quotient(int r, std::array<int, 3> weights, std::string location) {
    if (r < 2) throw std::invalid_argument("quotient index must be at least 2");
    for (int& x : weights) {
        x = mod(x, r);
        if (std::gcd(x, r) != 1)
            throw std::invalid_argument("weight not coprime to index in 1/" + std::to_string(r));
    }
    static constexpr std::array<std::array<int, 3>, 3> pairs = {{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
    for (const auto& p : pairs) {
        if (mod(weights[static_cast<size_t>(p[0])] + weights[static_cast<size_t>(p[1])], r) != 0) continue;
        int inv = inverse_mod(weights[static_cast<size_t>(p[2])], r);
        int a = mod(weights[static_cast<size_t>(p[0])] * inv, r);
        int b = r - a;
        return QuotientSingularity{r, {1, std::min(a, b), std::max(a, b)}, std::move(location)};
    }
    std::ostringstream os;
    os << "non-terminal quotient type 1/" << r << '(' << weights[0] << ',' << weights[1] << ',' << weights[2] << ')';
    throw std::invalid_argument(os.str());
}

QuotientSingularity parse_point(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("malformed point selector '" + std::string(text) + "', expected 1/r(w1,w2,w3)"); };
    if (text.substr(0, 2) != "1/") throw bad();
    auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')') throw bad();
    std::vector<int> r, ws;
    try {
        r = parse_int_list(text.substr(2, open - 2), "index");
        ws = parse_int_list(text.substr(open + 1, text.size() - open - 2), "weights");
    } catch (const std::invalid_argument&) {
        throw bad();
    }
    if (r.size() != 1 || ws.size() != 3) throw bad();
    return make_quotient(r[0], {ws[0], ws[1], ws[2]});
}

KawamataData kawamata_data(const QuotientSingularity& s) {
    QuotientSingularity n = make_quotient(s.r, s.w, s.location);
    int a = n.w[1];
    KawamataData k;
    k.r = n.r;
    k.a = a;
    k.discrepancy = Rational(1, n.r);
    k.exc_cube = Rational(static_cast<long>(n.r) * n.r, static_cast<long>(a) * (n.r - a));
    k.log_discrepancy = Rational(1) + k.discrepancy;
    return k;
}

std::vector<QuotientSingularity> enumerate_singularities(int d, const Weights& a) {
    std::vector<QuotientSingularity> basket;

    for (size_t i = 0; i < 5; ++i)
        for (size_t j = i + 1; j < 5; ++j)
            if (a[i] >= 2 && a[i] == a[j]) throw std::invalid_argument("repeated weight above 1 not supported");

    for (size_t i = 0; i < 5; ++i) {
        const int r = a[i];
        if (r < 2 || d % r == 0) continue;
        std::optional<size_t> s;
        for (size_t j = 0; j < 5 && !s; ++j)
            if (j != i && d > a[j] && (d - a[j]) % r == 0) s = j;
        if (!s) throw std::invalid_argument(std::string("general member is not quasismooth at P_") + kCoordNames[i]);
        std::array<int, 3> local{};
        size_t n = 0;
        for (size_t j = 0; j < 5; ++j)
            if (j != i && j != *s) local[n++] = a[j];
        basket.push_back(make_quotient(r, local, std::string("P_") + kCoordNames[i]));
    }

    for (size_t i = 0; i < 5; ++i)
        for (size_t j = i + 1; j < 5; ++j)
            for (size_t k = j + 1; k < 5; ++k)
                if (std::gcd(std::gcd(a[i], a[j]), a[k]) >= 2)
                    throw std::invalid_argument("singular surface stratum not supported");

    for (size_t i = 0; i < 5; ++i) {
        for (size_t j = i + 1; j < 5; ++j) {
            const int c = std::gcd(a[i], a[j]);
            if (c < 2) continue;
            std::vector<int> qs;
            for (int q = 0; q * a[j] <= d; ++q)
                if ((d - q * a[j]) % a[i] == 0) qs.push_back(q);
            std::string label = std::string(kCoordNames[i]) + "," + kCoordNames[j] + "-stratum";
            if (qs.empty()) throw std::invalid_argument("stratum contained in X: " + label);
            const int roots = static_cast<int>(qs.size()) - 1;
            std::array<int, 3> local{};
            size_t n = 0;
            for (size_t m = 0; m < 5; ++m)
                if (m != i && m != j) local[n++] = a[m];
            for (int k = 0; k < roots; ++k) basket.push_back(make_quotient(c, local, label));
        }
    }

    std::stable_sort(basket.begin(), basket.end(), [](const QuotientSingularity& x, const QuotientSingularity& y) {
        if (x.r != y.r) return x.r < y.r;
        return x.w < y.w;
    });
    return basket;
}

std::vector<QuotientSingularity> enumerate_singularities(const Family& f) { return enumerate_singularities(f.d, f.a); }

std::string basket_string(const std::vector<QuotientSingularity>& basket) {
    std::vector<std::pair<std::string, int>> groups;
    for (const auto& s : basket) {
        std::string t = s.type();
        if (!groups.empty() && groups.back().first == t)
            ++groups.back().second;
        else
            groups.emplace_back(t, 1);
    }
    std::ostringstream os;
    for (size_t i = 0; i < groups.size(); ++i) {
        if (i) os << "; ";
        if (groups[i].second > 1) os << groups[i].second << "x ";
        os << groups[i].first;
    }
    return os.str();
}

void WeightedPoly::add_term(const Exponent& e, const Rational& c) {
    if (weighted_degree(family_.a, e) != family_.d)
        throw std::invalid_argument("monomial degree " + std::to_string(weighted_degree(family_.a, e)) +
                                    " differs from family degree " + std::to_string(family_.d));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational WeightedPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

WeightedPoly general_member(const Family& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(1, 97), den(1, 13);
    WeightedPoly p(f);
    for (const auto& e : monomials_of_degree(f, f.d)) {
        long n = num(rng);
        if (rng() & 1) n = -n;
        p.add_term(e, Rational(n, den(rng)));
    }
    return p;
}

WeightedPoly restrict_to_stratum(const WeightedPoly& p, const std::vector<int>& vanishing) {
    WeightedPoly out(p.family());
    for (const auto& [e, c] : p.terms()) {
        bool keep = true;
        for (int i : vanishing)
            if (e.at(static_cast<size_t>(i)) > 0) keep = false;
        if (keep) out.add_term(e, c);
    }
    return out;
}

}  // namespace fano
