#pragma once

#include <compare>
#include <gmpxx.h>
#include <ostream>
#include <string>
#include <string_view>

namespace fano {

// Exact rational in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n);  // NOLINT(google-explicit-constructor)
    Rational(long n, long d);
    explicit Rational(mpq_class q);

    // Accepts "p" or "p/q" with optional leading '-'. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    std::string str() const;
    double to_double() const;
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    mpq_class q_{0};
};

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& x);
Rational min(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fano
