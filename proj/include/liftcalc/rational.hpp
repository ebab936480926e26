#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace liftcalc {

/// Exact rational number. Parses and prints as "a/b" or "a".
class Rational {
public:
    using value_type = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long long n) : v_(n) {} // NOLINT(implicit)
    Rational(long long num, long long den);
    explicit Rational(value_type v) : v_(std::move(v)) {}

    static Rational parse(std::string_view text);
    std::string str() const;

    bool is_integer() const;
    bool is_half_integer() const; // true for n/2 with n odd
    bool is_zero() const { return v_ == 0; }
    int sign() const;
    long long to_integer() const; // throws unless is_integer() and fits
    Rational abs() const;
    Rational floor() const;

    const value_type& value() const { return v_; }

    Rational operator-() const { return Rational(value_type(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    value_type v_{0};
};

/// Half-integrality test used for Weil-representation exponents.
inline bool halfint_check(const Rational& x) { return x.is_half_integer(); }

/// True when a - b is an integer.
bool same_lattice(const Rational& a, const Rational& b);

} // namespace liftcalc
