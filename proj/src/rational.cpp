#include "liftcalc/rational.hpp"

#include <cctype>

#include "liftcalc/error.hpp"

namespace liftcalc {

const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::Domain: return "domain_error";
    case ErrorCode::OutOfScope: return "out_of_scope";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::IncompleteInput: return "incomplete_input";
    case ErrorCode::Inconsistent: return "inconsistent_input";
    case ErrorCode::Schema: return "schema_error";
    }
    return "error";
}

namespace {

boost::multiprecision::cpp_int parse_int(std::string_view s, std::string_view whole) {
    if (s.empty()) fail(ErrorCode::Domain, "malformed rational '" + std::string(whole) + "'");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) fail(ErrorCode::Domain, "malformed rational '" + std::string(whole) + "'");
    boost::multiprecision::cpp_int v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            fail(ErrorCode::Domain, "malformed rational '" + std::string(whole) + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? boost::multiprecision::cpp_int(-v) : v;
}

} // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) fail(ErrorCode::Domain, "rational with zero denominator");
    v_ = value_type(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) fail(ErrorCode::Domain, "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(value_type(parse_int(text, text)));
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) fail(ErrorCode::Domain, "rational with zero denominator");
    return Rational(value_type(num, den));
}

std::string Rational::str() const {
    auto num = boost::multiprecision::numerator(v_);
    auto den = boost::multiprecision::denominator(v_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

bool Rational::is_integer() const { return boost::multiprecision::denominator(v_) == 1; }

bool Rational::is_half_integer() const { return boost::multiprecision::denominator(v_) == 2; }

int Rational::sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

long long Rational::to_integer() const {
    if (!is_integer()) fail(ErrorCode::Domain, "expected an integer, got " + str());
    auto num = boost::multiprecision::numerator(v_);
    if (num > std::numeric_limits<long long>::max() || num < std::numeric_limits<long long>::min())
        fail(ErrorCode::Domain, "integer out of range: " + str());
    return num.convert_to<long long>();
}

Rational Rational::abs() const { return v_ < 0 ? -*this : *this; }

Rational Rational::floor() const {
    auto num = boost::multiprecision::numerator(v_);
    auto den = boost::multiprecision::denominator(v_);
    boost::multiprecision::cpp_int q = num / den; // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return Rational(value_type(q));
}

bool same_lattice(const Rational& a, const Rational& b) { return (a - b).is_integer(); }

} // namespace liftcalc
