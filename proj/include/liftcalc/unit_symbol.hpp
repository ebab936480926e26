#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "liftcalc/sign.hpp"

namespace liftcalc {

/*
 * A formal unit-modulus complex number: an eighth root of unity times a
 * monomial in named symbols, e.g. "a", "b^-1", "-a*c^2".  Equality is
 * structural, so a*a^-1 reduces to 1 but no relations between distinct
 * names are assumed.
 */
class UnitSymbol {
public:
    UnitSymbol() = default;
    static UnitSymbol identity() { return {}; }
    static UnitSymbol named(std::string name);
    static UnitSymbol root(RootOfUnity8 z);
    static UnitSymbol parse(std::string_view text);

    std::string str() const;

    bool is_identity() const { return coef_.is_one() && powers_.empty(); }
    bool is_constant() const { return powers_.empty(); }
    RootOfUnity8 coefficient() const { return coef_; }
    const std::map<std::string, int>& powers() const { return powers_; }

    UnitSymbol inverse() const;
    UnitSymbol pow(long long e) const;
    UnitSymbol operator*(const UnitSymbol& o) const;
    UnitSymbol& operator*=(const UnitSymbol& o) { return *this = *this * o; }

    friend bool operator==(const UnitSymbol&, const UnitSymbol&) = default;
    friend auto operator<=>(const UnitSymbol&, const UnitSymbol&) = default;

private:
    RootOfUnity8 coef_;
    std::map<std::string, int> powers_; // no zero exponents
};

bool is_symbol_name(std::string_view s);

} // namespace liftcalc
