#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "liftcalc/quad_twist.hpp"
#include "liftcalc/unit_symbol.hpp"

namespace liftcalc {

/*
 * A (unitary) character of F^x given symbolically: a named base character,
 * possibly inverted, times a quadratic twist.  Declared side data (the value
 * at -1, the value at the uniformizer, quadraticity) is metadata: identity
 * is the base name, inversion and twist.
 */
class Character {
public:
    Character() = default; // trivial
    static Character trivial() { return {}; }
    static Character named(std::string base, bool quadratic = false);
    static Character quadratic_twist(QuadTwist t);

    /// Label grammar: "1", "m", "m^-1", "m*chi[-1]", "chi[xi]".
    static Character parse(std::string_view label);

    const std::string& base() const { return base_; }
    bool inverted() const { return inverted_; }
    const QuadTwist& twist() const { return twist_; }
    bool base_quadratic() const { return quadratic_; }
    bool is_quadratic() const { return quadratic_; }
    bool is_trivial() const { return base_ == "1" && twist_.is_trivial(); }
    bool has_metadata() const;

    const std::optional<Sign>& declared_at_minus_one() const { return at_minus1_; }
    const std::optional<UnitSymbol>& declared_at_uniformizer() const { return at_unif_; }
    Character& declare_at_minus_one(Sign s);
    Character& declare_at_uniformizer(UnitSymbol u); // value of the base, before inversion

    Character inverse() const;
    Character twisted(const QuadTwist& t) const;
    Character canonical(const LocalPlace& place) const;

    std::string label() const;

    /// chi(-1).
    std::optional<Sign> at_minus_one(const std::optional<LocalPlace>& place) const;
    /// chi(uniformizer) as a unit symbol; nullopt when the data is insufficient.
    std::optional<UnitSymbol> at_uniformizer(const std::optional<LocalPlace>& place) const;
    /// chi(x) on a square class; only defined for quadratic characters.
    std::optional<Sign> value_at_class(const SquareClass& x) const;

    friend bool operator==(const Character& a, const Character& b) {
        return a.base_ == b.base_ && a.inverted_ == b.inverted_ && a.twist_ == b.twist_;
    }
    friend std::strong_ordering operator<=>(const Character& a, const Character& b) {
        if (auto c = a.base_ <=> b.base_; c != 0) return c;
        if (auto c = a.inverted_ <=> b.inverted_; c != 0) return c;
        return a.twist_ <=> b.twist_;
    }

private:
    std::string base_ = "1";
    bool inverted_ = false;
    bool quadratic_ = true;
    QuadTwist twist_;
    std::optional<Sign> at_minus1_;
    std::optional<UnitSymbol> at_unif_;
};

} // namespace liftcalc
