#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "liftcalc/local_arith.hpp"

namespace liftcalc {

/*
 * A product of quadratic characters chi_g, one per generator name.  The
 * generator "-1" denotes chi_{-1}; "u", "w", "uw" (odd places) and "+", "-"
 * (real place) denote fixed square classes; any other identifier is a
 * formal class such as "xi".  Multiplication is symmetric difference since
 * every chi_g squares to the trivial character.
 */
class QuadTwist {
public:
    QuadTwist() = default;
    static QuadTwist of(std::string generator);
    static QuadTwist of_class(const SquareClass& c);
    static QuadTwist minus_one() { return of("-1"); }

    bool is_trivial() const { return gens_.empty(); }
    const std::set<std::string>& generators() const { return gens_; }

    QuadTwist operator*(const QuadTwist& o) const;
    QuadTwist& operator*=(const QuadTwist& o) { return *this = *this * o; }
    QuadTwist pow(long long e) const { return (e % 2 != 0) ? *this : QuadTwist(); }

    struct Resolved {
        std::optional<SquareClass> cls; // product of the generators bound at the place
        std::set<std::string> formal;   // generators with no meaning at the place
    };
    Resolved resolve(const LocalPlace& place) const;

    /// Canonical form at a place: bound generators collapse to one class label.
    QuadTwist canonical(const LocalPlace& place) const;

    /// chi(x) for x a square class; nullopt when formal generators remain.
    std::optional<Sign> value_at(const SquareClass& x) const;
    /// chi(-1), possibly without a place when the twist is trivial.
    std::optional<Sign> at_minus_one(const std::optional<LocalPlace>& place) const;
    /// chi(uniformizer); throws when the twist is ramified at the place.
    std::optional<Sign> at_uniformizer(const std::optional<LocalPlace>& place) const;

    /// "chi[-1]*chi[xi]" style label; empty string when trivial.
    std::string label() const;

    friend bool operator==(const QuadTwist&, const QuadTwist&) = default;
    friend auto operator<=>(const QuadTwist&, const QuadTwist&) = default;

private:
    std::set<std::string> gens_;
};

bool is_twist_generator(std::string_view g);

} // namespace liftcalc
