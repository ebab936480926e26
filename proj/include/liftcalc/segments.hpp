#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liftcalc/character.hpp"
#include "liftcalc/rational.hpp"

namespace liftcalc {

enum class SelfDuality { Orthogonal, Symplectic, None };

const char* self_duality_name(SelfDuality t);
SelfDuality parse_self_duality(std::string_view s);

/// Irreducible unitary supercuspidal of some GL_d, given by name.
struct CuspSymbol {
    std::string name;
    int dim = 1;
    SelfDuality selfdual = SelfDuality::None;
    bool inverted = false;                // contragredient of the named symbol
    std::optional<Character> character;   // set iff the symbol is a character
    std::optional<Character> det;         // declared central/determinant character

    static CuspSymbol of_character(const Character& c);
    static CuspSymbol formal(std::string name, int dim, SelfDuality t);

    bool is_character() const { return character.has_value(); }
    CuspSymbol dual() const;
    std::string label() const;

    // isomorphism: names and inversion data
    friend bool operator==(const CuspSymbol& a, const CuspSymbol& b) {
        return a.name == b.name && a.inverted == b.inverted && a.dim == b.dim;
    }
    friend std::strong_ordering operator<=>(const CuspSymbol& a, const CuspSymbol& b) {
        if (auto c = a.name <=> b.name; c != 0) return c;
        if (auto c = a.inverted <=> b.inverted; c != 0) return c;
        return a.dim <=> b.dim;
    }
};

/// The segment [x, y] = {x, x -+ 1, ..., y} attached to rho.
struct Segment {
    CuspSymbol rho;
    Rational x;
    Rational y;

    Segment(CuspSymbol rho, Rational x, Rational y); // throws unless x - y is integral

    int length() const; // |x - y| + 1
    friend bool operator==(const Segment&, const Segment&) = default;
    friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// The irreducible subrepresentation <rho; x, ..., y>.
struct SegmentRep {
    Segment seg;
    int rank() const { return seg.rho.dim * seg.length(); }
    std::string label() const;
    friend bool operator==(const SegmentRep&, const SegmentRep&) = default;
    friend auto operator<=>(const SegmentRep&, const SegmentRep&) = default;
};

std::vector<Rational> segment_set(const Segment& s);

bool linked(const Segment& a, const Segment& b);

bool zelevinsky_irreducible(const SegmentRep& a, const SegmentRep& b);

/// Jacquet module along the (k1, k2) parabolic; nullopt means zero.
std::optional<std::pair<SegmentRep, SegmentRep>> jacquet_gl(const SegmentRep& rep, int k1, int k2);

} // namespace liftcalc
