#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liftcalc/multiset.hpp"
#include "liftcalc/quad_twist.hpp"
#include "liftcalc/rational.hpp"
#include "liftcalc/unit_symbol.hpp"

namespace liftcalc {

/// Cuspidal automorphic representation of GL_m, possibly twisted by a
/// quadratic Hecke character.
struct GlobalCusp {
    std::string name;
    int m = 1;
    bool sym2_pole = false;
    bool wedge2_pole = false;
    std::optional<QuadTwist> central; // central character, when known to be quadratic
    QuadTwist twist;

    GlobalCusp twisted(const QuadTwist& t) const;
    std::string label() const;

    friend bool operator==(const GlobalCusp& a, const GlobalCusp& b) {
        return a.name == b.name && a.twist == b.twist && a.m == b.m;
    }
    friend std::strong_ordering operator<=>(const GlobalCusp& a, const GlobalCusp& b) {
        if (auto c = a.name <=> b.name; c != 0) return c;
        if (auto c = a.twist <=> b.twist; c != 0) return c;
        return a.m <=> b.m;
    }
};

struct ABlock {
    GlobalCusp tau;
    int d = 1;
    std::string label() const; // "tau[d]"
    friend bool operator==(const ABlock&, const ABlock&) = default;
    friend auto operator<=>(const ABlock&, const ABlock&) = default;
};

struct GlobalAParameter {
    enum class Group { Sp, Mp };
    Group group = Group::Sp;
    int n = 0;
    Multiset<ABlock> blocks;

    bool tempered() const;
    std::string group_label() const { return group == Group::Sp ? "Sp" : "Mp"; }
    friend bool operator==(const GlobalAParameter&, const GlobalAParameter&) = default;
};

struct GlobalValidation {
    std::vector<std::string> violations;
    std::vector<std::string> unchecked;
    bool ok() const { return violations.empty(); }
};

GlobalValidation validate_global_A(const GlobalAParameter& a);

struct SatakeEntry {
    UnitSymbol unit;
    Rational qexp; // value is unit * q^qexp
    SatakeEntry inverse() const { return {unit.inverse(), -qexp}; }
    std::string str() const;
    friend bool operator==(const SatakeEntry&, const SatakeEntry&) = default;
    friend auto operator<=>(const SatakeEntry&, const SatakeEntry&) = default;
};

using SatakeParam = Multiset<SatakeEntry>;

bool inverse_closed(const SatakeParam& s);

/// Satake parameter of the global packet at an unramified place.  Local data
/// is looked up by block label first, then by the untwisted cusp name.
SatakeParam satake_of_global_A(const GlobalAParameter& a, const std::map<std::string, SatakeParam>& local,
                               const std::optional<LocalPlace>& place);

} // namespace liftcalc
