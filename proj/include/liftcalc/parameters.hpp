#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "liftcalc/character.hpp"
#include "liftcalc/multiset.hpp"
#include "liftcalc/rational.hpp"
#include "liftcalc/segments.hpp"

namespace liftcalc {

struct TrivBase {
    friend auto operator<=>(const TrivBase&, const TrivBase&) = default;
};
struct SgnBase {
    friend auto operator<=>(const SgnBase&, const SgnBase&) = default;
};
/// rho_k: the k-th discrete-series parameter of W_R, dimension 2.
struct RhoBase {
    int k = 1;
    friend auto operator<=>(const RhoBase&, const RhoBase&) = default;
};

using SummandBase = std::variant<TrivBase, SgnBase, Character, RhoBase, CuspSymbol>;

/// base (x) S_d (x) |.|^s
class WDSummand {
public:
    WDSummand(SummandBase base = TrivBase{}, int d = 1, Rational s = 0);

    static WDSummand triv(int d = 1, Rational s = 0) { return WDSummand(TrivBase{}, d, std::move(s)); }
    static WDSummand sgn(int d = 1, Rational s = 0) { return WDSummand(SgnBase{}, d, std::move(s)); }
    static WDSummand chr(const Character& c, int d = 1, Rational s = 0) { return WDSummand(c, d, std::move(s)); }
    static WDSummand rho(int k, int d = 1, Rational s = 0) { return WDSummand(RhoBase{k}, d, std::move(s)); }
    static WDSummand formal(const CuspSymbol& c, int d = 1, Rational s = 0) { return WDSummand(c, d, std::move(s)); }

    const SummandBase& base() const { return base_; }
    int d() const { return d_; }
    const Rational& s() const { return s_; }

    int base_dim() const;
    int dim() const { return base_dim() * d_; }
    SelfDuality base_type() const;
    WDSummand dual() const;
    WDSummand with_s(Rational s) const { return WDSummand(base_, d_, std::move(s)); }
    WDSummand with_d(int d) const { return WDSummand(base_, d, s_); }

    const Character* as_character() const { return std::get_if<Character>(&base_); }

    std::string base_label() const;
    /// e.g. "m", "rho[10]", "m[2]", "m|^1/4", "sgn[3]"
    std::string label() const;

    friend bool operator==(const WDSummand&, const WDSummand&) = default;
    friend auto operator<=>(const WDSummand&, const WDSummand&) = default;

private:
    SummandBase base_;
    int d_ = 1;
    Rational s_;
};

SelfDuality summand_type(const WDSummand& s);

struct Target {
    enum class Kind { OddOrthogonal, Symplectic };
    Kind kind = Kind::OddOrthogonal;
    int n = 0;

    static Target odd_orthogonal(int n) { return {Kind::OddOrthogonal, n}; }
    static Target symplectic(int n) { return {Kind::Symplectic, n}; }

    int dim() const { return kind == Kind::OddOrthogonal ? 2 * n + 1 : 2 * n; }
    SelfDuality type() const { return kind == Kind::OddOrthogonal ? SelfDuality::Orthogonal : SelfDuality::Symplectic; }
    bool genuine() const { return kind == Kind::Symplectic; }
    std::string label() const;

    friend bool operator==(const Target&, const Target&) = default;
    friend auto operator<=>(const Target&, const Target&) = default;
};

/// L-parameter of Sp_n (into SO_{2n+1}) or of Mp_n (into Sp_{2n}).
struct WDParameter {
    Target target;
    Multiset<WDSummand> summands;

    int dim() const;
    WDParameter dual() const;
    friend bool operator==(const WDParameter&, const WDParameter&) = default;
};

std::vector<std::string> validate_parameter(const WDParameter& p);

struct ParameterPredicates {
    bool good_parity = false;
    bool tempered = false;
    bool almost_tempered = false;
};
ParameterPredicates predicates(const WDParameter& p);

/// An element of the component group: the set of basis labels with coefficient 1.
using GroupElement = std::set<std::string>;
GroupElement operator+(const GroupElement& a, const GroupElement& b);

struct ComponentGroup {
    std::vector<std::string> basis;
    std::vector<WDSummand> constituents; // parallel to basis
    std::vector<std::size_t> multiplicities;
    GroupElement z;

    std::size_t rank() const { return basis.size(); }
    bool has(const std::string& label) const;
    /// phi^a: one copy of each constituent named by a.
    std::vector<WDSummand> sub_parameter(const GroupElement& a) const;
};

ComponentGroup component_group(const WDParameter& p);

struct EtaCharacter {
    std::map<std::string, Sign> values;

    /// Throws IncompleteInput when a label is unset.
    Sign operator()(const GroupElement& a) const;
    bool is_trivial() const;
    friend bool operator==(const EtaCharacter&, const EtaCharacter&) = default;
};

struct ArchParameter {
    WDParameter phi;
    EtaCharacter eta;
};

/// Parameter and packet character of the holomorphic discrete series of weight l.
ArchParameter arch_holomorphic_parameter(int l, int n);

} // namespace liftcalc
