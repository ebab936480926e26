#include "liftcalc/parameters.hpp"

#include "liftcalc/error.hpp"

namespace liftcalc {

namespace {

SummandBase normalise(SummandBase b) {
    if (auto* c = std::get_if<Character>(&b)) {
        if (c->is_trivial()) return TrivBase{};
        // chi_{-} at the real place is the sign character
        if (c->base() == "1" && c->twist() == QuadTwist::of("-")) return SgnBase{};
    }
    if (auto* r = std::get_if<RhoBase>(&b); r && r->k < 1) fail(ErrorCode::Domain, "rho_k requires k >= 1");
    if (auto* f = std::get_if<CuspSymbol>(&b); f && f->is_character()) return *f->character;
    return b;
}

SelfDuality flip(SelfDuality t) {
    if (t == SelfDuality::Orthogonal) return SelfDuality::Symplectic;
    if (t == SelfDuality::Symplectic) return SelfDuality::Orthogonal;
    return t;
}

} // namespace

WDSummand::WDSummand(SummandBase base, int d, Rational s) : base_(normalise(std::move(base))), d_(d), s_(std::move(s)) {
    if (d < 1) fail(ErrorCode::Domain, "S_d factor requires d >= 1");
}

int WDSummand::base_dim() const {
    if (std::holds_alternative<RhoBase>(base_)) return 2;
    if (auto* f = std::get_if<CuspSymbol>(&base_)) return f->dim;
    return 1;
}

SelfDuality WDSummand::base_type() const {
    return std::visit(
        [](const auto& b) -> SelfDuality {
            using B = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<B, TrivBase> || std::is_same_v<B, SgnBase>) return SelfDuality::Orthogonal;
            else if constexpr (std::is_same_v<B, Character>)
                return b.is_quadratic() ? SelfDuality::Orthogonal : SelfDuality::None;
            else if constexpr (std::is_same_v<B, RhoBase>)
                return b.k % 2 == 0 ? SelfDuality::Orthogonal : SelfDuality::Symplectic;
            else return b.selfdual;
        },
        base_);
}

WDSummand WDSummand::dual() const {
    SummandBase b = std::visit(
        [](const auto& x) -> SummandBase {
            using B = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<B, Character>) return x.inverse();
            else if constexpr (std::is_same_v<B, CuspSymbol>) return x.dual();
            else return x;
        },
        base_);
    return WDSummand(std::move(b), d_, -s_);
}

std::string WDSummand::base_label() const {
    return std::visit(
        [](const auto& b) -> std::string {
            using B = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<B, TrivBase>) return "1";
            else if constexpr (std::is_same_v<B, SgnBase>) return "sgn";
            else if constexpr (std::is_same_v<B, Character>) return b.label();
            else if constexpr (std::is_same_v<B, RhoBase>) return "rho[" + std::to_string(b.k) + "]";
            else return b.label();
        },
        base_);
}

std::string WDSummand::label() const {
    std::string s = base_label();
    if (d_ != 1) s += "[" + std::to_string(d_) + "]";
    if (!s_.is_zero()) s += "|^" + s_.str();
    return s;
}

SelfDuality summand_type(const WDSummand& s) {
    if (!s.s().is_zero()) return SelfDuality::None;
    SelfDuality t = s.base_type();
    return s.d() % 2 == 0 ? flip(t) : t;
}

std::string Target::label() const {
    return (kind == Kind::OddOrthogonal ? "OddOrthogonal(" : "Symplectic(") + std::to_string(n) + ")";
}

int WDParameter::dim() const {
    int d = 0;
    for (const auto& [s, m] : summands) d += s.dim() * static_cast<int>(m);
    return d;
}

WDParameter WDParameter::dual() const {
    return WDParameter{target, summands.map([](const WDSummand& s) { return s.dual(); })};
}

std::vector<std::string> validate_parameter(const WDParameter& p) {
    std::vector<std::string> v;
    if (p.target.n < 0) v.push_back("negative rank");
    if (p.dim() != p.target.dim())
        v.push_back("dimension " + std::to_string(p.dim()) + " does not match " + p.target.label() +
                    " (expected " + std::to_string(p.target.dim()) + ")");
    for (const auto& [s, m] : p.summands) {
        auto dual = s.dual();
        if (p.summands.count(dual) != m)
            v.push_back("summand " + s.label() + " (multiplicity " + std::to_string(m) + ") lacks its dual " +
                        dual.label() + " with equal multiplicity");
        auto t = summand_type(s);
        if (t != SelfDuality::None && t != p.target.type() && m % 2 != 0)
            v.push_back(std::string(self_duality_name(t)) + " summand " + s.label() +
                        " has odd multiplicity in a " + self_duality_name(p.target.type()) + " target");
    }
    return v;
}

ParameterPredicates predicates(const WDParameter& p) {
    ParameterPredicates r{true, true, true};
    static const Rational half(1, 2);
    for (const auto& [s, m] : p.summands) {
        if (summand_type(s) != p.target.type()) r.good_parity = false;
        if (!s.s().is_zero()) r.tempered = false;
        if (!(s.s().abs() < half)) r.almost_tempered = false;
    }
    return r;
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    GroupElement out = a;
    for (const auto& x : b) {
        auto it = out.find(x);
        if (it != out.end()) out.erase(it);
        else out.insert(x);
    }
    return out;
}

bool ComponentGroup::has(const std::string& label) const {
    for (const auto& b : basis)
        if (b == label) return true;
    return false;
}

std::vector<WDSummand> ComponentGroup::sub_parameter(const GroupElement& a) const {
    std::vector<WDSummand> out;
    for (const auto& label : a) {
        bool found = false;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == label) {
                out.push_back(constituents[i]);
                found = true;
            }
        if (!found) fail(ErrorCode::Domain, "'" + label + "' is not a component-group basis label");
    }
    return out;
}

ComponentGroup component_group(const WDParameter& p) {
    ComponentGroup g;
    for (const auto& [s, m] : p.summands) {
        if (summand_type(s) != p.target.type()) continue;
        g.basis.push_back(s.label());
        g.constituents.push_back(s);
        g.multiplicities.push_back(m);
        if (m % 2 == 1) g.z.insert(s.label());
    }
    return g;
}

Sign EtaCharacter::operator()(const GroupElement& a) const {
    Sign out = Sign::plus();
    for (const auto& label : a) {
        auto it = values.find(label);
        if (it == values.end()) fail(ErrorCode::IncompleteInput, "eta is not specified on '" + label + "'");
        out *= it->second;
    }
    return out;
}

bool EtaCharacter::is_trivial() const {
    for (const auto& [_, s] : values)
        if (s.is_minus()) return false;
    return true;
}

ArchParameter arch_holomorphic_parameter(int l, int n) {
    if (n < 1) fail(ErrorCode::Domain, "arch_holomorphic_parameter requires n >= 1");
    if (l <= 2 * n) fail(ErrorCode::Domain, "not discrete series: weight " + std::to_string(l) + " <= 2n");
    ArchParameter out;
    out.phi.target = l % 2 == 0 ? Target::odd_orthogonal(n) : Target::symplectic(n);
    Sign prod = Sign::plus();
    for (int i = 1; i <= n; ++i) {
        auto s = WDSummand::rho(l - 2 * i);
        out.phi.summands.insert(s);
        Sign e = Sign::from_parity(i - 1);
        out.eta.values[s.label()] = e;
        prod *= e;
    }
    if (l % 2 == 0) {
        auto s = n % 2 == 1 ? WDSummand::sgn() : WDSummand::triv();
        out.phi.summands.insert(s);
        // the value on sgn^n is fixed by eta(z) = 1
        out.eta.values[s.label()] = prod;
    }
    return out;
}

} // namespace liftcalc
