#include "liftcalc/global_param.hpp"

#include "liftcalc/error.hpp"

namespace liftcalc {

GlobalCusp GlobalCusp::twisted(const QuadTwist& t) const {
    GlobalCusp c = *this;
    c.twist *= t;
    if (c.central) *c.central *= t.pow(m);
    return c;
}

std::string GlobalCusp::label() const {
    auto t = twist.label();
    return t.empty() ? name : name + "*" + t;
}

std::string ABlock::label() const { return tau.label() + "[" + std::to_string(d) + "]"; }

bool GlobalAParameter::tempered() const {
    for (const auto& [b, _] : blocks)
        if (b.d != 1) return false;
    return true;
}

GlobalValidation validate_global_A(const GlobalAParameter& a) {
    GlobalValidation v;
    const bool sp = a.group == GlobalAParameter::Group::Sp;
    const int expected = sp ? 2 * a.n + 1 : 2 * a.n;
    int total = 0;
    QuadTwist central_product;
    bool central_known = true;
    for (const auto& [b, mult] : a.blocks) {
        total += b.tau.m * b.d * static_cast<int>(mult);
        if (b.d < 1 || b.tau.m < 1) v.violations.push_back("block " + b.label() + " has non-positive size");
        if (mult > 1) v.violations.push_back("block " + b.label() + " repeated (pairs (tau, d) must be distinct)");
        if (b.tau.sym2_pole && b.tau.wedge2_pole)
            v.violations.push_back("block " + b.label() + " declares poles of both Sym^2 and wedge^2");
        const bool want_sym2 = sp ? (b.d % 2 == 1) : (b.d % 2 == 0);
        if (want_sym2 && !b.tau.sym2_pole)
            v.violations.push_back("block " + b.label() + " requires a pole of L(s, tau, Sym^2) at s = 1");
        if (!want_sym2 && !b.tau.wedge2_pole)
            v.violations.push_back("block " + b.label() + " requires a pole of L(s, tau, wedge^2) at s = 1");
        if (b.tau.central) {
            for (std::size_t i = 0; i < mult; ++i) central_product *= b.tau.central->pow(b.d);
        } else {
            central_known = false;
        }
    }
    if (total != expected)
        v.violations.push_back("sum of m_i d_i is " + std::to_string(total) + ", expected " + std::to_string(expected));
    if (!central_known) v.unchecked.push_back("central character product (central characters not supplied)");
    else if (!central_product.is_trivial())
        v.violations.push_back("product of central characters is " + central_product.label() + ", not trivial");
    return v;
}

std::string SatakeEntry::str() const {
    if (qexp.is_zero()) return unit.str();
    return unit.str() + "*q^" + qexp.str();
}

bool inverse_closed(const SatakeParam& s) {
    for (const auto& [e, m] : s)
        if (s.count(e.inverse()) != m) return false;
    return true;
}

SatakeParam satake_of_global_A(const GlobalAParameter& a, const std::map<std::string, SatakeParam>& local,
                               const std::optional<LocalPlace>& place) {
    SatakeParam out;
    for (const auto& [b, mult] : a.blocks) {
        UnitSymbol twist_value;
        const SatakeParam* base = nullptr;
        if (auto it = local.find(b.tau.label()); it != local.end()) {
            base = &it->second;
        } else if (auto jt = local.find(b.tau.name); jt != local.end()) {
            base = &jt->second;
            auto t = b.tau.twist.at_uniformizer(place);
            if (!t) fail(ErrorCode::IncompleteInput, "twist of " + b.tau.label() + " cannot be evaluated at the uniformizer");
            twist_value = UnitSymbol::root(RootOfUnity8::from_sign(*t));
        } else {
            fail(ErrorCode::IncompleteInput, "no local Satake data for " + b.tau.label());
        }
        if (base->size() != static_cast<std::size_t>(b.tau.m))
            fail(ErrorCode::Inconsistent, "local Satake data for " + b.tau.label() + " has " +
                                              std::to_string(base->size()) + " entries, expected " +
                                              std::to_string(b.tau.m));
        for (const auto& [c, k] : *base)
            for (int j = 0; j < b.d; ++j) {
                Rational shift = Rational(2 * j - (b.d - 1), 2);
                out.insert(SatakeEntry{c.unit * twist_value, c.qexp + shift}, k * mult);
            }
    }
    return out;
}

} // namespace liftcalc
