#include "liftcalc/epsilon.hpp"

#include <algorithm>

#include "liftcalc/error.hpp"

namespace liftcalc {

TensorTerm TensorTerm::make(std::vector<WDSummand> factors, QuadTwist twist) {
    std::sort(factors.begin(), factors.end());
    return {std::move(factors), std::move(twist)};
}

TensorTerm TensorTerm::dual() const {
    std::vector<WDSummand> f;
    for (const auto& s : factors) f.push_back(s.dual());
    return make(std::move(f), twist);
}

int TensorTerm::dim() const {
    int d = 1;
    for (const auto& s : factors) d *= s.dim();
    return d;
}

std::string TensorTerm::key() const {
    std::string s;
    for (const auto& f : factors) s += (s.empty() ? "" : " (x) ") + f.label();
    if (!twist.is_trivial()) s += " (x) " + twist.label();
    return s;
}

std::vector<TensorTerm> tensor_terms(const std::vector<WDSummand>& a, const std::vector<WDSummand>& b, const QuadTwist& chi) {
    std::vector<TensorTerm> out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(TensorTerm::make({x, y}, chi));
    return out;
}

std::vector<TensorTerm> summand_terms(const std::vector<WDSummand>& a) {
    std::vector<TensorTerm> out;
    for (const auto& x : a) out.push_back(TensorTerm::make({x}));
    return out;
}

std::vector<WDSummand> expand(const Multiset<WDSummand>& m) { return m.elements(); }

namespace {

// det(base (x) S_d (x) |.|^s) = det(base)^d |.|^{s dim}; |.| is trivial on unit classes
template <class CharEval>
std::optional<Sign> det_generic(const WDSummand& s, const SquareClass& x, CharEval chareval) {
    if (!s.s().is_zero() && x.odd_valuation()) return std::nullopt;
    const int d = s.d();
    const auto& place = x.place();
    std::optional<Sign> base = std::visit(
        [&](const auto& b) -> std::optional<Sign> {
            using B = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<B, TrivBase>) {
                return Sign::plus();
            } else if constexpr (std::is_same_v<B, SgnBase>) {
                if (!place.is_real()) return std::nullopt;
                return Sign::from_parity(x.nonsquare_unit());
            } else if constexpr (std::is_same_v<B, Character>) {
                return chareval(b);
            } else if constexpr (std::is_same_v<B, RhoBase>) {
                // det rho_k = sgn^{k+1}
                if (!place.is_real()) return std::nullopt;
                return Sign::from_parity(x.nonsquare_unit() && (b.k + 1) % 2 != 0);
            } else {
                if (b.selfdual == SelfDuality::Symplectic) return Sign::plus();
                if (!b.det) return std::nullopt;
                return chareval(*b.det);
            }
        },
        s.base());
    if (d % 2 == 0) return Sign::plus();
    return base;
}

} // namespace

std::optional<Sign> det_at_minus_one(const WDSummand& s, const LocalPlace& place) {
    auto x = SquareClass::minus_one(place);
    return det_generic(s, x, [&](const Character& c) { return c.at_minus_one(place); });
}

std::optional<Sign> det_at_class(const WDSummand& s, const SquareClass& x) {
    return det_generic(s, x, [&](const Character& c) -> std::optional<Sign> {
        if (x.is_one()) return Sign::plus();
        if (!c.is_quadratic()) return std::nullopt;
        return c.value_at_class(x);
    });
}

std::optional<Sign> det_at_minus_one(const TensorTerm& t, const LocalPlace& place) {
    // det(F_1 (x) ... (x) F_k (x) chi) = prod det(F_i)^{D / dim F_i} * chi^D
    const int D = t.dim();
    Sign out = Sign::plus();
    for (const auto& f : t.factors) {
        if ((D / f.dim()) % 2 == 0) continue;
        auto v = det_at_minus_one(f, place);
        if (!v) return std::nullopt;
        out *= *v;
    }
    if (D % 2 != 0) {
        auto v = t.twist.at_minus_one(place);
        if (!v) return std::nullopt;
        out *= *v;
    }
    return out;
}

std::optional<Sign> det_at_class(const std::vector<WDSummand>& sum, const SquareClass& x) {
    Sign out = Sign::plus();
    for (const auto& s : sum) {
        auto v = det_at_class(s, x);
        if (!v) return std::nullopt;
        out *= *v;
    }
    return out;
}

EpsilonOracle EpsilonOracle::formal(std::map<std::string, Sign> symbols, std::optional<Sign> default_sign) {
    EpsilonOracle o;
    o.backend_ = Backend::Formal;
    o.table_ = std::move(symbols);
    o.default_ = default_sign;
    return o;
}

EpsilonOracle EpsilonOracle::user_table(std::map<std::string, Sign> table) {
    EpsilonOracle o;
    o.backend_ = Backend::UserTable;
    o.table_ = std::move(table);
    return o;
}

EpsilonValue EpsilonOracle::epsilon(const std::vector<TensorTerm>& terms, const LocalPlace& place) const {
    EpsilonValue r;
    Sign acc = Sign::plus();
    bool resolved = true;
    std::map<TensorTerm, std::size_t> counts;
    for (const auto& t : terms) ++counts[t];
    for (const auto& [t, m] : counts) {
        if (t.self_dual()) {
            auto key = t.key();
            auto it = table_.find(key);
            std::optional<Sign> v;
            if (it != table_.end()) v = it->second;
            else if (backend_ == Backend::UserTable)
                fail(ErrorCode::IncompleteInput, "root-number table has no entry for '" + key + "'");
            else v = default_;
            if (!v) {
                resolved = false;
                r.unresolved.push_back("eps(" + key + ")");
                r.trace.push_back("eps(" + key + ") = ?");
                continue;
            }
            acc *= v->pow(static_cast<long long>(m));
            r.trace.push_back("eps(" + key + ") = " + v->str() + (m > 1 ? " ^" + std::to_string(m) : ""));
            continue;
        }
        auto d = t.dual();
        if (!(t < d)) continue; // handled with its partner
        auto dm = counts.count(d) ? counts.at(d) : 0;
        if (dm != m)
            fail(ErrorCode::Inconsistent, "tensor term '" + t.key() + "' is not paired with its dual");
        auto v = det_at_minus_one(t, place);
        if (!v) {
            resolved = false;
            r.unresolved.push_back("det(" + t.key() + ")(-1)");
            r.trace.push_back("eps(" + t.key() + " + dual) = det(-1) = ?");
            continue;
        }
        acc *= v->pow(static_cast<long long>(m));
        r.trace.push_back("eps(" + t.key() + " + dual) = det(-1) = " + v->str());
    }
    if (resolved) r.value = acc;
    return r;
}

} // namespace liftcalc
