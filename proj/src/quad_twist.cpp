#include "liftcalc/quad_twist.hpp"

#include "liftcalc/error.hpp"
#include "liftcalc/unit_symbol.hpp"

namespace liftcalc {

bool is_twist_generator(std::string_view g) {
    if (g == "-1" || g == "+" || g == "-" || g == "u" || g == "w" || g == "uw") return true;
    return is_symbol_name(g);
}

QuadTwist QuadTwist::of(std::string g) {
    QuadTwist t;
    if (g == "1" || g == "+") return t;
    if (g == "−") g = "-";
    if (!is_twist_generator(g)) fail(ErrorCode::Domain, "invalid quadratic twist generator '" + g + "'");
    t.gens_.insert(std::move(g));
    return t;
}

QuadTwist QuadTwist::of_class(const SquareClass& c) {
    if (c.is_one()) return {};
    return of(c.label());
}

QuadTwist QuadTwist::operator*(const QuadTwist& o) const {
    QuadTwist out = *this;
    for (const auto& g : o.gens_) {
        auto it = out.gens_.find(g);
        if (it != out.gens_.end()) out.gens_.erase(it);
        else out.gens_.insert(g);
    }
    return out;
}

QuadTwist::Resolved QuadTwist::resolve(const LocalPlace& place) const {
    Resolved r;
    SquareClass acc = SquareClass::one(place);
    bool any = false;
    for (const auto& g : gens_) {
        std::optional<SquareClass> c;
        if (g == "-1") c = SquareClass::minus_one(place);
        else if (place.is_real() && g == "-") c = SquareClass::parse(place, g);
        else if (!place.is_real() && (g == "u" || g == "w" || g == "uw")) c = SquareClass::parse(place, g);
        if (c) {
            acc = acc * *c;
            any = true;
        } else {
            r.formal.insert(g);
        }
    }
    if (any || r.formal.empty()) r.cls = acc;
    return r;
}

QuadTwist QuadTwist::canonical(const LocalPlace& place) const {
    auto r = resolve(place);
    QuadTwist out;
    out.gens_ = r.formal;
    if (r.cls && !r.cls->is_one()) out.gens_.insert(r.cls->label());
    return out;
}

std::optional<Sign> QuadTwist::value_at(const SquareClass& x) const {
    auto r = resolve(x.place());
    if (!r.formal.empty()) return std::nullopt;
    return hilbert_symbol(x, *r.cls);
}

std::optional<Sign> QuadTwist::at_minus_one(const std::optional<LocalPlace>& place) const {
    if (is_trivial()) return Sign::plus();
    if (!place) return std::nullopt;
    return value_at(SquareClass::minus_one(*place));
}

std::optional<Sign> QuadTwist::at_uniformizer(const std::optional<LocalPlace>& place) const {
    if (is_trivial()) return Sign::plus();
    if (!place) return std::nullopt;
    if (place->is_real()) fail(ErrorCode::Domain, "uniformizer value requested at the real place");
    auto r = resolve(*place);
    if (!r.formal.empty()) return std::nullopt;
    if (r.cls->odd_valuation())
        fail(ErrorCode::Domain, "twist " + label() + " is ramified at " + place->label());
    return hilbert_symbol(SquareClass::uniformizer(*place), *r.cls);
}

std::string QuadTwist::label() const {
    std::string s;
    for (const auto& g : gens_) {
        if (!s.empty()) s += "*";
        s += "chi[" + g + "]";
    }
    return s;
}

} // namespace liftcalc
