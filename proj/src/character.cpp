#include "liftcalc/character.hpp"

#include "liftcalc/error.hpp"

namespace liftcalc {

Character Character::named(std::string base, bool quadratic) {
    if (base == "1") return {};
    if (!is_symbol_name(base)) fail(ErrorCode::Domain, "invalid character name '" + base + "'");
    Character c;
    c.base_ = std::move(base);
    c.quadratic_ = quadratic;
    return c;
}

Character Character::quadratic_twist(QuadTwist t) {
    Character c;
    c.twist_ = std::move(t);
    return c;
}

Character Character::parse(std::string_view label) {
    if (label.empty()) fail(ErrorCode::Domain, "empty character label");
    Character c;
    std::size_t pos = 0;
    bool have_base = false;
    while (true) {
        auto star = label.find('*', pos);
        // a '*' inside brackets cannot occur: generators are identifiers or class labels
        auto piece = label.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
        if (piece.size() > 5 && piece.substr(0, 4) == "chi[" && piece.back() == ']') {
            c.twist_ *= QuadTwist::of(std::string(piece.substr(4, piece.size() - 5)));
        } else if (piece == "1") {
        } else {
            if (have_base) fail(ErrorCode::Domain, "character label with two base names: '" + std::string(label) + "'");
            have_base = true;
            bool inv = false;
            if (piece.size() > 3 && piece.substr(piece.size() - 3) == "^-1") {
                inv = true;
                piece.remove_suffix(3);
            }
            auto named_c = named(std::string(piece));
            c.base_ = named_c.base_;
            c.quadratic_ = false;
            c.inverted_ = inv;
        }
        if (star == std::string_view::npos) break;
        pos = star + 1;
    }
    return c;
}

bool Character::has_metadata() const {
    return (base_ != "1" && quadratic_) || at_minus1_.has_value() || at_unif_.has_value();
}

Character& Character::declare_at_minus_one(Sign s) {
    if (base_ != "1") at_minus1_ = s;
    return *this;
}

Character& Character::declare_at_uniformizer(UnitSymbol u) {
    if (base_ != "1") at_unif_ = std::move(u);
    return *this;
}

Character Character::inverse() const {
    Character c = *this;
    if (base_ != "1" && !quadratic_) c.inverted_ = !inverted_;
    return c;
}

Character Character::twisted(const QuadTwist& t) const {
    Character c = *this;
    c.twist_ *= t;
    return c;
}

Character Character::canonical(const LocalPlace& place) const {
    Character c = *this;
    c.twist_ = twist_.canonical(place);
    return c;
}

std::string Character::label() const {
    std::string s;
    if (base_ != "1") s = base_ + (inverted_ ? "^-1" : "");
    auto t = twist_.label();
    if (!t.empty()) s += (s.empty() ? "" : "*") + t;
    return s.empty() ? "1" : s;
}

std::optional<Sign> Character::at_minus_one(const std::optional<LocalPlace>& place) const {
    auto t = twist_.at_minus_one(place);
    if (!t) return std::nullopt;
    if (base_ == "1") return t;
    if (!at_minus1_) return std::nullopt;
    return *at_minus1_ * *t;
}

std::optional<UnitSymbol> Character::at_uniformizer(const std::optional<LocalPlace>& place) const {
    auto t = twist_.at_uniformizer(place);
    if (!t) return std::nullopt;
    UnitSymbol out = UnitSymbol::root(RootOfUnity8::from_sign(*t));
    if (base_ == "1") return out;
    std::optional<UnitSymbol> b = at_unif_;
    if (!b) {
        if (quadratic_) return std::nullopt; // a quadratic base needs an explicit +-1
        b = UnitSymbol::named(base_);
    }
    return out * (inverted_ ? b->inverse() : *b);
}

std::optional<Sign> Character::value_at_class(const SquareClass& x) const {
    if (!quadratic_) fail(ErrorCode::Domain, "square-class value of the non-quadratic character " + label());
    auto t = twist_.value_at(x);
    if (!t) return std::nullopt;
    if (base_ == "1" || x.is_one()) return t;
    if (x == SquareClass::minus_one(x.place()) && at_minus1_) return *at_minus1_ * *t;
    return std::nullopt;
}

} // namespace liftcalc
