#include "liftcalc/unit_symbol.hpp"

#include <cctype>

#include "liftcalc/error.hpp"

namespace liftcalc {

bool is_symbol_name(std::string_view s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return s != "i" && s.substr(0, 5) != "zeta8";
}

UnitSymbol UnitSymbol::named(std::string name) {
    if (!is_symbol_name(name)) fail(ErrorCode::Domain, "invalid symbol name '" + name + "'");
    UnitSymbol u;
    u.powers_.emplace(std::move(name), 1);
    return u;
}

UnitSymbol UnitSymbol::root(RootOfUnity8 z) {
    UnitSymbol u;
    u.coef_ = z;
    return u;
}

UnitSymbol UnitSymbol::parse(std::string_view text) {
    if (text.empty()) fail(ErrorCode::Domain, "empty unit symbol");
    UnitSymbol out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto star = text.find('*', pos);
        auto piece = text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
        if (piece.empty()) fail(ErrorCode::Domain, "malformed unit symbol '" + std::string(text) + "'");
        if (piece[0] == '-') {
            out.coef_ *= RootOfUnity8(4);
            piece.remove_prefix(1);
            if (piece.empty()) fail(ErrorCode::Domain, "malformed unit symbol '" + std::string(text) + "'");
        }
        if (piece == "1" || piece == "i" || piece.substr(0, 6) == "zeta8^") {
            out.coef_ *= RootOfUnity8::parse(piece);
        } else {
            auto caret = piece.find('^');
            std::string name(piece.substr(0, caret));
            int e = 1;
            if (caret != std::string_view::npos) {
                auto es = piece.substr(caret + 1);
                try {
                    std::size_t used = 0;
                    e = std::stoi(std::string(es), &used);
                    if (used != es.size()) throw std::invalid_argument("trailing");
                } catch (const std::exception&) {
                    fail(ErrorCode::Domain, "malformed exponent in unit symbol '" + std::string(text) + "'");
                }
            }
            if (!is_symbol_name(name)) fail(ErrorCode::Domain, "invalid symbol name '" + name + "'");
            UnitSymbol f;
            if (e != 0) f.powers_.emplace(name, e);
            out *= f;
        }
        if (star == std::string_view::npos) break;
        pos = star + 1;
    }
    return out;
}

std::string UnitSymbol::str() const {
    std::string mono;
    for (const auto& [name, e] : powers_) {
        if (!mono.empty()) mono += "*";
        mono += name;
        if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) return coef_.str();
    if (coef_.is_one()) return mono;
    if (coef_.exponent() == 4) return "-" + mono;
    return coef_.str() + "*" + mono;
}

UnitSymbol UnitSymbol::inverse() const { return pow(-1); }

UnitSymbol UnitSymbol::pow(long long e) const {
    UnitSymbol out;
    out.coef_ = coef_.pow(e);
    if (e == 0) return out;
    for (const auto& [name, k] : powers_) out.powers_.emplace(name, static_cast<int>(k * e));
    return out;
}

UnitSymbol UnitSymbol::operator*(const UnitSymbol& o) const {
    UnitSymbol out = *this;
    out.coef_ *= o.coef_;
    for (const auto& [name, k] : o.powers_) {
        int& slot = out.powers_[name];
        slot += k;
        if (slot == 0) out.powers_.erase(name);
    }
    return out;
}

} // namespace liftcalc
