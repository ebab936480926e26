#include "liftcalc/sign.hpp"

#include "liftcalc/error.hpp"

namespace liftcalc {

Sign Sign::parse(std::string_view t) {
    if (t == "+" || t == "+1" || t == "1") return plus();
    if (t == "-" || t == "-1" || t == "−" || t == "−1") return minus();
    fail(ErrorCode::Domain, "malformed sign '" + std::string(t) + "'");
}

RootOfUnity8 RootOfUnity8::parse(std::string_view t) {
    if (t == "1") return RootOfUnity8(0);
    if (t == "-1") return RootOfUnity8(4);
    if (t == "i") return RootOfUnity8(2);
    if (t == "-i") return RootOfUnity8(6);
    constexpr std::string_view prefix = "zeta8^";
    if (t.substr(0, prefix.size()) == prefix && t.size() == prefix.size() + 1) {
        char c = t.back();
        if (c >= '0' && c <= '7') return RootOfUnity8(c - '0');
    }
    fail(ErrorCode::Domain, "malformed root of unity '" + std::string(t) + "'");
}

std::string RootOfUnity8::str() const {
    switch (k_) {
    case 0: return "1";
    case 2: return "i";
    case 4: return "-1";
    case 6: return "-i";
    default: return "zeta8^" + std::to_string(k_);
    }
}

std::optional<Sign> RootOfUnity8::as_sign() const {
    if (k_ == 0) return Sign::plus();
    if (k_ == 4) return Sign::minus();
    return std::nullopt;
}

} // namespace liftcalc
