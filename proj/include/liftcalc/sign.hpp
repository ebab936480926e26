#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace liftcalc {

/// An element of {+1, -1}.
class Sign {
public:
    constexpr Sign() = default;
    static constexpr Sign plus() { return Sign(false); }
    static constexpr Sign minus() { return Sign(true); }
    static constexpr Sign from_parity(long long e) { return Sign((e % 2) != 0); }

    /// Accepts "+", "-", "+1", "-1", "1" and the unicode minus sign.
    static Sign parse(std::string_view text);

    constexpr bool is_plus() const { return !neg_; }
    constexpr bool is_minus() const { return neg_; }
    constexpr int value() const { return neg_ ? -1 : 1; }
    std::string str() const { return neg_ ? "-" : "+"; }

    constexpr Sign operator*(Sign o) const { return Sign(neg_ != o.neg_); }
    constexpr Sign& operator*=(Sign o) { neg_ = neg_ != o.neg_; return *this; }
    constexpr Sign operator-() const { return Sign(!neg_); }
    constexpr Sign pow(long long e) const { return Sign(neg_ && (e % 2 != 0)); }

    friend constexpr bool operator==(Sign, Sign) = default;
    friend constexpr auto operator<=>(Sign a, Sign b) { return a.neg_ <=> b.neg_; }

private:
    constexpr explicit Sign(bool neg) : neg_(neg) {}
    bool neg_ = false;
};

/// zeta_8^k, stored as k mod 8.
class RootOfUnity8 {
public:
    constexpr RootOfUnity8() = default;
    constexpr explicit RootOfUnity8(long long k) : k_(static_cast<int>(((k % 8) + 8) % 8)) {}
    static constexpr RootOfUnity8 one() { return RootOfUnity8(0); }
    static constexpr RootOfUnity8 i() { return RootOfUnity8(2); }
    static constexpr RootOfUnity8 from_sign(Sign s) { return RootOfUnity8(s.is_minus() ? 4 : 0); }

    /// "1", "-1", "i", "-i", or "zeta8^k".
    static RootOfUnity8 parse(std::string_view text);
    std::string str() const;

    constexpr int exponent() const { return k_; }
    constexpr bool is_one() const { return k_ == 0; }
    std::optional<Sign> as_sign() const;

    constexpr RootOfUnity8 operator*(RootOfUnity8 o) const { return RootOfUnity8(k_ + o.k_); }
    constexpr RootOfUnity8& operator*=(RootOfUnity8 o) { k_ = (k_ + o.k_) % 8; return *this; }
    constexpr RootOfUnity8 inverse() const { return RootOfUnity8(8 - k_); }
    constexpr RootOfUnity8 conj() const { return inverse(); }
    constexpr RootOfUnity8 pow(long long e) const { return RootOfUnity8(static_cast<long long>(k_) * (e % 8)); }

    friend constexpr bool operator==(RootOfUnity8, RootOfUnity8) = default;
    friend constexpr auto operator<=>(RootOfUnity8 a, RootOfUnity8 b) { return a.k_ <=> b.k_; }

private:
    int k_ = 0;
};

} // namespace liftcalc
