#include "liftcalc/local_arith.hpp"

#include "liftcalc/error.hpp"

namespace liftcalc {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

LocalPlace LocalPlace::nonarch(long long p, int f) {
    if (!is_prime(p)) fail(ErrorCode::Domain, "residue characteristic " + std::to_string(p) + " is not prime");
    if (f < 1) fail(ErrorCode::Domain, "residue degree must be positive");
    return LocalPlace(Kind::NonArch, p, f);
}

long long LocalPlace::q() const {
    if (is_real()) fail(ErrorCode::Domain, "residue field size requested at the real place");
    long long q = 1;
    for (int i = 0; i < f_; ++i) q *= p_;
    return q;
}

void LocalPlace::require_odd() const {
    if (!is_real() && p_ == 2) fail(ErrorCode::Unsupported, "unsupported residue characteristic 2");
}

std::string LocalPlace::label() const {
    if (is_real()) return "R";
    std::string s = "Q" + std::to_string(p_);
    if (f_ != 1) s += "^f" + std::to_string(f_);
    return s;
}

SquareClass SquareClass::make(const LocalPlace& place, bool nonsquare_unit, bool odd_valuation) {
    if (place.is_real() && odd_valuation) fail(ErrorCode::Domain, "no uniformizer class at the real place");
    return SquareClass(place, nonsquare_unit, odd_valuation);
}

SquareClass SquareClass::parse(const LocalPlace& place, std::string_view label) {
    if (place.is_real()) {
        if (label == "+" || label == "1") return SquareClass(place, false, false);
        if (label == "-" || label == "−" || label == "-1") return SquareClass(place, true, false);
    } else {
        place.require_odd();
        if (label == "1") return SquareClass(place, false, false);
        if (label == "u") return SquareClass(place, true, false);
        if (label == "w") return SquareClass(place, false, true);
        if (label == "uw" || label == "wu") return SquareClass(place, true, true);
        if (label == "-1") return minus_one(place);
    }
    fail(ErrorCode::Domain, "unknown square class '" + std::string(label) + "' at " + place.label());
}

SquareClass SquareClass::minus_one(const LocalPlace& place) {
    if (place.is_real()) return SquareClass(place, true, false);
    place.require_odd();
    return SquareClass(place, place.q() % 4 == 3, false);
}

SquareClass SquareClass::uniformizer(const LocalPlace& place) {
    if (place.is_real()) fail(ErrorCode::Domain, "no uniformizer at the real place");
    place.require_odd();
    return SquareClass(place, false, true);
}

std::vector<SquareClass> SquareClass::all(const LocalPlace& place) {
    if (place.is_real()) return {SquareClass(place, false, false), SquareClass(place, true, false)};
    place.require_odd();
    return {SquareClass(place, false, false), SquareClass(place, true, false),
            SquareClass(place, false, true), SquareClass(place, true, true)};
}

std::string SquareClass::label() const {
    if (place_.is_real()) return unit_ ? "-" : "+";
    if (unit_ && val_) return "uw";
    if (unit_) return "u";
    if (val_) return "w";
    return "1";
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
    if (!(place_ == o.place_)) fail(ErrorCode::Domain, "square classes at different places");
    return SquareClass(place_, unit_ != o.unit_, val_ != o.val_);
}

Sign hilbert_symbol(const SquareClass& a, const SquareClass& b) {
    if (!(a.place() == b.place())) fail(ErrorCode::Domain, "Hilbert symbol of classes at different places");
    const auto& place = a.place();
    if (place.is_real()) return Sign::from_parity(a.nonsquare_unit() && b.nonsquare_unit());
    place.require_odd();
    // a = e_a * w^alpha with e_a in {1, u}: symbol is
    // (-1)^{alpha beta (q-1)/2} * (e_a|.)^beta * (e_b|.)^alpha.
    long long half = (place.q() - 1) / 2;
    long long alpha = a.odd_valuation(), beta = b.odd_valuation();
    long long e = alpha * beta * half + (a.nonsquare_unit() ? beta : 0) + (b.nonsquare_unit() ? alpha : 0);
    return Sign::from_parity(e);
}

Sign quad_char_at_uniformizer(const SquareClass& xi) {
    return hilbert_symbol(SquareClass::uniformizer(xi.place()), xi);
}

RootOfUnity8 normalised_gauss_sum(const LocalPlace& place) {
    place.require_odd();
    if (place.is_real()) fail(ErrorCode::Domain, "Gauss sum requested at the real place");
    // Over F_p the normalised sum is 1 or i; Hasse-Davenport lifts it to F_q.
    RootOfUnity8 gp = (place.p() % 4 == 1) ? RootOfUnity8::one() : RootOfUnity8::i();
    RootOfUnity8 g = gp.pow(place.f());
    if ((place.f() - 1) % 2 != 0) g *= RootOfUnity8(4);
    return g;
}

namespace {

// alpha_psi(a) for psi of conductor O_F.  Unit classes give 1; for a of
// odd valuation the value is the conjugate normalised Gauss sum twisted by
// the residue symbol of the unit part of a and of -1.
RootOfUnity8 weil_index_unramified(const SquareClass& a) {
    const auto& place = a.place();
    if (!a.odd_valuation()) return RootOfUnity8::one();
    RootOfUnity8 g = normalised_gauss_sum(place).conj();
    if (place.q() % 4 == 3) g *= RootOfUnity8(4); // (-1 | q)
    if (a.nonsquare_unit()) g *= RootOfUnity8(4);
    return g;
}

} // namespace

RootOfUnity8 weil_gamma(const PsiScale& psi, const SquareClass& a) {
    const auto& place = a.place();
    if (!(psi.xi.place() == place)) fail(ErrorCode::Domain, "psi and argument live at different places");
    if (place.is_real()) {
        if (!psi.xi.is_one())
            fail(ErrorCode::OutOfScope, "real Weil constant only for the standard additive character");
        // alpha(1) = e^{i pi/4}, alpha(-1) = e^{-i pi/4}
        return a.nonsquare_unit() ? RootOfUnity8::i() : RootOfUnity8::one();
    }
    place.require_odd();
    // alpha_{psi_xi}(a) = alpha_psi(xi a)
    return weil_index_unramified(psi.xi) * weil_index_unramified(psi.xi * a).inverse();
}

} // namespace liftcalc
