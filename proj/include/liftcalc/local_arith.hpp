#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "liftcalc/sign.hpp"

namespace liftcalc {

/// A local field: a finite extension of Q_p (described by p and the residue
/// degree f, unramified over Q_p) or the real numbers.
class LocalPlace {
public:
    enum class Kind { NonArch, Real };

    static LocalPlace real() { return LocalPlace(Kind::Real, 0, 0); }
    static LocalPlace nonarch(long long p, int f = 1);

    Kind kind() const { return kind_; }
    bool is_real() const { return kind_ == Kind::Real; }
    long long p() const { return p_; }
    int f() const { return f_; }
    long long q() const; // residue field size; throws at the real place

    /// Throws Unsupported when the residue characteristic is 2.
    void require_odd() const;

    std::string label() const; // "R", "Q5", "Q5^f2"

    friend bool operator==(const LocalPlace&, const LocalPlace&) = default;
    friend auto operator<=>(const LocalPlace&, const LocalPlace&) = default;

private:
    LocalPlace(Kind k, long long p, int f) : kind_(k), p_(p), f_(f) {}
    Kind kind_;
    long long p_;
    int f_;
};

bool is_prime(long long n);

/*
 * Element of F^x / (F^x)^2.  At an odd non-archimedean place the four
 * classes are 1, u (non-square unit), w (uniformizer) and uw.  At the real
 * place the classes are "+" and "-".
 */
class SquareClass {
public:
    static SquareClass one(const LocalPlace& place) { return SquareClass(place, false, false); }
    static SquareClass make(const LocalPlace& place, bool nonsquare_unit, bool odd_valuation);
    static SquareClass parse(const LocalPlace& place, std::string_view label);
    static SquareClass minus_one(const LocalPlace& place);
    static SquareClass uniformizer(const LocalPlace& place); // w; not defined at R
    static std::vector<SquareClass> all(const LocalPlace& place);

    const LocalPlace& place() const { return place_; }
    bool nonsquare_unit() const { return unit_; } // at R: true for the negative class
    bool odd_valuation() const { return val_; }
    bool is_one() const { return !unit_ && !val_; }
    std::string label() const;

    SquareClass operator*(const SquareClass& o) const;

    friend bool operator==(const SquareClass&, const SquareClass&) = default;
    friend auto operator<=>(const SquareClass&, const SquareClass&) = default;

private:
    SquareClass(LocalPlace place, bool unit, bool val) : place_(place), unit_(unit), val_(val) {}
    LocalPlace place_;
    bool unit_;
    bool val_;
};

/// Quadratic Hilbert symbol <a, b>_F.
Sign hilbert_symbol(const SquareClass& a, const SquareClass& b);

/// Quadratic character chi_xi(x) = <x, xi>.
inline Sign quad_char(const SquareClass& xi, const SquareClass& x) { return hilbert_symbol(x, xi); }

/// chi_xi(uniformizer) at an odd place (unramified iff xi is a unit class).
Sign quad_char_at_uniformizer(const SquareClass& xi);

/*
 * Additive character psi_xi(x) = psi(xi x), with psi of conductor O_F at a
 * non-archimedean place and psi(x) = exp(2 pi i x) at R.
 */
struct PsiScale {
    SquareClass xi;
};

/// gamma_psi(a) = alpha_psi(1) / alpha_psi(a), an eighth root of unity.
RootOfUnity8 weil_gamma(const PsiScale& psi, const SquareClass& a);

/// Gauss sum of the quadratic character of F_q, normalised by sqrt(q).
RootOfUnity8 normalised_gauss_sum(const LocalPlace& place);

} // namespace liftcalc
