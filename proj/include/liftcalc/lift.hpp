#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liftcalc/global_param.hpp"
#include "liftcalc/mp_structure.hpp"
#include "liftcalc/parameters.hpp"

namespace liftcalc {

struct LiftSpec {
    int n = 0;
    int r = 0;
    Character mu;
    std::optional<SquareClass> xi;
    std::optional<LocalPlace> place;

    void check() const; // throws unless 0 <= r <= n
    int chi_power() const { return (n + r) / 2; }
    bool genuine() const { return (n + r) % 2 == 1; }
};

/// mu' = mu chi_{-1}^{[(n+r)/2]}, reduced at the place when one is bound.
Character mu_prime(const LiftSpec& spec);

/// Langlands data  tau'|.|^{e_1} x ... x tau'|.|^{e_m} (x mu') |x| pi  of the lift.
struct LiftLanglandsData {
    std::vector<GLPiece> pieces;         // tau' = mu' x mu'^-1 with decreasing exponents
    std::optional<Character> unitary;    // mu' in the odd case
    std::string base = "pi";
};

struct LocalLiftResult {
    LiftLanglandsData data;
    WDParameter parameter;   // phi_pi + mu' S_{n-r} + mu'^-1 S_{n-r}
    WDParameter l_parameter; // parameter of the Langlands quotient
    Character mu_prime;
    std::vector<WDSummand> added_blocks;
};

LocalLiftResult local_lift_parameter(const LiftSpec& spec, const WDParameter& phi_pi);

/// satake_pi together with alpha^{+-1} q^{(n-r-1)/2 - j}, 0 <= j < n - r.
SatakeParam satake_of_lift(const LiftSpec& spec, const UnitSymbol& alpha, const SatakeParam& satake_pi);

/// alpha = mu'(uniformizer) when the place and the unramified data are known.
std::optional<UnitSymbol> derive_alpha(const LiftSpec& spec);

/// Psi + (tau chi_{-1}^{[(n+r)/2]})[n - r].
GlobalAParameter global_lift_parameter(const LiftSpec& spec, const GlobalAParameter& psi, const GlobalCusp& tau);

struct DegeneratePrincipalSeries {
    int n = 0;
    Character mu;
    friend bool operator==(const DegeneratePrincipalSeries&, const DegeneratePrincipalSeries&) = default;
};

/// Fourier-Jacobi module of I^{(n)}(mu x mu^-1) along psi_xi.
DegeneratePrincipalSeries fj_rewrite(int n, const Character& mu, const QuadTwist& xi,
                                     const std::optional<LocalPlace>& place = std::nullopt);

enum class DualityVerdict { Holds, ConditionsNotMet };
struct DualityResult {
    DualityVerdict verdict;
    std::string reason;
    std::optional<WDParameter> recovered;
};

DualityResult duality_check(const LiftSpec& spec, const WDParameter& phi_pi);

struct InjectivityResult {
    bool consistent = true;   // lifts equal <=> parameters equal
    bool lifts_equal = false;
    bool params_equal = false;
    bool collision = false;   // the parameters differ inside the added mu'^{+-1} S_{n-r} block
};

InjectivityResult injectivity_check(const LiftSpec& spec, const WDParameter& phi1, const WDParameter& phi2);

} // namespace liftcalc
