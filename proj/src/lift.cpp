#include "liftcalc/lift.hpp"

#include "liftcalc/error.hpp"

namespace liftcalc {

void LiftSpec::check() const {
    if (r < 0) fail(ErrorCode::Domain, "negative rank r");
    if (n < r) fail(ErrorCode::Domain, "lift requires n >= r (got n = " + std::to_string(n) + ", r = " + std::to_string(r) + ")");
}

Character mu_prime(const LiftSpec& spec) {
    Character c = spec.mu.twisted(QuadTwist::minus_one().pow(spec.chi_power()));
    return spec.place ? c.canonical(*spec.place) : c;
}

namespace {

void require_input(const LiftSpec& spec, const WDParameter& phi) {
    spec.check();
    if (phi.target.n != spec.r)
        fail(ErrorCode::Domain, "parameter has rank " + std::to_string(phi.target.n) + ", expected r = " + std::to_string(spec.r));
    if (phi.target.genuine() != spec.genuine())
        fail(ErrorCode::Domain, std::string("{+-1} must act by (+-1)^{n+r}: expected a ") +
                                    (spec.genuine() ? "genuine (symplectic)" : "non-genuine (odd orthogonal)") + " parameter");
    auto v = validate_parameter(phi);
    if (!v.empty()) fail(ErrorCode::Domain, "invalid parameter: " + v.front());
}

} // namespace

LocalLiftResult local_lift_parameter(const LiftSpec& spec, const WDParameter& phi_pi) {
    require_input(spec, phi_pi);
    LocalLiftResult out;
    out.mu_prime = mu_prime(spec);
    const Character& mp = out.mu_prime;
    const int k = spec.n - spec.r;

    for (int j = 0; j < k / 2; ++j) {
        Rational e = Rational(k - 1 - 2 * j, 2);
        out.data.pieces.push_back(GLPiece{"tau'", {WDSummand::chr(mp), WDSummand::chr(mp.inverse())}, e});
    }
    if (k % 2 == 1) out.data.unitary = mp;

    out.parameter = phi_pi;
    out.parameter.target.n = spec.n;
    out.l_parameter = out.parameter;
    if (k > 0) {
        out.added_blocks = {WDSummand::chr(mp, k), WDSummand::chr(mp.inverse(), k)};
        for (const auto& b : out.added_blocks) out.parameter.summands.insert(b);
        for (int j = 0; j < k; ++j) {
            Rational e = Rational(k - 1 - 2 * j, 2);
            out.l_parameter.summands.insert(WDSummand::chr(mp, 1, e));
            out.l_parameter.summands.insert(WDSummand::chr(mp.inverse(), 1, e));
        }
    }
    for (const auto* p : {&out.parameter, &out.l_parameter}) {
        auto v = validate_parameter(*p);
        if (!v.empty()) fail(ErrorCode::Inconsistent, "lifted parameter fails validation: " + v.front());
    }
    return out;
}

SatakeParam satake_of_lift(const LiftSpec& spec, const UnitSymbol& alpha, const SatakeParam& satake_pi) {
    spec.check();
    SatakeParam out = satake_pi;
    const int k = spec.n - spec.r;
    for (int j = 0; j < k; ++j) {
        Rational e = Rational(k - 1 - 2 * j, 2);
        out.insert(SatakeEntry{alpha, e});
        out.insert(SatakeEntry{alpha.inverse(), e});
    }
    return out;
}

std::optional<UnitSymbol> derive_alpha(const LiftSpec& spec) {
    if (!spec.place || spec.place->is_real()) return std::nullopt;
    return mu_prime(spec).at_uniformizer(spec.place);
}

GlobalAParameter global_lift_parameter(const LiftSpec& spec, const GlobalAParameter& psi, const GlobalCusp& tau) {
    spec.check();
    if (psi.n != spec.r) fail(ErrorCode::Domain, "A-parameter has rank " + std::to_string(psi.n) + ", expected r");
    const bool want_mp = spec.genuine();
    if ((psi.group == GlobalAParameter::Group::Mp) != want_mp)
        fail(ErrorCode::Domain, std::string("A-parameter must be for ") + (want_mp ? "Mp" : "Sp") + " when n + r is " +
                                    (want_mp ? "odd" : "even"));
    if (tau.m != 2) fail(ErrorCode::Domain, "tau must be a cuspidal representation of GL_2");
    GlobalAParameter out = psi;
    out.n = spec.n;
    if (spec.n > spec.r) out.blocks.insert(ABlock{tau.twisted(QuadTwist::minus_one().pow(spec.chi_power())), spec.n - spec.r});
    auto v = validate_global_A(out);
    if (!v.ok()) fail(ErrorCode::Inconsistent, "lifted A-parameter is not discrete: " + v.violations.front());
    return out;
}

DegeneratePrincipalSeries fj_rewrite(int n, const Character& mu, const QuadTwist& xi, const std::optional<LocalPlace>& place) {
    if (n < 1) fail(ErrorCode::Domain, "Fourier-Jacobi rewrite requires n >= 1");
    Character c = mu.twisted(xi);
    return {n - 1, place ? c.canonical(*place) : c};
}

namespace {

bool is_obstruction(const WDSummand& s, const std::vector<Character>& chars, int k) {
    const auto* c = s.as_character();
    if (!c) return false;
    if (s.d() < k || (s.d() - k) % 2 != 0) return false;
    for (const auto& x : chars)
        if (*c == x) return true;
    return false;
}

} // namespace

DualityResult duality_check(const LiftSpec& spec, const WDParameter& phi_pi) {
    require_input(spec, phi_pi);
    if (!predicates(phi_pi).almost_tempered) fail(ErrorCode::Domain, "duality_check requires an almost tempered parameter");
    const int n = spec.n, r = spec.r, k = n - r;
    const bool regime = n <= r + 1 || n > 2 * r;
    if (!regime) {
        Character mu = spec.place ? spec.mu.canonical(*spec.place) : spec.mu;
        Character mp = mu_prime(spec);
        std::vector<Character> bad{mu, mu.inverse(), mp, mp.inverse()};
        for (const auto& [s, _] : phi_pi.summands)
            if (is_obstruction(s, bad, k))
                return {DualityVerdict::ConditionsNotMet,
                        "parameter contains " + s.label() + " with d >= n - r and d = n - r mod 2, and r + 1 < n <= 2r",
                        std::nullopt};
    }
    auto lifted = local_lift_parameter(spec, phi_pi);
    WDParameter back = lifted.parameter;
    back.target.n = r;
    for (const auto& b : lifted.added_blocks)
        if (!back.summands.erase_one(b)) fail(ErrorCode::Inconsistent, "added block " + b.label() + " missing from the lift");
    if (!(back == phi_pi)) fail(ErrorCode::Inconsistent, "co-lift did not recover the parameter");
    return {DualityVerdict::Holds, regime ? "n <= r + 1 or n > 2r" : "no obstructing mu^{+-1} S_d summand", back};
}

InjectivityResult injectivity_check(const LiftSpec& spec, const WDParameter& phi1, const WDParameter& phi2) {
    auto l1 = local_lift_parameter(spec, phi1);
    auto l2 = local_lift_parameter(spec, phi2);
    InjectivityResult r;
    r.lifts_equal = l1.parameter == l2.parameter;
    r.params_equal = phi1 == phi2;
    r.consistent = r.lifts_equal == r.params_equal;
    if (!r.params_equal) {
        for (const auto& b : l1.added_blocks) {
            r.collision = r.collision || phi1.summands.count(b) != phi2.summands.count(b);
        }
    }
    return r;
}

} // namespace liftcalc
