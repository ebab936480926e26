#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liftcalc/epsilon.hpp"
#include "liftcalc/global_param.hpp"
#include "liftcalc/lift.hpp"

namespace liftcalc {

struct TraceEntry {
    std::string element; // basis element or block
    std::string side;    // which condition
    std::optional<Sign> lhs;
    std::optional<Sign> rhs;
    std::string detail;
    bool holds() const { return lhs && rhs && *lhs == *rhs; }
    bool fails() const { return lhs && rhs && *lhs != *rhs; }
};

enum class GgpVerdict { Distinguished, NotDistinguished, OracleIncomplete };
const char* ggp_verdict_name(GgpVerdict v);

struct GgpResult {
    GgpVerdict verdict;
    bool roles_swapped = false;
    std::vector<TraceEntry> basis_trace;
    std::vector<std::string> unresolved;
};

/// Local GGP criterion for (phi1, eta1) x (phi2, eta2); corank 1 is the
/// Fourier-Jacobi case r x (r-1), corank 0 the equal-rank case.
GgpResult ggp_local(const WDParameter& phi1, const EtaCharacter& eta1, const WDParameter& phi2,
                    const EtaCharacter& eta2, const SquareClass& xi, const EpsilonOracle& oracle, int corank);

enum class NongenericVerdict { One, Zero, OracleIncomplete, ConditionsNotMet };
const char* nongeneric_verdict_name(NongenericVerdict v);

struct NongenericResult {
    NongenericVerdict verdict;
    std::string reason;
    std::optional<GgpResult> ggp;
};

/// d_{n,n,xi}((mu chi_{-1}^{n+r-1} o det_{n-r}) |x| pi1, (mu chi_xi o det_{n-r+1}) |x| pi2).
NongenericResult ggp_nongeneric(const LiftSpec& spec, const SquareClass& xi, const WDParameter& phi1,
                                const EtaCharacter& eta1, const WDParameter& phi2, const EtaCharacter& eta2,
                                const EpsilonOracle& oracle);

/// Parameters of the two induced representations above.
std::pair<WDParameter, WDParameter> nongeneric_lifted_parameters(const LiftSpec& spec, const SquareClass& xi,
                                                                 const WDParameter& phi1, const WDParameter& phi2);

struct PlaceData {
    std::string label;
    EtaCharacter eta;
    std::map<std::string, GroupElement> localization; // block label -> local element
};

struct ArthurResult {
    bool occurs = false;
    std::vector<std::string> failing;
    std::vector<TraceEntry> trace;
};

/// Multiplicity condition for a tempered A-parameter; root numbers keyed by block label.
ArthurResult arthur_multiplicity(const GlobalAParameter& psi, const std::vector<PlaceData>& places,
                                 const std::map<std::string, Sign>& root_numbers);

/// prod_v mu_v(-1) * prod_{v | inf} (-1)^{k_v}
Sign a3_check(const std::vector<Sign>& mu_minus1, const std::vector<int>& weights);

struct PartnerPlace {
    PlaceData data;
    bool archimedean = false;
    int weight = 0;                       // k_v at an archimedean place
    std::optional<WDParameter> parameter; // local parameter at an archimedean place
    Sign mu_minus1;                       // mu_v(-1) at a finite place
    std::optional<Sign> chi_minus1;       // chi_{-1,v}(-1) at a finite place
    std::optional<LocalPlace> place;      // used to compute chi_minus1 when absent
};

struct PartnerResult {
    bool consistent = false;
    GlobalAParameter psi_prime;
    std::vector<TraceEntry> trace;
    std::vector<std::string> failing;
};

PartnerResult lemA_partner(const GlobalAParameter& psi, const GlobalCusp& tau, const std::vector<PartnerPlace>& places,
                           const std::map<std::string, Sign>& root_numbers);

enum class Nonvanishing { Nonzero, Zero, NeedsLValue };
const char* nonvanishing_name(Nonvanishing v);

struct NonvanishingPrediction {
    Nonvanishing verdict;
    bool theorem; // false means conjectural
};

NonvanishingPrediction predict_nonvanishing(const LiftSpec& spec, std::optional<bool> central_value_nonzero);

} // namespace liftcalc
