#include "liftcalc/signs.hpp"

#include <algorithm>

#include "liftcalc/error.hpp"

namespace liftcalc {

const char* ggp_verdict_name(GgpVerdict v) {
    switch (v) {
    case GgpVerdict::Distinguished: return "distinguished";
    case GgpVerdict::NotDistinguished: return "not_distinguished";
    case GgpVerdict::OracleIncomplete: return "oracle_incomplete";
    }
    return "?";
}

const char* nongeneric_verdict_name(NongenericVerdict v) {
    switch (v) {
    case NongenericVerdict::One: return "1";
    case NongenericVerdict::Zero: return "0";
    case NongenericVerdict::OracleIncomplete: return "oracle_incomplete";
    case NongenericVerdict::ConditionsNotMet: return "conditions_not_met";
    }
    return "?";
}

const char* nonvanishing_name(Nonvanishing v) {
    switch (v) {
    case Nonvanishing::Nonzero: return "nonzero";
    case Nonvanishing::Zero: return "zero";
    case Nonvanishing::NeedsLValue: return "needs_L_value";
    }
    return "?";
}

namespace {

std::string element_label(const std::string& prefix, const std::string& basis) { return prefix + ":" + basis; }

void collect(EpsilonValue&& v, std::optional<Sign>& acc, std::vector<std::string>& unresolved, std::string& detail) {
    for (auto& u : v.unresolved) unresolved.push_back(u);
    for (auto& t : v.trace) detail += (detail.empty() ? "" : "; ") + t;
    if (!v.value) acc.reset();
    else if (acc) *acc *= *v.value;
}

} // namespace

GgpResult ggp_local(const WDParameter& p1, const EtaCharacter& e1, const WDParameter& p2, const EtaCharacter& e2,
                    const SquareClass& xi, const EpsilonOracle& oracle, int corank) {
    if (corank != 0 && corank != 1) fail(ErrorCode::Domain, "corank must be 0 or 1");
    for (const auto* p : {&p1, &p2}) {
        auto v = validate_parameter(*p);
        if (!v.empty()) fail(ErrorCode::Domain, "invalid parameter: " + v.front());
        if (!predicates(*p).almost_tempered) fail(ErrorCode::Domain, "ggp_local requires almost tempered parameters");
    }
    if (p1.target.n != p2.target.n + corank)
        fail(ErrorCode::Domain, "ranks " + std::to_string(p1.target.n) + " and " + std::to_string(p2.target.n) +
                                    " do not match corank " + std::to_string(corank));

    GgpResult res{GgpVerdict::Distinguished, false, {}, {}};
    // The first condition needs (-1)^{dim/2} of the second parameter.
    const WDParameter* A = &p1;
    const WDParameter* B = &p2;
    const EtaCharacter* eA = &e1;
    const EtaCharacter* eB = &e2;
    if (p2.dim() % 2 != 0) {
        if (p1.dim() % 2 != 0)
            fail(ErrorCode::Domain, "half-dimension exponent is not integral: both parameters have odd dimension");
        std::swap(A, B);
        std::swap(eA, eB);
        res.roles_swapped = true;
    }
    const std::string nameA = res.roles_swapped ? "phi2" : "phi1";
    const std::string nameB = res.roles_swapped ? "phi1" : "phi2";
    const LocalPlace& place = xi.place();
    const QuadTwist chi = QuadTwist::of_class(xi);
    const auto fullA = expand(A->summands);
    const auto fullB = expand(B->summands);
    const SquareClass m1 = SquareClass::minus_one(place);
    const SquareClass x_arg = (B->dim() / 2) % 2 != 0 ? m1 * xi : xi;

    auto gA = component_group(*A);
    auto gB = component_group(*B);

    EpsilonValue whole = oracle.epsilon(tensor_terms(fullA, fullB, chi), place);

    for (const auto& label : gA.basis) {
        GroupElement a{label};
        auto sub = gA.sub_parameter(a);
        int dim_a = 0;
        for (const auto& s : sub) dim_a += s.dim();
        TraceEntry t{element_label("a", label), "eta(" + nameA + ")", (*eA)(a), Sign::plus(), ""};
        collect(oracle.epsilon(tensor_terms(sub, fullB, chi), place), t.rhs, res.unresolved, t.detail);
        if (dim_a % 2 != 0) {
            EpsilonValue w = whole;
            collect(std::move(w), t.rhs, res.unresolved, t.detail);
        }
        auto det = det_at_class(sub, x_arg);
        if (!det) {
            res.unresolved.push_back("det(" + label + ")(" + x_arg.label() + ")");
            t.rhs.reset();
        } else if (t.rhs) {
            *t.rhs *= *det;
        }
        t.detail += (t.detail.empty() ? "" : "; ") + std::string("det(") + label + ")(" + x_arg.label() + ") = " +
                    (det ? det->str() : "?");
        res.basis_trace.push_back(std::move(t));
    }

    const Sign chi_m1 = hilbert_symbol(m1, xi);
    for (const auto& label : gB.basis) {
        GroupElement b{label};
        auto sub = gB.sub_parameter(b);
        int dim_b = 0;
        for (const auto& s : sub) dim_b += s.dim();
        if (dim_b % 2 != 0) fail(ErrorCode::Domain, "half-dimension exponent is not integral for " + label);
        TraceEntry t{element_label("b", label), "eta(" + nameB + ")", (*eB)(b), Sign::plus(), ""};
        collect(oracle.epsilon(tensor_terms(fullA, sub, chi), place), t.rhs, res.unresolved, t.detail);
        collect(oracle.epsilon(summand_terms(sub), place), t.rhs, res.unresolved, t.detail);
        if (t.rhs) *t.rhs *= chi_m1.pow(dim_b / 2);
        t.detail += (t.detail.empty() ? "" : "; ") + std::string("chi_xi(-1)^") + std::to_string(dim_b / 2) + " = " +
                    chi_m1.pow(dim_b / 2).str();
        res.basis_trace.push_back(std::move(t));
    }

    std::sort(res.unresolved.begin(), res.unresolved.end());
    res.unresolved.erase(std::unique(res.unresolved.begin(), res.unresolved.end()), res.unresolved.end());
    bool incomplete = false;
    for (const auto& t : res.basis_trace) {
        if (t.fails()) {
            res.verdict = GgpVerdict::NotDistinguished;
            return res;
        }
        if (!t.rhs) incomplete = true;
    }
    if (incomplete) res.verdict = GgpVerdict::OracleIncomplete;
    return res;
}

namespace {

void require_lift_types(const LiftSpec& spec, const WDParameter& phi1, const WDParameter& phi2) {
    spec.check();
    if (spec.r < 1) fail(ErrorCode::Domain, "ggp_nongeneric requires r >= 1");
    if (phi1.target.n != spec.r || phi2.target.n != spec.r - 1)
        fail(ErrorCode::Domain, "parameters must have ranks r and r - 1");
    if (phi1.target.genuine() != ((spec.n + spec.r) % 2 == 1))
        fail(ErrorCode::Domain, "{+-1} must act on pi1 by (+-1)^{n+r}");
    if (phi2.target.genuine() != ((spec.n + spec.r - 1) % 2 == 1))
        fail(ErrorCode::Domain, "{+-1} must act on pi2 by (+-1)^{n+r-1}");
}

bool contains_obstruction(const WDParameter& phi, const Character& mu, int k) {
    for (const auto& [s, _] : phi.summands) {
        const auto* c = s.as_character();
        if (!c || s.d() < k || (s.d() - k) % 2 != 0) continue;
        if (*c == mu || *c == mu.inverse()) return true;
    }
    return false;
}

} // namespace

std::pair<WDParameter, WDParameter> nongeneric_lifted_parameters(const LiftSpec& spec, const SquareClass& xi,
                                                                 const WDParameter& phi1, const WDParameter& phi2) {
    require_lift_types(spec, phi1, phi2);
    const LocalPlace& place = xi.place();
    const int k = spec.n - spec.r;
    Character c1 = spec.mu.twisted(QuadTwist::minus_one().pow(spec.n + spec.r - 1)).canonical(place);
    Character c2 = spec.mu.twisted(QuadTwist::of_class(xi)).canonical(place);
    WDParameter a = phi1, b = phi2;
    a.target.n = spec.n;
    b.target.n = spec.n;
    if (k > 0) {
        a.summands.insert(WDSummand::chr(c1, k));
        a.summands.insert(WDSummand::chr(c1.inverse(), k));
    }
    b.summands.insert(WDSummand::chr(c2, k + 1));
    b.summands.insert(WDSummand::chr(c2.inverse(), k + 1));
    return {a, b};
}

NongenericResult ggp_nongeneric(const LiftSpec& spec, const SquareClass& xi, const WDParameter& phi1,
                                const EtaCharacter& eta1, const WDParameter& phi2, const EtaCharacter& eta2,
                                const EpsilonOracle& oracle) {
    require_lift_types(spec, phi1, phi2);
    const int n = spec.n, r = spec.r;
    Character mu = spec.mu.canonical(xi.place());
    if (!(n == r || n == r + 1) && contains_obstruction(phi1, mu, n - r))
        return {NongenericVerdict::ConditionsNotMet,
                "phi1 contains mu^{+-1} S_d with d >= n - r and d = n - r mod 2", std::nullopt};
    auto g = ggp_local(phi1, eta1, phi2, eta2, xi, oracle, 1);
    NongenericResult out{NongenericVerdict::OracleIncomplete, "", g};
    switch (g.verdict) {
    case GgpVerdict::Distinguished:
        out.verdict = NongenericVerdict::One;
        out.reason = "equals d_{r,r-1,xi}(pi1, pi2) = 1";
        break;
    case GgpVerdict::NotDistinguished:
        out.verdict = NongenericVerdict::Zero;
        out.reason = "equals d_{r,r-1,xi}(pi1, pi2) = 0";
        break;
    case GgpVerdict::OracleIncomplete:
        out.reason = "root numbers unresolved";
        break;
    }
    return out;
}

ArthurResult arthur_multiplicity(const GlobalAParameter& psi, const std::vector<PlaceData>& places,
                                 const std::map<std::string, Sign>& root_numbers) {
    if (!psi.tempered()) fail(ErrorCode::Domain, "arthur_multiplicity requires a tempered A-parameter");
    auto v = validate_global_A(psi);
    if (!v.ok()) fail(ErrorCode::Domain, "invalid A-parameter: " + v.violations.front());
    const bool mp = psi.group == GlobalAParameter::Group::Mp;
    ArthurResult res;
    for (const auto& [block, _] : psi.blocks) {
        const std::string label = block.tau.label();
        Sign prod = Sign::plus();
        std::string detail;
        for (const auto& pd : places) {
            auto it = pd.localization.find(label);
            if (it == pd.localization.end())
                fail(ErrorCode::IncompleteInput, "no localization of " + label + " at place " + pd.label);
            Sign s = pd.eta(it->second);
            prod *= s;
            detail += (detail.empty() ? "" : " ") + pd.label + ":" + s.str();
        }
        Sign want = Sign::plus();
        if (mp) {
            auto it = root_numbers.find(label);
            if (it == root_numbers.end()) fail(ErrorCode::IncompleteInput, "root number of " + label + " not supplied");
            want = it->second;
        }
        TraceEntry t{label, mp ? "prod eta_v = eps(tau)" : "prod eta_v = 1", prod, want, detail};
        if (t.fails()) res.failing.push_back(label);
        res.trace.push_back(std::move(t));
    }
    res.occurs = res.failing.empty();
    return res;
}

Sign a3_check(const std::vector<Sign>& mu_minus1, const std::vector<int>& weights) {
    Sign s = Sign::plus();
    for (auto m : mu_minus1) s *= m;
    for (int k : weights) {
        if (k < 1) fail(ErrorCode::Domain, "weights must be positive");
        s *= Sign::from_parity(k);
    }
    return s;
}

PartnerResult lemA_partner(const GlobalAParameter& psi, const GlobalCusp& tau, const std::vector<PartnerPlace>& places,
                           const std::map<std::string, Sign>& root_numbers) {
    if (psi.group != GlobalAParameter::Group::Mp) fail(ErrorCode::Domain, "lemA_partner expects an A-parameter for Mp_r");
    const int r = psi.n;
    PartnerResult res;

    std::vector<PlaceData> pdata;
    std::vector<Sign> twisted_mu;
    std::vector<int> weights;
    Sign reciprocity = Sign::plus();
    int n_arch = 0;
    for (const auto& pl : places) {
        pdata.push_back(pl.data);
        if (pl.archimedean) {
            ++n_arch;
            const int l = 2 * pl.weight + 2 * r + 1;
            auto expected = arch_holomorphic_parameter(l, r);
            if (!pl.parameter || !(*pl.parameter == expected.phi))
                fail(ErrorCode::Domain, "archimedean mismatch at " + pl.data.label + ": parameter is not the weight-" +
                                            std::to_string(l) + " holomorphic parameter");
            if (!(pl.data.eta == expected.eta))
                fail(ErrorCode::Domain, "archimedean mismatch at " + pl.data.label + ": eta differs from the holomorphic one");
            weights.push_back(pl.weight);
            reciprocity *= Sign::minus(); // chi_{-1}(-1) = -1 at a real place
        } else {
            std::optional<Sign> chi = pl.chi_minus1;
            if (!chi && pl.place) {
                auto m1 = SquareClass::minus_one(*pl.place);
                chi = hilbert_symbol(m1, m1);
            }
            if (!chi) fail(ErrorCode::IncompleteInput, "chi_{-1}(-1) unknown at place " + pl.data.label);
            twisted_mu.push_back(pl.mu_minus1 * chi->pow(r));
            reciprocity *= *chi;
        }
    }

    TraceEntry rec{"chi_{-1}", "prod_v chi_{-1,v}(-1) = 1", reciprocity, Sign::plus(), "Hilbert reciprocity"};
    if (rec.fails()) res.failing.push_back("reciprocity");
    res.trace.push_back(rec);

    auto ar = arthur_multiplicity(psi, pdata, root_numbers);
    for (auto& t : ar.trace) {
        t.side = "(i) " + t.side;
        res.trace.push_back(t);
    }
    for (const auto& f : ar.failing) res.failing.push_back("(i) " + f);

    GlobalCusp new_tau = tau.twisted(QuadTwist::minus_one().pow(r));
    res.psi_prime = psi;
    res.psi_prime.n = r + 1;
    if (res.psi_prime.blocks.contains(ABlock{new_tau, 1}))
        fail(ErrorCode::Inconsistent, "partner block " + new_tau.label() + " already occurs in the A-parameter");
    res.psi_prime.blocks.insert(ABlock{new_tau, 1});
    auto v = validate_global_A(res.psi_prime);
    if (!v.ok()) fail(ErrorCode::Inconsistent, "partner A-parameter is not discrete: " + v.violations.front());

    Sign lhs = Sign::minus().pow(static_cast<long long>(r) * n_arch);
    Sign mid = a3_check(twisted_mu, weights);
    TraceEntry t2{new_tau.label(), "(ii) prod_inf (-1)^r = prod_fin (mu chi_{-1}^r)(-1) prod_inf (-1)^k", lhs, mid, ""};
    if (t2.fails()) res.failing.push_back("(ii) " + new_tau.label());
    res.trace.push_back(t2);
    if (auto it = root_numbers.find(new_tau.label()); it != root_numbers.end()) {
        TraceEntry t3{new_tau.label(), "(ii) a3 value = eps(tau chi_{-1}^r)", mid, it->second, "supplied root number"};
        if (t3.fails()) res.failing.push_back("(ii) eps " + new_tau.label());
        res.trace.push_back(t3);
    }
    res.consistent = res.failing.empty();
    return res;
}

NonvanishingPrediction predict_nonvanishing(const LiftSpec& spec, std::optional<bool> central_value_nonzero) {
    spec.check();
    if (spec.r == 0) return {Nonvanishing::Nonzero, true};
    if (spec.n > spec.r) return {Nonvanishing::Nonzero, false};
    const bool theorem = spec.n == 1 && spec.r == 1;
    if (!central_value_nonzero) return {Nonvanishing::NeedsLValue, theorem};
    return {*central_value_nonzero ? Nonvanishing::Nonzero : Nonvanishing::Zero, theorem};
}

} // namespace liftcalc
