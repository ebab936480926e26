#include <algorithm>
#include <random>

#include "doctest.h"
#include "liftcalc/error.hpp"
#include "sign_fixtures.hpp"

using namespace liftcalc;
using namespace sfix;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Schema;
}

} // namespace

TEST_CASE("epsilon oracle: table, default and formal symbols") {
    auto place = LocalPlace::nonarch(5);
    auto t = TensorTerm::make({WDSummand::chr(quad("u"), 2)});
    auto formal = EpsilonOracle::formal({{t.key(), Sign::minus()}});
    auto v = formal.epsilon({t}, place);
    REQUIRE(v.value);
    CHECK(v.value->is_minus());

    auto s = TensorTerm::make({WDSummand::chr(quad("w"), 2)});
    auto open = formal.epsilon({t, s}, place);
    CHECK_FALSE(open.value);
    REQUIRE(open.unresolved.size() == 1);
    CHECK(open.unresolved[0] == "eps(" + s.key() + ")");

    auto with_default = EpsilonOracle::formal({{t.key(), Sign::minus()}}, Sign::plus());
    CHECK(with_default.epsilon({t, s}, place).value == Sign::minus());
    CHECK(with_default.epsilon({t, t}, place).value == Sign::plus());

    auto table = EpsilonOracle::user_table({{t.key(), Sign::minus()}});
    CHECK(code_of([&] { (void)table.epsilon({s}, place); }) == ErrorCode::IncompleteInput);
}

TEST_CASE("epsilon oracle: a term and its dual collapse to det(-1)") {
    auto place = LocalPlace::nonarch(3); // -1 is a non-square unit
    for (auto m1 : {Sign::plus(), Sign::minus()}) {
        auto m = unitary("m", m1);
        auto a = TensorTerm::make({WDSummand::chr(m), WDSummand::chr(quad("u"), 2)});
        auto b = a.dual();
        CHECK_FALSE(a.self_dual());
        // an empty user table is never consulted for the pair
        auto v = EpsilonOracle::user_table({}).epsilon({a, b}, place);
        REQUIRE(v.value);
        // m enters squared and chi_u S_2 has trivial determinant
        CHECK(*v.value == Sign::plus());
        auto c = TensorTerm::make({WDSummand::chr(m)}, QuadTwist::of("w"));
        auto w = EpsilonOracle::user_table({}).epsilon({c, c.dual()}, place);
        REQUIRE(w.value);
        // chi_w(-1) = (-1|3) = -1
        CHECK(*w.value == m1 * Sign::minus());
    }
    auto m = Character::named("m");
    auto a = TensorTerm::make({WDSummand::chr(m)});
    CHECK(code_of([&] { (void)EpsilonOracle::formal({}, Sign::plus()).epsilon({a}, place); }) == ErrorCode::Inconsistent);
    auto undeclared = EpsilonOracle::formal({}, Sign::plus()).epsilon({a, a.dual()}, place);
    CHECK_FALSE(undeclared.value);
}

TEST_CASE("epsilon oracle is multiplicative") {
    std::mt19937 rng(11);
    auto place = LocalPlace::nonarch(7);
    std::vector<TensorTerm> pool;
    for (const char* c : {"1", "u", "w", "uw"}) {
        Character ch = std::string(c) == "1" ? Character::trivial() : quad(c);
        pool.push_back(TensorTerm::make({WDSummand::chr(ch, 2)}));
        pool.push_back(TensorTerm::make({WDSummand::chr(ch, 4)}));
    }
    std::map<std::string, Sign> table;
    for (const auto& t : pool) table[t.key()] = Sign::from_parity(rng() % 2);
    auto pair = TensorTerm::make({WDSummand::chr(unitary("m", Sign::minus()))});
    auto oracle = EpsilonOracle::user_table(table);
    for (int it = 0; it < 200; ++it) {
        std::vector<TensorTerm> A, B;
        for (int i = int(rng() % 4); i > 0; --i) A.push_back(pool[rng() % pool.size()]);
        for (int i = int(rng() % 4); i > 0; --i) B.push_back(pool[rng() % pool.size()]);
        if (rng() % 2) {
            B.push_back(pair);
            B.push_back(pair.dual());
        }
        auto AB = A;
        AB.insert(AB.end(), B.begin(), B.end());
        auto ea = oracle.epsilon(A, place), eb = oracle.epsilon(B, place), eab = oracle.epsilon(AB, place);
        REQUIRE(ea.value);
        REQUIRE(eb.value);
        REQUIRE(eab.value);
        CHECK(*eab.value == *ea.value * *eb.value);
    }
}

TEST_CASE("ggp_local: empty second parameter reduces to eta1 trivial") {
    auto empty = make(Target::symplectic(0), {});
    for (long long p : {3, 5, 7}) {
        auto place = LocalPlace::nonarch(p);
        for (const char* c : {"1", "u", "w", "uw"}) {
            auto ch = std::string(c) == "1" ? Character::trivial() : quad(c);
            auto phi1 = make(Target::symplectic(1), {WDSummand::chr(ch, 2)});
            auto g = component_group(phi1);
            REQUIRE(g.rank() == 1);
            for (const auto& xi : SquareClass::all(place))
                for (unsigned mask = 0; mask < 2; ++mask) {
                    // a formal oracle without a default: nothing may be looked up
                    auto res = ggp_local(phi1, eta_from_mask(g, mask), empty, {}, xi, EpsilonOracle::formal(), 1);
                    CHECK(res.verdict == (mask ? GgpVerdict::NotDistinguished : GgpVerdict::Distinguished));
                }
        }
    }
    auto place = LocalPlace::nonarch(3);
    auto phi3 = make(Target::symplectic(3), {WDSummand::chr(quad("u"), 2), WDSummand::chr(quad("w"), 2),
                                             WDSummand::triv(2)});
    auto bad = make(Target::symplectic(2), {});
    CHECK(code_of([&] { (void)ggp_local(phi3, eta_from_mask(component_group(phi3), 0), bad, {},
                                        SquareClass::one(place), EpsilonOracle::formal(), 1); }) == ErrorCode::Domain);
}

TEST_CASE("ggp_local: all-plus oracle, trivial chi_xi") {
    auto place = LocalPlace::nonarch(5); // -1 is a square, so every det evaluation is trivial
    auto phi1 = make(Target::odd_orthogonal(1), {WDSummand::chr(quad("u")), WDSummand::chr(quad("w")),
                                                 WDSummand::chr(quad("uw"))});
    auto phi2 = make(Target::symplectic(1), {WDSummand::chr(quad("u"), 2)});
    auto g1 = component_group(phi1), g2 = component_group(phi2);
    auto oracle = EpsilonOracle::formal({}, Sign::plus());
    for (unsigned m1 = 0; m1 < 8; ++m1)
        for (unsigned m2 = 0; m2 < 2; ++m2) {
            auto res = ggp_local(phi1, eta_from_mask(g1, m1), phi2, eta_from_mask(g2, m2), SquareClass::one(place),
                                 oracle, 0);
            CHECK(res.verdict == (m1 == 0 && m2 == 0 ? GgpVerdict::Distinguished : GgpVerdict::NotDistinguished));
            CHECK(res.basis_trace.size() == 4);
        }
}

TEST_CASE("ggp_local: a single negative root number") {
    auto place = LocalPlace::nonarch(5);
    auto c = CuspSymbol::formal("c", 2, SelfDuality::Orthogonal);
    c.det = Character::trivial();
    auto phi1 = make(Target::odd_orthogonal(1), {WDSummand::formal(c), WDSummand::triv()});
    auto phi2 = make(Target::symplectic(1), {WDSummand::chr(quad("u"), 2)});
    auto bad = TensorTerm::make({WDSummand::formal(c), WDSummand::chr(quad("u"), 2)});
    auto oracle = EpsilonOracle::formal({{bad.key(), Sign::minus()}}, Sign::plus());
    auto res = ggp_local(phi1, eta_from_mask(component_group(phi1), 0), phi2,
                         eta_from_mask(component_group(phi2), 0), SquareClass::one(place), oracle, 0);
    CHECK(res.verdict == GgpVerdict::NotDistinguished);
    auto it = std::find_if(res.basis_trace.begin(), res.basis_trace.end(),
                           [&](const TraceEntry& t) { return t.element == "a:" + WDSummand::formal(c).label(); });
    REQUIRE(it != res.basis_trace.end());
    CHECK(it->fails());
    CHECK(it->lhs == Sign::plus());
}

TEST_CASE("ggp_local: unresolved symbols and rank errors") {
    auto place = LocalPlace::nonarch(7);
    auto phi1 = make(Target::odd_orthogonal(1), {WDSummand::triv(3)});
    auto phi2 = make(Target::symplectic(1), {WDSummand::chr(quad("u"), 2)});
    auto e1 = eta_from_mask(component_group(phi1), 0);
    auto e2 = eta_from_mask(component_group(phi2), 0);
    auto res = ggp_local(phi1, e1, phi2, e2, SquareClass::one(place), EpsilonOracle::formal(), 0);
    CHECK(res.verdict == GgpVerdict::OracleIncomplete);
    CHECK_FALSE(res.unresolved.empty());
    CHECK(code_of([&] { (void)ggp_local(phi1, e1, phi2, e2, SquareClass::one(place), EpsilonOracle::user_table({}), 0); }) ==
          ErrorCode::IncompleteInput);
    CHECK(code_of([&] { (void)ggp_local(phi1, e1, phi2, e2, SquareClass::one(place), EpsilonOracle::formal(), 2); }) ==
          ErrorCode::Domain);
    CHECK(code_of([&] { (void)ggp_local(phi1, e1, phi2, e2, SquareClass::one(place), EpsilonOracle::formal(), 1); }) ==
          ErrorCode::Domain);
}

TEST_CASE("ggp_local: odd second dimension swaps the roles") {
    auto place = LocalPlace::nonarch(5);
    auto phi_mp = make(Target::symplectic(1), {WDSummand::chr(quad("u"), 2)});
    auto phi_so = make(Target::odd_orthogonal(1), {WDSummand::triv(3)});
    auto oracle = EpsilonOracle::formal({}, Sign::plus());
    auto res = ggp_local(phi_mp, eta_from_mask(component_group(phi_mp), 0), phi_so,
                         eta_from_mask(component_group(phi_so), 0), SquareClass::one(place), oracle, 0);
    CHECK(res.roles_swapped);
    CHECK(res.verdict == GgpVerdict::Distinguished);
}

TEST_CASE("ggp_local: collapsed right-hand sides on good parity pairs") {
    std::mt19937 rng(5);
    const char* classes[] = {"1", "u", "w", "uw"};
    auto qc = [&](unsigned i) { return i == 0 ? Character::trivial() : quad(classes[i]); };
    for (int it = 0; it < 200; ++it) {
        auto place = LocalPlace::nonarch(rng() % 2 ? 5 : 13);
        int r = 1 + int(rng() % 3);
        WDParameter phi1;
        phi1.target = Target::odd_orthogonal(r);
        int left = 2 * r + 1;
        while (left > 0) {
            int d = 1 + 2 * int(rng() % ((left + 1) / 2));
            phi1.summands.insert(WDSummand::chr(qc(rng() % 4), d));
            left -= d;
        }
        WDParameter phi2;
        phi2.target = Target::symplectic(r);
        left = 2 * r;
        while (left > 0) {
            int d = 2 + 2 * int(rng() % (left / 2));
            phi2.summands.insert(WDSummand::chr(qc(rng() % 4), d));
            left -= d;
        }
        REQUIRE(predicates(phi1).good_parity);
        REQUIRE(predicates(phi2).good_parity);
        auto res = ggp_local(phi1, eta_from_mask(component_group(phi1), 0), phi2,
                             eta_from_mask(component_group(phi2), 0), SquareClass::one(place),
                             EpsilonOracle::formal({}, Sign::plus()), 0);
        CHECK(res.verdict == GgpVerdict::Distinguished);
    }
}

TEST_CASE("ggp_nongeneric examples") {
    auto place = LocalPlace::nonarch(3);
    auto xi = SquareClass::one(place);
    LiftSpec spec;
    spec.n = 1;
    spec.r = 1;
    spec.mu = unitary("m", Sign::plus());
    auto phi1 = make(Target::odd_orthogonal(1), {WDSummand::chr(quad("u")), WDSummand::chr(quad("w")),
                                                 WDSummand::chr(quad("uw"))});
    auto phi2 = make(Target::symplectic(0), {});
    auto g = component_group(phi1);
    auto one = ggp_nongeneric(spec, xi, phi1, eta_from_mask(g, 0), phi2, {}, EpsilonOracle::formal());
    CHECK(one.verdict == NongenericVerdict::One);
    CHECK(std::string(nongeneric_verdict_name(one.verdict)) == "1");
    auto zero = ggp_nongeneric(spec, xi, phi1, eta_from_mask(g, 2), phi2, {}, EpsilonOracle::formal());
    CHECK(zero.verdict == NongenericVerdict::Zero);

    // mu S_2 + mu^-1 S_2 inside phi1 with n - r = 2
    LiftSpec s2;
    s2.n = 4;
    s2.r = 2;
    s2.mu = unitary("m", Sign::plus());
    auto obstructed = make(Target::odd_orthogonal(2), {WDSummand::chr(s2.mu, 2), WDSummand::chr(s2.mu.inverse(), 2),
                                                       WDSummand::triv()});
    auto p2 = make(Target::symplectic(1), {WDSummand::chr(quad("u"), 2)});
    auto e2 = eta_from_mask(component_group(p2), 0);
    auto res = ggp_nongeneric(s2, xi, obstructed, eta_from_mask(component_group(obstructed), 0), p2, e2,
                              EpsilonOracle::formal({}, Sign::plus()));
    CHECK(res.verdict == NongenericVerdict::ConditionsNotMet);
    CHECK_FALSE(res.ggp);

    // S_3 has the wrong parity for k = 2
    auto fine = make(Target::odd_orthogonal(2), {WDSummand::chr(s2.mu, 1), WDSummand::chr(s2.mu.inverse(), 1),
                                                 WDSummand::triv(3)});
    res = ggp_nongeneric(s2, xi, fine, eta_from_mask(component_group(fine), 0), p2, e2,
                         EpsilonOracle::formal({}, Sign::plus()));
    CHECK(res.verdict != NongenericVerdict::ConditionsNotMet);
    CHECK(res.ggp);

    // pi1 must be non-genuine when n + r is even
    CHECK(code_of([&] { (void)ggp_nongeneric(spec, xi, p2, e2, phi2, {}, EpsilonOracle::formal()); }) ==
          ErrorCode::Domain);
}

TEST_CASE("nongeneric lifted parameters") {
    auto place = LocalPlace::nonarch(5);
    auto xi = SquareClass::make(place, true, false);
    LiftSpec spec;
    spec.n = 3;
    spec.r = 1;
    spec.mu = Character::named("m");
    auto phi1 = make(Target::odd_orthogonal(1), {WDSummand::triv(3)});
    auto phi2 = make(Target::symplectic(0), {});
    auto [a, b] = nongeneric_lifted_parameters(spec, xi, phi1, phi2);
    CHECK(a.target == Target::odd_orthogonal(3));
    CHECK(b.target == Target::symplectic(3));
    auto c1 = spec.mu.twisted(QuadTwist::minus_one()).canonical(place);
    CHECK(a.summands.count(WDSummand::chr(c1, 2)) == 1);
    CHECK(a.summands.count(WDSummand::chr(c1.inverse(), 2)) == 1);
    auto c2 = spec.mu.twisted(QuadTwist::of("u"));
    CHECK(b.summands.count(WDSummand::chr(c2, 3)) == 1);
    CHECK(validate_parameter(a).empty());
    CHECK(validate_parameter(b).empty());
}


TEST_CASE("ggp_nongeneric agrees with ggp_local on the lifted parameters") {
    std::mt19937 rng(2024);
    int ones = 0, zeros = 0;
    for (int it = 0; it < 300; ++it) {
        auto res = two_route_instance(rng);
        REQUIRE(res.nongeneric != NongenericVerdict::OracleIncomplete);
        REQUIRE(res.direct != GgpVerdict::OracleIncomplete);
        CHECK((res.nongeneric == NongenericVerdict::One) == (res.direct == GgpVerdict::Distinguished));
        (res.nongeneric == NongenericVerdict::One ? ones : zeros)++;
    }
    CHECK(ones > 0);
    CHECK(zeros > 0);
}


TEST_CASE("arthur multiplicity examples") {
    auto tau = fixtures::cusp("tau1", 2, false, true);
    auto psi = mp1(tau);
    auto label = tau.label();

    auto all_plus = arthur_multiplicity(psi, {finite_place("5", label, Sign::plus())}, {{label, Sign::plus()}});
    CHECK(all_plus.occurs);

    auto minus = arthur_multiplicity(psi, {finite_place("5", label, Sign::minus())}, {{label, Sign::minus()}});
    CHECK(minus.occurs);
    auto mismatch = arthur_multiplicity(psi, {finite_place("5", label, Sign::minus())}, {{label, Sign::plus()}});
    CHECK_FALSE(mismatch.occurs);
    CHECK(mismatch.failing == std::vector<std::string>{label});

    GlobalAParameter sp;
    sp.group = GlobalAParameter::Group::Sp;
    sp.n = 1;
    auto tau_o = fixtures::cusp("tau1", 2, true, false);
    sp.blocks.insert(ABlock{tau_o, 1});
    sp.blocks.insert(ABlock{fixtures::cusp("e", 1, true, false), 1});
    std::vector<PlaceData> places{finite_place("5", tau_o.label(), Sign::minus())};
    places[0].localization["e"] = {};
    auto sp_res = arthur_multiplicity(sp, places, {{tau_o.label(), Sign::minus()}});
    CHECK_FALSE(sp_res.occurs);
    CHECK(sp_res.failing == std::vector<std::string>{tau_o.label()});

    CHECK(code_of([&] { (void)arthur_multiplicity(psi, {PlaceData{"5", {}, {}}}, {{label, Sign::plus()}}); }) ==
          ErrorCode::IncompleteInput);
    CHECK(code_of([&] { (void)arthur_multiplicity(psi, {finite_place("5", label, Sign::plus())}, {}); }) ==
          ErrorCode::IncompleteInput);
}

TEST_CASE("arthur multiplicity rejects non-tempered parameters") {
    GlobalAParameter a;
    a.group = GlobalAParameter::Group::Sp;
    a.n = 1;
    a.blocks.insert(ABlock{fixtures::cusp("1", 1, true, false), 3});
    CHECK(code_of([&] { (void)arthur_multiplicity(a, {}, {}); }) == ErrorCode::Domain);

    GlobalAParameter b;
    b.group = GlobalAParameter::Group::Mp;
    b.n = 1;
    auto chi = fixtures::cusp("1", 1, true, false).twisted(QuadTwist::of("xi"));
    b.blocks.insert(ABlock{chi, 2});
    CHECK(code_of([&] { (void)arthur_multiplicity(b, {}, {}); }) == ErrorCode::Domain);
}

TEST_CASE("arthur multiplicity ignores the order of places and blocks") {
    std::mt19937 rng(77);
    for (int it = 0; it < 100; ++it) {
        GlobalAParameter psi;
        psi.group = GlobalAParameter::Group::Mp;
        psi.n = 1 + int(rng() % 4);
        for (int i = 0; i < psi.n; ++i)
            psi.blocks.insert(ABlock{fixtures::cusp("sigma" + std::to_string(i), 2, false, true), 1});
        std::vector<std::string> labels;
        for (const auto& [b, _] : psi.blocks) labels.push_back(b.tau.label());
        std::vector<PlaceData> places;
        for (int v = 0; v < 4; ++v) {
            PlaceData p;
            p.label = "v" + std::to_string(v);
            for (const auto& l : labels) {
                p.eta.values[l] = Sign::from_parity(rng() % 2);
                if (rng() % 2) p.localization[l] = {l};
                else p.localization[l] = {};
            }
            places.push_back(p);
        }
        std::map<std::string, Sign> eps;
        for (const auto& l : labels) eps[l] = Sign::from_parity(rng() % 2);
        auto base = arthur_multiplicity(psi, places, eps);
        std::shuffle(places.begin(), places.end(), rng);
        auto shuffled = arthur_multiplicity(psi, places, eps);
        CHECK(base.occurs == shuffled.occurs);
        CHECK(base.failing == shuffled.failing);
        // oracle: each block's product of local signs against its root number
        bool expect = true;
        for (const auto& l : labels) {
            Sign prod = Sign::plus();
            for (const auto& p : places)
                if (!p.localization.at(l).empty()) prod *= p.eta.values.at(l);
            if (prod != eps.at(l)) expect = false;
        }
        CHECK(base.occurs == expect);
    }
}

TEST_CASE("a3 check examples") {
    CHECK(a3_check({Sign::plus()}, {2}) == Sign::plus());
    CHECK(a3_check({Sign::plus()}, {3}) == Sign::minus());
    CHECK(a3_check({Sign::minus()}, {2, 3}) == Sign::plus());
    CHECK(a3_check({}, {}) == Sign::plus());
    CHECK(code_of([] { (void)a3_check({}, {0}); }) == ErrorCode::Domain);
}


TEST_CASE("lemA partner: one real place, r = 1, k = 2") {
    auto in = hand_instance();
    auto arch = arch_holomorphic_parameter(7, 1);
    CHECK(arch.phi.summands.count(WDSummand::rho(5)) == 1);
    CHECK(arch.eta.values.at("rho[5]") == Sign::plus());

    auto res = lemA_partner(in.psi, in.tau, in.places, in.eps);
    CHECK(res.consistent);
    CHECK(res.failing.empty());
    CHECK(res.psi_prime.n == 2);
    CHECK(res.psi_prime.blocks.size() == 2);
    CHECK(validate_global_A(res.psi_prime).ok());
    bool seen = false;
    for (const auto& t : res.trace)
        if (t.side.rfind("(ii) prod_inf", 0) == 0) {
            seen = true;
            CHECK(t.lhs == Sign::minus());
            CHECK(t.rhs == Sign::minus());
        }
    CHECK(seen);
}

TEST_CASE("lemA partner: corrupting one local sign flips the verdict") {
    const auto base = hand_instance();
    REQUIRE(consistent(base));
    auto flip = [](Sign s) { return s * Sign::minus(); };
    {
        auto in = base;
        in.places[1].mu_minus1 = flip(in.places[1].mu_minus1);
        CHECK_FALSE(consistent(in));
    }
    {
        auto in = base;
        in.places[1].chi_minus1 = flip(*in.places[1].chi_minus1);
        CHECK_FALSE(consistent(in));
    }
    {
        auto in = base;
        in.places[1].data.eta.values["x"] = flip(in.places[1].data.eta.values["x"]);
        CHECK_FALSE(consistent(in));
    }
    for (auto& [label, s] : base.eps) {
        auto in = base;
        in.eps[label] = flip(s);
        CHECK_FALSE(consistent(in));
    }
    {
        // the archimedean packet character is pinned by the weight
        auto in = base;
        in.places[0].data.eta.values["rho[5]"] = Sign::minus();
        CHECK(code_of([&] { (void)consistent(in); }) == ErrorCode::Domain);
    }
}

TEST_CASE("lemA partner: even r reduces to a3") {
    for (int k = 1; k <= 4; ++k)
        for (auto mu : {Sign::plus(), Sign::minus()}) {
            GlobalAParameter psi;
            psi.group = GlobalAParameter::Group::Mp;
            psi.n = 2;
            auto t1 = fixtures::cusp("tau1", 2, false, true), t2 = fixtures::cusp("tau2", 2, false, true);
            psi.blocks.insert(ABlock{t1, 1});
            psi.blocks.insert(ABlock{t2, 1});
            auto arch = arch_holomorphic_parameter(2 * k + 5, 2);
            PartnerPlace real;
            real.archimedean = true;
            real.weight = k;
            real.parameter = arch.phi;
            real.data.label = "R";
            real.data.eta = arch.eta;
            real.data.localization[t1.label()] = {WDSummand::rho(2 * k + 3).label()};
            real.data.localization[t2.label()] = {WDSummand::rho(2 * k + 1).label()};
            PartnerPlace two;
            two.data.label = "2";
            two.data.localization[t1.label()] = {};
            two.data.localization[t2.label()] = {};
            two.mu_minus1 = mu;
            two.chi_minus1 = Sign::minus();
            std::map<std::string, Sign> eps{{t1.label(), Sign::plus()}, {t2.label(), Sign::minus()}};
            auto res = lemA_partner(psi, fixtures::cusp("tau", 2, false, true), {real, two}, eps);
            // chi_{-1}^2 is trivial, so the new block sees mu(-1) (-1)^k only
            CHECK(res.consistent == (a3_check({mu}, {k}) == Sign::plus()));
        }
}

TEST_CASE("lemA partner errors") {
    auto in = hand_instance();
    auto sp = in.psi;
    sp.group = GlobalAParameter::Group::Sp;
    CHECK(code_of([&] { (void)lemA_partner(sp, in.tau, in.places, in.eps); }) == ErrorCode::Domain);
    auto wrong_weight = in;
    wrong_weight.places[0].weight = 3;
    CHECK(code_of([&] { (void)consistent(wrong_weight); }) == ErrorCode::Domain);
    auto no_chi = in;
    no_chi.places[1].chi_minus1.reset();
    CHECK(code_of([&] { (void)consistent(no_chi); }) == ErrorCode::IncompleteInput);
    auto from_place = in;
    from_place.places[1].chi_minus1.reset();
    from_place.places[1].place = LocalPlace::nonarch(3); // chi_{-1}(-1) = +1 at odd places
    CHECK_FALSE(consistent(from_place));
    auto clash = in;
    clash.tau = fixtures::cusp("tau1", 2, false, true).twisted(QuadTwist::minus_one());
    CHECK(code_of([&] { (void)consistent(clash); }) == ErrorCode::Inconsistent);
}

TEST_CASE("nonvanishing predictions") {
    auto spec = [](int n, int r) {
        LiftSpec s;
        s.n = n;
        s.r = r;
        s.mu = Character::named("m");
        return s;
    };
    auto a = predict_nonvanishing(spec(3, 2), std::nullopt);
    CHECK(a.verdict == Nonvanishing::Nonzero);
    CHECK_FALSE(a.theorem);
    auto b = predict_nonvanishing(spec(2, 2), true);
    CHECK(b.verdict == Nonvanishing::Nonzero);
    CHECK_FALSE(b.theorem);
    auto c = predict_nonvanishing(spec(1, 1), false);
    CHECK(c.verdict == Nonvanishing::Zero);
    CHECK(c.theorem);
    CHECK(predict_nonvanishing(spec(2, 2), std::nullopt).verdict == Nonvanishing::NeedsLValue);
    auto d = predict_nonvanishing(spec(4, 0), std::nullopt);
    CHECK(d.verdict == Nonvanishing::Nonzero);
    CHECK(d.theorem);
    CHECK(std::string(nonvanishing_name(Nonvanishing::NeedsLValue)) == "needs_L_value");
    CHECK_THROWS_AS(predict_nonvanishing(spec(1, 2), true), Error);
}
