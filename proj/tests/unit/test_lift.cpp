#include <random>

#include "doctest.h"
#include "lift_fixtures.hpp"
#include "liftcalc/error.hpp"
#include "liftcalc/lift.hpp"

using namespace liftcalc;

namespace {

LiftSpec spec(int n, int r, Character mu = Character::named("m")) {
    LiftSpec s;
    s.n = n;
    s.r = r;
    s.mu = std::move(mu);
    return s;
}

WDParameter make(Target t, std::initializer_list<WDSummand> s) {
    WDParameter p;
    p.target = t;
    for (const auto& x : s) p.summands.insert(x);
    return p;
}

// tempered parameter of Sp_r (odd orthogonal) or Mp_r (symplectic)
WDParameter phi(int r, bool genuine) {
    auto e = Character::named("e", true);
    if (genuine) {
        if (r == 0) return make(Target::symplectic(0), {});
        return make(Target::symplectic(r), {WDSummand::chr(e, 2 * r)});
    }
    return make(Target::odd_orthogonal(r), {WDSummand::triv(2 * r + 1)});
}

} // namespace

TEST_CASE("mu prime") {
    CHECK(mu_prime(spec(3, 1)) == Character::named("m"));
    CHECK(mu_prime(spec(3, 0)) == Character::parse("m*chi[-1]"));
    auto s = spec(3, 0);
    s.place = LocalPlace::nonarch(5);
    CHECK(mu_prime(s) == Character::named("m"));
    CHECK_THROWS_AS(spec(1, 2).check(), Error);
}

TEST_CASE("local lift examples") {
    auto a = local_lift_parameter(spec(2, 2), phi(2, false));
    CHECK(a.data.pieces.empty());
    CHECK_FALSE(a.data.unitary.has_value());
    CHECK(a.parameter == phi(2, false));

    auto b = local_lift_parameter(spec(2, 1), phi(1, true));
    CHECK(b.data.pieces.empty());
    REQUIRE(b.data.unitary);
    CHECK(*b.data.unitary == b.mu_prime);
    auto expect = phi(1, true);
    expect.target.n = 2;
    expect.summands.insert(WDSummand::chr(b.mu_prime));
    expect.summands.insert(WDSummand::chr(b.mu_prime.inverse()));
    CHECK(b.parameter == expect);

    auto c = local_lift_parameter(spec(3, 1), phi(1, false));
    REQUIRE(c.data.pieces.size() == 1);
    CHECK(c.data.pieces[0].s == Rational(1, 2));
    CHECK(c.data.pieces[0].label == "tau'");
    CHECK(c.parameter.summands.count(WDSummand::chr(c.mu_prime, 2)) == 1);
    CHECK(c.l_parameter.summands.count(WDSummand::chr(c.mu_prime, 1, Rational(1, 2))) == 1);
    CHECK(c.l_parameter.summands.count(WDSummand::chr(c.mu_prime.inverse(), 1, Rational(-1, 2))) == 1);
}

TEST_CASE("local lift rejects a parameter of the wrong genuineness") {
    try {
        (void)local_lift_parameter(spec(3, 1), phi(1, true));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Domain);
    }
}

TEST_CASE("satake of the lift") {
    auto a = UnitSymbol::named("a"), b = UnitSymbol::named("b");
    SatakeParam pi{SatakeEntry{b, 0}, SatakeEntry{b.inverse(), 0}};
    CHECK(satake_of_lift(spec(1, 1), a, pi) == pi);
    auto out = satake_of_lift(spec(3, 1), a, pi);
    CHECK(out == SatakeParam{SatakeEntry{b, 0}, SatakeEntry{b.inverse(), 0}, SatakeEntry{a, Rational(1, 2)},
                             SatakeEntry{a, Rational(-1, 2)}, SatakeEntry{a.inverse(), Rational(1, 2)},
                             SatakeEntry{a.inverse(), Rational(-1, 2)}});
    // r = 0: alpha^{+-1} q^{(n-1)/2}, ..., alpha^{+-1} q^{-(n-1)/2}
    for (int n = 1; n <= 6; ++n) {
        SatakeParam want;
        for (int j = 0; j < n; ++j) {
            Rational e = Rational(n - 1, 2) - j;
            want.insert(SatakeEntry{a, e});
            want.insert(SatakeEntry{a.inverse(), e});
        }
        CHECK(satake_of_lift(spec(n, 0), a, {}) == want);
    }
}

TEST_CASE("property: satake cardinality and inverse closure") {
    std::mt19937 rng(41);
    for (int n = 0; n <= 6; ++n)
        for (int r = 0; r <= n; ++r)
            for (int trial = 0; trial < 5; ++trial) {
                SatakeParam pi;
                for (int i = 0; i < r; ++i) {
                    auto u = UnitSymbol::named("u" + std::to_string(rng() % 4));
                    Rational e(int(rng() % 5) - 2, 2);
                    pi.insert(SatakeEntry{u, e});
                    pi.insert(SatakeEntry{u, e}.inverse());
                }
                auto alpha = UnitSymbol::named("a" + std::to_string(rng() % 3)).pow(1 + rng() % 2);
                auto out = satake_of_lift(spec(n, r), alpha, pi);
                CHECK(out.size() == pi.size() + 2 * (n - r));
                CHECK(inverse_closed(out));
            }
}

TEST_CASE("derive alpha") {
    auto s = spec(2, 0, Character::named("m").declare_at_uniformizer(UnitSymbol::named("a")));
    CHECK_FALSE(derive_alpha(s).has_value());
    s.place = LocalPlace::nonarch(3);
    // mu' = m chi_{-1}; chi_{-1}(uniformizer) = (-1|3) = -1
    CHECK(derive_alpha(s) == UnitSymbol::parse("-a"));
    s.place = LocalPlace::nonarch(5);
    CHECK(derive_alpha(s) == UnitSymbol::parse("a"));
}

TEST_CASE("global lift examples") {
    using fixtures::cusp;
    auto tau = cusp("tau", 2, false, true);
    GlobalAParameter psi{GlobalAParameter::Group::Sp, 1, {ABlock{cusp("t1", 3, true, false), 1}}};
    CHECK(global_lift_parameter(spec(1, 1), psi, tau).blocks == psi.blocks);
    auto two = global_lift_parameter(spec(3, 1), psi, tau);
    CHECK(two.n == 3);
    CHECK(two.blocks.contains(ABlock{tau, 2})); // chi_{-1}^2 = 1
    GlobalAParameter mp{GlobalAParameter::Group::Mp, 1, {ABlock{cusp("t2", 2, false, true), 1}}};
    auto one = global_lift_parameter(spec(2, 1), mp, tau);
    CHECK(one.group == GlobalAParameter::Group::Mp);
    CHECK(one.n == 2);
    CHECK(one.blocks.contains(ABlock{tau.twisted(QuadTwist::minus_one()), 1}));
    CHECK_THROWS_AS(global_lift_parameter(spec(2, 1), psi, tau), Error);
    CHECK_THROWS_AS(global_lift_parameter(spec(3, 1), psi, cusp("x", 3, false, true)), Error);
}

TEST_CASE("property: local and global satake routes agree") {
    std::mt19937 rng(43);
    for (int n = 0; n <= 6; ++n)
        for (int r = 0; r <= n; ++r)
            for (int trial = 0; trial < 3; ++trial) {
                auto s = spec(n, r);
                s.place = LocalPlace::nonarch(std::vector<long long>{3, 5, 7}[rng() % 3]);
                auto psi = fixtures::random_A(rng, s.genuine(), r);
                auto local = fixtures::random_local(rng);
                auto a = UnitSymbol::named("alpha");
                local["tau"] = SatakeParam{SatakeEntry{a, 0}, SatakeEntry{a.inverse(), 0}};
                s.mu = Character::named("mu").declare_at_uniformizer(a);
                auto lifted = global_lift_parameter(s, psi, fixtures::cusp("tau", 2, false, true));
                auto lhs = satake_of_global_A(lifted, local, s.place);
                auto rhs = satake_of_lift(s, *derive_alpha(s), satake_of_global_A(psi, local, s.place));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("fj rewrite") {
    auto m = Character::named("m");
    auto a = fj_rewrite(2, m, QuadTwist());
    CHECK(a == DegeneratePrincipalSeries{1, m});
    auto xi = QuadTwist::of("xi");
    auto b = fj_rewrite(a.n, fj_rewrite(3, m, xi).mu, xi);
    CHECK(b == DegeneratePrincipalSeries{0, m});
    CHECK(fj_rewrite(1, m, xi) == DegeneratePrincipalSeries{0, m.twisted(xi)});
    CHECK_THROWS_AS(fj_rewrite(0, m, xi), Error);
}

TEST_CASE("duality examples") {
    CHECK(duality_check(spec(2, 2), phi(2, false)).verdict == DualityVerdict::Holds);
    auto d = duality_check(spec(4, 1), phi(1, true));
    CHECK(d.verdict == DualityVerdict::Holds);
    CHECK(d.recovered == phi(1, true));
    // r = 2, n = 4 with a mu'^{-1} Steinberg piece
    auto s = spec(4, 2);
    auto mp = mu_prime(s);
    auto bad = make(Target::odd_orthogonal(2), {WDSummand::chr(mp, 2), WDSummand::chr(mp.inverse(), 2), WDSummand::triv()});
    CHECK(duality_check(s, bad).verdict == DualityVerdict::ConditionsNotMet);
    CHECK(duality_check(s, phi(2, false)).verdict == DualityVerdict::Holds);
}

TEST_CASE("injectivity") {
    auto s = spec(3, 1);
    auto p1 = phi(1, false);
    CHECK(injectivity_check(s, p1, p1).lifts_equal);
    auto e = Character::named("e", true);
    auto p2 = make(Target::odd_orthogonal(1), {WDSummand::chr(e), WDSummand::chr(e), WDSummand::triv()});
    auto r = injectivity_check(s, p1, p2);
    CHECK_FALSE(r.lifts_equal);
    CHECK(r.consistent);
    CHECK_FALSE(r.collision);
    auto mp = mu_prime(s);
    auto p3 = make(Target::odd_orthogonal(1), {WDSummand::chr(mp, 2), WDSummand::chr(mp.inverse(), 2), WDSummand::triv()});
    auto p4 = make(Target::odd_orthogonal(1), {WDSummand::triv(3)});
    // not a valid rank-1 parameter: mu' S_2 + mu'^-1 S_2 + 1 has dimension 5
    CHECK_THROWS_AS(injectivity_check(s, p3, p4), Error);
    auto s2 = spec(3, 2);
    auto mp2 = mu_prime(s2);
    auto q1 = make(Target::symplectic(2), {WDSummand::chr(mp2), WDSummand::chr(mp2.inverse()), WDSummand::chr(e, 2)});
    auto q2 = make(Target::symplectic(2), {WDSummand::chr(e, 4)});
    auto c = injectivity_check(s2, q1, q2);
    CHECK(c.consistent);
    CHECK(c.collision);
}
