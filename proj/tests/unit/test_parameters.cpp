#include <random>

#include "doctest.h"
#include "liftcalc/error.hpp"
#include "liftcalc/global_param.hpp"
#include "liftcalc/parameters.hpp"

using namespace liftcalc;

namespace {

Character quad(const char* n) { return Character::named(n, true); }

WDParameter make(Target t, std::initializer_list<WDSummand> s) {
    WDParameter p;
    p.target = t;
    for (const auto& x : s) p.summands.insert(x);
    return p;
}

GlobalCusp cusp(std::string name, int m, bool sym2, bool wedge2) {
    GlobalCusp c;
    c.name = std::move(name);
    c.m = m;
    c.sym2_pole = sym2;
    c.wedge2_pole = wedge2;
    return c;
}

} // namespace

TEST_CASE("summand types") {
    CHECK(summand_type(WDSummand::chr(quad("mu"))) == SelfDuality::Orthogonal);
    CHECK(summand_type(WDSummand::chr(quad("mu"), 2)) == SelfDuality::Symplectic);
    CHECK(summand_type(WDSummand::rho(3)) == SelfDuality::Symplectic);
    CHECK(summand_type(WDSummand::rho(4)) == SelfDuality::Orthogonal);
    CHECK(summand_type(WDSummand::chr(quad("mu"), 1, Rational(1, 4))) == SelfDuality::None);
    CHECK(summand_type(WDSummand::chr(Character::named("m"))) == SelfDuality::None);
    CHECK(summand_type(WDSummand::formal(CuspSymbol::formal("tau", 2, SelfDuality::Symplectic), 3)) == SelfDuality::Symplectic);
    CHECK(summand_type(WDSummand::formal(CuspSymbol::formal("tau", 2, SelfDuality::Symplectic), 2)) == SelfDuality::Orthogonal);
}

TEST_CASE("summand normalisation and labels") {
    CHECK(WDSummand::chr(Character::trivial()) == WDSummand::triv());
    CHECK(WDSummand::chr(Character::quadratic_twist(QuadTwist::of("-"))) == WDSummand::sgn());
    CHECK(WDSummand::chr(Character::named("m"), 2, Rational(1, 4)).label() == "m[2]|^1/4");
    CHECK(WDSummand::rho(10).label() == "rho[10]");
    CHECK(WDSummand::sgn(3).label() == "sgn[3]");
    CHECK_THROWS_AS(WDSummand::triv(0), Error);
    CHECK_THROWS_AS(WDSummand::rho(0), Error);
}

TEST_CASE("property: type is preserved by dualising") {
    std::vector<WDSummand> xs = {WDSummand::triv(2), WDSummand::sgn(3), WDSummand::rho(5, 2),
                                 WDSummand::chr(Character::named("m"), 2, Rational(1, 2)), WDSummand::chr(quad("e"), 4),
                                 WDSummand::formal(CuspSymbol::formal("t", 3, SelfDuality::None)),
                                 WDSummand::formal(CuspSymbol::formal("s", 2, SelfDuality::Symplectic), 2)};
    for (const auto& x : xs) {
        CHECK(summand_type(x.dual()) == summand_type(x));
        CHECK(x.dual().dual() == x);
        CHECK(x.dual().dim() == x.dim());
    }
}

TEST_CASE("validate_parameter") {
    CHECK(validate_parameter(make(Target::symplectic(1), {WDSummand::chr(quad("mu"), 2)})).empty());
    CHECK_FALSE(validate_parameter(make(Target::odd_orthogonal(1), {WDSummand::chr(quad("mu"), 2), WDSummand::triv()})).empty());
    auto m = Character::named("m");
    auto good = make(Target::odd_orthogonal(2), {WDSummand::chr(m, 1, Rational(1, 4)), WDSummand::chr(m.inverse(), 1, Rational(-1, 4)),
                                                 WDSummand::triv(), WDSummand::chr(quad("e")), WDSummand::chr(quad("e"))});
    CHECK(validate_parameter(good).empty());
    auto bad = make(Target::odd_orthogonal(2), {WDSummand::chr(m, 1, Rational(1, 4)), WDSummand::chr(m, 1, Rational(-1, 4)),
                                                WDSummand::triv(), WDSummand::chr(quad("e")), WDSummand::chr(quad("e"))});
    CHECK_FALSE(validate_parameter(bad).empty());
    // wrong dimension
    CHECK_FALSE(validate_parameter(make(Target::odd_orthogonal(1), {WDSummand::triv()})).empty());
}

TEST_CASE("predicates") {
    auto m = Character::named("m");
    auto p = predicates(make(Target::odd_orthogonal(1), {WDSummand::triv(3)}));
    CHECK((p.good_parity && p.tempered && p.almost_tempered));
    p = predicates(make(Target::odd_orthogonal(1), {WDSummand::chr(m, 1, Rational(1, 4)),
                                                    WDSummand::chr(m.inverse(), 1, Rational(-1, 4)), WDSummand::triv()}));
    CHECK_FALSE(p.good_parity);
    CHECK_FALSE(p.tempered);
    CHECK(p.almost_tempered);
    p = predicates(make(Target::odd_orthogonal(1), {WDSummand::chr(m, 1, Rational(1)),
                                                    WDSummand::chr(m.inverse(), 1, Rational(-1)), WDSummand::triv()}));
    CHECK_FALSE(p.almost_tempered);
}

TEST_CASE("component groups") {
    auto e = quad("e");
    auto g = component_group(make(Target::odd_orthogonal(1), {WDSummand::triv(), WDSummand::chr(e), WDSummand::chr(e)}));
    CHECK(g.rank() == 2);
    CHECK(g.z == GroupElement{"1"});
    auto m = Character::named("m");
    g = component_group(make(Target::odd_orthogonal(1), {WDSummand::chr(m), WDSummand::chr(m.inverse()), WDSummand::triv()}));
    CHECK(g.rank() == 1);
    g = component_group(make(Target::symplectic(1), {WDSummand::chr(m), WDSummand::chr(m.inverse())}));
    CHECK(g.rank() == 0);
    CHECK(g.z.empty());
    g = component_group(make(Target::odd_orthogonal(1), {WDSummand::triv(), WDSummand::triv(), WDSummand::triv()}));
    CHECK(g.rank() == 1);
    CHECK(g.z == GroupElement{"1"});
    CHECK(g.sub_parameter({"1"}) == std::vector<WDSummand>{WDSummand::triv()});
}

TEST_CASE("property: component group rank counts distinct same-type constituents") {
    std::mt19937 rng(17);
    std::vector<WDSummand> pool = {WDSummand::triv(), WDSummand::triv(3), WDSummand::chr(quad("e")), WDSummand::chr(quad("f"), 3),
                                   WDSummand::chr(quad("e"), 2), WDSummand::rho(3), WDSummand::chr(Character::named("m"))};
    for (int i = 0; i < 300; ++i) {
        WDParameter p;
        p.target = Target::odd_orthogonal(0);
        std::set<WDSummand> distinct;
        int dim = 0;
        while (true) {
            const auto& s = pool[rng() % pool.size()];
            if (dim + s.dim() > 11) break;
            p.summands.insert(s);
            dim += s.dim();
            if (summand_type(s) == SelfDuality::Orthogonal) distinct.insert(s);
        }
        CHECK(component_group(p).rank() == distinct.size());
    }
}

TEST_CASE("eta characters") {
    EtaCharacter eta;
    eta.values["a"] = Sign::minus();
    eta.values["b"] = Sign::minus();
    CHECK(eta({"a", "b"}) == Sign::plus());
    CHECK(eta({}) == Sign::plus());
    CHECK_FALSE(eta.is_trivial());
    try {
        (void)eta({"c"});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IncompleteInput);
    }
    CHECK(GroupElement{"a"} + GroupElement{"a", "b"} == GroupElement{"b"});
}

TEST_CASE("holomorphic archimedean parameters") {
    auto a = arch_holomorphic_parameter(12, 2);
    CHECK(a.phi.summands == Multiset<WDSummand>{WDSummand::rho(10), WDSummand::rho(8), WDSummand::triv()});
    CHECK(a.eta.values.at("rho[10]") == Sign::plus());
    CHECK(a.eta.values.at("rho[8]") == Sign::minus());
    auto b = arch_holomorphic_parameter(7, 1);
    CHECK(b.phi.summands == Multiset<WDSummand>{WDSummand::rho(5)});
    CHECK(b.eta.values.at("rho[5]") == Sign::plus());
    CHECK_THROWS_AS(arch_holomorphic_parameter(4, 2), Error);
}

TEST_CASE("property: holomorphic parameters are valid with alternating eta") {
    for (int n = 1; n <= 6; ++n)
        for (int l = 2 * n + 1; l <= 30; ++l) {
            auto a = arch_holomorphic_parameter(l, n);
            CHECK(a.phi.dim() == (l % 2 == 0 ? 2 * n + 1 : 2 * n));
            CHECK(validate_parameter(a.phi).empty());
            for (int i = 1; i <= n; ++i) CHECK(a.eta.values.at(WDSummand::rho(l - 2 * i).label()) == Sign::from_parity(i - 1));
            if (l % 2 == 0) CHECK(a.eta(component_group(a.phi).z) == Sign::plus());
        }
}

TEST_CASE("global A-parameters") {
    GlobalAParameter mp1{GlobalAParameter::Group::Mp, 1, {ABlock{cusp("chi_xi", 1, true, false), 2}}};
    auto v = validate_global_A(mp1);
    CHECK(v.ok());
    CHECK_FALSE(v.unchecked.empty());
    GlobalAParameter sp1{GlobalAParameter::Group::Sp, 1, {ABlock{cusp("1", 1, true, false), 3}}};
    CHECK(validate_global_A(sp1).ok());
    CHECK_FALSE(sp1.tempered());
    auto tau = cusp("tau", 2, false, true);
    GlobalAParameter dup{GlobalAParameter::Group::Mp, 2, {ABlock{tau, 1}, ABlock{tau, 1}}};
    CHECK_FALSE(validate_global_A(dup).ok());
    auto c = cusp("1", 1, true, false);
    c.central = QuadTwist();
    auto e = cusp("e", 1, true, false);
    e.central = QuadTwist::of("e");
    GlobalAParameter bad{GlobalAParameter::Group::Sp, 1, {ABlock{c, 1}, ABlock{e, 2}}};
    // e[2] needs a wedge^2 pole for Sp; the central product is chi_e^2 = 1
    CHECK_FALSE(validate_global_A(bad).ok());
}

TEST_CASE("satake of global A-parameters") {
    auto alpha = UnitSymbol::named("alpha");
    std::map<std::string, SatakeParam> local{{"chi", SatakeParam{SatakeEntry{alpha, 0}}},
                                             {"1", SatakeParam{SatakeEntry{UnitSymbol::identity(), 0}}},
                                             {"tau", SatakeParam{SatakeEntry{UnitSymbol::named("b"), 0}, SatakeEntry{UnitSymbol::named("b").inverse(), 0}}}};
    GlobalAParameter one{GlobalAParameter::Group::Mp, 1, {ABlock{cusp("tau", 2, false, true), 1}}};
    CHECK(satake_of_global_A(one, local, std::nullopt) == local["tau"]);
    GlobalAParameter two{GlobalAParameter::Group::Mp, 1, {ABlock{cusp("chi", 1, true, false), 2}}};
    CHECK(satake_of_global_A(two, local, std::nullopt) ==
          SatakeParam{SatakeEntry{alpha, Rational(-1, 2)}, SatakeEntry{alpha, Rational(1, 2)}});
    GlobalAParameter three{GlobalAParameter::Group::Sp, 1, {ABlock{cusp("1", 1, true, false), 3}}};
    auto id = UnitSymbol::identity();
    CHECK(satake_of_global_A(three, local, std::nullopt) == SatakeParam{SatakeEntry{id, -1}, SatakeEntry{id, 0}, SatakeEntry{id, 1}});
    // twisted block looked up through the untwisted name
    auto t = cusp("tau", 2, false, true).twisted(QuadTwist::of("u"));
    GlobalAParameter tw{GlobalAParameter::Group::Mp, 1, {ABlock{t, 1}}};
    auto s = satake_of_global_A(tw, local, LocalPlace::nonarch(5));
    CHECK(s.contains(SatakeEntry{UnitSymbol::parse("-b"), 0}));
    CHECK_THROWS_AS(satake_of_global_A(tw, local, std::nullopt), Error);
    CHECK(inverse_closed(s));
}
