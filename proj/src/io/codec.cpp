#include "liftcalc/io/codec.hpp"

#include <cctype>

namespace liftcalc::io {

void schema_fail(const std::string& path, const std::string& msg) { throw SchemaError(path, msg); }

std::string sub(const std::string& path, const char* key) { return path + "." + key; }
std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void check_fields(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) schema_fail(path, "expected an object");
    for (const auto& [k, _] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (k == a) ok = true;
        if (!ok) schema_fail(path + "." + k, "unknown field");
    }
}

const json& require(const json& j, const std::string& path, const char* key) {
    if (!j.is_object()) schema_fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema_fail(sub(path, key), "missing required field");
    return *it;
}

namespace {

const json* optional_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return nullptr;
    return &*it;
}

// Domain errors raised while reading a value are reported as schema errors at its path.
template <class F>
auto at_path(const std::string& path, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Domain) schema_fail(path, e.what());
        throw;
    }
}

const json& array_at(const json& j, const std::string& path) {
    if (!j.is_array()) schema_fail(path, "expected an array");
    return j;
}

} // namespace

int as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_fail(path, "expected an integer");
    auto v = j.get<long long>();
    if (v < -1000000 || v > 1000000) schema_fail(path, "integer out of supported range");
    return static_cast<int>(v);
}

bool as_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) schema_fail(path, "expected a boolean");
    return j.get<bool>();
}

std::string as_string(const json& j, const std::string& path) {
    if (!j.is_string()) schema_fail(path, "expected a string");
    return j.get<std::string>();
}

Rational parse_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) schema_fail(path, "expected a rational \"a/b\" or an integer");
    return at_path(path, [&] { return Rational::parse(j.get<std::string>()); });
}
json dump(const Rational& r) { return r.str(); }

Sign parse_sign(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        auto v = j.get<long long>();
        if (v == 1) return Sign::plus();
        if (v == -1) return Sign::minus();
        schema_fail(path, "expected a sign");
    }
    if (!j.is_string()) schema_fail(path, "expected a sign \"+\" or \"-\"");
    return at_path(path, [&] { return Sign::parse(j.get<std::string>()); });
}
json dump(Sign s) { return s.str(); }

LocalPlace parse_place(const json& j, const std::string& path) {
    return at_path(path, [&]() -> LocalPlace {
        if (j.is_number_integer()) return LocalPlace::nonarch(j.get<long long>());
        if (j.is_object()) {
            check_fields(j, path, {"p", "f"});
            int f = 1;
            if (auto* fj = optional_field(j, "f")) f = as_int(*fj, sub(path, "f"));
            return LocalPlace::nonarch(as_int(require(j, path, "p"), sub(path, "p")), f);
        }
        if (!j.is_string()) schema_fail(path, "expected a place (\"R\", \"Q5\", 5 or {\"p\":5,\"f\":1})");
        auto s = j.get<std::string>();
        if (s == "R" || s == "real" || s == "inf") return LocalPlace::real();
        if (s.size() >= 2 && s[0] == 'Q') {
            auto caret = s.find("^f");
            auto ps = s.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
            int f = caret == std::string::npos ? 1 : std::stoi(s.substr(caret + 2));
            bool digits = !ps.empty();
            for (char c : ps) digits = digits && std::isdigit(static_cast<unsigned char>(c));
            if (digits) return LocalPlace::nonarch(std::stoll(ps), f);
        }
        schema_fail(path, "malformed place '" + s + "'");
    });
}
json dump(const LocalPlace& p) { return p.label(); }

SquareClass parse_square_class(const json& j, const std::string& path, const LocalPlace& place) {
    return at_path(path, [&] { return SquareClass::parse(place, as_string(j, path)); });
}
json dump(const SquareClass& c) { return c.label(); }

UnitSymbol parse_unit(const json& j, const std::string& path) {
    if (j.is_number_integer() && (j.get<long long>() == 1 || j.get<long long>() == -1))
        return UnitSymbol::root(RootOfUnity8::from_sign(j.get<long long>() == 1 ? Sign::plus() : Sign::minus()));
    return at_path(path, [&] { return UnitSymbol::parse(as_string(j, path)); });
}
json dump(const UnitSymbol& u) { return u.str(); }

QuadTwist parse_twist(const json& j, const std::string& path) {
    return at_path(path, [&] {
        if (j.is_string()) return QuadTwist::of(j.get<std::string>());
        array_at(j, path);
        QuadTwist t;
        for (std::size_t i = 0; i < j.size(); ++i) t *= QuadTwist::of(as_string(j[i], idx(path, i)));
        return t;
    });
}
json dump(const QuadTwist& t) {
    json a = json::array();
    for (const auto& g : t.generators()) a.push_back(g);
    return a;
}

Character parse_character(const json& j, const std::string& path) {
    if (j.is_string()) return at_path(path, [&] { return Character::parse(j.get<std::string>()); });
    check_fields(j, path, {"name", "inverse", "quadratic", "twist", "at_minus1", "at_uniformizer"});
    return at_path(path, [&] {
        bool quadratic = false;
        if (auto* q = optional_field(j, "quadratic")) quadratic = as_bool(*q, sub(path, "quadratic"));
        Character c = Character::named(as_string(require(j, path, "name"), sub(path, "name")), quadratic);
        if (auto* inv = optional_field(j, "inverse"); inv && as_bool(*inv, sub(path, "inverse"))) c = c.inverse();
        if (auto* t = optional_field(j, "twist")) c = c.twisted(parse_twist(*t, sub(path, "twist")));
        if (auto* s = optional_field(j, "at_minus1")) c.declare_at_minus_one(parse_sign(*s, sub(path, "at_minus1")));
        if (auto* u = optional_field(j, "at_uniformizer"))
            c.declare_at_uniformizer(parse_unit(*u, sub(path, "at_uniformizer")));
        return c;
    });
}
json dump(const Character& c) {
    if (!c.has_metadata()) return c.label();
    json o{{"name", c.base()}, {"quadratic", c.base_quadratic()}};
    if (c.inverted()) o["inverse"] = true;
    if (!c.twist().is_trivial()) o["twist"] = dump(c.twist());
    if (c.declared_at_minus_one()) o["at_minus1"] = dump(*c.declared_at_minus_one());
    if (c.declared_at_uniformizer()) o["at_uniformizer"] = dump(*c.declared_at_uniformizer());
    return o;
}

CuspSymbol parse_cusp(const json& j, const std::string& path) {
    if (j.is_string() || (j.is_object() && !j.contains("dim")))
        return CuspSymbol::of_character(parse_character(j, path));
    check_fields(j, path, {"name", "dim", "selfdual", "inverted", "det"});
    return at_path(path, [&] {
        SelfDuality t = SelfDuality::None;
        if (auto* s = optional_field(j, "selfdual")) t = parse_self_duality(as_string(*s, sub(path, "selfdual")));
        auto c = CuspSymbol::formal(as_string(require(j, path, "name"), sub(path, "name")),
                                    as_int(require(j, path, "dim"), sub(path, "dim")), t);
        if (auto* inv = optional_field(j, "inverted")) c.inverted = as_bool(*inv, sub(path, "inverted"));
        if (auto* d = optional_field(j, "det")) c.det = parse_character(*d, sub(path, "det"));
        return c;
    });
}
json dump(const CuspSymbol& c) {
    if (c.character) return dump(*c.character);
    json o{{"name", c.name}, {"dim", c.dim}, {"selfdual", self_duality_name(c.selfdual)}};
    if (c.inverted) o["inverted"] = true;
    if (c.det) o["det"] = dump(*c.det);
    return o;
}

Segment parse_segment(const json& j, const std::string& path) {
    check_fields(j, path, {"rho", "x", "y"});
    auto rho = parse_cusp(require(j, path, "rho"), sub(path, "rho"));
    auto x = parse_rational(require(j, path, "x"), sub(path, "x"));
    auto y = parse_rational(require(j, path, "y"), sub(path, "y"));
    return at_path(path, [&] { return Segment(rho, x, y); });
}
json dump(const Segment& s) { return json{{"rho", dump(s.rho)}, {"x", dump(s.x)}, {"y", dump(s.y)}}; }

namespace {

SummandBase parse_base(const json& j, const std::string& path) {
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "1" || s == "triv") return TrivBase{};
        if (s == "sgn") return SgnBase{};
        if (s.rfind("rho[", 0) == 0 && s.back() == ']') {
            auto ks = s.substr(4, s.size() - 5);
            bool digits = !ks.empty();
            for (char c : ks) digits = digits && std::isdigit(static_cast<unsigned char>(c));
            if (!digits) schema_fail(path, "malformed rho label '" + s + "'");
            return RhoBase{std::stoi(ks)};
        }
        return parse_character(j, path);
    }
    if (!j.is_object()) schema_fail(path, "expected a summand base");
    if (j.contains("rho")) {
        check_fields(j, path, {"rho"});
        return RhoBase{as_int(j["rho"], sub(path, "rho"))};
    }
    if (j.contains("cusp")) {
        check_fields(j, path, {"cusp"});
        return parse_cusp(j["cusp"], sub(path, "cusp"));
    }
    return parse_character(j, path);
}

} // namespace

WDSummand parse_summand(const json& j, const std::string& path) {
    check_fields(j, path, {"base", "d", "s"});
    auto base = parse_base(require(j, path, "base"), sub(path, "base"));
    int d = 1;
    Rational s;
    if (auto* dj = optional_field(j, "d")) d = as_int(*dj, sub(path, "d"));
    if (auto* sj = optional_field(j, "s")) s = parse_rational(*sj, sub(path, "s"));
    return at_path(path, [&] { return WDSummand(base, d, s); });
}
json dump(const WDSummand& s) {
    json base = std::visit(
        [](const auto& b) -> json {
            using B = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<B, TrivBase>) return "1";
            else if constexpr (std::is_same_v<B, SgnBase>) return "sgn";
            else if constexpr (std::is_same_v<B, RhoBase>) return "rho[" + std::to_string(b.k) + "]";
            else if constexpr (std::is_same_v<B, Character>) return dump(b);
            else return json{{"cusp", dump(b)}};
        },
        s.base());
    return json{{"base", base}, {"d", s.d()}, {"s", dump(s.s())}};
}

Target parse_target(const json& j, const std::string& path) {
    check_fields(j, path, {"type", "n"});
    auto t = as_string(require(j, path, "type"), sub(path, "type"));
    int n = as_int(require(j, path, "n"), sub(path, "n"));
    if (n < 0) schema_fail(sub(path, "n"), "rank must be non-negative");
    if (t == "odd_orthogonal") return Target::odd_orthogonal(n);
    if (t == "symplectic") return Target::symplectic(n);
    schema_fail(sub(path, "type"), "expected \"odd_orthogonal\" or \"symplectic\"");
}
json dump(const Target& t) {
    return json{{"type", t.kind == Target::Kind::OddOrthogonal ? "odd_orthogonal" : "symplectic"}, {"n", t.n}};
}

WDParameter parse_parameter(const json& j, const std::string& path) {
    check_fields(j, path, {"target", "summands"});
    WDParameter p;
    p.target = parse_target(require(j, path, "target"), sub(path, "target"));
    const auto& s = array_at(require(j, path, "summands"), sub(path, "summands"));
    for (std::size_t i = 0; i < s.size(); ++i) p.summands.insert(parse_summand(s[i], idx(sub(path, "summands"), i)));
    return p;
}
json dump(const WDParameter& p) {
    json s = json::array();
    for (const auto& x : p.summands.elements()) s.push_back(dump(x));
    return json{{"target", dump(p.target)}, {"summands", s}};
}

EtaCharacter parse_eta(const json& j, const std::string& path) {
    if (!j.is_object()) schema_fail(path, "expected an object mapping basis labels to signs");
    EtaCharacter e;
    for (const auto& [k, v] : j.items()) e.values[k] = parse_sign(v, path + "." + k);
    return e;
}
json dump(const EtaCharacter& e) {
    json o = json::object();
    for (const auto& [k, v] : e.values) o[k] = dump(v);
    return o;
}

GroupElement parse_group_element(const json& j, const std::string& path) {
    array_at(j, path);
    GroupElement g;
    for (std::size_t i = 0; i < j.size(); ++i) g = g + GroupElement{as_string(j[i], idx(path, i))};
    return g;
}
json dump(const GroupElement& g) {
    json a = json::array();
    for (const auto& x : g) a.push_back(x);
    return a;
}

json dump(const ComponentGroup& g) {
    json m = json::array();
    for (auto x : g.multiplicities) m.push_back(x);
    return json{{"basis", g.basis}, {"multiplicities", m}, {"rank", g.rank()}, {"z", dump(g.z)}};
}

json dump(const ParameterPredicates& p) {
    return json{{"good_parity", p.good_parity}, {"tempered", p.tempered}, {"almost_tempered", p.almost_tempered}};
}

GlobalCusp parse_global_cusp(const json& j, const std::string& path) {
    if (j.is_string()) {
        // shorthand for a quadratic Hecke character (or the trivial one)
        GlobalCusp c;
        c.name = at_path(path, [&] { return Character::named(j.get<std::string>()).base(); });
        c.sym2_pole = true;
        c.central = c.name == "1" ? QuadTwist() : at_path(path, [&] { return QuadTwist::of(c.name); });
        return c;
    }
    check_fields(j, path, {"name", "m", "sym2_pole", "wedge2_pole", "central", "twist"});
    GlobalCusp c;
    c.name = as_string(require(j, path, "name"), sub(path, "name"));
    if (c.name.empty()) schema_fail(sub(path, "name"), "empty name");
    if (auto* m = optional_field(j, "m")) c.m = as_int(*m, sub(path, "m"));
    if (auto* s = optional_field(j, "sym2_pole")) c.sym2_pole = as_bool(*s, sub(path, "sym2_pole"));
    if (auto* w = optional_field(j, "wedge2_pole")) c.wedge2_pole = as_bool(*w, sub(path, "wedge2_pole"));
    if (auto* ce = optional_field(j, "central")) c.central = parse_twist(*ce, sub(path, "central"));
    if (auto* t = optional_field(j, "twist")) c.twist = parse_twist(*t, sub(path, "twist"));
    return c;
}
json dump(const GlobalCusp& c) {
    json o{{"name", c.name}, {"m", c.m}, {"sym2_pole", c.sym2_pole}, {"wedge2_pole", c.wedge2_pole}, {"twist", dump(c.twist)}};
    o["central"] = c.central ? dump(*c.central) : json(nullptr);
    return o;
}

GlobalAParameter parse_global_A(const json& j, const std::string& path) {
    check_fields(j, path, {"group", "n", "blocks"});
    GlobalAParameter a;
    auto g = as_string(require(j, path, "group"), sub(path, "group"));
    if (g == "Sp") a.group = GlobalAParameter::Group::Sp;
    else if (g == "Mp") a.group = GlobalAParameter::Group::Mp;
    else schema_fail(sub(path, "group"), "expected \"Sp\" or \"Mp\"");
    a.n = as_int(require(j, path, "n"), sub(path, "n"));
    const auto& bs = array_at(require(j, path, "blocks"), sub(path, "blocks"));
    for (std::size_t i = 0; i < bs.size(); ++i) {
        auto p = idx(sub(path, "blocks"), i);
        check_fields(bs[i], p, {"tau", "d"});
        ABlock b{parse_global_cusp(require(bs[i], p, "tau"), sub(p, "tau")), 1};
        if (auto* d = optional_field(bs[i], "d")) b.d = as_int(*d, sub(p, "d"));
        a.blocks.insert(b);
    }
    return a;
}
json dump(const GlobalAParameter& a) {
    json bs = json::array();
    for (const auto& b : a.blocks.elements()) bs.push_back(json{{"tau", dump(b.tau)}, {"d", b.d}});
    return json{{"group", a.group_label()}, {"n", a.n}, {"blocks", bs}};
}

SatakeEntry parse_satake_entry(const json& j, const std::string& path) {
    if (j.is_object()) {
        check_fields(j, path, {"unit", "qexp"});
        SatakeEntry e{parse_unit(require(j, path, "unit"), sub(path, "unit")), 0};
        if (auto* q = optional_field(j, "qexp")) e.qexp = parse_rational(*q, sub(path, "qexp"));
        return e;
    }
    auto s = as_string(j, path);
    auto pos = s.rfind("*q^");
    if (pos != std::string::npos)
        return {parse_unit(s.substr(0, pos), path), parse_rational(s.substr(pos + 3), path)};
    if (s.rfind("q^", 0) == 0) return {UnitSymbol::identity(), parse_rational(s.substr(2), path)};
    return {parse_unit(j, path), 0};
}
SatakeParam parse_satake(const json& j, const std::string& path) {
    array_at(j, path);
    SatakeParam s;
    for (std::size_t i = 0; i < j.size(); ++i) s.insert(parse_satake_entry(j[i], idx(path, i)));
    return s;
}
json dump(const SatakeEntry& e) { return json{{"unit", dump(e.unit)}, {"qexp", dump(e.qexp)}}; }
json dump(const SatakeParam& s) {
    json a = json::array();
    for (const auto& e : s.elements()) a.push_back(dump(e));
    return a;
}

GLFactor parse_gl_factor(const json& j, const std::string& path) {
    if (j.is_object() && j.contains("rho")) return SegmentRep{parse_segment(j, path)};
    check_fields(j, path, {"name", "rank"});
    FormalGL f{as_string(require(j, path, "name"), sub(path, "name")), 1};
    if (auto* r = optional_field(j, "rank")) f.rank = as_int(*r, sub(path, "rank"));
    if (f.rank < 1) schema_fail(sub(path, "rank"), "rank must be positive");
    return f;
}
json dump(const GLFactor& f) {
    if (auto* g = std::get_if<FormalGL>(&f)) return json{{"name", g->name}, {"rank", g->rank}};
    return dump(std::get<SegmentRep>(f).seg);
}

JacquetTerm parse_jacquet_term(const json& j, const std::string& path) {
    check_fields(j, path, {"gl", "induced", "base"});
    JacquetTerm t;
    if (auto* g = optional_field(j, "gl")) {
        array_at(*g, sub(path, "gl"));
        for (std::size_t i = 0; i < g->size(); ++i) t.gl.push_back(parse_gl_factor((*g)[i], idx(sub(path, "gl"), i)));
    }
    if (auto* g = optional_field(j, "induced")) {
        array_at(*g, sub(path, "induced"));
        for (std::size_t i = 0; i < g->size(); ++i)
            t.induced.push_back(parse_gl_factor((*g)[i], idx(sub(path, "induced"), i)));
    }
    t.base = as_string(require(j, path, "base"), sub(path, "base"));
    return t.canonicalize();
}
json dump(const JacquetTerm& t) {
    json g = json::array(), ind = json::array();
    for (const auto& f : t.gl) g.push_back(dump(f));
    for (const auto& f : t.induced) ind.push_back(dump(f));
    return json{{"gl", g}, {"induced", ind}, {"base", t.base}};
}

JacquetTable parse_jacquet_table(const json& j, const std::string& path) {
    array_at(j, path);
    JacquetTable t;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto p = idx(path, i);
        if (j[i].is_object() && j[i].contains("term")) {
            check_fields(j[i], p, {"term", "mult"});
            int m = 1;
            if (auto* mj = optional_field(j[i], "mult")) m = as_int(*mj, sub(p, "mult"));
            if (m < 1) schema_fail(sub(p, "mult"), "multiplicity must be positive");
            t.insert(parse_jacquet_term(j[i]["term"], sub(p, "term")), static_cast<std::size_t>(m));
        } else {
            t.insert(parse_jacquet_term(j[i], p));
        }
    }
    return t;
}
json dump(const JacquetTable& t) {
    json a = json::array();
    for (const auto& [term, m] : t) a.push_back(json{{"term", dump(term)}, {"mult", m}});
    return a;
}

PiJacquetData parse_pi_jacquet(const json& j, const std::string& path) {
    check_fields(j, path, {"label", "rank", "tables"});
    PiJacquetData d;
    if (auto* l = optional_field(j, "label")) d.label = as_string(*l, sub(path, "label"));
    d.rank = as_int(require(j, path, "rank"), sub(path, "rank"));
    if (d.rank < 0) schema_fail(sub(path, "rank"), "rank must be non-negative");
    if (auto* t = optional_field(j, "tables")) {
        if (!t->is_object()) schema_fail(sub(path, "tables"), "expected an object keyed by parabolic index");
        for (const auto& [k, v] : t->items()) {
            int key = 0;
            try {
                std::size_t used = 0;
                key = std::stoi(k, &used);
                if (used != k.size()) throw std::invalid_argument(k);
            } catch (const std::exception&) {
                schema_fail(sub(path, "tables") + "." + k, "table index must be an integer");
            }
            d.tables[key] = parse_jacquet_table(v, sub(path, "tables") + "." + k);
        }
    }
    return d;
}

GLPiece parse_gl_piece(const json& j, const std::string& path) {
    check_fields(j, path, {"label", "phi", "s"});
    GLPiece p;
    p.label = as_string(require(j, path, "label"), sub(path, "label"));
    const auto& phi = array_at(require(j, path, "phi"), sub(path, "phi"));
    for (std::size_t i = 0; i < phi.size(); ++i) p.phi.push_back(parse_summand(phi[i], idx(sub(path, "phi"), i)));
    p.s = parse_rational(require(j, path, "s"), sub(path, "s"));
    return p;
}
json dump(const GLPiece& p) {
    json phi = json::array();
    for (const auto& s : p.phi) phi.push_back(dump(s));
    return json{{"label", p.label}, {"phi", phi}, {"s", dump(p.s)}};
}

MpRep parse_mp_rep(const json& j, const std::string& path) {
    check_fields(j, path, {"rank", "genuine", "langlands", "base", "eta"});
    MpRep m;
    m.rank = as_int(require(j, path, "rank"), sub(path, "rank"));
    m.genuine = as_bool(require(j, path, "genuine"), sub(path, "genuine"));
    if (auto* l = optional_field(j, "langlands")) {
        array_at(*l, sub(path, "langlands"));
        for (std::size_t i = 0; i < l->size(); ++i)
            m.langlands.push_back(parse_gl_piece((*l)[i], idx(sub(path, "langlands"), i)));
    }
    m.base = parse_parameter(require(j, path, "base"), sub(path, "base"));
    if (auto* e = optional_field(j, "eta")) m.eta = parse_eta(*e, sub(path, "eta"));
    auto v = m.validate();
    if (!v.empty()) schema_fail(path, "invalid representation: " + v.front());
    return m;
}

namespace {

std::optional<std::vector<UnitSymbol>> parse_units(const json* j, const std::string& path) {
    if (!j) return std::nullopt;
    array_at(*j, path);
    std::vector<UnitSymbol> out;
    for (std::size_t i = 0; i < j->size(); ++i) out.push_back(parse_unit((*j)[i], idx(path, i)));
    return out;
}

} // namespace

GprInput parse_gpr_input(const json& j, const std::string& path) {
    check_fields(j, path, {"genuine", "pieces", "base_units"});
    GprInput in;
    in.genuine = as_bool(require(j, path, "genuine"), sub(path, "genuine"));
    const auto& ps = array_at(require(j, path, "pieces"), sub(path, "pieces"));
    for (std::size_t i = 0; i < ps.size(); ++i) {
        auto p = idx(sub(path, "pieces"), i);
        check_fields(ps[i], p, {"units", "s"});
        GprPiece piece;
        piece.units = parse_units(optional_field(ps[i], "units"), sub(p, "units"));
        piece.s = parse_rational(require(ps[i], p, "s"), sub(p, "s"));
        in.pieces.push_back(std::move(piece));
    }
    in.base_units = parse_units(optional_field(j, "base_units"), sub(path, "base_units"));
    return in;
}

EpsilonOracle parse_oracle(const json& j, const std::string& path) {
    check_fields(j, path, {"backend", "table", "default"});
    std::string backend = "formal";
    if (auto* b = optional_field(j, "backend")) backend = as_string(*b, sub(path, "backend"));
    std::map<std::string, Sign> table;
    if (auto* t = optional_field(j, "table")) {
        if (!t->is_object()) schema_fail(sub(path, "table"), "expected an object");
        for (const auto& [k, v] : t->items()) table[k] = parse_sign(v, sub(path, "table") + "." + k);
    }
    std::optional<Sign> def;
    if (auto* d = optional_field(j, "default")) def = parse_sign(*d, sub(path, "default"));
    if (backend == "formal") return EpsilonOracle::formal(std::move(table), def);
    if (backend == "table") {
        if (def) schema_fail(sub(path, "default"), "a default sign is only allowed for the formal backend");
        return EpsilonOracle::user_table(std::move(table));
    }
    schema_fail(sub(path, "backend"), "expected \"formal\" or \"table\"");
}
json dump(const EpsilonOracle& o) {
    json t = json::object();
    for (const auto& [k, v] : o.table()) t[k] = dump(v);
    json out{{"backend", o.backend() == EpsilonOracle::Backend::Formal ? "formal" : "table"}, {"table", t}};
    if (o.default_sign()) out["default"] = dump(*o.default_sign());
    return out;
}

namespace {

void fill_place_data(PlaceData& d, const json& j, const std::string& path) {
    d.label = as_string(require(j, path, "label"), sub(path, "label"));
    d.eta = parse_eta(require(j, path, "eta"), sub(path, "eta"));
    const auto& loc = require(j, path, "localization");
    if (!loc.is_object()) schema_fail(sub(path, "localization"), "expected an object");
    for (const auto& [k, v] : loc.items()) d.localization[k] = parse_group_element(v, sub(path, "localization") + "." + k);
}

} // namespace

PlaceData parse_place_data(const json& j, const std::string& path) {
    check_fields(j, path, {"label", "eta", "localization"});
    PlaceData d;
    fill_place_data(d, j, path);
    return d;
}

PartnerPlace parse_partner_place(const json& j, const std::string& path) {
    check_fields(j, path, {"label", "eta", "localization", "archimedean", "weight", "parameter", "mu_minus1",
                           "chi_minus1", "place"});
    PartnerPlace p;
    fill_place_data(p.data, j, path);
    if (auto* a = optional_field(j, "archimedean")) p.archimedean = as_bool(*a, sub(path, "archimedean"));
    if (p.archimedean) {
        p.weight = as_int(require(j, path, "weight"), sub(path, "weight"));
        p.parameter = parse_parameter(require(j, path, "parameter"), sub(path, "parameter"));
    } else {
        p.mu_minus1 = parse_sign(require(j, path, "mu_minus1"), sub(path, "mu_minus1"));
        if (auto* c = optional_field(j, "chi_minus1")) p.chi_minus1 = parse_sign(*c, sub(path, "chi_minus1"));
        if (auto* pl = optional_field(j, "place")) p.place = parse_place(*pl, sub(path, "place"));
    }
    return p;
}

json dump(const TraceEntry& t) {
    return json{{"element", t.element},
                {"side", t.side},
                {"lhs", t.lhs ? dump(*t.lhs) : json(nullptr)},
                {"rhs", t.rhs ? dump(*t.rhs) : json(nullptr)},
                {"detail", t.detail}};
}

} // namespace liftcalc::io
