#include "liftcalc/io/batch.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

namespace liftcalc::io {

namespace {

const std::string root = "$";

struct Field {
    const char* name;
    const char* type;
    bool required;
    const char* doc;
};

struct Context {
    const BatchOptions& opt;
    std::string status = "THEOREM";
    std::string source;
    std::vector<std::string> warnings;
};

using Handler = std::function<json(const json&, Context&)>;

struct Command {
    std::string name;
    std::string summary;
    std::string source; // default provenance
    std::vector<Field> fields;
    Handler run;
};

const json* opt_field(const json& req, const char* key) {
    auto it = req.find(key);
    if (it == req.end() || it->is_null()) return nullptr;
    return &*it;
}

std::string at(const char* key) { return sub(root, key); }

LocalPlace place_of(const json& req) { return parse_place(require(req, root, "place"), at("place")); }

std::optional<LocalPlace> opt_place(const json& req) {
    if (auto* p = opt_field(req, "place")) return parse_place(*p, at("place"));
    return std::nullopt;
}

int int_of(const json& req, const char* key) { return as_int(require(req, root, key), at(key)); }

Character char_of(const json& req, const char* key) { return parse_character(require(req, root, key), at(key)); }

WDParameter param_of(const json& req, const char* key) { return parse_parameter(require(req, root, key), at(key)); }

EtaCharacter eta_of(const json& req, const char* key) {
    if (auto* e = opt_field(req, key)) return parse_eta(*e, at(key));
    return {};
}

SegmentRep rep_of(const json& req, const char* key) { return SegmentRep{parse_segment(require(req, root, key), at(key))}; }

// n, r, mu and optional xi/place shared by the lift commands.
LiftSpec lift_spec_of(const json& req, bool mu_required = true) {
    LiftSpec s;
    s.n = int_of(req, "n");
    s.r = int_of(req, "r");
    if (mu_required || opt_field(req, "mu")) s.mu = char_of(req, "mu");
    else s.mu = Character::named("mu");
    s.place = opt_place(req);
    if (auto* x = opt_field(req, "xi")) {
        if (!s.place) schema_fail(at("xi"), "a square class needs \"place\"");
        s.xi = parse_square_class(*x, at("xi"), *s.place);
    }
    s.check();
    return s;
}

std::map<std::string, Sign> sign_map(const json& req, const char* key) {
    std::map<std::string, Sign> out;
    if (auto* m = opt_field(req, key)) {
        if (!m->is_object()) schema_fail(at(key), "expected an object of signs");
        for (const auto& [k, v] : m->items()) out[k] = parse_sign(v, at(key) + "." + k);
    }
    return out;
}

json strings(const std::vector<std::string>& v) { return json(v); }

json trace_json(const std::vector<TraceEntry>& t) {
    json a = json::array();
    for (const auto& e : t) a.push_back(dump(e));
    return a;
}

json summands_json(const std::vector<WDSummand>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(dump(s));
    return a;
}

void unramified_psi_warning(Context& ctx) {
    ctx.warnings.push_back("additive character psi is normalised to have conductor O_F");
}

json ggp_json(const GgpResult& g, Context& ctx) {
    json o{{"verdict", ggp_verdict_name(g.verdict)}, {"roles_swapped", g.roles_swapped}, {"unresolved", strings(g.unresolved)}};
    if (ctx.opt.trace) o["basis_trace"] = trace_json(g.basis_trace);
    return o;
}

std::vector<PlaceData> place_data_of(const json& req) {
    const auto& ps = require(req, root, "places");
    if (!ps.is_array()) schema_fail(at("places"), "expected an array");
    std::vector<PlaceData> out;
    for (std::size_t i = 0; i < ps.size(); ++i) out.push_back(parse_place_data(ps[i], idx(at("places"), i)));
    return out;
}

// ---- handlers -------------------------------------------------------------

json cmd_hilbert(const json& req, Context&) {
    auto p = place_of(req);
    auto a = parse_square_class(require(req, root, "a"), at("a"), p);
    auto b = parse_square_class(require(req, root, "b"), at("b"), p);
    return json{{"symbol", dump(hilbert_symbol(a, b))}};
}

json cmd_weil_gamma(const json& req, Context& ctx) {
    auto p = place_of(req);
    SquareClass xi = SquareClass::one(p);
    if (auto* x = opt_field(req, "xi")) xi = parse_square_class(*x, at("xi"), p);
    auto a = parse_square_class(require(req, root, "a"), at("a"), p);
    if (!p.is_real()) unramified_psi_warning(ctx);
    return json{{"gamma", weil_gamma(PsiScale{xi}, a).str()}};
}

json cmd_linked(const json& req, Context&) {
    auto a = parse_segment(require(req, root, "a"), at("a"));
    auto b = parse_segment(require(req, root, "b"), at("b"));
    return json{{"linked", linked(a, b)}};
}

json cmd_zelevinsky(const json& req, Context&) {
    auto a = rep_of(req, "a");
    auto b = rep_of(req, "b");
    return json{{"irreducible", zelevinsky_irreducible(a, b)}};
}

json cmd_jacquet_gl(const json& req, Context&) {
    auto rep = rep_of(req, "rep");
    auto r = jacquet_gl(rep, int_of(req, "k1"), int_of(req, "k2"));
    if (!r) return json{{"zero", true}, {"terms", json::array()}};
    return json{{"zero", false}, {"terms", json::array({dump(r->first.seg), dump(r->second.seg)})}};
}

json cmd_tadic(const json& req, Context&) {
    auto mu = char_of(req, "mu");
    auto pi = parse_pi_jacquet(require(req, root, "pi"), at("pi"));
    auto table = tadic_jacquet(mu, int_of(req, "k"), parse_rational(require(req, root, "alpha"), at("alpha")), pi,
                               int_of(req, "t"));
    json o{{"table", dump(table)}, {"term_count", table.size()}};
    if (auto* d = opt_field(req, "delta")) {
        int delta = as_int(*d, at("delta"));
        if (delta != 0 && delta != 1) schema_fail(at("delta"), "delta must be 0 or 1");
        o["parity_violations"] = strings(casselman_parity_check(table, delta));
    }
    return o;
}

json cmd_casselman(const json& req, Context&) {
    auto table = parse_jacquet_table(require(req, root, "table"), at("table"));
    int delta = int_of(req, "delta");
    if (delta != 0 && delta != 1) schema_fail(at("delta"), "delta must be 0 or 1");
    auto v = casselman_parity_check(table, delta);
    return json{{"violations", strings(v)}, {"consistent", v.empty()}};
}

json cmd_lift_local(const json& req, Context&) {
    auto spec = lift_spec_of(req);
    auto res = local_lift_parameter(spec, param_of(req, "phi_pi"));
    json pieces = json::array();
    for (const auto& p : res.data.pieces) pieces.push_back(dump(p));
    json data{{"pieces", pieces}, {"base", res.data.base}};
    data["unitary"] = res.data.unitary ? dump(*res.data.unitary) : json(nullptr);
    return json{{"data", data},
                {"parameter", dump(res.parameter)},
                {"l_parameter", dump(res.l_parameter)},
                {"mu_prime", dump(res.mu_prime)},
                {"added_blocks", summands_json(res.added_blocks)}};
}

json cmd_lift_satake(const json& req, Context&) {
    auto spec = lift_spec_of(req, false);
    auto q = parse_rational(require(req, root, "q"), at("q"));
    if (!q.is_integer() || q < Rational(2)) schema_fail(at("q"), "q must be a prime power");
    {
        long long qq = q.to_integer(), p = 2;
        while (qq % p != 0) ++p;
        while (qq % p == 0) qq /= p;
        if (qq != 1) schema_fail(at("q"), "q must be a prime power");
    }
    if (spec.place && !spec.place->is_real() && Rational(spec.place->q()) != q)
        fail(ErrorCode::Inconsistent, "q does not match the residue field of the place");
    std::optional<UnitSymbol> alpha;
    if (auto* a = opt_field(req, "alpha")) alpha = parse_unit(*a, at("alpha"));
    else alpha = derive_alpha(spec);
    if (!alpha) fail(ErrorCode::IncompleteInput, "alpha not supplied and mu'(uniformizer) cannot be derived");
    auto out = satake_of_lift(spec, *alpha, parse_satake(require(req, root, "satake"), at("satake")));
    return json{{"satake", dump(out)}, {"cardinality", out.size()}, {"inverse_closed", inverse_closed(out)},
                {"q", dump(q)}};
}

json cmd_lift_global(const json& req, Context& ctx) {
    auto spec = lift_spec_of(req, false);
    auto psi = parse_global_A(require(req, root, "psi"), at("psi"));
    auto tau = parse_global_cusp(require(req, root, "tau"), at("tau"));
    auto out = global_lift_parameter(spec, psi, tau);
    auto v = validate_global_A(out);
    for (const auto& u : v.unchecked) ctx.warnings.push_back("unchecked: " + u);
    if (!v.unchecked.empty()) ctx.status = "UNCHECKED";
    return json{{"a_parameter", dump(out)}, {"violations", strings(v.violations)}, {"unchecked", strings(v.unchecked)}};
}

json cmd_satake_global(const json& req, Context&) {
    auto a = parse_global_A(require(req, root, "a_parameter"), at("a_parameter"));
    const auto& loc = require(req, root, "local");
    if (!loc.is_object()) schema_fail(at("local"), "expected an object of Satake parameters");
    std::map<std::string, SatakeParam> m;
    for (const auto& [k, v] : loc.items()) m[k] = parse_satake(v, at("local") + "." + k);
    auto out = satake_of_global_A(a, m, opt_place(req));
    return json{{"satake", dump(out)}, {"cardinality", out.size()}, {"inverse_closed", inverse_closed(out)}};
}

json cmd_fj_rewrite(const json& req, Context&) {
    int n = int_of(req, "n");
    auto mu = char_of(req, "mu");
    QuadTwist xi;
    if (auto* x = opt_field(req, "xi")) xi = parse_twist(*x, at("xi"));
    auto out = fj_rewrite(n, mu, xi, opt_place(req));
    return json{{"n", out.n}, {"mu", dump(out.mu)}};
}

json cmd_duality(const json& req, Context&) {
    auto spec = lift_spec_of(req);
    auto res = duality_check(spec, param_of(req, "phi_pi"));
    json o{{"verdict", res.verdict == DualityVerdict::Holds ? "holds" : "conditions_not_met"}, {"reason", res.reason}};
    o["recovered"] = res.recovered ? dump(*res.recovered) : json(nullptr);
    return o;
}

json cmd_injectivity(const json& req, Context& ctx) {
    auto spec = lift_spec_of(req);
    auto res = injectivity_check(spec, param_of(req, "phi1"), param_of(req, "phi2"));
    if (res.collision) {
        ctx.status = "UNCHECKED";
        ctx.warnings.push_back("parameters differ only inside the added block; flagged for manual review");
    }
    return json{{"consistent", res.consistent}, {"lifts_equal", res.lifts_equal}, {"params_equal", res.params_equal},
                {"collision", res.collision}};
}

json cmd_arch_param(const json& req, Context&) {
    auto a = arch_holomorphic_parameter(int_of(req, "l"), int_of(req, "n"));
    return json{{"parameter", dump(a.phi)}, {"eta", dump(a.eta)}, {"dim", a.phi.dim()}};
}

json cmd_validate(const json& req, Context& ctx) {
    const json* p = opt_field(req, "parameter");
    const json* a = opt_field(req, "a_parameter");
    if ((p == nullptr) == (a == nullptr)) schema_fail(root, "exactly one of \"parameter\" and \"a_parameter\" is required");
    if (p) {
        auto phi = parse_parameter(*p, at("parameter"));
        auto v = validate_parameter(phi);
        json o{{"violations", strings(v)}, {"valid", v.empty()}, {"dim", phi.dim()}};
        if (v.empty()) {
            o["predicates"] = dump(predicates(phi));
            o["component_group"] = dump(component_group(phi));
        }
        return o;
    }
    auto psi = parse_global_A(*a, at("a_parameter"));
    auto v = validate_global_A(psi);
    if (!v.unchecked.empty()) {
        ctx.status = "UNCHECKED";
        for (const auto& u : v.unchecked) ctx.warnings.push_back("unchecked: " + u);
    }
    return json{{"violations", strings(v.violations)}, {"unchecked", strings(v.unchecked)}, {"valid", v.ok()},
                {"tempered", psi.tempered()}};
}

json cmd_arthur(const json& req, Context& ctx) {
    auto psi = parse_global_A(require(req, root, "psi"), at("psi"));
    auto roots = sign_map(req, "root_numbers");
    if (auto* f = opt_field(req, "formal_root_numbers")) {
        auto labels = parse_group_element(*f, at("formal_root_numbers"));
        if (!labels.empty()) {
            ctx.status = "CONJECTURAL";
            for (const auto& l : labels) ctx.warnings.push_back("root number of " + l + " is a formal assumption");
        }
    }
    auto res = arthur_multiplicity(psi, place_data_of(req), roots);
    json o{{"occurs", res.occurs}, {"failing", strings(res.failing)}};
    if (ctx.opt.trace) o["trace"] = trace_json(res.trace);
    return o;
}

struct GgpInputs {
    WDParameter phi1, phi2;
    EtaCharacter eta1, eta2;
    SquareClass xi;
    EpsilonOracle oracle;
};

GgpInputs ggp_inputs(const json& req, const LocalPlace& place) {
    GgpInputs in{param_of(req, "phi1"), param_of(req, "phi2"), eta_of(req, "eta1"), eta_of(req, "eta2"),
                 SquareClass::one(place), EpsilonOracle::formal()};
    if (auto* x = opt_field(req, "xi")) in.xi = parse_square_class(*x, at("xi"), place);
    if (auto* o = opt_field(req, "oracle")) in.oracle = parse_oracle(*o, at("oracle"));
    return in;
}

void oracle_provenance(const EpsilonOracle& o, Context& ctx) {
    if (o.backend() == EpsilonOracle::Backend::Formal && o.default_sign()) {
        ctx.status = "CONJECTURAL";
        ctx.warnings.push_back("unlisted root numbers default to " + o.default_sign()->str());
    }
}

json cmd_ggp_local(const json& req, Context& ctx) {
    auto place = place_of(req);
    auto in = ggp_inputs(req, place);
    int corank = int_of(req, "corank");
    oracle_provenance(in.oracle, ctx);
    if (!place.is_real()) unramified_psi_warning(ctx);
    return ggp_json(ggp_local(in.phi1, in.eta1, in.phi2, in.eta2, in.xi, in.oracle, corank), ctx);
}

json cmd_ggp_nongeneric(const json& req, Context& ctx) {
    auto spec = lift_spec_of(req);
    if (!spec.place) schema_fail(at("place"), "missing required field");
    auto in = ggp_inputs(req, *spec.place);
    auto res = ggp_nongeneric(spec, in.xi, in.phi1, in.eta1, in.phi2, in.eta2, in.oracle);
    if (res.ggp) oracle_provenance(in.oracle, ctx);
    json o{{"verdict", nongeneric_verdict_name(res.verdict)}, {"reason", res.reason}};
    if (res.ggp) o["ggp"] = ggp_json(*res.ggp, ctx);
    if (ctx.opt.trace) {
        auto [l1, l2] = nongeneric_lifted_parameters(spec, in.xi, in.phi1, in.phi2);
        o["lifted"] = json{{"phi1", dump(l1)}, {"phi2", dump(l2)}};
    }
    return o;
}

json cmd_lemA(const json& req, Context& ctx) {
    auto psi = parse_global_A(require(req, root, "psi"), at("psi"));
    auto tau = parse_global_cusp(require(req, root, "tau"), at("tau"));
    const auto& ps = require(req, root, "places");
    if (!ps.is_array()) schema_fail(at("places"), "expected an array");
    std::vector<PartnerPlace> places;
    for (std::size_t i = 0; i < ps.size(); ++i) places.push_back(parse_partner_place(ps[i], idx(at("places"), i)));
    auto res = lemA_partner(psi, tau, places, sign_map(req, "root_numbers"));
    json o{{"consistent", res.consistent}, {"verdict", res.consistent ? "consistent" : "sign_mismatch"},
           {"psi_prime", dump(res.psi_prime)}, {"failing", strings(res.failing)}};
    if (ctx.opt.trace) o["trace"] = trace_json(res.trace);
    return o;
}

json cmd_a3(const json& req, Context&) {
    const auto& m = require(req, root, "mu_minus1");
    const auto& w = require(req, root, "weights");
    if (!m.is_array()) schema_fail(at("mu_minus1"), "expected an array of signs");
    if (!w.is_array()) schema_fail(at("weights"), "expected an array of weights");
    std::vector<Sign> mu;
    std::vector<int> k;
    for (std::size_t i = 0; i < m.size(); ++i) mu.push_back(parse_sign(m[i], idx(at("mu_minus1"), i)));
    for (std::size_t i = 0; i < w.size(); ++i) k.push_back(as_int(w[i], idx(at("weights"), i)));
    Sign s = a3_check(mu, k);
    return json{{"sign", dump(s)}, {"a3_holds", !s.is_minus()}};
}

json cmd_predict(const json& req, Context& ctx) {
    auto spec = lift_spec_of(req, false);
    std::optional<bool> flag;
    if (auto* f = opt_field(req, "central_value_nonzero")) flag = as_bool(*f, at("central_value_nonzero"));
    auto p = predict_nonvanishing(spec, flag);
    ctx.status = p.theorem ? "THEOREM" : "CONJECTURAL";
    if (spec.n == spec.r && flag) ctx.warnings.push_back("central L-value flag taken as supplied");
    return json{{"verdict", nonvanishing_name(p.verdict)}};
}

json cmd_lk(const json& req, Context&) {
    auto pi = parse_mp_rep(require(req, root, "pi"), at("pi"));
    auto res = lk_irreducible(char_of(req, "mu"), int_of(req, "k"), int_of(req, "l"), pi);
    return json{{"verdict", res.verdict == LkVerdict::Irreducible ? "irreducible" : "criterion_not_applicable"},
                {"reason", res.reason}};
}

json cmd_gpr(const json& req, Context&) {
    auto res = gpr_regular(parse_gpr_input(require(req, root, "input"), at("input")));
    return json{{"verdict", res.verdict == GprVerdict::Irreducible ? "irreducible" : "inconclusive"},
                {"reason", res.reason},
                {"factors", strings(res.factors)}};
}

// ---- table ----------------------------------------------------------------

const std::vector<Field> lift_fields = {
    {"n", "integer", true, "rank of the lifted group"},
    {"r", "integer", true, "rank of pi, 0 <= r <= n"},
    {"mu", "character", true, "unitary character mu"},
    {"xi", "square_class", false, "square class (needs place)"},
    {"place", "place", false, "local field"},
};

std::vector<Field> with(std::vector<Field> base, std::initializer_list<Field> more, bool mu_required = true) {
    for (auto& f : base)
        if (std::string(f.name) == "mu") f.required = mu_required;
    base.insert(base.end(), more.begin(), more.end());
    return base;
}

const std::vector<Command>& commands() {
    static const std::vector<Command> table = {
        {"hilbert", "quadratic Hilbert symbol <a,b>", "local Hilbert symbol, odd residue characteristic or R",
         {{"place", "place", true, "local field"}, {"a", "square_class", true, ""}, {"b", "square_class", true, ""}},
         cmd_hilbert},
        {"weil_gamma", "Weil constant ratio gamma_psi(a) = alpha(1)/alpha(a)", "Weil index via quadratic Gauss sums",
         {{"place", "place", true, "local field"},
          {"a", "square_class", true, ""},
          {"xi", "square_class", false, "scaling of psi, default 1"}},
         cmd_weil_gamma},
        {"linked", "linkage of two segments", "Zelevinsky segment linkage",
         {{"a", "segment", true, ""}, {"b", "segment", true, ""}}, cmd_linked},
        {"zelevinsky", "irreducibility of <a> x <b>", "Zelevinsky irreducibility criterion",
         {{"a", "segment", true, ""}, {"b", "segment", true, ""}}, cmd_zelevinsky},
        {"jacquet_gl", "Jacquet module of a segment representation along (k1,k2)", "Zelevinsky Jacquet module formula",
         {{"rep", "segment", true, ""}, {"k1", "integer", true, ""}, {"k2", "integer", true, ""}}, cmd_jacquet_gl},
        {"tadic", "Jacquet module of mu|det_k|^alpha x pi", "Tadic structure formula",
         {{"mu", "character", true, ""},
          {"k", "integer", true, ""},
          {"alpha", "rational", true, ""},
          {"pi", "pi_jacquet", true, "Jacquet tables of pi"},
          {"t", "integer", true, "parabolic index"},
          {"delta", "integer", false, "0 for Sp, 1 for Mp; adds the exponent parity check"}},
         cmd_tadic},
        {"casselman", "rank-one exponent parity check of a Jacquet table", "Casselman criterion exponent parity",
         {{"table", "jacquet_table", true, ""}, {"delta", "integer", true, "0 for Sp, 1 for Mp"}}, cmd_casselman},
        {"lift_local", "local lift: Langlands data and parameter", "local lift of a tempered representation",
         with(lift_fields, {{"phi_pi", "parameter", true, "parameter of pi"}}), cmd_lift_local},
        {"lift_satake", "Satake parameter of the lift at an unramified place", "unramified lift formula",
         with(lift_fields,
              {{"alpha", "unit", false, "mu'(uniformizer); derived from mu and place when absent"},
               {"satake", "satake", true, "Satake parameter of pi"},
               {"q", "rational", true, "residue field size"}},
              false),
         cmd_lift_satake},
        {"lift_global", "global A-parameter of the lift", "global lift of A-parameters",
         with(lift_fields, {{"psi", "a_parameter", true, ""}, {"tau", "global_cusp", true, "cusp form on GL_2"}}, false),
         cmd_lift_global},
        {"satake_global", "Satake parameter of a global A-parameter", "Satake parameter of an A-packet",
         {{"a_parameter", "a_parameter", true, ""},
          {"local", "object", true, "block or cusp name -> satake"},
          {"place", "place", false, "resolves quadratic twists"}},
         cmd_satake_global},
        {"fj_rewrite", "Fourier-Jacobi module of a degenerate principal series", "Fourier-Jacobi module computation",
         {{"n", "integer", true, ""},
          {"mu", "character", true, ""},
          {"xi", "twist", false, "quadratic twist, default trivial"},
          {"place", "place", false, ""}},
         cmd_fj_rewrite},
        {"duality", "co-lift of the lift recovers phi_pi", "duality of the local lift",
         with(lift_fields, {{"phi_pi", "parameter", true, ""}}), cmd_duality},
        {"injectivity", "lift injectivity on two parameters", "injectivity of the local lift",
         with(lift_fields, {{"phi1", "parameter", true, ""}, {"phi2", "parameter", true, ""}}), cmd_injectivity},
        {"arch_param", "parameter of holomorphic discrete series of weight l", "archimedean packet of holomorphic discrete series",
         {{"l", "integer", true, "weight, l > 2n"}, {"n", "integer", true, ""}}, cmd_arch_param},
        {"validate", "validate an L-parameter or a global A-parameter", "parameter validity conditions",
         {{"parameter", "parameter", false, ""}, {"a_parameter", "a_parameter", false, ""}}, cmd_validate},
        {"arthur", "multiplicity formula for a tempered A-parameter", "multiplicity formula for Sp and Mp",
         {{"psi", "a_parameter", true, ""},
          {"places", "array of place_data", true, ""},
          {"root_numbers", "object", false, "block label -> sign"},
          {"formal_root_numbers", "array of string", false, "labels whose root number is assumed"}},
         cmd_arthur},
        {"ggp_local", "local GGP distinction criterion", "local Gan-Gross-Prasad conjecture (proved)",
         {{"place", "place", true, ""},
          {"phi1", "parameter", true, ""},
          {"eta1", "eta", false, ""},
          {"phi2", "parameter", true, ""},
          {"eta2", "eta", false, ""},
          {"xi", "square_class", false, "default 1"},
          {"oracle", "oracle", false, "root-number oracle, default formal"},
          {"corank", "integer", true, "0 or 1"}},
         cmd_ggp_local},
        {"ggp_nongeneric", "multiplicity for the induced non-generic pair", "non-generic GGP reduction",
         with(lift_fields,
              {{"phi1", "parameter", true, ""},
               {"eta1", "eta", false, ""},
               {"phi2", "parameter", true, ""},
               {"eta2", "eta", false, ""},
               {"oracle", "oracle", false, ""}}),
         cmd_ggp_nongeneric},
        {"lemA", "sign conditions for the partner A-parameter", "multiplicity formula sign bookkeeping",
         {{"psi", "a_parameter", true, "A-parameter for Mp_r"},
          {"tau", "global_cusp", true, ""},
          {"places", "array of partner_place", true, ""},
          {"root_numbers", "object", false, "block label -> sign"}},
         cmd_lemA},
        {"a3", "product of mu_v(-1) and (-1)^k_v", "sign product",
         {{"mu_minus1", "array of sign", true, "finite places"}, {"weights", "array of integer", true, "real places"}},
         cmd_a3},
        {"predict", "nonvanishing of the lift", "nonvanishing of the global lift",
         with(lift_fields, {{"central_value_nonzero", "boolean", false, "L(1/2) nonvanishing when n = r"}}, false),
         cmd_predict},
        {"lk_irreducible", "sufficient irreducibility criterion for mu^-1|det_k|^{l/2} x pi", "Jacquet module irreducibility criterion",
         {{"mu", "character", true, ""}, {"k", "integer", true, ""}, {"l", "integer", true, ""}, {"pi", "mp_rep", true, ""}},
         cmd_lk},
        {"gpr_regular", "standard module irreducibility from L-factor regularity", "standard module irreducibility via L-factors",
         {{"input", "gpr_input", true, ""}}, cmd_gpr},
    };
    return table;
}

const Command* find_command(const std::string& name) {
    for (const auto& c : commands())
        if (c.name == name) return &c;
    return nullptr;
}

void check_request_fields(const json& req, const Command& cmd) {
    for (const auto& [k, _] : req.items()) {
        if (k == "command" || k == "id") continue;
        bool ok = std::any_of(cmd.fields.begin(), cmd.fields.end(), [&](const Field& f) { return k == f.name; });
        if (!ok) schema_fail(root + "." + k, "unknown field for command '" + cmd.name + "'");
    }
    for (const auto& f : cmd.fields)
        if (f.required && !opt_field(req, f.name)) schema_fail(at(f.name), "missing required field");
}

json error_response(const std::string& command, ErrorCode code, const std::string& msg, const std::string& path) {
    json e{{"code", error_code_name(code)}, {"message", msg}};
    if (!path.empty()) e["path"] = path;
    return json{{"command", command.empty() ? json(nullptr) : json(command)},
                {"status", "error"},
                {"result", nullptr},
                {"error", e},
                {"provenance", nullptr},
                {"warnings", json::array()}};
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& c : commands()) v.push_back(c.name);
        return v;
    }();
    return names;
}

json run_request(const json& req, const BatchOptions& opt) {
    std::string name;
    json response;
    try {
        if (!req.is_object()) schema_fail(root, "request must be an object");
        name = as_string(require(req, root, "command"), at("command"));
        const Command* cmd = find_command(name);
        if (!cmd) schema_fail(at("command"), "unknown command '" + name + "'");
        check_request_fields(req, *cmd);
        Context ctx{opt, "THEOREM", cmd->source, {}};
        json result = cmd->run(req, ctx);
        response = json{{"command", name},
                        {"status", "ok"},
                        {"result", result},
                        {"error", nullptr},
                        {"provenance", {{"status", ctx.status}, {"source", ctx.source}}},
                        {"warnings", ctx.warnings}};
    } catch (const SchemaError& e) {
        response = error_response(name, ErrorCode::Schema, e.what(), e.path());
    } catch (const Error& e) {
        response = error_response(name, e.code(), e.what(), "");
    } catch (const std::exception& e) {
        response = error_response(name, ErrorCode::Domain, e.what(), "");
    }
    if (req.is_object())
        if (auto it = req.find("id"); it != req.end()) response["id"] = *it;
    return response;
}

json run_document(const InputDocument& doc, const BatchOptions& opt) {
    if (!doc.value) return error_response("", ErrorCode::Schema, "malformed JSON: " + doc.parse_error, root);
    return run_request(*doc.value, opt);
}

std::vector<json> run_batch(const std::vector<InputDocument>& docs, const BatchOptions& opt) {
    std::vector<json> out(docs.size());
    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(docs.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < docs.size(); ++i) out[i] = run_document(docs[i], opt);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < docs.size(); i = next++) out[i] = run_document(docs[i], opt);
        });
    for (auto& th : pool) th.join();
    return out;
}

std::vector<InputDocument> split_documents(std::string_view text) {
    std::vector<InputDocument> docs;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return docs;
    json whole = json::parse(text.begin(), text.end(), nullptr, false);
    if (!whole.is_discarded()) {
        if (whole.is_array())
            for (auto& e : whole) docs.push_back({std::move(e), ""});
        else
            docs.push_back({std::move(whole), ""});
        return docs;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        try {
            docs.push_back({json::parse(line.begin(), line.end()), ""});
        } catch (const json::parse_error& e) {
            docs.push_back({std::nullopt, e.what()});
        }
    }
    return docs;
}

json request_schema() {
    json cmds = json::object();
    for (const auto& c : commands()) {
        json fields = json::object();
        for (const auto& f : c.fields) {
            json fj{{"type", f.type}, {"required", f.required}};
            if (*f.doc) fj["doc"] = f.doc;
            fields[f.name] = fj;
        }
        cmds[c.name] = json{{"summary", c.summary}, {"fields", fields}};
    }
    json types{
        {"rational", "\"a/b\" string or integer"},
        {"sign", "\"+\" or \"-\""},
        {"place", "\"R\", \"Q5\", \"Q5^f2\", an integer p or {\"p\", \"f\"}; odd residue characteristic only"},
        {"square_class", "\"1\", \"u\", \"w\", \"uw\" (also \"-1\"), or \"+\"/\"-\" at R"},
        {"unit", "monomial in named units and eighth roots of unity, e.g. \"-a*b^-1\", \"i*a\""},
        {"twist", "generator string or list of generators of a quadratic twist"},
        {"character", "label such as \"m\", \"m^-1*chi[-1]\" or {name, inverse, quadratic, twist, at_minus1, at_uniformizer}"},
        {"cusp", "character, or {name, dim, selfdual, inverted, det}"},
        {"segment", "{rho: cusp, x: rational, y: rational}"},
        {"summand", "{base, d = 1, s = \"0\"}; base is \"1\", \"sgn\", \"rho[k]\", a character, or {\"cusp\": cusp}"},
        {"parameter", "{target: {type: odd_orthogonal|symplectic, n}, summands: [summand]}"},
        {"eta", "object: basis label -> sign"},
        {"global_cusp", "{name, m, sym2_pole, wedge2_pole, central: twist, twist}"},
        {"a_parameter", "{group: Sp|Mp, n, blocks: [{tau: global_cusp, d}]}"},
        {"satake", "list of {unit, qexp} or \"u*q^e\" strings"},
        {"jacquet_table", "list of {term: {gl, induced, base}, mult}"},
        {"pi_jacquet", "{label, rank, tables: {\"t\": jacquet_table}}"},
        {"mp_rep", "{rank, genuine, langlands: [{label, phi, s}], base: parameter, eta}"},
        {"gpr_input", "{genuine, pieces: [{units: [unit] | null, s}], base_units: [unit] | null}"},
        {"oracle", "{backend: formal|table, table: {key: sign}, default: sign}"},
        {"place_data", "{label, eta, localization: {block label: [basis labels]}}"},
        {"partner_place", "place_data plus archimedean, weight, parameter, mu_minus1, chi_minus1, place"},
    };
    return json{{"commands", cmds},
                {"types", types},
                {"common_fields", {{"command", "command name"}, {"id", "any value, echoed in the response"}}}};
}

std::string serialize(const json& response) { return response.dump(-1, ' ', false, json::error_handler_t::strict); }

} // namespace liftcalc::io
