#pragma once

#include <initializer_list>
#include <string>

#include "json.hpp"
#include "liftcalc/error.hpp"
#include "liftcalc/lift.hpp"
#include "liftcalc/mp_structure.hpp"
#include "liftcalc/signs.hpp"

namespace liftcalc::io {

using json = nlohmann::json;

/// Malformed request data; `path` is a JSON path such as "$.phi.summands[1].d".
class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& msg)
        : Error(ErrorCode::Schema, path + ": " + msg), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg);

/// Rejects keys outside `allowed`.
void check_fields(const json& j, const std::string& path, std::initializer_list<const char*> allowed);
const json& require(const json& j, const std::string& path, const char* key);
std::string sub(const std::string& path, const char* key);
std::string idx(const std::string& path, std::size_t i);

int as_int(const json& j, const std::string& path);
bool as_bool(const json& j, const std::string& path);
std::string as_string(const json& j, const std::string& path);

Rational parse_rational(const json& j, const std::string& path);
json dump(const Rational& r);

Sign parse_sign(const json& j, const std::string& path);
json dump(Sign s);

LocalPlace parse_place(const json& j, const std::string& path);
json dump(const LocalPlace& p);

SquareClass parse_square_class(const json& j, const std::string& path, const LocalPlace& place);
json dump(const SquareClass& c);

UnitSymbol parse_unit(const json& j, const std::string& path);
json dump(const UnitSymbol& u);

QuadTwist parse_twist(const json& j, const std::string& path);
json dump(const QuadTwist& t);

Character parse_character(const json& j, const std::string& path);
json dump(const Character& c);

CuspSymbol parse_cusp(const json& j, const std::string& path);
json dump(const CuspSymbol& c);

Segment parse_segment(const json& j, const std::string& path);
json dump(const Segment& s);

WDSummand parse_summand(const json& j, const std::string& path);
json dump(const WDSummand& s);

Target parse_target(const json& j, const std::string& path);
json dump(const Target& t);

WDParameter parse_parameter(const json& j, const std::string& path);
json dump(const WDParameter& p);

EtaCharacter parse_eta(const json& j, const std::string& path);
json dump(const EtaCharacter& e);

GroupElement parse_group_element(const json& j, const std::string& path);
json dump(const GroupElement& g);

json dump(const ComponentGroup& g);
json dump(const ParameterPredicates& p);

GlobalCusp parse_global_cusp(const json& j, const std::string& path);
json dump(const GlobalCusp& c);

GlobalAParameter parse_global_A(const json& j, const std::string& path);
json dump(const GlobalAParameter& a);

SatakeEntry parse_satake_entry(const json& j, const std::string& path);
SatakeParam parse_satake(const json& j, const std::string& path);
json dump(const SatakeEntry& e);
json dump(const SatakeParam& s);

GLFactor parse_gl_factor(const json& j, const std::string& path);
json dump(const GLFactor& f);
JacquetTerm parse_jacquet_term(const json& j, const std::string& path);
json dump(const JacquetTerm& t);
JacquetTable parse_jacquet_table(const json& j, const std::string& path);
json dump(const JacquetTable& t);
PiJacquetData parse_pi_jacquet(const json& j, const std::string& path);

GLPiece parse_gl_piece(const json& j, const std::string& path);
json dump(const GLPiece& p);
MpRep parse_mp_rep(const json& j, const std::string& path);
GprInput parse_gpr_input(const json& j, const std::string& path);

EpsilonOracle parse_oracle(const json& j, const std::string& path);
json dump(const EpsilonOracle& o);

PlaceData parse_place_data(const json& j, const std::string& path);
PartnerPlace parse_partner_place(const json& j, const std::string& path);

json dump(const TraceEntry& t);

} // namespace liftcalc::io
