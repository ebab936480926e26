#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liftcalc/parameters.hpp"
#include "liftcalc/segments.hpp"
#include "liftcalc/unit_symbol.hpp"

namespace liftcalc {

/// tau|.|^s with tau a tempered representation of GL_m given by its parameter.
struct GLPiece {
    std::string label;
    std::vector<WDSummand> phi; // summands with s = 0
    Rational s;
    int rank() const;
    friend bool operator==(const GLPiece&, const GLPiece&) = default;
};

/// Standard-module (Langlands) data for an irreducible representation of Mp_r or Sp_r.
struct MpRep {
    int rank = 0;
    bool genuine = false;
    std::vector<GLPiece> langlands; // exponents strictly decreasing and positive
    WDParameter base;               // parameter of the tempered piece
    EtaCharacter eta;

    std::vector<std::string> validate() const;
    WDParameter parameter() const;
    int delta() const { return genuine ? 1 : 0; }
};

/// GL factor in a Jacquet term: either an explicit segment representation or
/// an opaque named representation of the given rank.
struct FormalGL {
    std::string name;
    int rank = 1;
    friend auto operator<=>(const FormalGL&, const FormalGL&) = default;
};
using GLFactor = std::variant<FormalGL, SegmentRep>;

int gl_rank(const GLFactor& f);
std::string gl_label(const GLFactor& f);

/// One term  (gl_1 x ... x gl_a) (x) (ind_1 x ... x ind_b |x| base).
struct JacquetTerm {
    std::vector<GLFactor> gl;
    std::vector<GLFactor> induced;
    std::string base;

    JacquetTerm& canonicalize();
    int gl_total_rank() const;
    std::string label() const;
    friend bool operator==(const JacquetTerm&, const JacquetTerm&) = default;
    friend auto operator<=>(const JacquetTerm&, const JacquetTerm&) = default;
};

using JacquetTable = Multiset<JacquetTerm>;

/// Jacquet data of pi: tables[t] is the semisimplified R_{P_t}(pi), 1 <= t <= rank.
struct PiJacquetData {
    std::string label = "pi";
    int rank = 0;
    std::map<int, JacquetTable> tables;
};

/// mu |det_size|^e as the segment <mu; e-(size-1)/2, ..., e+(size-1)/2>; nullopt when size = 0.
std::optional<SegmentRep> det_character(const Character& mu, int size, const Rational& e);

/// s.s. R_{P_t}(mu |det_k|^alpha |x| pi).
JacquetTable tadic_jacquet(const Character& mu, int k, const Rational& alpha, const PiJacquetData& pi, int t);

/// Rank-one GL exponents violating 2a in Z and 2a = delta mod 2.
std::vector<std::string> casselman_parity_check(const JacquetTable& table, int delta);

enum class LkVerdict { Irreducible, CriterionNotApplicable };
struct LkResult {
    LkVerdict verdict;
    std::string reason;
};

/// Sufficient criterion for irreducibility of mu^-1 |det_k|^{l/2} |x| pi.
LkResult lk_irreducible(const Character& mu, int k, int l, const MpRep& pi);

struct GprPiece {
    std::optional<std::vector<UnitSymbol>> units; // Satake data of the tempered GL piece
    Rational s;
};

struct GprInput {
    bool genuine = false;
    std::vector<GprPiece> pieces;
    std::optional<std::vector<UnitSymbol>> base_units;
};

enum class GprVerdict { Irreducible, Inconclusive };
struct GprResult {
    GprVerdict verdict;
    std::string reason;
    std::vector<std::string> factors; // L-factors with a (possible) pole at s = 1
};

/// Standard module is irreducible when every listed L-factor is regular at s = 1.
GprResult gpr_regular(const GprInput& in);

} // namespace liftcalc
