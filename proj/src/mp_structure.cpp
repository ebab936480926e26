#include "liftcalc/mp_structure.hpp"

#include <algorithm>

#include "liftcalc/error.hpp"

namespace liftcalc {

int GLPiece::rank() const {
    int r = 0;
    for (const auto& s : phi) r += s.dim();
    return r;
}

std::vector<std::string> MpRep::validate() const {
    std::vector<std::string> v;
    int total = base.target.n;
    for (std::size_t i = 0; i < langlands.size(); ++i) {
        const auto& p = langlands[i];
        total += p.rank();
        if (p.s <= 0) v.push_back("Langlands exponent of " + p.label + " is not positive");
        if (i > 0 && !(p.s < langlands[i - 1].s)) v.push_back("Langlands exponents are not strictly decreasing");
        for (const auto& s : p.phi)
            if (!s.s().is_zero()) v.push_back("GL piece " + p.label + " is not tempered");
    }
    if (total != rank) v.push_back("ranks add up to " + std::to_string(total) + ", expected " + std::to_string(rank));
    if (base.target.genuine() != genuine) v.push_back("genuine flag disagrees with the base parameter type");
    for (const auto& s : validate_parameter(base)) v.push_back("base: " + s);
    if (!predicates(base).tempered) v.push_back("base parameter is not tempered");
    return v;
}

WDParameter MpRep::parameter() const {
    WDParameter p = base;
    p.target.n = rank;
    for (const auto& piece : langlands)
        for (const auto& s : piece.phi) {
            p.summands.insert(s.with_s(piece.s));
            p.summands.insert(s.dual().with_s(-piece.s));
        }
    return p;
}

int gl_rank(const GLFactor& f) {
    if (auto* g = std::get_if<FormalGL>(&f)) return g->rank;
    return std::get<SegmentRep>(f).rank();
}

std::string gl_label(const GLFactor& f) {
    if (auto* g = std::get_if<FormalGL>(&f)) return g->name;
    return std::get<SegmentRep>(f).label();
}

JacquetTerm& JacquetTerm::canonicalize() {
    std::sort(gl.begin(), gl.end());
    std::sort(induced.begin(), induced.end());
    return *this;
}

int JacquetTerm::gl_total_rank() const {
    int r = 0;
    for (const auto& f : gl) r += gl_rank(f);
    return r;
}

std::string JacquetTerm::label() const {
    std::string s;
    for (const auto& f : gl) s += (s.empty() ? "" : " x ") + gl_label(f);
    if (s.empty()) s = "1";
    s += " (x) ";
    std::string ind;
    for (const auto& f : induced) ind += gl_label(f) + " x ";
    return s + ind + base;
}

std::optional<SegmentRep> det_character(const Character& mu, int size, const Rational& e) {
    if (size < 0) fail(ErrorCode::Domain, "negative size in det_character");
    if (size == 0) return std::nullopt;
    Rational half = Rational(size - 1, 2);
    return SegmentRep{Segment(CuspSymbol::of_character(mu), e - half, e + half)};
}

JacquetTable tadic_jacquet(const Character& mu, int k, const Rational& alpha, const PiJacquetData& pi, int t) {
    if (k < 1) fail(ErrorCode::Domain, "tadic_jacquet requires k >= 1");
    if (t < 1 || t > pi.rank + k)
        fail(ErrorCode::Domain, "parabolic index t = " + std::to_string(t) + " outside 1.." + std::to_string(pi.rank + k));
    JacquetTable out;
    const Character mu_inv = mu.inverse();
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= a; ++b) {
            if (a - b < k - t) continue;
            const int tp = a - b - k + t;
            if (tp > pi.rank) continue;
            JacquetTable unit_table;
            const JacquetTable* table = nullptr;
            if (tp == 0) {
                unit_table.insert(JacquetTerm{{}, {}, pi.label});
                table = &unit_table;
            } else {
                auto it = pi.tables.find(tp);
                if (it == pi.tables.end())
                    fail(ErrorCode::IncompleteInput, "missing Jacquet table R_P" + std::to_string(tp) + "(" + pi.label + ")");
                table = &it->second;
            }
            auto left = det_character(mu_inv, k - a, -alpha - Rational(a, 2));
            auto mid = det_character(mu, b, alpha - Rational(k - b, 2));
            auto ind = det_character(mu, a - b, alpha - Rational(k - a - b, 2));
            for (const auto& [term, mult] : *table) {
                JacquetTerm nt;
                if (left) nt.gl.push_back(*left);
                if (mid) nt.gl.push_back(*mid);
                nt.gl.insert(nt.gl.end(), term.gl.begin(), term.gl.end());
                if (ind) nt.induced.push_back(*ind);
                nt.induced.insert(nt.induced.end(), term.induced.begin(), term.induced.end());
                nt.base = term.base;
                out.insert(nt.canonicalize(), mult);
            }
        }
    return out;
}

std::vector<std::string> casselman_parity_check(const JacquetTable& table, int delta) {
    std::vector<std::string> v;
    for (const auto& [term, _] : table) {
        if (term.gl_total_rank() != 1 || term.gl.size() != 1) continue;
        auto* seg = std::get_if<SegmentRep>(&term.gl.front());
        if (!seg || seg->seg.rho.dim != 1) continue;
        Rational two_a = seg->seg.x * 2;
        if (!two_a.is_integer()) {
            v.push_back("exponent " + seg->seg.x.str() + " in " + term.label() + " is not half-integral");
            continue;
        }
        long long m = two_a.to_integer();
        if (((m % 2) + 2) % 2 != delta)
            v.push_back("exponent " + seg->seg.x.str() + " in " + term.label() + " has parity " +
                        std::to_string(((m % 2) + 2) % 2) + ", expected " + std::to_string(delta));
    }
    return v;
}

LkResult lk_irreducible(const Character&, int k, int l, const MpRep& pi) {
    if (k < 1) fail(ErrorCode::Domain, "lk_irreducible requires k >= 1");
    const int kd = k - pi.delta();
    if (!predicates(pi.parameter()).good_parity)
        return {LkVerdict::CriterionNotApplicable, "parameter of pi is not of good parity"};
    if (l < kd) return {LkVerdict::CriterionNotApplicable, "l < k - delta"};
    if ((l - kd) % 2 != 0) return {LkVerdict::CriterionNotApplicable, "l and k - delta have different parity"};
    return {LkVerdict::Irreducible, "good parity, l >= k - delta, l = k - delta mod 2"};
}

namespace {

struct LFactor {
    std::string name;
    UnitSymbol c;  // L(s - shift, c) = (1 - c q^{-(s - shift)})^{-1}
    Rational shift;
};

} // namespace

GprResult gpr_regular(const GprInput& in) {
    std::vector<LFactor> factors;
    bool missing = false;
    for (const auto& p : in.pieces)
        if (!p.units) missing = true;
    if (!in.base_units) missing = true;
    if (missing && !in.pieces.empty())
        return {GprVerdict::Inconclusive, "L-data unavailable (ramified or formal constituents)", {}};

    const char* square = in.genuine ? "Sym^2" : "wedge^2";
    for (std::size_t i = 0; i < in.pieces.size(); ++i) {
        const auto& ui = *in.pieces[i].units;
        const auto& si = in.pieces[i].s;
        for (std::size_t a = 0; a < ui.size(); ++a)
            for (std::size_t b = a; b < ui.size(); ++b) {
                if (a == b && !in.genuine) continue;
                factors.push_back({"L(s-2s" + std::to_string(i + 1) + ", phi" + std::to_string(i + 1) + "^v, " + square + ")",
                                   ui[a].inverse() * ui[b].inverse(), si * 2});
            }
        for (const auto& c0 : *in.base_units)
            for (const auto& c : ui)
                factors.push_back({"L(s-s" + std::to_string(i + 1) + ", phi0 x phi" + std::to_string(i + 1) + "^v)",
                                   c0 * c.inverse(), si});
        for (std::size_t j = i + 1; j < in.pieces.size(); ++j) {
            const auto& uj = *in.pieces[j].units;
            const auto& sj = in.pieces[j].s;
            for (const auto& x : ui)
                for (const auto& y : uj) {
                    auto tag = std::to_string(i + 1) + "," + std::to_string(j + 1);
                    factors.push_back({"L(s-s" + std::to_string(i + 1) + "+s" + std::to_string(j + 1) + ", phi" +
                                           std::to_string(i + 1) + "^v x phi" + std::to_string(j + 1) + ")",
                                       x.inverse() * y, si - sj});
                    factors.push_back({"L(s-s" + std::to_string(i + 1) + "-s" + std::to_string(j + 1) + ", phi" +
                                           std::to_string(i + 1) + "^v x phi" + std::to_string(j + 1) + "^v)",
                                       x.inverse() * y.inverse(), si + sj});
                }
        }
    }

    GprResult r{GprVerdict::Irreducible, "every L-factor is regular at s = 1", {}};
    bool possible = false;
    for (const auto& f : factors) {
        if (f.shift != 1) continue;
        if (f.c.is_identity()) {
            r.factors.push_back(f.name + " [pole: c = 1]");
        } else if (!f.c.is_constant()) {
            r.factors.push_back(f.name + " [possible pole: c = " + f.c.str() + "]");
            possible = true;
        }
    }
    if (!r.factors.empty()) {
        r.verdict = GprVerdict::Inconclusive;
        r.reason = possible ? "an L-factor may have a pole at s = 1" : "an L-factor has a pole at s = 1";
    }
    return r;
}

} // namespace liftcalc
