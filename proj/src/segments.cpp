#include "liftcalc/segments.hpp"

#include <algorithm>

#include "liftcalc/error.hpp"

namespace liftcalc {

const char* self_duality_name(SelfDuality t) {
    switch (t) {
    case SelfDuality::Orthogonal: return "orthogonal";
    case SelfDuality::Symplectic: return "symplectic";
    case SelfDuality::None: return "none";
    }
    return "none";
}

SelfDuality parse_self_duality(std::string_view s) {
    if (s == "orthogonal") return SelfDuality::Orthogonal;
    if (s == "symplectic") return SelfDuality::Symplectic;
    if (s == "none") return SelfDuality::None;
    fail(ErrorCode::Domain, "unknown self-duality type '" + std::string(s) + "'");
}

CuspSymbol CuspSymbol::of_character(const Character& c) {
    CuspSymbol r;
    r.name = c.label();
    r.dim = 1;
    r.selfdual = c.is_quadratic() ? SelfDuality::Orthogonal : SelfDuality::None;
    r.character = c;
    return r;
}

CuspSymbol CuspSymbol::formal(std::string name, int dim, SelfDuality t) {
    if (dim < 1) fail(ErrorCode::Domain, "cuspidal symbol of non-positive dimension");
    CuspSymbol r;
    r.name = std::move(name);
    r.dim = dim;
    r.selfdual = t;
    return r;
}

CuspSymbol CuspSymbol::dual() const {
    if (character) {
        CuspSymbol r = of_character(character->inverse());
        r.det = det ? std::optional<Character>(det->inverse()) : std::nullopt;
        return r;
    }
    CuspSymbol r = *this;
    if (selfdual == SelfDuality::None) r.inverted = !inverted;
    if (det) r.det = det->inverse();
    return r;
}

std::string CuspSymbol::label() const { return inverted ? name + "^v" : name; }

Segment::Segment(CuspSymbol r, Rational x_, Rational y_) : rho(std::move(r)), x(std::move(x_)), y(std::move(y_)) {
    if (!same_lattice(x, y)) fail(ErrorCode::Domain, "segment endpoints " + x.str() + ", " + y.str() + " differ by a non-integer");
}

int Segment::length() const { return static_cast<int>((x - y).abs().to_integer()) + 1; }

std::string SegmentRep::label() const {
    return "<" + seg.rho.label() + ";" + seg.x.str() + ".." + seg.y.str() + ">";
}

std::vector<Rational> segment_set(const Segment& s) {
    std::vector<Rational> out;
    Rational step = s.x >= s.y ? Rational(-1) : Rational(1);
    for (Rational v = s.x;; v += step) {
        out.push_back(v);
        if (v == s.y) break;
    }
    return out;
}

namespace {

struct Interval {
    Rational lo, hi;
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool within(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }
};

Interval interval_of(const Segment& s) { return s.x <= s.y ? Interval{s.x, s.y} : Interval{s.y, s.x}; }

// Same-orientation clause on the underlying sets: neither contains the other
// and the union is again a lattice interval.
bool sets_linked(const Interval& a, const Interval& b) {
    if (a.within(b) || b.within(a)) return false;
    return a.lo <= b.hi + 1 && b.lo <= a.hi + 1;
}

} // namespace

bool linked(const Segment& a, const Segment& b) {
    if (!same_lattice(a.x, b.x)) return false;
    Interval A = interval_of(a), B = interval_of(b);
    if ((a.x - a.y) * (b.x - b.y) >= 0) return sets_linked(A, B);
    // mixed orientation: reverse the first segment, then exclude endpoints
    if (!sets_linked(A, B)) return false;
    return !B.contains(a.x) && !B.contains(a.y) && !A.contains(b.x) && !A.contains(b.y);
}

bool zelevinsky_irreducible(const SegmentRep& a, const SegmentRep& b) {
    return !(a.seg.rho == b.seg.rho && linked(a.seg, b.seg));
}

std::optional<std::pair<SegmentRep, SegmentRep>> jacquet_gl(const SegmentRep& rep, int k1, int k2) {
    const int rank = rep.rank();
    if (k1 < 0 || k2 < 0 || k1 + k2 != rank)
        fail(ErrorCode::Domain, "split (" + std::to_string(k1) + "," + std::to_string(k2) +
                                    ") does not sum to rank " + std::to_string(rank));
    const auto& s = rep.seg;
    if (s.x == s.y) fail(ErrorCode::OutOfScope, "jacquet_gl: singleton segment is outside the formula's scope");
    if (k1 == 0 || k1 == rank) fail(ErrorCode::OutOfScope, "jacquet_gl: boundary split is outside the formula's scope");
    const int d = s.rho.dim;
    if (k1 % d != 0) return std::nullopt;
    const int m = k1 / d;
    Rational eps = s.x > s.y ? Rational(1) : Rational(-1);
    SegmentRep left{Segment(s.rho, s.x, s.x - eps * (m - 1))};
    SegmentRep right{Segment(s.rho, s.x - eps * m, s.y)};
    return std::make_pair(left, right);
}

} // namespace liftcalc
