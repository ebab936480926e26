#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liftcalc/parameters.hpp"

namespace liftcalc {

/// An irreducible-looking tensor product F_1 (x) ... (x) F_k (x) chi.
struct TensorTerm {
    std::vector<WDSummand> factors; // sorted
    QuadTwist twist;

    static TensorTerm make(std::vector<WDSummand> factors, QuadTwist twist = {});
    TensorTerm dual() const;
    bool self_dual() const { return dual() == *this; }
    int dim() const;
    std::string key() const;

    friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
    friend auto operator<=>(const TensorTerm&, const TensorTerm&) = default;
};

/// Expansion of (sum a_i) (x) (sum b_j) (x) chi; an empty side gives no terms.
std::vector<TensorTerm> tensor_terms(const std::vector<WDSummand>& a, const std::vector<WDSummand>& b,
                                     const QuadTwist& chi);
/// Single-factor terms of a sum.
std::vector<TensorTerm> summand_terms(const std::vector<WDSummand>& a);

std::vector<WDSummand> expand(const Multiset<WDSummand>& m);

/// det(F)(-1) and det(F)(x) on a square class; nullopt when not determined by the data.
std::optional<Sign> det_at_minus_one(const WDSummand& s, const LocalPlace& place);
std::optional<Sign> det_at_class(const WDSummand& s, const SquareClass& x);
std::optional<Sign> det_at_minus_one(const TensorTerm& t, const LocalPlace& place);
std::optional<Sign> det_at_class(const std::vector<WDSummand>& sum, const SquareClass& x);

struct EpsilonValue {
    std::optional<Sign> value;             // nullopt iff some symbol is unresolved
    std::vector<std::string> unresolved;
    std::vector<std::string> trace;
};

/*
 * Root numbers of symplectic tensor products.  Sums are multiplicative; a term
 * that is not self-dual is paired with its dual and contributes det(term)(-1)
 * without consulting the table.  Self-dual terms are looked up by key.
 */
class EpsilonOracle {
public:
    enum class Backend { Formal, UserTable };

    static EpsilonOracle formal(std::map<std::string, Sign> symbols = {}, std::optional<Sign> default_sign = std::nullopt);
    static EpsilonOracle user_table(std::map<std::string, Sign> table);

    Backend backend() const { return backend_; }
    const std::map<std::string, Sign>& table() const { return table_; }
    const std::optional<Sign>& default_sign() const { return default_; }

    EpsilonValue epsilon(const std::vector<TensorTerm>& terms, const LocalPlace& place) const;

private:
    Backend backend_ = Backend::Formal;
    std::map<std::string, Sign> table_;
    std::optional<Sign> default_;
};

} // namespace liftcalc
