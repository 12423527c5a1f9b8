#pragma once

/// Truncated iterated Laurent series over an explicit finite field:
/// k((x_1))...((x_r)) with exponent vectors ordered right-to-left
/// lexicographically (the last variable dominates). Elements carry a
/// truncation bound; operations propagate it and valuation fails loudly when
/// every known term vanishes.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptower/finite_field.hpp"

namespace ptower::valn {

using Exp = std::vector<i64>;

/// Right-to-left lexicographic order: the highest index decides first.
struct RightLexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

class LaurentField {
public:
    LaurentField(symbol::Fq coeffs, u64 rank) : k_(std::move(coeffs)), rank_(rank) {
        if (rank_ == 0) throw domain_error("LaurentField: rank must be positive");
    }

    const symbol::Fq& coeff_field() const { return k_; }
    u64 rank() const { return rank_; }

    struct Elem {
        std::map<Exp, symbol::Fq::Elem, RightLexLess> terms;
        std::optional<Exp> unknown_from; // terms at or beyond this bound are unknown

        bool exact() const { return !unknown_from.has_value(); }
    };

    Elem zero() const { return Elem{}; }
    Elem monomial(const symbol::Fq::Elem& c, Exp e) const;
    Elem constant(const symbol::Fq::Elem& c) const { return monomial(c, Exp(rank_, 0)); }
    /// Truncate to the given bound (terms at or beyond it are dropped and
    /// marked unknown).
    Elem truncated(Elem a, Exp bound) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;

    bool known_zero(const Elem& a) const { return a.terms.empty() && a.exact(); }

    struct Valuation {
        Exp exponent;
        symbol::Fq::Elem leading;
    };
    /// Lex-minimal exponent with nonzero coefficient; throws
    /// precision_exhausted_error when nothing nonzero is known.
    Valuation valuate(const Elem& a) const;

    /// Parses sums of monomials like "x", "y^-1", "2*x^2*y^-1 + x", with
    /// variables x1..xr (aliases x, y, z for the first three).
    Elem parse(const std::string& text) const;

    std::string str(const Elem& a) const;

private:
    symbol::Fq k_;
    u64 rank_;

    void clean(Elem& a) const;
};

} // namespace ptower::valn
