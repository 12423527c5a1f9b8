#pragma once

/// Rank-r lexicographic value groups: subgroups of Q^r containing Z^r, given
/// by a Z[1/p]-scaled coordinate prefix plus finitely many adjoined rational
/// generators (denominators p-powers). Canonicalized through the Hermite
/// normal form of the scaled integer lattice, so equality and the index over
/// Z^r are exact.

#include <string>
#include <vector>

#include "ptower/rational.hpp"
#include "ptower/zmodn.hpp"

namespace ptower::valn {

class LexValueGroup {
public:
    LexValueGroup(u64 rank, u64 p, u64 p_divisible_prefix = 0,
                  std::vector<std::vector<Rational>> generators = {});

    static LexValueGroup standard(u64 rank, u64 p) { return LexValueGroup(rank, p); }

    u64 rank() const { return rank_; }
    u64 p() const { return p_; }
    u64 p_divisible_prefix() const { return prefix_; }
    const std::vector<std::vector<Rational>>& generators() const { return gens_; }

    LexValueGroup adjoin(const std::vector<Rational>& gen) const;

    /// [G : Z^r] restricted to the finite (non-prefix) part.
    u64 finite_index_over_standard() const;

    bool contains(const std::vector<Rational>& v) const;

    bool operator==(const LexValueGroup& o) const;
    bool operator!=(const LexValueGroup& o) const { return !(*this == o); }

    std::string str() const;

private:
    u64 rank_;
    u64 p_;
    u64 prefix_;
    std::vector<std::vector<Rational>> gens_; // canonicalized
    // Canonical data for the non-prefix block (width rank - prefix):
    u64 denom_ = 1;                        // p-power D
    std::vector<std::vector<i64>> hnf_;    // rows of the HNF of D·G

    void canonicalize();
};

/// Image of an integer vector in Γ/pΓ for Γ = Z^r (the standard lattice).
bool in_p_gamma(const std::vector<i64>& v, u64 p);

/// Z/p-independence of two vectors in Z^r / pZ^r.
bool independent_mod_p(const std::vector<i64>& a, const std::vector<i64>& b, u64 p);

} // namespace ptower::valn
