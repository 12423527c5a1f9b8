#pragma once

/// Small finite groups as explicit multiplication tables (order ≤ 32), with
/// subgroup enumeration, quotients, and homomorphism search. Built-in
/// constructors cover cyclic, dihedral, symmetric/alternating (≤ 4 letters),
/// the Heisenberg group of order 27, and direct products.

#include <cstdint>
#include <string>
#include <vector>

#include "ptower/zmodn.hpp"

namespace ptower::groups {

using Mask = unsigned __int128; // element subset of a group of order ≤ 96

class FiniteGroup {
public:
    FiniteGroup(std::string name, std::vector<std::vector<std::uint8_t>> table);

    static FiniteGroup cyclic(u64 n);
    static FiniteGroup dihedral(u64 n);    // order 2n, n ≥ 1
    static FiniteGroup symmetric(u64 k);   // k ≤ 4
    static FiniteGroup alternating(u64 k); // k ≤ 4
    static FiniteGroup heisenberg27();
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    const std::string& name() const { return name_; }
    u64 order() const { return n_; }
    u64 mul(u64 a, u64 b) const { return table_[a][b]; }
    u64 identity() const { return id_; }
    u64 inverse(u64 a) const { return inv_[a]; }
    u64 conj(u64 g, u64 x) const { return mul(mul(g, x), inverse(g)); } // g x g^-1
    u64 element_order(u64 a) const;
    bool is_abelian() const;

    // Subgroups as bitmasks.
    Mask full_mask() const { return (Mask(1) << n_) - 1; }
    Mask trivial_mask() const { return Mask(1) << id_; }
    Mask generated_by(const std::vector<u64>& gens) const;
    std::vector<Mask> all_subgroups() const;
    std::vector<u64> elements_of(Mask m) const;
    bool is_subgroup(Mask m) const;
    bool is_normal(Mask m) const;
    bool mask_abelian(Mask m) const;
    u64 mask_exponent(Mask m) const;
    static u64 mask_size(Mask m) {
        return (u64)__builtin_popcountll((std::uint64_t)m) +
               (u64)__builtin_popcountll((std::uint64_t)(m >> 64));
    }

    /// Quotient G/N for normal N: returns the quotient group and the coset
    /// index of each element of G.
    std::pair<FiniteGroup, std::vector<u64>> quotient(Mask normal_subgroup) const;

    /// Subgroup as a standalone group plus the embedding index map.
    std::pair<FiniteGroup, std::vector<u64>> subgroup_group(Mask m) const;

    /// A reasonably small generating set (greedy).
    std::vector<u64> generating_set() const;

    /// All homomorphisms G -> (Z/eZ)* as value vectors indexed by element.
    std::vector<std::vector<u64>> characters_into_units(u64 e) const;

    /// All homomorphisms G -> Z/eZ (additive) indexed by element; G need not
    /// be abelian (maps factor through the abelianization automatically).
    std::vector<std::vector<u64>> homs_to_cyclic(u64 e) const;

private:
    std::string name_;
    u64 n_;
    std::vector<std::vector<std::uint8_t>> table_;
    u64 id_ = 0;
    std::vector<u64> inv_;

    void validate() const;
};

/// The built-in catalog of groups of order ≤ max_order used by exhaustive
/// sweeps: cyclic, dihedral, symmetric/alternating, and abelian products,
/// plus Z/m × S3 combinations.
std::vector<FiniteGroup> builtin_groups(u64 max_order);

} // namespace ptower::groups
