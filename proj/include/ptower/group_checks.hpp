#pragma once

/// Exhaustive verifications of group-theoretic statements on explicit small
/// groups: the character-containment criterion for X(Q/R) inside X(Q/P)^(χ),
/// the product-decomposition equivalences for groups of order s·p^k, index-p
/// normal chains in p-groups, and the Sylow fixed-point description of
/// cohomology for groups with normal p-Sylow and prime-to-p cyclic quotient.

#include <vector>

#include "ptower/brute_cohomology.hpp"
#include "ptower/finite_group.hpp"

namespace ptower::groups {

struct Lemma19Instance {
    Mask P = 0;
    Mask Q = 0;
    Mask R = 0;
    u64 e = 1;
    std::vector<u64> chi; // multiplicative values in (Z/eZ)*, one per element
};

struct Lemma19Result {
    bool lhs = false; // X(Q/R) ⊆ X(Q/P)^(χ)
    bool rhs = false; // R normal in G and G acts on Q/R via χ⁻¹
    bool agree = false;
};

Lemma19Result verify_character_containment(const FiniteGroup& G, const Lemma19Instance& inst);

/// All valid instances over one group: normal pairs P ⊆ Q with Q/P abelian of
/// exponent dividing e, all intermediate R, all characters G -> (Z/eZ)*.
std::vector<Lemma19Instance> enumerate_containment_instances(const FiniteGroup& G, u64 e);

struct ProductSplitResult {
    bool has_normal_order_s = false;   // some normal subgroup of order s
    bool splits_as_product = false;    // G = P × H internally
    bool sylow_abelian = false;        // (v) applicable
    bool sylow_central = false;        // normal abelian Sylow lies in the center
    bool equivalent = false;           // the applicable statements agree
};

ProductSplitResult verify_product_split(const FiniteGroup& G, u64 p, u64 s);

/// Chain U = U_0 ◁ U_1 ◁ … ◁ U_t = G with every step normal of index p.
std::vector<Mask> index_p_chain(const FiniteGroup& G, Mask U, u64 p);

struct SylowDescentResult {
    u64 order_full[3] = {1, 1, 1};  // H^i(G, A), i = 1, 2
    u64 order_fixed[3] = {1, 1, 1}; // H^i(P0, A)^(G/P0)
    std::vector<u64> factors_full[3];
    std::vector<u64> factors_fixed[3];
    bool match = false;
};

/// H^i(G, A) ≅ H^i(P0, A)^(G/P0) for the normal p-Sylow P0, i = 1, 2.
SylowDescentResult verify_sylow_descent(const GModule& A, u64 p);

} // namespace ptower::groups
