#pragma once

/// Cohomology of a finite cyclic group acting on a finite abelian p-module,
/// through the norm/difference presentation: H⁰ = fixed points,
/// H¹ = ker(Norm)/im(g-1), H² = fixed/im(Norm) with Norm = Σ_{j<N} g^j.
/// The generic-cocycle computation lives in brute_cohomology and serves as
/// the independent oracle.

#include <vector>

#include "ptower/brute_cohomology.hpp"
#include "ptower/module.hpp"

namespace ptower::cohom {

struct CyclicGroupAction {
    u64 group_order;
    alg::CyclicActionModule module; // acting_order = group_order

    CyclicGroupAction(u64 N, alg::CyclicActionModule m);
};

struct CohomologyResult {
    int degree = 0;
    u64 order = 1;
    std::vector<u64> invariant_factors; // descending p-powers
};

CohomologyResult h_i(const CyclicGroupAction& act, int degree);

struct HerbrandReport {
    u64 h1_order = 1;
    u64 h2_order = 1;
    bool equal = false;
};

HerbrandReport herbrand_check(const CyclicGroupAction& act);

/// |H^i(𝒢(M/L), μ_{p^k})| = p^(min(k,c) - max(k+c-n, 0)) for any i ≥ 1.
u64 mu_size_formula(u64 p, u64 n, u64 k, u64 c);

/// The same order computed from the actual Galois action: the cyclic group of
/// order p^(n-c) acts on μ_{p^k} ≅ Z/p^k by raising to the q^s-th power.
/// Returns the order of H^degree; degrees 1 and 2 agree by Herbrand.
u64 mu_size_direct(u64 q, u64 p, u64 n, u64 k, int degree);

/// Twist compatibility for a normal subgroup K inside an ambient finite
/// cyclic group G acting on A, with a character χ of G trivial on K:
/// H^i(K, A_χ) ≅ H^i(K, A)_χ as G/K-modules, checked at the cocycle level
/// through the identity map j* for i = 1, 2.
struct TwistCompatReport {
    u64 h1_order = 1;
    u64 h2_order = 1;
    std::vector<u64> h1_factors;
    std::vector<u64> h2_factors;
    bool cocycle_sets_match = false; // j* identifies Z^i and B^i on both sides
    bool g_action_matches = false;   // σ·(j*f) twisted ~ χ(σ)(σ·f) on every class
    bool eigendata_match = false;    // fixed-class counts agree under every σ power
    bool ok() const { return cocycle_sets_match && g_action_matches && eigendata_match; }
};

TwistCompatReport twist_compat(const CyclicGroupAction& ambient, u64 subgroup_order,
                               const alg::UnitCharacter& chi);

} // namespace ptower::cohom
