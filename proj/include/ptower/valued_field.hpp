#pragma once

/// Valued-field descriptors: rank-r lexicographic valuations described by
/// their residue data and the chain of μ_p flags along the coarsenings
/// (flags[j] says whether μ_p lies in the quotient field of V/P_j, where P_j
/// cuts the j dominant coordinates). Symbolic residue labels ("Q", "Q(mu_p)")
/// are opaque; only the flags and degrees enter the computations.

#include <optional>
#include <string>
#include <vector>

#include "ptower/value_group.hpp"

namespace ptower::valn {

struct ValuedFieldDescriptor {
    u64 rank = 1;
    u64 p = 3;
    std::string residue_label = "Q";
    std::optional<u64> residue_q;            // order of a finite residue field
    std::vector<bool> mu_p_flags;            // size rank+1, monotone nondecreasing
    std::optional<u64> degree_LF;            // [L:F] if the residue is symbolic
    std::optional<u64> residue_mu_degree;    // [V̄(μ_p):V̄] if symbolic

    void validate() const;
    bool residue_has_mu_p() const { return mu_p_flags.at(rank); }

    /// Standard descriptor of k((x_1))...((x_r)) for a finite k of order q.
    static ValuedFieldDescriptor laurent(u64 q, u64 p, u64 rank);
};

struct ExtendToLResult {
    u64 ell = 1;                  // number of extensions of V to L
    u64 residue_ext_degree = 1;   // [V̄(μ_p) : V̄]
    u64 degree_LF = 1;            // [L:F]
    LexValueGroup value_group;    // unchanged
    std::string residue_label;
};

/// Prop-4.3-style data: ℓ·[V̄(μ_p):V̄] = [L:F], residue grows to V̄(μ_p),
/// value group unchanged.
ExtendToLResult extend_to_L(const ValuedFieldDescriptor& desc, u64 p);

struct FpPrediction {
    std::string residue_label;  // V̄(p)
    LexValueGroup value_group;  // Z[1/p]-scaled on the Γ_Ṽ block, unchanged above
};

FpPrediction predict_Fp_extension(const ValuedFieldDescriptor& desc, u64 p);

enum class KummerCase { I, II, III };

struct StageReport {
    u64 stage = 0;
    u64 residue_q = 0;
    u64 ell = 1;              // extensions to the μ_p level at this stage
    u64 extension_count = 1;  // valuations above the original V so far
    u64 value_index = 1;      // [Γ_stage : Γ_V]
};

/// Walks a tower of degree-p Galois steps (classified Kummer cases) and
/// checks that ℓ is the same at every stage.
std::vector<StageReport> count_extensions_along(const ValuedFieldDescriptor& desc,
                                                const std::vector<KummerCase>& steps);

} // namespace ptower::valn
