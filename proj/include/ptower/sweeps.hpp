#pragma once

/// Named verification sweeps: each one exercises a formula or correspondence
/// across its full parameter range and reports pass/fail with instance
/// counts. The CLI exposes them as `sweep --suite <name>`; the acceptance
/// binary runs all of them.

#include <functional>
#include <string>
#include <vector>

#include "ptower/zmodn.hpp"

namespace ptower::sweeps {

struct SweepResult {
    std::string name;
    bool pass = false;
    u64 instances = 0;
    u64 failures = 0;
    std::string detail; // first failure, or a short summary
    double seconds = 0.0;
};

SweepResult degree_formula_sweep();        // [M:L] = p^(n-c) vs direct orders
SweepResult mu_order_sweep();              // |H^i(𝒢(M/L), μ_p^k)| formula vs norm/difference
SweepResult top_cohomology_trivial_sweep();// H¹ = H² = 1 at k = n
SweepResult descent_sweep();               // F*/F*^p^n ≅ (M*/M*^p^n)^𝒢(M/F)
SweepResult theta_reduction_sweep();       // (L*/L*^p^n)^(θ) -> (L*/L*^p)^(θ') onto
SweepResult idempotent_sweep();            // closed-formula idempotents
SweepResult relabel_sweep();               // (a,b)_ζ ≅ (a^k,b)_(ζ^k) on full tables
SweepResult laurent_symbol_check();        // (x,y) over F4((x))((y))(μ_3): Type1
SweepResult mixed_residue_check();         // rational-base residue/value-group predictions
SweepResult character_containment_sweep(); // X(Q/R) ⊆ X(Q/P)^(χ) iff normality, order ≤ 24
SweepResult product_split_sweep();         // normal order-s subgroup ⟺ direct product, order ≤ 72
SweepResult induced_eigen_sweep();         // π: B^(χ) -> A^(χ|) bijective, s ≤ 12
SweepResult cohomology_oracle_sweep();     // norm/difference vs generic cocycles

using SweepFn = SweepResult (*)();
const std::vector<std::pair<std::string, SweepFn>>& sweep_registry();
std::vector<SweepResult> run_all_sweeps();

/// Parallelism level for embarrassingly parallel sweeps; reads PTOWER_JOBS
/// (defaults to the hardware concurrency).
unsigned sweep_jobs();
void parallel_for(u64 count, const std::function<void(u64)>& fn);

} // namespace ptower::sweeps
