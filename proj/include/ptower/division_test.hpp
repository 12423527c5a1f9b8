#pragma once

/// Valuation-based division tests for degree-p symbol algebras (a, b; J)_ω
/// over an iterated Laurent field whose residue contains μ_p. Verdicts are
/// one-sided: Type1/Type2 certify a division algebra, Split certifies
/// splitting, anything else is Unknown.

#include <optional>
#include <string>

#include "ptower/kummer_cases.hpp"

namespace ptower::valn {

enum class DivisionType { Type1, Type2, Type3Recurse, Split, Unknown };

struct DivisionTestResult {
    DivisionType type = DivisionType::Unknown;
    bool is_division = false;
    bool is_split = false;
    std::optional<LexValueGroup> value_group; // of the valued division algebra
    std::string residue_description;
    std::string detail;
};

/// Type1: w(a), w(b) independent in Γ/pΓ — totally ramified, value group
/// ⟨(1/p)w(a), (1/p)w(b)⟩ + Γ, residue unchanged.
/// Type2: w(a) ∉ pΓ, w(b) normalized to 0 with residue not a p-th power —
/// semiramified, residue grows by degree p, Γ gains (1/p)w(a).
/// Both slots units: recurse on the residue symbol; finite residue fields
/// have trivial Brauer group, so the recursion ends in Split.
DivisionTestResult symbol_division_test(const LLevelData& data, const LaurentField::Elem& a,
                                        const LaurentField::Elem& b);

} // namespace ptower::valn
