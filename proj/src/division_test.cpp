#include "ptower/division_test.hpp"

namespace ptower::valn {

namespace {

std::vector<Rational> over_p(const std::vector<i64>& v, u64 p) {
    std::vector<Rational> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i], (i64)p);
    return r;
}

} // namespace

DivisionTestResult symbol_division_test(const LLevelData& data, const LaurentField::Elem& a,
                                        const LaurentField::Elem& b) {
    const auto& L = data.field;
    const auto& k = L.coeff_field();
    u64 p = data.p;
    if (L.known_zero(a) || L.known_zero(b))
        throw zero_slot_error("symbol_division_test: slots must be nonzero");

    auto va = L.valuate(a);
    auto vb = L.valuate(b);
    DivisionTestResult res;

    if (independent_mod_p(va.exponent, vb.exponent, p)) {
        res.type = DivisionType::Type1;
        res.is_division = true;
        res.value_group = LexValueGroup::standard(L.rank(), p)
                              .adjoin(over_p(va.exponent, p))
                              .adjoin(over_p(vb.exponent, p));
        res.residue_description = "F" + std::to_string(k.order());
        res.detail = "tame totally ramified: w(a), w(b) independent mod p";
        return res;
    }

    bool a_ramified = !in_p_gamma(va.exponent, p);
    bool b_ramified = !in_p_gamma(vb.exponent, p);

    if (a_ramified && b_ramified) {
        // Dependent ramification in both slots: none of the three criteria
        // applies; never guess.
        res.type = DivisionType::Unknown;
        res.detail = "both slots ramified but dependent mod p";
        return res;
    }

    if (a_ramified || b_ramified) {
        // Normalize the unramified slot to a unit; its residue is the leading
        // coefficient. The symbol is (up to inverse) unchanged by swapping.
        const auto& ram = a_ramified ? va : vb;
        const auto& unr = a_ramified ? vb : va;
        bool pth_power = false;
        for (u64 idx = 1; idx < k.order(); ++idx)
            if (k.eq(k.pow(k.decode(idx), p), unr.leading)) {
                pth_power = true;
                break;
            }
        if (!pth_power) {
            res.type = DivisionType::Type2;
            res.is_division = true;
            res.value_group =
                LexValueGroup::standard(L.rank(), p).adjoin(over_p(ram.exponent, p));
            res.residue_description = "F" + std::to_string(k.order()) + "^" + std::to_string(p) +
                                      " (degree-p residue root adjoined)";
            res.detail = a_ramified ? "semiramified: w(a) ramified, residue of b not a p-th power"
                                    : "semiramified after swapping the slots";
            return res;
        }
        // The unit slot is a p-th power: over the Henselian Laurent field it
        // is a p-th power outright, so the symbol splits.
        res.type = DivisionType::Split;
        res.is_split = true;
        res.detail = "unit slot has a p-th-power residue: trivial class by Hensel's lemma";
        return res;
    }

    // Both slots are units after normalization: recurse on the residue
    // symbol; the residue field is finite, so its Brauer group is trivial.
    res.type = DivisionType::Type3Recurse;
    res.is_split = true;
    res.residue_description = "F" + std::to_string(k.order());
    res.detail = "unramified: residue symbol over a finite field splits";
    return res;
}

} // namespace ptower::valn
