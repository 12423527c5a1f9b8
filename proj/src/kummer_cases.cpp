#include "ptower/kummer_cases.hpp"

namespace ptower::valn {

KummerCaseReport classify_kummer_case(const LLevelData& data, const LaurentField::Elem& c) {
    const auto& L = data.field;
    const auto& k = L.coeff_field();
    u64 p = data.p;

    auto val = L.valuate(c);
    KummerCaseReport rep(LexValueGroup::standard(L.rank(), p));
    rep.valuation = val.exponent;

    if (!in_p_gamma(val.exponent, p)) {
        rep.code = KummerCase::I;
        std::vector<Rational> half(L.rank());
        for (std::size_t i = 0; i < L.rank(); ++i) half[i] = Rational(val.exponent[i], (i64)p);
        rep.gamma_R = rep.gamma_R.adjoin(half);
        return rep;
    }

    // Normalize w(c) to zero by a p-th power of a monomial; the residue of
    // the normalized unit is the leading coefficient of c.
    auto cbar = val.leading;
    bool pth_power = false;
    for (u64 idx = 1; idx < k.order(); ++idx)
        if (k.eq(k.pow(k.decode(idx), p), cbar)) {
            pth_power = true;
            break;
        }
    rep.residue_class_pth_power = pth_power;
    if (!pth_power) {
        rep.code = KummerCase::II;
        rep.residue_degree = p;
        return rep;
    }
    rep.code = KummerCase::III;
    rep.num_extensions = p;
    return rep;
}

LaurentClassReport laurent_power_classes(u64 q, u64 p, u64 rank) {
    if (!is_prime(p) || p < 3) throw domain_error("laurent_power_classes: p must be an odd prime");
    if (q % p == 0) throw bad_characteristic_error("laurent_power_classes: p divides q");
    u64 s = multiplicative_order(q % p, p);

    Modulus mod(p, 1);
    std::vector<u64> parts(1 + rank, 1);
    alg::Vec mults(1 + rank, 1);
    mults[0] = q % p; // Frobenius on the residue classes of k(μ_p)*/^p
    LaurentClassReport rep{s,
                           q % p,
                           {},
                           alg::CyclicActionModule::diagonal(mod, parts, mults, s),
                           false,
                           false,
                           false,
                           false};
    rep.coordinate_labels.push_back("residue");
    for (u64 i = 0; i < rank; ++i)
        rep.coordinate_labels.push_back(rank <= 3 ? std::string(1, "xyz"[i])
                                                  : "x" + std::to_string(i + 1));

    alg::UnitCharacter alpha(p, s, q % p);
    alg::UnitCharacter triv(p, s, 1);
    auto alpha_comp = rep.module.eigencomponent(alpha);
    auto triv_comp = rep.module.eigencomponent(triv);

    auto unit = [&](u64 i) {
        alg::Vec v(1 + rank, 0);
        v[i] = 1;
        return v;
    };
    rep.residue_coordinate_alpha_eigen = alpha_comp.contains_key(rep.module.encode(unit(0)));
    rep.uniformizers_trivial_eigen = true;
    rep.uniformizers_alpha_eigen = true;
    for (u64 i = 1; i <= rank; ++i) {
        if (!triv_comp.contains_key(rep.module.encode(unit(i))))
            rep.uniformizers_trivial_eigen = false;
        if (!alpha_comp.contains_key(rep.module.encode(unit(i))))
            rep.uniformizers_alpha_eigen = false;
    }
    rep.descent_obstruction = s > 1;
    return rep;
}

} // namespace ptower::valn
