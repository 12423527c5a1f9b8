#include "ptower/formal_class.hpp"

namespace ptower::symbol {

EigenclassReport galois_eigenclass(const alg::UnitCharacter& alpha,
                                   const FormalSymbolClass& cls) {
    const u64 e = alpha.modulus;
    if (cls.chi.modulus != e || cls.psi.modulus != e || cls.chi.order_s != alpha.order_s ||
        cls.psi.order_s != alpha.order_s)
        throw domain_error("galois_eigenclass: characters live on different groups");

    EigenclassReport rep;
    rep.eigencharacter = cls.chi * cls.psi * alpha.inverse();
    rep.rewriting_verified = true;

    for (u64 t = 0; t < alpha.order_s; ++t) {
        u64 chi_s = cls.chi.value_on_power(t);
        u64 psi_s = cls.psi.value_on_power(t);
        u64 alpha_s = alpha.value_on_power(t);

        FormalTriple cur; // [(a, b)_ω]
        // Galois step: slots raised by their eigencharacters, root by α.
        cur.u = mulmod(cur.u, chi_s, e);
        cur.v = mulmod(cur.v, psi_s, e);
        cur.w = mulmod(cur.w, alpha_s, e);
        // Relabel step: (A, B)_ξ ≅ (A^k, B)_(ξ^k) with k = w⁻¹ brings the
        // root exponent back to 1.
        u64 k = invmod(cur.w, e);
        cur.u = mulmod(cur.u, k, e);
        cur.w = mulmod(cur.w, k, e);
        require(cur.w == 1 % e, "galois_eigenclass: relabeling failed to normalize the root");
        // Bimultiplicative collapse: [(a^u, b^v)_ω] = [(a,b)_ω]^(u·v).
        u64 exponent = mulmod(cur.u, cur.v, e);
        if (exponent != rep.eigencharacter.value_on_power(t)) rep.rewriting_verified = false;
    }
    return rep;
}

bool prop34_fixed_check(const alg::UnitCharacter& chi, const alg::UnitCharacter& alpha) {
    FormalSymbolClass cls{chi, alpha * chi.inverse()};
    auto rep = galois_eigenclass(alpha, cls);
    return rep.rewriting_verified && rep.eigencharacter.is_trivial();
}

EigenSplitReport eigen_split_class(const alg::CyclicActionModule& class_group,
                                   const std::vector<alg::UnitCharacter>& chars,
                                   const alg::UnitCharacter& alpha_char,
                                   const alg::Vec& a_class) {
    EigenSplitReport rep;
    rep.alpha_index = chars.size();
    alg::Vec sum = class_group.zero();
    bool found_alpha = false;
    std::size_t trivial_count = 0;

    for (std::size_t i = 0; i < chars.size(); ++i) {
        auto idem = alg::idempotent_for(class_group.modulus(), chars[i]);
        auto proj = class_group.group_ring_matrix(idem.coeffs);
        SplitComponent comp;
        comp.chi = chars[i];
        comp.part = class_group.apply(proj, a_class);
        comp.nonzero = class_group.encode(comp.part) != 0;
        comp.symbol_char = chars[i] * alpha_char.inverse();
        if (comp.symbol_char.is_trivial()) {
            ++trivial_count;
            rep.alpha_index = i;
            found_alpha = true;
        }
        sum = class_group.add(sum, comp.part);
        rep.components.push_back(std::move(comp));
    }
    rep.sum_reconstructs = sum == a_class;
    rep.unique_trivial = found_alpha && trivial_count == 1;
    return rep;
}

EigenSplitReport eigen_split_class(const tower::TowerData& t, u64 a_index) {
    if (t.deg_ML != 1)
        throw hypothesis_violated_error("eigen_split_class: requires M = L (p ∤ [M:F])");
    auto module =
        alg::CyclicActionModule::cyclic(t.mod, t.mod.n, t.q % t.mod.value, t.deg_MF);
    auto chars = alg::enumerate_characters(t.mod, t.deg_MF);
    alg::UnitCharacter alpha_h(t.mod.value, t.deg_MF, t.alpha.gamma);
    return eigen_split_class(module, chars, alpha_h, {a_index % t.mod.value});
}

} // namespace ptower::symbol
