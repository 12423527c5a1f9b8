#include "ptower/cyclic_algebra.hpp"

namespace ptower::symbol {

AlgebraMonomial monomial_mul(const CyclicAlgebraPresentation& pres, const AlgebraMonomial& u,
                             const AlgebraMonomial& v) {
    u64 pn = checked_pow(pres.p, pres.n);
    AlgebraMonomial r;
    r.coeff = pres.base.mul(u.coeff, v.coeff);
    u64 total = u.xpow + v.xpow;
    r.xpow = total % pn;
    for (u64 wraps = total / pn; wraps > 0; --wraps) r.coeff = pres.base.mul(r.coeff, pres.b);
    return r;
}

AlgebraMonomial monomial_pow(const CyclicAlgebraPresentation& pres, AlgebraMonomial u, u64 e) {
    AlgebraMonomial r{pres.base.one(), 0};
    while (e) {
        if (e & 1) r = monomial_mul(pres, r, u);
        u = monomial_mul(pres, u, u);
        e >>= 1;
    }
    return r;
}

CyclicityResult cyclicity_witness(const CyclicAlgebraPresentation& pres) {
    const Fq& F = pres.base;
    if (F.is_zero(pres.b)) throw zero_slot_error("cyclicity_witness: b must be nonzero");
    u64 pn = checked_pow(pres.p, pres.n);

    CyclicityResult res;
    res.witness = AlgebraMonomial{F.one(), 1}; // the standard generator x
    auto xpn = monomial_pow(pres, res.witness, pn);
    res.witness_power_is_b = xpn.xpow == 0 && F.eq(xpn.coeff, pres.b);

    // b ∈ F*^p by exhaustive enumeration of p-th powers.
    std::optional<Fq::Elem> root;
    for (u64 idx = 1; idx < F.order(); ++idx) {
        Fq::Elem z = F.decode(idx);
        if (F.eq(F.pow(z, pres.p), pres.b)) {
            root = z;
            break;
        }
    }

    if (!root) {
        res.witness_found = true;
        return res;
    }
    // Degenerate: δ = x^(p^(n-1))·d⁻¹ satisfies δ^p = x^(p^n)·d^(-p) = 1.
    res.witness_found = false;
    AlgebraMonomial delta{F.inv(*root), checked_pow(pres.p, pres.n - 1)};
    auto dp = monomial_pow(pres, delta, pres.p);
    res.delta = delta;
    res.delta_power_is_one = dp.xpow == 0 && F.eq(dp.coeff, F.one());
    return res;
}

} // namespace ptower::symbol
