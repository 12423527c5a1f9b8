#include "ptower/induced.hpp"

#include <algorithm>
#include <set>

namespace ptower::alg {

namespace {

using Tuple = std::vector<Vec>; // (a_0, ..., a_{m-1})

Tuple sigma_act(const CyclicActionModule& A, u64 m, const Tuple& b) {
    Tuple r(m);
    r[0] = A.act(b[m - 1]); // σ^m · a_{m-1}
    for (u64 i = 1; i < m; ++i) r[i] = b[i - 1];
    return r;
}

Tuple scalar(const CyclicActionModule& A, u64 c, const Tuple& b) {
    Tuple r = b;
    for (auto& v : r) v = A.scalar_mul(c, v);
    return r;
}

} // namespace

InducedEigenReport induce_and_project(const CyclicActionModule& A, u64 s, u64 m,
                                      const UnitCharacter& chi) {
    if (m == 0 || s % m != 0) throw domain_error("induce_and_project: m must divide s");
    if (A.acting_order() != s / m)
        throw domain_error("induce_and_project: A must be a module for <σ^m> of order s/m");
    if (chi.order_s != s) throw domain_error("induce_and_project: χ must be a character of H");
    if (chi.modulus % A.exponent() != 0)
        throw domain_error("induce_and_project: A is not killed by the character modulus");

    InducedEigenReport rep;
    rep.s = s;
    rep.m = m;
    rep.chi = chi;

    UnitCharacter chi_restricted = chi.restrict_to_power(m);
    auto a_side = A.eigencomponent(chi_restricted);
    rep.size_A_chi = a_side.order();

    u64 gamma = chi.gamma;
    u64 gamma_inv = invmod(gamma % A.exponent(), A.exponent());

    // Solve σ·b = χ(σ)·b componentwise: slots 1..m-1 force a_i = χ(σ)^{-i}a_0,
    // slot 0 forces σ^m·a_{m-1} = χ(σ)·a_0. Enumerate a_0 over A.
    std::vector<Vec> b_chi_projections;
    std::set<std::vector<u64>> b_chi_encoded;
    for (u64 key = 0; key < A.order(); ++key) {
        Vec a0 = A.decode(key);
        Tuple b(m);
        b[0] = a0;
        for (u64 i = 1; i < m; ++i) b[i] = A.scalar_mul(powmod(gamma_inv, i, A.exponent()), a0);
        Tuple lhs = sigma_act(A, m, b);
        Tuple rhs = scalar(A, gamma, b);
        if (lhs == rhs) {
            b_chi_projections.push_back(a0);
            std::vector<u64> enc;
            for (const auto& v : b) enc.push_back(A.encode(v));
            b_chi_encoded.insert(enc);
        }
    }
    rep.size_B_chi = b_chi_projections.size();

    // π is injective on the chain family (a_0 determines b) and must map onto
    // A^(χ|_H̄) exactly.
    std::set<u64> proj;
    for (const auto& v : b_chi_projections) proj.insert(A.encode(v));
    std::set<u64> a_keys(a_side.elem_keys.begin(), a_side.elem_keys.end());
    rep.projection_bijective =
        proj.size() == b_chi_projections.size() && proj == a_keys;

    // When B itself is small, enumerate it outright and confirm B^(χ) is
    // exactly the chain family.
    u128 b_order = 1;
    bool small = true;
    for (u64 i = 0; i < m && small; ++i) {
        b_order *= A.order();
        if (b_order > 200000) small = false;
    }
    if (small) {
        std::set<std::vector<u64>> found;
        std::vector<u64> idx(m, 0);
        while (true) {
            Tuple b(m);
            for (u64 i = 0; i < m; ++i) b[i] = A.decode(idx[i]);
            if (sigma_act(A, m, b) == scalar(A, gamma, b)) {
                std::vector<u64> enc;
                for (const auto& v : b) enc.push_back(A.encode(v));
                found.insert(enc);
            }
            u64 pos = 0;
            while (pos < m && ++idx[pos] == A.order()) idx[pos++] = 0;
            if (pos == m) break;
        }
        rep.exhaustive_cross_check = found == b_chi_encoded;
        if (!rep.exhaustive_cross_check) rep.projection_bijective = false;
    }
    return rep;
}

} // namespace ptower::alg
