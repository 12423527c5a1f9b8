#include "ptower/cohomology.hpp"

#include <algorithm>
#include <set>

namespace ptower::cohom {

using alg::CyclicActionModule;
using alg::Mat;
using alg::Vec;

CyclicGroupAction::CyclicGroupAction(u64 N, CyclicActionModule m)
    : group_order(N), module(std::move(m)) {
    if (module.acting_order() != N)
        throw domain_error("CyclicGroupAction: module acting order mismatch");
}

namespace {

// Fast path for a one-component module Z/p^k: every matrix is a scalar, and
// kernels/images/quotients reduce to p-valuations.
struct ScalarData {
    u64 p, k, pk;
    u64 t;    // action scalar
    u64 norm; // Σ t^j mod p^k

    u64 log_ker(u64 c) const { return std::min(k, c == 0 ? k : p_valuation(c, p)); }
    u64 log_im(u64 c) const { return k - log_ker(c); }
};

CohomologyResult cyclic_result(int degree, u64 order) {
    CohomologyResult r;
    r.degree = degree;
    r.order = order;
    if (order > 1) r.invariant_factors = {order};
    return r;
}

CohomologyResult from_quotient(int degree, const CyclicActionModule& M,
                               const CyclicActionModule::Submodule& K,
                               const CyclicActionModule::Submodule& I) {
    // Containment I ⊆ K is a theorem (Norm·(g-1) = g^N - 1 = 0); verify it.
    for (u64 key : I.elem_keys)
        require(K.contains_key(key), "h_i: image not contained in kernel");
    CohomologyResult r;
    r.degree = degree;
    r.order = K.order() / I.order();
    r.invariant_factors = M.quotient_invariant_factors(K, I);
    require(M.order() % r.order == 0, "h_i: cohomology order does not divide |module|");
    return r;
}

} // namespace

CohomologyResult h_i(const CyclicGroupAction& act, int degree) {
    if (degree < 0 || degree > 2) throw domain_error("h_i: degree must be 0, 1, or 2");
    const auto& M = act.module;
    u64 N = act.group_order;

    if (degree == 0) {
        auto fixed = M.fixed_submodule();
        CohomologyResult r;
        r.degree = 0;
        r.order = fixed.order();
        r.invariant_factors = fixed.invariant_factors;
        return r;
    }

    if (M.rank() == 1) {
        ScalarData sd;
        sd.p = M.modulus().p;
        sd.k = M.parts()[0];
        sd.pk = M.part_mods()[0];
        sd.t = M.action().rows[0][0] % sd.pk;
        sd.norm = 0;
        u64 pw = 1;
        for (u64 j = 0; j < N; ++j) {
            sd.norm = addmod(sd.norm, pw, sd.pk);
            pw = mulmod(pw, sd.t, sd.pk);
        }
        u64 diff = submod(sd.t, 1, sd.pk);
        u64 log_order;
        if (degree == 1)
            log_order = sd.log_ker(sd.norm) - sd.log_im(diff);
        else
            log_order = sd.log_ker(diff) - sd.log_im(sd.norm);
        require(log_order <= sd.k, "h_i: cohomology order does not divide |module|");
        return cyclic_result(degree, checked_pow(sd.p, log_order));
    }

    Mat norm = M.group_ring_matrix(std::vector<u64>(N, 1));
    Mat diff = M.mat_add(M.action(), M.mat_scaled(Mat::identity(M.rank()), M.modulus().value - 1));
    if (degree == 1) return from_quotient(1, M, M.kernel(norm), M.image(diff));
    return from_quotient(2, M, M.kernel(diff), M.image(norm));
}

HerbrandReport herbrand_check(const CyclicGroupAction& act) {
    HerbrandReport r;
    r.h1_order = h_i(act, 1).order;
    r.h2_order = h_i(act, 2).order;
    r.equal = r.h1_order == r.h2_order;
    return r;
}

u64 mu_size_formula(u64 p, u64 n, u64 k, u64 c) {
    if (k < 1 || k > n || c < 1 || c > n)
        throw out_of_range_error("mu_size_formula: need 1 <= k,c <= n");
    u64 a = std::min(k, c);
    u64 b = (k + c > n) ? k + c - n : 0;
    return checked_pow(p, a - b);
}

u64 mu_size_direct(u64 q, u64 p, u64 n, u64 k, int degree) {
    if (!is_prime(p) || p < 3) throw domain_error("mu_size_direct: p must be an odd prime");
    if (q % p == 0) throw bad_characteristic_error("mu_size_direct: q must be coprime to p");
    if (k < 1 || k > n) throw out_of_range_error("mu_size_direct: need 1 <= k <= n");
    u64 s = multiplicative_order(q % p, p);
    Modulus mod(p, n);
    u64 qs = powmod(q, s, mod.value);
    // c = min(n, v_p(q^s - 1)); only the cap matters here.
    u64 c = 0;
    while (c < n && powmod(q, s, checked_pow(p, c + 1)) == 1) ++c;
    u64 N = checked_pow(p, n - c);
    u64 mult = powmod(qs, 1, checked_pow(p, k));
    Modulus modk(p, std::max<u64>(k, 1));
    CyclicGroupAction act(N, CyclicActionModule::cyclic(modk, k, mult, N));
    return h_i(act, degree).order;
}

TwistCompatReport twist_compat(const CyclicGroupAction& ambient, u64 subgroup_order,
                               const alg::UnitCharacter& chi) {
    const auto& M = ambient.module;
    u64 N = ambient.group_order;
    if (subgroup_order == 0 || N % subgroup_order != 0)
        throw domain_error("twist_compat: subgroup order must divide the group order");
    if (chi.order_s != N) throw domain_error("twist_compat: character must live on the full group");
    u64 step = N / subgroup_order; // K = <g^step>
    if (powmod(chi.gamma, step, chi.modulus) != 1 % chi.modulus)
        throw character_not_trivial_error("twist_compat: character not trivial on K");

    // Rebuild everything on explicit multiplication tables.
    auto G = groups::FiniteGroup::cyclic(N);
    u64 p = M.modulus().p;
    std::vector<u64> exps(M.parts().begin(), M.parts().end());
    std::vector<groups::Vec> gen_mat;
    for (const auto& row : M.action().rows) gen_mat.push_back(row);
    auto A = groups::GModule::from_generators(G, p, exps, {1}, {gen_mat});
    u64 pK = checked_pow(p, A.max_exp());
    std::vector<u64> chi_vals(N);
    for (u64 j = 0; j < N; ++j) chi_vals[j] = powmod(chi.gamma % pK, j, pK);
    auto A_tw = A.twist(chi_vals);

    groups::Mask Kmask = G.generated_by({step % N == 0 ? G.identity() : step});
    auto [AK, elems] = A.restrict_to(Kmask);
    auto [AK_tw, elems_tw] = A_tw.restrict_to(Kmask);
    require(elems == elems_tw, "twist_compat: restriction element order mismatch");

    TwistCompatReport rep;
    rep.cocycle_sets_match = true;
    rep.g_action_matches = true;
    rep.eigendata_match = true;

    u64 nk = AK.group().order();
    // Conjugation by any σ is trivial (G abelian): the permutation k -> σ⁻¹kσ
    // is the identity on K.
    std::vector<u64> conj_id(nk);
    for (u64 i = 0; i < nk; ++i) conj_id[i] = i;

    // Degree 1.
    {
        auto tw = groups::brute_h1(AK_tw);
        auto un = groups::brute_h1(AK);
        rep.h1_order = tw.summary.order;
        rep.h1_factors = tw.summary.invariant_factors;
        if (un.summary.order != tw.summary.order ||
            un.summary.invariant_factors != tw.summary.invariant_factors)
            rep.cocycle_sets_match = false;
        // j* = identity on function tables: the twisted cocycles must be
        // exactly the untwisted ones (χ is trivial on K).
        std::set<std::vector<u64>> keys_tw, keys_un;
        for (const auto& f : tw.cocycles) keys_tw.insert(tw.key_of(AK_tw, f));
        for (const auto& f : un.cocycles) keys_un.insert(un.key_of(AK, f));
        if (keys_tw != keys_un || tw.coboundary_keys != un.coboundary_keys)
            rep.cocycle_sets_match = false;

        // Class representatives of H¹(K, A_χ).
        std::vector<std::vector<groups::Vec>> reps1;
        for (const auto& f : tw.cocycles) {
            bool fresh = true;
            for (const auto& r : reps1) {
                std::vector<groups::Vec> d(nk);
                for (u64 x = 0; x < nk; ++x) d[x] = AK_tw.sub(f[x], r[x]);
                if (tw.coboundary_keys.count(tw.key_of(AK_tw, d))) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) reps1.push_back(f);
        }

        auto act_on = [&](const groups::GModule& mod, u64 sigma,
                          const std::vector<groups::Vec>& f) {
            std::vector<groups::Vec> r(nk);
            for (u64 x = 0; x < nk; ++x) r[x] = mod.apply(sigma, f[x]); // conj trivial
            return r;
        };

        std::vector<std::size_t> fixed_tw_per_power(N, 0), fixed_un_per_power(N, 0);
        for (u64 j = 0; j < N; ++j) {
            u64 chi_j = chi_vals[j];
            for (const auto& f : reps1) {
                // σ^j acting in the twisted module vs χ(σ^j)·(σ^j acting plainly).
                auto lhs = act_on(A_tw, j, f);
                auto plain = act_on(A, j, f);
                for (auto& v : plain) v = AK.scalar_mul(chi_j, v);
                std::vector<groups::Vec> d(nk);
                for (u64 x = 0; x < nk; ++x) d[x] = AK.sub(lhs[x], plain[x]);
                if (!un.coboundary_keys.count(un.key_of(AK, d))) rep.g_action_matches = false;

                // Fixed-class counts on both sides.
                std::vector<groups::Vec> d_tw(nk), d_un(nk);
                for (u64 x = 0; x < nk; ++x) {
                    d_tw[x] = AK_tw.sub(lhs[x], f[x]);
                    d_un[x] = AK.sub(plain[x], f[x]);
                }
                if (tw.coboundary_keys.count(tw.key_of(AK_tw, d_tw))) ++fixed_tw_per_power[j];
                if (un.coboundary_keys.count(un.key_of(AK, d_un))) ++fixed_un_per_power[j];
            }
        }
        if (fixed_tw_per_power != fixed_un_per_power) rep.eigendata_match = false;
    }

    // Degree 2.
    {
        groups::H2Classes tw(AK_tw);
        groups::H2Classes un(AK);
        auto tw_sum = groups::brute_h2(AK_tw);
        auto un_sum = groups::brute_h2(AK);
        rep.h2_order = tw_sum.order;
        rep.h2_factors = tw_sum.invariant_factors;
        if (un_sum.order != tw_sum.order ||
            un_sum.invariant_factors != tw_sum.invariant_factors)
            rep.cocycle_sets_match = false;
        for (const auto& t : tw.representatives())
            if (!un.is_cocycle(t)) rep.cocycle_sets_match = false;
        for (const auto& t : un.representatives())
            if (!tw.is_cocycle(t)) rep.cocycle_sets_match = false;

        std::vector<std::size_t> fixed_tw_per_power(N, 0), fixed_un_per_power(N, 0);
        for (u64 j = 0; j < N; ++j) {
            u64 chi_j = chi_vals[j];
            for (const auto& t : tw.representatives()) {
                auto lhs = tw.transform(t, A_tw.action_of(j), conj_id);
                auto plain = un.transform(t, A.action_of(j), conj_id);
                for (auto& row : plain)
                    for (auto& v : row) v = AK.scalar_mul(chi_j, v);
                groups::H2Classes::Table d(nk, std::vector<groups::Vec>(nk));
                for (u64 x = 0; x < nk; ++x)
                    for (u64 y = 0; y < nk; ++y) d[x][y] = AK.sub(lhs[x][y], plain[x][y]);
                if (!un.is_coboundary(d)) rep.g_action_matches = false;
                if (tw.cohomologous(lhs, t)) ++fixed_tw_per_power[j];
                if (un.cohomologous(plain, t)) ++fixed_un_per_power[j];
            }
        }
        if (fixed_tw_per_power != fixed_un_per_power) rep.eigendata_match = false;
    }
    return rep;
}

} // namespace ptower::cohom
