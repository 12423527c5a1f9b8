#include "ptower/group_checks.hpp"

#include <algorithm>
#include <set>

namespace ptower::groups {

Lemma19Result verify_character_containment(const FiniteGroup& G, const Lemma19Instance& inst) {
    Mask P = inst.P, Q = inst.Q, R = inst.R;
    u64 e = inst.e;
    if ((P & Q) != P || (P & R) != P || (R & Q) != R)
        throw invalid_instance_error("containment: need P ⊆ R ⊆ Q");
    if (!G.is_subgroup(P) || !G.is_subgroup(Q) || !G.is_subgroup(R))
        throw invalid_instance_error("containment: masks must be subgroups");
    if (!G.is_normal(P) || !G.is_normal(Q))
        throw invalid_instance_error("containment: P and Q must be normal in G");

    auto [Qgrp, qelems] = G.subgroup_group(Q);
    std::vector<u64> idx_in_q(G.order(), G.order());
    for (std::size_t i = 0; i < qelems.size(); ++i) idx_in_q[qelems[i]] = i;
    Mask Pq = 0, Rq = 0;
    for (u64 x : G.elements_of(P)) Pq |= Mask(1) << idx_in_q[x];
    for (u64 x : G.elements_of(R)) Rq |= Mask(1) << idx_in_q[x];
    auto [QP, coset] = Qgrp.quotient(Pq);
    if (!QP.is_abelian() || e % QP.mask_exponent(QP.full_mask()) != 0)
        throw invalid_instance_error("containment: Q/P must be abelian of exponent dividing e");

    // X(Q/P) as additive homomorphisms into Z/e; X(Q/R) = those killing R/P.
    auto all_psi = QP.homs_to_cyclic(e);
    auto kills_R = [&](const std::vector<u64>& psi) {
        for (u64 r : G.elements_of(R))
            if (psi[coset[idx_in_q[r]]] != 0) return false;
        return true;
    };

    Lemma19Result res;
    res.lhs = true;
    for (const auto& psi : all_psi) {
        if (!kills_R(psi)) continue;
        // ψ((g⁻¹qg)P) = χ(g)·ψ(qP) for all g in G, q in Q.
        for (u64 g = 0; g < G.order() && res.lhs; ++g) {
            u64 cg = inst.chi[g] % e;
            for (u64 q : G.elements_of(Q)) {
                u64 conj = G.mul(G.mul(G.inverse(g), q), g);
                u64 lhs_val = psi[coset[idx_in_q[conj]]];
                u64 rhs_val = mulmod(cg, psi[coset[idx_in_q[q]]], e);
                if (lhs_val != rhs_val) {
                    res.lhs = false;
                    break;
                }
            }
        }
        if (!res.lhs) break;
    }

    // rhs: R normal in G, and (gqg⁻¹)R = q^(χ⁻¹(g))R for all g, q.
    res.rhs = G.is_normal(R);
    if (res.rhs) {
        for (u64 g = 0; g < G.order() && res.rhs; ++g) {
            u64 ci = e == 1 ? 1 : invmod(inst.chi[g] % e, e);
            for (u64 q : G.elements_of(Q)) {
                u64 conj = G.conj(g, q);
                u64 pw = G.identity();
                for (u64 t = 0; t < ci; ++t) pw = G.mul(pw, q);
                // same coset of R: conj⁻¹ · pw ∈ R
                if (!(R >> G.mul(G.inverse(conj), pw) & 1)) {
                    res.rhs = false;
                    break;
                }
            }
        }
    }
    res.agree = res.lhs == res.rhs;
    return res;
}

std::vector<Lemma19Instance> enumerate_containment_instances(const FiniteGroup& G, u64 e) {
    std::vector<Lemma19Instance> out;
    auto subs = G.all_subgroups();
    auto chars = G.characters_into_units(e);
    for (Mask P : subs) {
        if (!G.is_normal(P)) continue;
        for (Mask Q : subs) {
            if ((P & Q) != P || Q == 0) continue;
            if (!G.is_normal(Q)) continue;
            // Q/P abelian of exponent dividing e.
            auto [Qgrp, qelems] = G.subgroup_group(Q);
            std::vector<u64> idx_in_q(G.order(), G.order());
            for (std::size_t i = 0; i < qelems.size(); ++i) idx_in_q[qelems[i]] = i;
            Mask Pq = 0;
            for (u64 x : G.elements_of(P)) Pq |= Mask(1) << idx_in_q[x];
            auto [QP, coset] = Qgrp.quotient(Pq);
            (void)coset;
            if (!QP.is_abelian()) continue;
            if (e % QP.mask_exponent(QP.full_mask()) != 0) continue;
            for (Mask R : subs) {
                if ((P & R) != P || (R & Q) != R) continue;
                for (const auto& chi : chars) {
                    Lemma19Instance inst;
                    inst.P = P;
                    inst.Q = Q;
                    inst.R = R;
                    inst.e = e;
                    inst.chi = chi;
                    out.push_back(std::move(inst));
                }
            }
        }
    }
    return out;
}

ProductSplitResult verify_product_split(const FiniteGroup& G, u64 p, u64 s) {
    if (!is_prime(p)) throw bad_order_error("product_split: p must be prime");
    u64 n = G.order();
    u64 ppart = 1;
    while (n % p == 0) {
        n /= p;
        ppart *= p;
    }
    if (n != s || (s > 1 && (p - 1) % s != 0))
        throw bad_order_error("product_split: |G| must be s·p^k with s | p-1");

    ProductSplitResult res;
    auto subs = G.all_subgroups();
    Mask sylow_mask = 0;
    bool sylow_normal = false;
    for (Mask m : subs) {
        if (FiniteGroup::mask_size(m) == s && G.is_normal(m)) res.has_normal_order_s = true;
        if (FiniteGroup::mask_size(m) == ppart) {
            sylow_mask = m;
            if (G.is_normal(m)) sylow_normal = true;
        }
    }
    // Internal direct product: normal Sylow + normal order-s subgroup with
    // trivial intersection.
    for (Mask h : subs) {
        if (FiniteGroup::mask_size(h) != s || !G.is_normal(h)) continue;
        for (Mask pm : subs) {
            if (FiniteGroup::mask_size(pm) != ppart || !G.is_normal(pm)) continue;
            if ((h & pm) == G.trivial_mask()) res.splits_as_product = true;
        }
    }

    // (v): applicable when the p-part is abelian; holds when some normal
    // abelian Sylow is central.
    for (Mask m : subs) {
        if (FiniteGroup::mask_size(m) != ppart) continue;
        if (G.mask_abelian(m)) res.sylow_abelian = true;
    }
    if (res.sylow_abelian && sylow_normal && G.mask_abelian(sylow_mask)) {
        bool central = true;
        for (u64 g = 0; g < G.order() && central; ++g)
            for (u64 x : G.elements_of(sylow_mask))
                if (G.mul(g, x) != G.mul(x, g)) {
                    central = false;
                    break;
                }
        res.sylow_central = central;
    }
    res.equivalent = res.has_normal_order_s == res.splits_as_product &&
                     (!res.sylow_abelian || res.sylow_central == res.splits_as_product);
    return res;
}

std::vector<Mask> index_p_chain(const FiniteGroup& G, Mask U, u64 p) {
    auto pp = prime_power_split(G.order());
    if (G.order() != 1 && (!pp || pp->first != p))
        throw invalid_instance_error("index_p_chain: G must be a p-group");
    if (!G.is_subgroup(U)) throw invalid_instance_error("index_p_chain: U must be a subgroup");

    std::vector<Mask> chain = {U};
    Mask cur = U;
    while (cur != G.full_mask()) {
        // Normalizer strictly grows in a p-group.
        Mask norm = 0;
        for (u64 g = 0; g < G.order(); ++g) {
            bool stabilizes = true;
            for (u64 x : G.elements_of(cur))
                if (!(cur >> G.conj(g, x) & 1)) {
                    stabilizes = false;
                    break;
                }
            if (stabilizes) norm |= Mask(1) << g;
        }
        require(norm != cur, "index_p_chain: normalizer did not grow");
        // Pick x in N(cur) \ cur with x^p in cur; then <cur, x> has index p
        // over cur and cur is normal inside it.
        Mask next = 0;
        for (u64 x : G.elements_of(norm)) {
            if (cur >> x & 1) continue;
            u64 xp = x;
            for (u64 t = 1; t < p; ++t) xp = G.mul(xp, x);
            if (!(cur >> xp & 1)) continue;
            auto gens = G.elements_of(cur);
            gens.push_back(x);
            Mask cand = G.generated_by(gens);
            if (FiniteGroup::mask_size(cand) == FiniteGroup::mask_size(cur) * p) {
                next = cand;
                break;
            }
        }
        require(next != 0, "index_p_chain: no index-p step found");
        for (u64 g : G.elements_of(next))
            for (u64 x : G.elements_of(cur))
                require(cur >> G.conj(g, x) & 1, "index_p_chain: step is not normal");
        chain.push_back(next);
        cur = next;
    }
    return chain;
}

namespace {

// Representatives of the distinct H¹ classes from the full cocycle list.
std::vector<std::vector<Vec>> h1_class_reps(const GModule& M, const H1Data& data) {
    std::vector<std::vector<Vec>> reps;
    for (const auto& f : data.cocycles) {
        bool fresh = true;
        for (const auto& r : reps) {
            std::vector<Vec> d(f.size());
            for (std::size_t x = 0; x < f.size(); ++x) d[x] = M.sub(f[x], r[x]);
            if (data.coboundary_keys.count(data.key_of(M, d))) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(f);
    }
    return reps;
}

std::vector<u64> torsion_factors(u64 p, u64 maxk, const std::vector<u64>& log_counts) {
    std::vector<u64> depth;
    for (std::size_t j = 1; j < log_counts.size(); ++j)
        depth.push_back(log_counts[j] - log_counts[j - 1]);
    std::vector<u64> factors;
    for (std::size_t j = 0; j < depth.size(); ++j) {
        u64 here = depth[j] - (j + 1 < depth.size() ? depth[j + 1] : 0);
        for (u64 t = 0; t < here; ++t) factors.push_back(checked_pow(p, j + 1));
    }
    (void)maxk;
    std::sort(factors.rbegin(), factors.rend());
    return factors;
}

} // namespace

SylowDescentResult verify_sylow_descent(const GModule& A, u64 p) {
    const auto& G = A.group();
    u64 n = G.order();
    u64 ppart = 1;
    while (n % p == 0) {
        n /= p;
        ppart *= p;
    }
    if (gcd_u64(n, p) != 1) throw invalid_instance_error("sylow_descent: bad order split");

    Mask sylow = 0;
    for (Mask m : G.all_subgroups())
        if (FiniteGroup::mask_size(m) == ppart && G.is_normal(m)) sylow = m;
    if (sylow == 0 && ppart == 1) sylow = G.trivial_mask();
    if (sylow == 0) throw invalid_instance_error("sylow_descent: no normal p-Sylow");

    auto [AP, elems] = A.restrict_to(sylow);
    std::vector<u64> idx_in_p(G.order(), G.order());
    for (std::size_t i = 0; i < elems.size(); ++i) idx_in_p[elems[i]] = i;

    SylowDescentResult res;
    // Full-group cohomology.
    auto h1_full = brute_h1(A);
    res.order_full[1] = h1_full.summary.order;
    res.factors_full[1] = h1_full.summary.invariant_factors;
    auto h2_full = brute_h2(A);
    res.order_full[2] = h2_full.order;
    res.factors_full[2] = h2_full.invariant_factors;

    // Conjugation permutations of the Sylow under each group element.
    auto conj_perm = [&](u64 sigma) {
        std::vector<u64> perm(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i) {
            u64 moved = G.mul(G.mul(G.inverse(sigma), elems[i]), sigma); // σ⁻¹kσ
            perm[i] = idx_in_p[moved];
            require(perm[i] != G.order(), "sylow_descent: Sylow not normal under conj");
        }
        return perm;
    };

    // Degree 1 fixed classes.
    {
        auto data = brute_h1(AP);
        auto reps = h1_class_reps(AP, data);
        std::vector<std::vector<Vec>> fixed;
        for (const auto& f : reps) {
            bool is_fixed = true;
            for (u64 sigma = 0; sigma < G.order() && is_fixed; ++sigma) {
                auto perm = conj_perm(sigma);
                std::vector<Vec> sf(elems.size());
                for (std::size_t i = 0; i < elems.size(); ++i)
                    sf[i] = A.apply(sigma, f[perm[i]]);
                std::vector<Vec> d(elems.size());
                for (std::size_t i = 0; i < elems.size(); ++i) d[i] = AP.sub(sf[i], f[i]);
                if (!data.coboundary_keys.count(data.key_of(AP, d))) is_fixed = false;
            }
            if (is_fixed) fixed.push_back(f);
        }
        res.order_fixed[1] = fixed.size();
        // Invariant factors of the fixed subgroup by torsion counting.
        std::vector<u64> log_counts = {0};
        for (u64 j = 1; j <= A.max_exp(); ++j) {
            u64 pj = checked_pow(p, j);
            u64 c = 0;
            for (const auto& f : fixed) {
                std::vector<Vec> pf(elems.size());
                for (std::size_t i = 0; i < elems.size(); ++i) pf[i] = AP.scalar_mul(pj, f[i]);
                if (data.coboundary_keys.count(data.key_of(AP, pf))) ++c;
            }
            log_counts.push_back(p_valuation(c, p));
            if (c == fixed.size()) break;
        }
        res.factors_fixed[1] = torsion_factors(p, A.max_exp(), log_counts);
    }

    // Degree 2 fixed classes.
    {
        H2Classes classes(AP);
        std::vector<H2Classes::Table> fixed;
        for (const auto& t : classes.representatives()) {
            bool is_fixed = true;
            for (u64 sigma = 0; sigma < G.order() && is_fixed; ++sigma) {
                auto moved = classes.transform(t, A.action_of(sigma), conj_perm(sigma));
                if (!classes.cohomologous(moved, t)) is_fixed = false;
            }
            if (is_fixed) fixed.push_back(t);
        }
        res.order_fixed[2] = fixed.size();
        std::vector<u64> log_counts = {0};
        for (u64 j = 1; j <= A.max_exp(); ++j) {
            u64 pj = checked_pow(p, j);
            u64 c = 0;
            for (const auto& t : fixed) {
                auto pt = t;
                for (auto& row : pt)
                    for (auto& v : row) v = AP.scalar_mul(pj, v);
                if (classes.is_coboundary(pt)) ++c;
            }
            log_counts.push_back(p_valuation(c, p));
            if (c == fixed.size()) break;
        }
        res.factors_fixed[2] = torsion_factors(p, A.max_exp(), log_counts);
    }

    res.match = res.order_full[1] == res.order_fixed[1] && res.order_full[2] == res.order_fixed[2] &&
                res.factors_full[1] == res.factors_fixed[1] &&
                res.factors_full[2] == res.factors_fixed[2];
    return res;
}

} // namespace ptower::groups
