#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ptower/characters.hpp"
#include "ptower/dual.hpp"
#include "ptower/group_ring.hpp"
#include "ptower/induced.hpp"
#include "ptower/module.hpp"
#include "ptower/supernatural.hpp"

using namespace ptower;
using namespace ptower::alg;

TEST_CASE("modular arithmetic basics") {
    CHECK(powmod(2, 10, 25) == 24);
    CHECK(invmod(4, 5) == 4);
    CHECK(multiplicative_order(7, 9) == 3);
    CHECK(multiplicative_order(2, 25) == 20);
    CHECK(p_valuation(342, 3) == 2);
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    auto pp = prime_power_split(343);
    REQUIRE(pp.has_value());
    CHECK(pp->first == 7);
    CHECK(pp->second == 3);
    CHECK_FALSE(prime_power_split(12).has_value());
}

TEST_CASE("character enumeration finds the order-s subgroup") {
    Modulus m5(5, 1);
    auto chars = enumerate_characters(m5, 4);
    REQUIRE(chars.size() == 4);
    CHECK(chars[0].is_trivial());
    std::vector<u64> images;
    for (auto& c : chars) images.push_back(c.gamma);
    CHECK(images == std::vector<u64>{1, 2, 3, 4});

    auto c7 = enumerate_characters(Modulus(7, 1), 3);
    std::vector<u64> im7;
    for (auto& c : c7) im7.push_back(c.gamma);
    CHECK(im7 == std::vector<u64>{1, 2, 4});

    auto triv = enumerate_characters(Modulus(3, 2), 1);
    REQUIRE(triv.size() == 1);
    CHECK(triv[0].is_trivial());

    CHECK_THROWS_AS(enumerate_characters(m5, 3), not_divisor_error);
}

TEST_CASE("idempotent closed formula") {
    Modulus m5(5, 1);
    auto chars = enumerate_characters(m5, 4);
    auto idems = idempotents(m5, 4);
    REQUIRE(idems.size() == 4);

    // γ = 2 has coefficients (4,2,1,3).
    for (std::size_t i = 0; i < 4; ++i)
        if (chars[i].gamma == 2) CHECK(idems[i].coeffs == std::vector<u64>{4, 2, 1, 3});

    // Partition of unity, orthogonality, e_i^2 = e_i, h·e_i = γ_i e_i.
    auto sum = GroupRingElem::zero(m5, 4);
    for (auto& e : idems) sum = sum + e;
    CHECK(sum == GroupRingElem::one(m5, 4));
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(idems[i] * idems[i] == idems[i]);
        CHECK(idems[i].h_times() == idems[i].scaled(chars[i].gamma));
        for (std::size_t j = i + 1; j < 4; ++j)
            CHECK(idems[i] * idems[j] == GroupRingElem::zero(m5, 4));
    }

    auto e1 = idempotents(m5, 1);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0] == GroupRingElem::one(m5, 1));
}

TEST_CASE("idempotent sweep across small (p,n,s)") {
    for (u64 p : {3ull, 5ull, 7ull}) {
        for (u64 n = 1; n <= 3; ++n) {
            Modulus mod(p, n);
            for (u64 s = 1; s <= p - 1; ++s) {
                if ((p - 1) % s != 0) continue;
                auto chars = enumerate_characters(mod, s);
                auto idems = idempotents(mod, s);
                auto sum = GroupRingElem::zero(mod, s);
                for (auto& e : idems) sum = sum + e;
                CHECK(sum == GroupRingElem::one(mod, s));
                for (std::size_t i = 0; i < s; ++i) {
                    CHECK(idems[i] * idems[i] == idems[i]);
                    CHECK(idems[i].h_times() == idems[i].scaled(chars[i].gamma));
                }
            }
        }
    }
}

TEST_CASE("eigen decomposition of Z/25 under multiplication by 7") {
    Modulus m(5, 2);
    auto A = CyclicActionModule::cyclic(m, 2, 7, 4);
    auto chars = enumerate_characters(m, 4);
    auto parts = A.eigen_decompose(chars);
    u64 total = 1;
    for (std::size_t i = 0; i < 4; ++i) {
        if (chars[i].gamma == 7)
            CHECK(parts[i].order() == 25);
        else
            CHECK(parts[i].order() == 1);
        total *= parts[i].order();
    }
    CHECK(total == A.order());
}

TEST_CASE("eigen decomposition of Z/5 + Z/5 with diagonal action") {
    Modulus m(5, 1);
    auto A = CyclicActionModule::diagonal(m, {1, 1}, {2, 4}, 4);
    auto chars = enumerate_characters(m, 4);
    auto parts = A.eigen_decompose(chars);
    u64 total = 1;
    for (std::size_t i = 0; i < 4; ++i) {
        total *= parts[i].order();
        if (chars[i].gamma == 2 || chars[i].gamma == 4)
            CHECK(parts[i].order() == 5);
        else
            CHECK(parts[i].order() == 1);
    }
    CHECK(total == 25);

    // Pairwise intersections are trivial (directness).
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            std::size_t common = 0;
            for (u64 k : parts[i].elem_keys)
                if (parts[j].contains_key(k)) ++common;
            CHECK(common == 1); // only 0
        }
}

TEST_CASE("trivial action concentrates in the trivial character") {
    Modulus m(7, 1);
    auto A = CyclicActionModule::diagonal(m, {1, 1}, {1, 1}, 3);
    auto chars = enumerate_characters(m, 3);
    auto parts = A.eigen_decompose(chars);
    CHECK(parts[0].order() == A.order());
    CHECK(parts[1].order() == 1);
    CHECK(parts[2].order() == 1);
}

TEST_CASE("eigen_decompose rejects non-semisimple acting order") {
    Modulus m(5, 1);
    auto A = CyclicActionModule::cyclic(m, 1, 1, 5);
    auto chars = characters_mod(5, 5);
    CHECK_THROWS_AS(A.eigen_decompose(chars), non_semisimple_error);
}

TEST_CASE("twist moves fixed points to the inverse eigenmodule") {
    Modulus m(5, 1);
    // h·a = 2a twisted by χ(h) = 3 gives h*a = 6a = a.
    auto A = CyclicActionModule::cyclic(m, 1, 2, 4);
    UnitCharacter chi(5, 4, 3);
    auto twisted = A.twist(chi);
    CHECK(twisted.fixed_submodule().order() == 5);
    CHECK(twisted.fixed_submodule().order() == A.eigencomponent(chi.inverse()).order());

    // Twisting by χ then χ⁻¹ restores the action.
    auto back = twisted.twist(chi.inverse());
    CHECK(back.mat_equal(back.action(), A.action()));

    // Twist by the trivial character is the identity.
    auto same = A.twist(UnitCharacter(5, 4, 1));
    CHECK(same.mat_equal(same.action(), A.action()));
}

TEST_CASE("(A_chi)^G = A^(chi^-1) elementwise on a small battery") {
    Modulus m(5, 1);
    auto chars = enumerate_characters(m, 4);
    for (u64 act : {1ull, 2ull, 3ull, 4ull}) {
        auto A = CyclicActionModule::cyclic(m, 1, act, 4);
        for (const auto& chi : chars) {
            auto lhs = A.twist(chi).fixed_submodule();
            auto rhs = A.eigencomponent(chi.inverse());
            CHECK(lhs.elem_keys == rhs.elem_keys);
        }
    }
    Modulus m9(3, 2);
    auto chars9 = enumerate_characters(m9, 2);
    for (u64 act : {1ull, 8ull}) {
        auto A = CyclicActionModule::diagonal(m9, {1, 2}, {act % 3, act}, 2);
        for (const auto& chi : chars9) {
            auto lhs = A.twist(chi).fixed_submodule();
            auto rhs = A.eigencomponent(chi.inverse());
            CHECK(lhs.elem_keys == rhs.elem_keys);
        }
    }
}

TEST_CASE("module rejects maps that do not respect component orders") {
    Modulus m(3, 2);
    Mat bad;
    bad.rows = {{1, 1}, {1, 1}}; // Z/9 <- Z/3 entry must be divisible by 3
    CHECK_THROWS_AS(CyclicActionModule(m, {2, 1}, bad, 1), domain_error);
}

TEST_CASE("dual of Z/5 with multiplication by 2") {
    Modulus m(5, 1);
    auto A = CyclicActionModule::cyclic(m, 1, 2, 4);
    auto dm = make_dual(A);
    CHECK(dm.dual.action().rows[0][0] == 3); // 2^-1 mod 5

    auto chars = enumerate_characters(m, 4);
    auto dec = dual_decompose(A, chars);
    CHECK(dec.orthogonality_ok);
    CHECK(dec.nondegeneracy_ok);
    CHECK(dec.sizes_match);
    // Pairing concentrates between γ=2 (base) and γ=3 (dual).
    for (std::size_t i = 0; i < 4; ++i) {
        if (chars[i].gamma == 2) CHECK(dec.base_eigen[i].order() == 5);
        if (chars[i].gamma == 3) CHECK(dec.dual_eigen[i].order() == 5);
        if (chars[i].gamma == 2) CHECK(dec.perps[i].order() == 1);
    }
}

TEST_CASE("dual of a trivial action pairs only the trivial character with itself") {
    Modulus m(5, 1);
    auto A = CyclicActionModule::diagonal(m, {1, 1}, {1, 1}, 4);
    auto chars = enumerate_characters(m, 4);
    auto dec = dual_decompose(A, chars);
    CHECK(dec.orthogonality_ok);
    CHECK(dec.nondegeneracy_ok);
    for (std::size_t i = 0; i < chars.size(); ++i) {
        if (chars[i].is_trivial()) {
            CHECK(dec.base_eigen[i].order() == 25);
            CHECK(dec.dual_eigen[i].order() == 25);
            CHECK(dec.perps[i].order() == 1); // everything pairs against the dual block
        } else {
            CHECK(dec.base_eigen[i].order() == 1);
        }
    }
}

TEST_CASE("perp subgroups recover the complementary eigenmodules") {
    Modulus m(5, 1);
    auto A = CyclicActionModule::diagonal(m, {1, 1}, {2, 4}, 4);
    auto chars = enumerate_characters(m, 4);
    auto dec = dual_decompose(A, chars);
    REQUIRE(dec.all_ok());
    for (std::size_t i = 0; i < chars.size(); ++i) {
        // perp of X^(χ_i⁻¹) = direct sum of the A^(χ_j) with j ≠ i.
        u64 expected = 1;
        for (std::size_t j = 0; j < chars.size(); ++j)
            if (j != i) expected *= dec.base_eigen[j].order();
        CHECK(dec.perps[i].order() == expected);
        for (std::size_t j = 0; j < chars.size(); ++j) {
            if (j == i) continue;
            for (u64 k : dec.base_eigen[j].elem_keys) CHECK(dec.perps[i].contains_key(k));
        }
    }
}

TEST_CASE("dual pairing on mixed components Z/3 + Z/9") {
    Modulus m(3, 2);
    auto A = CyclicActionModule::diagonal(m, {1, 2}, {2, 8}, 2);
    auto chars = enumerate_characters(m, 2);
    auto dec = dual_decompose(A, chars);
    CHECK(dec.orthogonality_ok);
    CHECK(dec.nondegeneracy_ok);
    CHECK(dec.sizes_match);

    // Nondegeneracy of the full pairing: only 0 pairs to zero with everything.
    auto dm = dec.pair;
    for (u64 ka = 1; ka < A.order(); ++ka) {
        bool hit = false;
        for (u64 kp = 0; kp < A.order(); ++kp)
            if (dm.pairing(dm.base.decode(ka), dm.dual.decode(kp)) != 0) hit = true;
        CHECK(hit);
    }
}

TEST_CASE("induced module eigencomponents project bijectively") {
    Modulus m(5, 1);
    // s=4, m=2: A = Z/5 with σ²·a = 4a; χ(σ) = 2 restricts to χ(σ²) = 4.
    auto A = CyclicActionModule::cyclic(m, 1, 4, 2);
    auto rep = induce_and_project(A, 4, 2, UnitCharacter(5, 4, 2));
    CHECK(rep.size_B_chi == 5);
    CHECK(rep.size_A_chi == 5);
    CHECK(rep.projection_bijective);
    CHECK(rep.exhaustive_cross_check); // |B| = 25, fully enumerated

    auto rep_triv = induce_and_project(A, 4, 2, UnitCharacter(5, 4, 1));
    CHECK(rep_triv.size_B_chi == 1);
    CHECK(rep_triv.size_A_chi == 1);
    CHECK(rep_triv.projection_bijective);

    // m = 1: B = A and π is the identity.
    auto full = CyclicActionModule::cyclic(m, 1, 2, 4);
    auto rep_id = induce_and_project(full, 4, 1, UnitCharacter(5, 4, 2));
    CHECK(rep_id.size_B_chi == rep_id.size_A_chi);
    CHECK(rep_id.size_A_chi == 5);
    CHECK(rep_id.projection_bijective);
}

TEST_CASE("supernatural arithmetic") {
    auto a = Supernatural().set(2, Supernatural::INF).set(3, 1);
    auto b = Supernatural::from_u64(15);
    auto prod = a * b;
    CHECK(prod.exponent(2) == Supernatural::INF);
    CHECK(prod.exponent(3) == 2);
    CHECK(prod.exponent(5) == 1);

    CHECK(Supernatural::from_u64(9).divides(prod));
    CHECK_FALSE(Supernatural::from_u64(27).divides(prod));
    CHECK(Supernatural::from_u64(8).divides(prod)); // 2^inf

    CHECK(gcd(Supernatural::from_u64(12), Supernatural::from_u64(18)) ==
          Supernatural::from_u64(6));
    CHECK(lcm(Supernatural::from_u64(12), Supernatural::from_u64(18)) ==
          Supernatural::from_u64(36));

    // Tower multiplicativity [K:F] = [K:E][E:F].
    CHECK(Supernatural::tower_check(Supernatural::from_u64(5), Supernatural::from_u64(25),
                                    Supernatural::from_u64(125)));
    CHECK_FALSE(Supernatural::tower_check(Supernatural::from_u64(5), Supernatural::from_u64(5),
                                          Supernatural::from_u64(125)));
    CHECK(prod.str() == "2^inf*3^2*5");
}
