#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ptower/brute_cohomology.hpp"
#include "ptower/finite_group.hpp"
#include "ptower/group_checks.hpp"

using namespace ptower;
using namespace ptower::groups;

TEST_CASE("built-in groups have the expected shapes") {
    auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK(s3.all_subgroups().size() == 6); // 1, three <transposition>, A3, S3

    auto s4 = FiniteGroup::symmetric(4);
    CHECK(s4.order() == 24);
    CHECK(s4.all_subgroups().size() == 30);

    auto a4 = FiniteGroup::alternating(4);
    CHECK(a4.order() == 12);

    auto d4 = FiniteGroup::dihedral(4);
    CHECK(d4.order() == 8);
    CHECK_FALSE(d4.is_abelian());

    auto h27 = FiniteGroup::heisenberg27();
    CHECK(h27.order() == 27);
    CHECK_FALSE(h27.is_abelian());
    CHECK(h27.mask_exponent(h27.full_mask()) == 3);

    auto z6 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
    CHECK(z6.is_abelian());
    CHECK(z6.mask_exponent(z6.full_mask()) == 6);
}

TEST_CASE("character enumeration on groups") {
    auto s3 = FiniteGroup::symmetric(3);
    // S3 -> (Z/3Z)* = {1,2}: trivial and sign.
    auto chars = s3.characters_into_units(3);
    CHECK(chars.size() == 2);
    // Homs S3 -> Z/3 additive: only zero (abelianization is Z/2).
    CHECK(s3.homs_to_cyclic(3).size() == 1);
    CHECK(s3.homs_to_cyclic(2).size() == 2);

    auto z4 = FiniteGroup::cyclic(4);
    CHECK(z4.homs_to_cyclic(4).size() == 4);
    CHECK(z4.characters_into_units(5).size() == 4); // (Z/5)* cyclic of order 4
}

TEST_CASE("p-adic row space agrees with explicit subgroup closure") {
    std::mt19937 rng(12345);
    int done = 0;
    for (int trial = 0; done < 200; ++trial) {
        u64 p = trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 3 : 7);
        u64 K = 1 + trial % 3;
        u64 mod = checked_pow(p, K);
        std::size_t width = 1 + trial % 4;
        std::size_t ngens = 1 + trial % 5;
        // Keep the brute-force closure side enumerable.
        u128 ambient = 1;
        for (std::size_t i = 0; i < width; ++i) ambient *= mod;
        if (ambient > 30000) continue;
        ++done;
        std::vector<std::vector<u64>> gens(ngens, std::vector<u64>(width));
        for (auto& g : gens)
            for (auto& x : g) x = rng() % mod;

        PAdicRowSpace space(p, K, width);
        for (auto g : gens) space.insert(g);

        // Explicit closure of the generated subgroup of (Z/p^K)^width.
        std::set<std::vector<u64>> S = {std::vector<u64>(width, 0)};
        std::vector<std::vector<u64>> queue(S.begin(), S.end());
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (const auto& g : gens) {
                auto nx = queue[qi];
                for (std::size_t i = 0; i < width; ++i) nx[i] = addmod(nx[i], g[i], mod);
                if (S.insert(nx).second) queue.push_back(nx);
            }
        CHECK(checked_pow(p, space.log_size()) == S.size());
        // Membership test.
        for (const auto& v : S) CHECK(space.reduces_to_zero(v));
        std::vector<u64> probe(width);
        for (auto& x : probe) x = rng() % mod;
        CHECK(space.reduces_to_zero(probe) == (S.count(probe) > 0));
    }
}

TEST_CASE("row space and column space of a matrix over Z/p^K have equal size") {
    // brute_h2 relies on this (the elementary divisors of a matrix and its
    // transpose coincide); pin it down on random matrices.
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 80; ++trial) {
        u64 p = trial % 2 ? 2 : 5;
        u64 K = 1 + trial % 3;
        u64 mod = checked_pow(p, K);
        std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 2) % 4;
        std::vector<std::vector<u64>> mat(rows, std::vector<u64>(cols));
        for (auto& r : mat)
            for (auto& x : r) x = rng() % mod;

        PAdicRowSpace row_space(p, K, cols);
        for (const auto& r : mat) row_space.insert(r);
        PAdicRowSpace col_space(p, K, rows);
        for (std::size_t c = 0; c < cols; ++c) {
            std::vector<u64> col(rows);
            for (std::size_t r = 0; r < rows; ++r) col[r] = mat[r][c];
            col_space.insert(col);
        }
        CHECK(row_space.log_size() == col_space.log_size());
    }
}

TEST_CASE("brute cohomology of Z/2 on Z/2 (trivial action)") {
    auto g = FiniteGroup::cyclic(2);
    auto m = GModule::trivial(g, 2, {1});
    auto h1 = brute_cohomology(m, 1);
    CHECK(h1.order == 2);
    CHECK(h1.invariant_factors == std::vector<u64>{2});
    auto h2 = brute_cohomology(m, 2);
    CHECK(h2.order == 2);
    CHECK(h2.invariant_factors == std::vector<u64>{2});
}

TEST_CASE("brute cohomology with nontrivial action: Z/3 on Z/9 by 7") {
    auto g = FiniteGroup::cyclic(3);
    auto m = GModule::scalar_action(g, 3, 2, {1, 7, 4}); // 7^0, 7^1, 7^2 mod 9
    CHECK(brute_cohomology(m, 1).order == 1);
    CHECK(brute_cohomology(m, 2).order == 1);
}

TEST_CASE("brute H2 detects non-cyclic structure") {
    auto g = FiniteGroup::cyclic(2);
    auto m = GModule::trivial(g, 2, {1, 1});
    auto h2 = brute_cohomology(m, 2);
    CHECK(h2.order == 4);
    CHECK(h2.invariant_factors == std::vector<u64>{2, 2});

    auto m4 = GModule::trivial(g, 2, {2});
    auto h24 = brute_cohomology(m4, 2);
    CHECK(h24.order == 2);
    CHECK(h24.invariant_factors == std::vector<u64>{2});
}

TEST_CASE("H2 class representatives behave like a transversal") {
    auto g = FiniteGroup::cyclic(3);
    auto m = GModule::trivial(g, 3, {2}); // H2(Z/3, Z/9) = Z/3
    H2Classes classes(m);
    CHECK(classes.representatives().size() == 3);
    for (const auto& t : classes.representatives()) CHECK(classes.is_cocycle(t));
    CHECK(classes.is_coboundary(classes.representatives()[0]) !=
          classes.is_coboundary(classes.representatives()[1]));
}

TEST_CASE("character containment on S3 matches the normality criterion") {
    auto s3 = FiniteGroup::symmetric(3);
    Mask A3 = 0;
    for (u64 x = 0; x < 6; ++x)
        if (s3.element_order(x) != 2) A3 |= Mask(1) << x;
    REQUIRE(FiniteGroup::mask_size(A3) == 3);

    auto chars = s3.characters_into_units(3);
    const std::vector<u64>* sign = nullptr;
    const std::vector<u64>* triv = nullptr;
    for (const auto& c : chars) {
        bool is_triv = true;
        for (u64 v : c)
            if (v != 1) is_triv = false;
        (is_triv ? triv : sign) = &c;
    }
    REQUIRE(sign != nullptr);
    REQUIRE(triv != nullptr);

    Lemma19Instance inst;
    inst.P = s3.trivial_mask();
    inst.Q = A3;
    inst.R = s3.trivial_mask();
    inst.e = 3;
    inst.chi = *sign;
    auto res = verify_character_containment(s3, inst);
    CHECK(res.lhs);
    CHECK(res.rhs);
    CHECK(res.agree);

    inst.chi = *triv;
    res = verify_character_containment(s3, inst);
    CHECK_FALSE(res.lhs);
    CHECK_FALSE(res.rhs);
    CHECK(res.agree);

    // R = Q: vacuously true on both sides.
    inst.R = A3;
    res = verify_character_containment(s3, inst);
    CHECK(res.lhs);
    CHECK(res.rhs);
    CHECK(res.agree);
}

TEST_CASE("containment criterion is exhaustive on small groups") {
    for (const auto& G : {FiniteGroup::symmetric(3), FiniteGroup::dihedral(4),
                          FiniteGroup::cyclic(8), FiniteGroup::alternating(4)}) {
        for (u64 e : {2ull, 3ull, 4ull}) {
            auto instances = enumerate_containment_instances(G, e);
            CHECK(instances.size() > 0);
            for (const auto& inst : instances) {
                auto r = verify_character_containment(G, inst);
                CHECK(r.agree);
            }
        }
    }
}

TEST_CASE("product split equivalences") {
    auto ok = verify_product_split(FiniteGroup::cyclic(6), 3, 2);
    CHECK(ok.has_normal_order_s);
    CHECK(ok.splits_as_product);
    CHECK(ok.sylow_central);
    CHECK(ok.equivalent);

    auto bad = verify_product_split(FiniteGroup::symmetric(3), 3, 2);
    CHECK_FALSE(bad.has_normal_order_s);
    CHECK_FALSE(bad.splits_as_product);
    CHECK(bad.sylow_abelian);
    CHECK_FALSE(bad.sylow_central);
    CHECK(bad.equivalent); // all statements fail together

    auto pure = verify_product_split(FiniteGroup::cyclic(9), 3, 1);
    CHECK(pure.has_normal_order_s);
    CHECK(pure.splits_as_product);
    CHECK(pure.equivalent);

    CHECK_THROWS_AS(verify_product_split(FiniteGroup::cyclic(10), 3, 2), bad_order_error);
}

TEST_CASE("index-p chains in p-groups") {
    auto z9 = FiniteGroup::cyclic(9);
    auto chain = index_p_chain(z9, z9.trivial_mask(), 3);
    REQUIRE(chain.size() == 3);
    CHECK(FiniteGroup::mask_size(chain[0]) == 1);
    CHECK(FiniteGroup::mask_size(chain[1]) == 3);
    CHECK(FiniteGroup::mask_size(chain[2]) == 9);

    auto h27 = FiniteGroup::heisenberg27();
    auto subs = h27.all_subgroups();
    for (Mask u : subs) {
        auto c = index_p_chain(h27, u, 3);
        CHECK(c.front() == u);
        CHECK(c.back() == h27.full_mask());
        for (std::size_t i = 1; i < c.size(); ++i)
            CHECK(FiniteGroup::mask_size(c[i]) == 3 * FiniteGroup::mask_size(c[i - 1]));
    }

    auto full = index_p_chain(z9, z9.full_mask(), 3);
    CHECK(full.size() == 1);
}

TEST_CASE("sylow descent: H^i(G,A) = H^i(P0,A)^(G/P0)") {
    // Z/15, p = 5, trivial Z/5: both sides Z/5 in degree 1.
    {
        auto g = FiniteGroup::cyclic(15);
        auto m = GModule::trivial(g, 5, {1});
        auto res = verify_sylow_descent(m, 5);
        CHECK(res.order_full[1] == 5);
        CHECK(res.order_fixed[1] == 5);
        CHECK(res.match);
    }
    // Z/21, p = 7, Z/7 with the generator acting by 2: H1 vanishes on both sides.
    {
        auto g = FiniteGroup::cyclic(21);
        std::vector<u64> scal(21);
        for (u64 j = 0; j < 21; ++j) scal[j] = powmod(2, j, 7);
        auto m = GModule::scalar_action(g, 7, 1, scal);
        auto res = verify_sylow_descent(m, 7);
        CHECK(res.order_full[1] == 1);
        CHECK(res.order_fixed[1] == 1);
        CHECK(res.match);
    }
    // Order-1 module: both sides trivial.
    {
        auto g = FiniteGroup::cyclic(15);
        auto m = GModule::trivial(g, 5, {0});
        auto res = verify_sylow_descent(m, 5);
        CHECK(res.order_full[1] == 1);
        CHECK(res.order_full[2] == 1);
        CHECK(res.match);
    }
}
