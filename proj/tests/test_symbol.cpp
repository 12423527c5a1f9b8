#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ptower/cyclic_algebra.hpp"
#include "ptower/cyclotomic.hpp"
#include "ptower/finite_field.hpp"
#include "ptower/formal_class.hpp"
#include "ptower/symbol_algebra.hpp"

using namespace ptower;
using namespace ptower::symbol;

TEST_CASE("finite field construction picks the least irreducible modulus") {
    Fq f4(2, 2);
    CHECK(f4.modulus_poly() == std::vector<u64>{1, 1, 1}); // x^2 + x + 1
    Fq f9(3, 2);
    CHECK(f9.modulus_poly() == std::vector<u64>{1, 0, 1}); // x^2 + 1
    Fq f8(2, 3);
    CHECK(f8.modulus_poly() == std::vector<u64>{1, 1, 0, 1}); // x^3 + x + 1

    // Field axioms on all of F27.
    Fq f27(3, 3);
    for (u64 i = 1; i < f27.order(); ++i) {
        auto a = f27.decode(i);
        CHECK(f27.eq(f27.mul(a, f27.inv(a)), f27.one()));
        CHECK(f27.encode(a) == i);
    }
    CHECK(f27.elem_order(f27.generator()) == 26);
}

TEST_CASE("multiplicative structure of explicit fields") {
    Fq f16(2, 4);
    auto z = f16.element_of_order(5);
    CHECK(f16.elem_order(z) == 5);
    CHECK_THROWS_AS(f16.element_of_order(7), not_primitive_root_error);

    Fq f7(7, 1);
    // Cubes in F7* are {1, 6}.
    std::vector<u64> cubes;
    for (u64 i = 1; i < 7; ++i)
        if (f7.is_power(f7.decode(i), 3)) cubes.push_back(i);
    CHECK(cubes == std::vector<u64>{1, 6});
}

TEST_CASE("cyclotomic polynomials and arithmetic in Q(zeta)") {
    auto phi = [](u64 m) { return CycQ::cyclotomic_poly(m); };
    CHECK(phi(1) == std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(phi(2) == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(phi(3) == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
    CHECK(phi(4) == std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK(phi(6) == std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
    CHECK(phi(5).size() == 5);

    CycQ q3(3);
    auto z = q3.zeta();
    CHECK(q3.eq(q3.pow(z, 3), q3.one()));
    CHECK_FALSE(q3.eq(z, q3.one()));
    // 1 + ζ + ζ² = 0.
    CHECK(q3.is_zero(q3.add(q3.add(q3.one(), z), q3.pow(z, 2))));
    // Inverses, including a rational one.
    auto e = q3.add(q3.from_int(2), z); // 2 + ζ
    CHECK(q3.eq(q3.mul(e, q3.inv(e)), q3.one()));
    CHECK(q3.eq(q3.inv(q3.from_int(2)), q3.from_rational(Rational(1, 2))));
    // Conjugation ζ ↦ ζ² is a field map of order 2; the norm of 2 + ζ is
    // (2+ζ)(2+ζ²) = 5 + 2(ζ+ζ²) = 3.
    auto conj = q3.galois(e, 2);
    CHECK(q3.eq(q3.galois(conj, 2), e));
    CHECK(q3.eq(q3.mul(conj, e), q3.from_int(3)));

    CycQ q1(1);
    CHECK(q1.degree() == 1);
    CHECK(q1.eq(q1.zeta(), q1.one())); // ζ_1 = 1
    CycQ q2(2);
    CHECK(q2.eq(q2.zeta(), q2.from_int(-1)));
}

TEST_CASE("symbol algebra over Q(zeta_3)") {
    CycQ q3(3);
    auto A = build_symbol(q3, 3, q3.from_int(2), q3.from_int(3), q3.zeta());
    CHECK(A.dim() == 9);
    CHECK(A.relations_hold());
    CHECK(A.associative_on_basis());

    // i·j = ζ j·i as full elements.
    auto gi = A.basis_elem(A.basis_index(1, 0));
    auto gj = A.basis_elem(A.basis_index(0, 1));
    auto ij = A.mul(gi, gj);
    auto ji = A.mul(gj, gi);
    for (auto& c : ji) c = q3.mul(c, q3.zeta());
    CHECK(A.eq(ij, ji));
}

TEST_CASE("symbol algebra over F7 and degenerate m = 1") {
    Fq f7(7, 1);
    auto A = build_symbol(f7, 3, f7.from_int(3), f7.from_int(5), f7.from_int(2));
    CHECK(A.relations_hold());
    CHECK(A.associative_on_basis());

    auto K = build_symbol(f7, 1, f7.from_int(3), f7.from_int(5), f7.from_int(1));
    CHECK(K.dim() == 1);

    CHECK_THROWS_AS(build_symbol(f7, 3, f7.from_int(0), f7.from_int(5), f7.from_int(2)),
                    zero_slot_error);
    CHECK_THROWS_AS(build_symbol(f7, 3, f7.from_int(3), f7.from_int(5), f7.from_int(6)),
                    not_primitive_root_error); // 6 has order 2
}

TEST_CASE("relabeling isomorphism") {
    CycQ q3(3);
    auto A = build_symbol(q3, 3, q3.from_int(2), q3.from_int(3), q3.zeta());
    auto iso = relabel_iso(A, 2);
    CHECK(iso.ok());
    CHECK(q3.eq(iso.source.slot_a(), q3.from_int(4)));
    CHECK(q3.eq(iso.source.zeta(), q3.pow(q3.zeta(), 2)));

    auto id = relabel_iso(A, 1);
    CHECK(id.ok());
    for (u64 u = 0; u < A.dim(); ++u) CHECK(id.basis_image[u] == u);

    Fq f7(7, 1);
    auto B = build_symbol(f7, 3, f7.from_int(3), f7.from_int(5), f7.from_int(2));
    auto iso7 = relabel_iso(B, 2);
    CHECK(iso7.ok());
    CHECK(f7.eq(iso7.source.slot_a(), f7.from_int(2))); // 3^2 = 2 mod 7
    CHECK(f7.eq(iso7.source.zeta(), f7.from_int(4)));   // 2^2 = 4

    CHECK_THROWS_AS(relabel_iso(B, 3), not_coprime_error);

    // Composing relabelings multiplies the exponents mod m: the index maps
    // compose to the direct one, the roots agree on the nose, and the a-slots
    // agree up to an m-th power (i.e. as classes).
    for (u64 k1 : {1ull, 2ull}) {
        for (u64 k2 : {1ull, 2ull}) {
            auto first = relabel_iso(B, k1);
            auto second = relabel_iso(first.source, k2);
            auto direct = relabel_iso(B, (k1 * k2) % 3);
            CHECK(second.ok());
            for (u64 u = 0; u < B.dim(); ++u)
                CHECK(first.basis_image[second.basis_image[u]] == direct.basis_image[u]);
            CHECK(f7.eq(second.source.zeta(), direct.source.zeta()));
            auto ratio = f7.mul(second.source.slot_a(), f7.inv(direct.source.slot_a()));
            CHECK(f7.is_power(ratio, 3));
        }
    }
}

TEST_CASE("relabeling sweep over m in {2, 3, 5} on both field kinds") {
    for (u64 m : {2ull, 3ull, 5ull}) {
        CycQ qm(m);
        auto A = build_symbol(qm, m, qm.from_int(2), qm.from_int(3), qm.zeta());
        for (u64 k = 1; k < m; ++k) {
            if (gcd_u64(k, m) != 1) continue;
            CHECK(relabel_iso(A, k).ok());
        }
        // Finite field with μ_m: smallest prime power q ≡ 1 mod m.
        u64 p = m == 2 ? 3 : (m == 3 ? 7 : 11);
        Fq f(p, 1);
        auto B = build_symbol(f, m, f.from_int(2), f.from_int((i64)p - 1), f.element_of_order(m));
        for (u64 k = 1; k < m; ++k) {
            if (gcd_u64(k, m) != 1) continue;
            CHECK(relabel_iso(B, k).ok());
        }
    }
}

TEST_CASE("galois eigencharacter of a formal symbol class") {
    // H of order 2 in (Z/5)*: α(σ) = -1 = 4; trivial slots give α⁻¹ = α.
    alg::UnitCharacter alpha(5, 2, 4), triv(5, 2, 1);
    auto rep = galois_eigenclass(alpha, {triv, triv});
    CHECK(rep.rewriting_verified);
    CHECK(rep.eigencharacter == alpha); // α⁻¹ = α for order 2

    // (1, α) and (α, 1) both give the trivial character: H-fixed classes.
    CHECK(galois_eigenclass(alpha, {triv, alpha}).eigencharacter.is_trivial());
    CHECK(galois_eigenclass(alpha, {alpha, triv}).eigencharacter.is_trivial());

    // Bimultiplicativity in the slots.
    alg::UnitCharacter chi(5, 4, 2), psi(5, 4, 3), chi2(5, 4, 4), psi2(5, 4, 2);
    alg::UnitCharacter alpha4(5, 4, 2);
    auto a1 = galois_eigenclass(alpha4, {chi, psi});
    auto a2 = galois_eigenclass(alpha4, {chi2, psi2});
    auto both = galois_eigenclass(alpha4, {chi * chi2, psi * psi2});
    CHECK(a1.rewriting_verified);
    CHECK(a2.rewriting_verified);
    CHECK(both.rewriting_verified);
    CHECK(both.eigencharacter == a1.eigencharacter * a2.eigencharacter * alpha4);
    // (χχ')(ψψ')α⁻¹ = (χψα⁻¹)(χ'ψ'α⁻¹)·α
}

TEST_CASE("fixed-class criterion for descent slots") {
    alg::UnitCharacter alpha(5, 4, 2);
    for (u64 g : {1ull, 2ull, 3ull, 4ull}) {
        alg::UnitCharacter chi(5, 4, g);
        CHECK(prop34_fixed_check(chi, alpha));
    }
    alg::UnitCharacter alpha3(7, 6, 3);
    for (u64 g = 1; g < 7; ++g) CHECK(prop34_fixed_check(alg::UnitCharacter(7, 6, g), alpha3));
}

TEST_CASE("cyclicity witness over F7") {
    Fq f7(7, 1);
    CyclicAlgebraPresentation pres{f7, 3, 1, f7.from_int(3)};
    auto res = cyclicity_witness(pres);
    CHECK(res.witness_found);
    CHECK(res.witness_power_is_b);
    CHECK_FALSE(res.delta.has_value());

    // b = 6 = 3³: degenerate; δ = x·3⁻¹ cubes to 1.
    CyclicAlgebraPresentation bad{f7, 3, 1, f7.from_int(6)};
    auto res6 = cyclicity_witness(bad);
    CHECK_FALSE(res6.witness_found);
    CHECK(res6.witness_power_is_b);
    REQUIRE(res6.delta.has_value());
    CHECK(res6.delta_power_is_one);

    CyclicAlgebraPresentation one{f7, 3, 1, f7.one()};
    auto res1 = cyclicity_witness(one);
    CHECK_FALSE(res1.witness_found);
    CHECK(res1.delta_power_is_one);

    CHECK_THROWS_AS(cyclicity_witness(CyclicAlgebraPresentation{f7, 3, 1, f7.zero()}),
                    zero_slot_error);

    // Witness exists iff b is not a p-th power (independent enumeration).
    for (u64 idx = 1; idx < 7; ++idx) {
        CyclicAlgebraPresentation pp{f7, 3, 1, f7.decode(idx)};
        CHECK(cyclicity_witness(pp).witness_found == !f7.is_power(f7.decode(idx), 3));
    }
    // Degree p² presentation.
    CyclicAlgebraPresentation deep{f7, 3, 2, f7.from_int(3)};
    auto resd = cyclicity_witness(deep);
    CHECK(resd.witness_found);
    CHECK(resd.witness_power_is_b);
}

TEST_CASE("eigen splitting of a class against the alpha component") {
    // Tower route: (2,5,1), class a = generator.
    auto t = tower::build_tower(2, 5, 1);
    auto rep = eigen_split_class(t, 1);
    CHECK(rep.sum_reconstructs);
    CHECK(rep.unique_trivial);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < rep.components.size(); ++i) {
        if (rep.components[i].nonzero) {
            ++nonzero;
            CHECK(i == rep.alpha_index); // the only nonzero part sits at χ = α
        }
    }
    CHECK(nonzero == 1);

    // Trivial class: all components vanish.
    auto rep0 = eigen_split_class(t, 0);
    CHECK(rep0.sum_reconstructs);
    for (const auto& c : rep0.components) CHECK_FALSE(c.nonzero);

    // Abstract module: Z/5 ⊕ Z/5 with diag(2,4); α(Frob) = 2 selects γ = 2.
    Modulus m5(5, 1);
    auto mod = alg::CyclicActionModule::diagonal(m5, {1, 1}, {2, 4}, 4);
    auto chars = alg::enumerate_characters(m5, 4);
    alg::UnitCharacter alpha(5, 4, 2);
    auto repm = eigen_split_class(mod, chars, alpha, {1, 1});
    CHECK(repm.sum_reconstructs);
    CHECK(repm.unique_trivial);
    for (std::size_t i = 0; i < chars.size(); ++i) {
        if (chars[i].gamma == 2) {
            CHECK(repm.components[i].part == alg::Vec{1, 0});
            CHECK(repm.components[i].symbol_char.is_trivial());
        }
        if (chars[i].gamma == 4) CHECK(repm.components[i].part == alg::Vec{0, 1});
    }

    CHECK_THROWS_AS(eigen_split_class(tower::build_tower(2, 3, 2), 1),
                    hypothesis_violated_error);
}
