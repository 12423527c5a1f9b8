#pragma once

/// Degree-m symbol algebras over an exact field: generators i, j with
/// i^m = a, j^m = b, ij = ζji for a primitive m-th root ζ. The full
/// m²×m² structure-constant table is built and checked (defining relations
/// plus associativity on all basis triples), and the relabeling isomorphism
/// onto the (a^k, b; K)_{ζ^k} presentation is verified product by product.

#include <vector>

#include "ptower/errors.hpp"
#include "ptower/zmodn.hpp"

namespace ptower::symbol {

template <class F>
class SymbolAlgebra {
public:
    using FieldElem = typename F::Elem;
    using Elem = std::vector<FieldElem>; // dense over the basis i^r j^s

    SymbolAlgebra(F field, u64 m, FieldElem a, FieldElem b, FieldElem zeta)
        : field_(std::move(field)), m_(m), a_(std::move(a)), b_(std::move(b)),
          zeta_(std::move(zeta)) {
        if (m_ == 0) throw domain_error("symbol: m must be positive");
        if (field_.is_zero(a_) || field_.is_zero(b_)) throw zero_slot_error("symbol: a, b must be nonzero");
        if (field_.characteristic() != 0 && m_ % field_.characteristic() == 0)
            throw not_primitive_root_error("symbol: characteristic divides m");
        check_primitive();
    }

    const F& field() const { return field_; }
    u64 m() const { return m_; }
    u64 dim() const { return m_ * m_; }
    const FieldElem& slot_a() const { return a_; }
    const FieldElem& slot_b() const { return b_; }
    const FieldElem& zeta() const { return zeta_; }

    u64 basis_index(u64 r, u64 s) const { return (r % m_) * m_ + (s % m_); }
    std::pair<u64, u64> basis_powers(u64 idx) const { return {idx / m_, idx % m_}; }

    struct Mono {
        FieldElem coeff;
        u64 idx;
    };

    /// (i^r j^s)·(i^r' j^s') = ζ^(-s·r') a^[r+r'≥m] b^[s+s'≥m] · i^(r+r') j^(s+s');
    /// ji = ζ⁻¹ij follows from the defining relation ij = ζji.
    Mono mul_basis(u64 u, u64 v) const {
        auto [r1, s1] = basis_powers(u);
        auto [r2, s2] = basis_powers(v);
        u64 twist = (m_ - (s1 * r2) % m_) % m_;
        FieldElem c = field_.pow(zeta_, twist);
        if (r1 + r2 >= m_) c = field_.mul(c, a_);
        if (s1 + s2 >= m_) c = field_.mul(c, b_);
        return {c, basis_index(r1 + r2, s1 + s2)};
    }

    Elem zero_elem() const { return Elem(dim(), field_.zero()); }
    Elem one_elem() const { return basis_elem(0); }
    Elem basis_elem(u64 idx) const {
        Elem e = zero_elem();
        e[idx] = field_.one();
        return e;
    }
    Elem scaled_basis(const FieldElem& c, u64 idx) const {
        Elem e = zero_elem();
        e[idx] = c;
        return e;
    }

    Elem add(const Elem& x, const Elem& y) const {
        Elem r = x;
        for (u64 i = 0; i < dim(); ++i) r[i] = field_.add(r[i], y[i]);
        return r;
    }

    Elem mul(const Elem& x, const Elem& y) const {
        Elem r = zero_elem();
        for (u64 u = 0; u < dim(); ++u) {
            if (field_.is_zero(x[u])) continue;
            for (u64 v = 0; v < dim(); ++v) {
                if (field_.is_zero(y[v])) continue;
                Mono mres = mul_basis(u, v);
                r[mres.idx] = field_.add(
                    r[mres.idx], field_.mul(field_.mul(x[u], y[v]), mres.coeff));
            }
        }
        return r;
    }

    bool eq(const Elem& x, const Elem& y) const {
        for (u64 i = 0; i < dim(); ++i)
            if (!field_.eq(x[i], y[i])) return false;
        return true;
    }

    Elem pow_elem(Elem x, u64 e) const {
        Elem r = one_elem();
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    /// i^m = a·1, j^m = b·1, ij = ζ·ji, computed through the element product.
    bool relations_hold() const {
        Elem gi = basis_elem(basis_index(1, 0));
        Elem gj = basis_elem(basis_index(0, 1));
        if (m_ == 1) {
            // Degenerate 1-dimensional case: i = a, j = b already.
            return eq(mul(gi, gj), mul(gj, gi));
        }
        if (!eq(pow_elem(gi, m_), scaled_basis(a_, 0))) return false;
        if (!eq(pow_elem(gj, m_), scaled_basis(b_, 0))) return false;
        Elem lhs = mul(gi, gj);
        Elem rhs = mul(gj, gi);
        for (auto& c : rhs) c = field_.mul(c, zeta_);
        return eq(lhs, rhs);
    }

    bool associative_on_basis() const {
        for (u64 u = 0; u < dim(); ++u)
            for (u64 v = 0; v < dim(); ++v)
                for (u64 w = 0; w < dim(); ++w) {
                    Mono uv = mul_basis(u, v);
                    Mono vw = mul_basis(v, w);
                    Mono left = mul_basis(uv.idx, w);
                    Mono right = mul_basis(u, vw.idx);
                    if (left.idx != right.idx) return false;
                    FieldElem lc = field_.mul(uv.coeff, left.coeff);
                    FieldElem rc = field_.mul(vw.coeff, right.coeff);
                    if (!field_.eq(lc, rc)) return false;
                }
        return true;
    }

private:
    F field_;
    u64 m_;
    FieldElem a_, b_, zeta_;

    void check_primitive() const {
        FieldElem z = field_.one();
        for (u64 t = 1; t < m_; ++t) {
            z = field_.mul(z, zeta_);
            if (field_.eq(z, field_.one()))
                throw not_primitive_root_error("symbol: ζ has order < m");
        }
        z = field_.mul(z, zeta_);
        if (!field_.eq(z, field_.one()))
            throw not_primitive_root_error("symbol: ζ^m != 1");
    }
};

template <class F>
SymbolAlgebra<F> build_symbol(F field, u64 m, typename F::Elem a, typename F::Elem b,
                              typename F::Elem zeta) {
    SymbolAlgebra<F> alg(std::move(field), m, std::move(a), std::move(b), std::move(zeta));
    require(alg.relations_hold(), "build_symbol: defining relations fail");
    require(alg.associative_on_basis(), "build_symbol: structure constants not associative");
    return alg;
}

/// The isomorphism (a^k, b; K)_{ζ^k} -> (a, b; K)_ζ determined by i ↦ i^k,
/// j ↦ j, extended multiplicatively over the basis.
template <class F>
struct RelabelIso {
    SymbolAlgebra<F> source; // (a^k, b)_{ζ^k}
    std::vector<u64> basis_image;                 // index in the target
    std::vector<typename F::Elem> basis_coeff;    // scalar carried by each basis element
    bool is_homomorphism = false; // φ(uv) = φ(u)φ(v) on all basis pairs
    bool is_bijective = false;
    bool is_unital = false;
    bool ok() const { return is_homomorphism && is_bijective && is_unital; }
};

template <class F>
RelabelIso<F> relabel_iso(const SymbolAlgebra<F>& A, u64 k) {
    const F& field = A.field();
    u64 m = A.m();
    if (gcd_u64(k % m, m) != 1 && m > 1) throw not_coprime_error("relabel_iso: gcd(k, m) != 1");
    k %= m;
    if (m == 1) k = 0;

    auto source = build_symbol(field, m, field.pow(A.slot_a(), k == 0 ? 1 : k), A.slot_b(),
                               field.pow(A.zeta(), k == 0 ? 1 : k));
    RelabelIso<F> iso{source, {}, {}, false, false, false};
    iso.basis_image.resize(A.dim());
    iso.basis_coeff.resize(A.dim());
    // φ(i_src^r j_src^s) = i^(kr) j^s = a^⌊kr/m⌋ · i^(kr mod m) j^s.
    for (u64 r = 0; r < m; ++r)
        for (u64 s = 0; s < m; ++s) {
            u64 kr = (k == 0 ? r : k * r);
            iso.basis_image[iso.source.basis_index(r, s)] = A.basis_index(kr % m, s);
            iso.basis_coeff[iso.source.basis_index(r, s)] = field.pow(A.slot_a(), kr / m);
        }

    iso.is_unital = iso.basis_image[0] == 0 && field.eq(iso.basis_coeff[0], field.one());

    // Bijective: the index map is a permutation and all scalars are nonzero.
    std::vector<bool> seen(A.dim(), false);
    iso.is_bijective = true;
    for (u64 u = 0; u < A.dim(); ++u) {
        if (seen[iso.basis_image[u]] || field.is_zero(iso.basis_coeff[u])) iso.is_bijective = false;
        seen[iso.basis_image[u]] = true;
    }

    // Homomorphism on every basis pair of the source.
    iso.is_homomorphism = true;
    for (u64 u = 0; u < A.dim() && iso.is_homomorphism; ++u)
        for (u64 v = 0; v < A.dim(); ++v) {
            auto uv = iso.source.mul_basis(u, v);
            // φ(u·v)
            u64 lhs_idx = iso.basis_image[uv.idx];
            auto lhs_coeff = field.mul(uv.coeff, iso.basis_coeff[uv.idx]);
            // φ(u)·φ(v)
            auto prod = A.mul_basis(iso.basis_image[u], iso.basis_image[v]);
            u64 rhs_idx = prod.idx;
            auto rhs_coeff =
                field.mul(field.mul(iso.basis_coeff[u], iso.basis_coeff[v]), prod.coeff);
            if (lhs_idx != rhs_idx || !field.eq(lhs_coeff, rhs_coeff)) {
                iso.is_homomorphism = false;
                break;
            }
        }
    return iso;
}

} // namespace ptower::symbol
