#pragma once

/// Finite p^n-torsion modules ⊕_i Z/p^{k_i} carrying an action of a cyclic
/// group through a designated generator, plus eigenmodule machinery: the
/// χ-eigenmodule A^(χ) = { a : h·a = χ(h)a }, idempotent projections, and
/// character twists.

#include <cstdint>
#include <vector>

#include "ptower/characters.hpp"
#include "ptower/group_ring.hpp"
#include "ptower/zmodn.hpp"

namespace ptower::alg {

using Vec = std::vector<u64>;

/// Square integer matrix acting on ⊕ Z/p^{k_i}; entry (i,j) is stored reduced
/// mod p^{k_i} (the order of the target component).
struct Mat {
    std::vector<Vec> rows;

    static Mat identity(std::size_t n) {
        Mat m;
        m.rows.assign(n, Vec(n, 0));
        for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
        return m;
    }
    static Mat scalar(std::size_t n, u64 c) {
        Mat m = identity(n);
        for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = c;
        return m;
    }
    std::size_t dim() const { return rows.size(); }
};

class CyclicActionModule {
public:
    /// parts[i] = k_i gives the component Z/p^{k_i}; action is the matrix of
    /// the designated generator h; acting_order is |<h>|.
    CyclicActionModule(Modulus mod, std::vector<u64> parts, Mat action, u64 acting_order);

    /// Convenience: single component Z/p^k with h acting as multiplication.
    static CyclicActionModule cyclic(Modulus mod, u64 k, u64 mult, u64 acting_order);
    /// Diagonal action on ⊕ Z/p^{k_i}.
    static CyclicActionModule diagonal(Modulus mod, std::vector<u64> parts, Vec mults,
                                       u64 acting_order);

    const Modulus& modulus() const { return mod_; }
    const std::vector<u64>& parts() const { return parts_; }
    const std::vector<u64>& part_mods() const { return part_mods_; }
    const Mat& action() const { return action_; }
    u64 acting_order() const { return acting_order_; }
    std::size_t rank() const { return parts_.size(); }
    u64 order() const { return order_; }
    u64 exponent() const; // p^(max k_i)

    // Element arithmetic (coordinates reduced mod p^{k_i}).
    Vec zero() const { return Vec(rank(), 0); }
    Vec add(const Vec& a, const Vec& b) const;
    Vec negate(const Vec& a) const;
    Vec scalar_mul(u64 c, const Vec& a) const;
    Vec apply(const Mat& m, const Vec& a) const;
    Vec act(const Vec& a) const { return apply(action_, a); }

    u64 encode(const Vec& a) const;
    Vec decode(u64 key) const;

    Mat mat_mul(const Mat& a, const Mat& b) const;
    Mat mat_add(const Mat& a, const Mat& b) const;
    Mat mat_scaled(const Mat& a, u64 c) const;
    Mat mat_pow(const Mat& a, u64 e) const;
    bool mat_equal(const Mat& a, const Mat& b) const;
    void canonicalize(Mat& m) const;

    /// Σ_j coeffs[j] · action^j as a matrix (evaluates a group-ring element on
    /// this module).
    Mat group_ring_matrix(const std::vector<u64>& coeffs) const;

    /// New module: same carrier, action multiplied by χ(h).
    CyclicActionModule twist(const UnitCharacter& chi) const;

    struct Submodule {
        std::vector<u64> elem_keys;            // sorted
        std::vector<Vec> generators;           // minimal greedy generating set
        std::vector<u64> invariant_factors;    // p-power orders, descending
        u64 order() const { return elem_keys.size(); }
        bool contains_key(u64 k) const;
    };

    /// A^(χ) = { a : h·a = χ(h)·a } by direct enumeration of the carrier.
    Submodule eigencomponent(const UnitCharacter& chi) const;
    Submodule fixed_submodule() const;

    /// Image of a matrix (as a subgroup of this module).
    Submodule image(const Mat& m) const;
    /// Kernel of a matrix.
    Submodule kernel(const Mat& m) const;

    Submodule submodule_from_keys(std::vector<u64> keys) const;

    /// Full semisimple decomposition A = ⊕ e_i·A along the idempotents of the
    /// characters. Requires gcd(acting_order, p) = 1; each projected image is
    /// verified to equal the directly enumerated eigenmodule.
    std::vector<Submodule> eigen_decompose(const std::vector<UnitCharacter>& chars) const;

    /// Invariant factors (p-power cyclic orders, descending) of the quotient
    /// K/I for subgroups I ⊆ K given by element keys.
    std::vector<u64> quotient_invariant_factors(const Submodule& K, const Submodule& I) const;

private:
    Modulus mod_;
    std::vector<u64> parts_;
    std::vector<u64> part_mods_;
    std::vector<u64> strides_;
    Mat action_;
    u64 acting_order_;
    u64 order_;

    void validate() const;
    std::vector<u64> closure(std::vector<u64> seed_keys) const;
    std::vector<u64> invariant_factors_of_set(const std::vector<u64>& keys) const;
};

} // namespace ptower::alg
