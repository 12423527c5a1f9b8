#pragma once

/// Cocycle-level group cohomology for small groups, used as the independent
/// oracle against closed-form computations. H¹ enumerates crossed
/// homomorphisms outright; H² counts cocycles modulo coboundaries by exact
/// linear algebra over Z/p^K (no structure theory of the acting group enters).

#include <map>
#include <set>
#include <vector>

#include "ptower/finite_group.hpp"
#include "ptower/zmodn.hpp"

namespace ptower::groups {

using Vec = std::vector<u64>;

/// Row space of vectors in (Z/p^K)^width, maintained in saturated echelon
/// form. The size of the generated subgroup is p^(Σ (K - v_i)) over the pivot
/// valuations v_i.
class PAdicRowSpace {
public:
    PAdicRowSpace(u64 p, u64 K, std::size_t width);

    void insert(Vec row);
    bool reduces_to_zero(Vec row) const;
    u64 log_size() const; // log_p of the subgroup order

private:
    u64 p_;
    u64 K_;
    u64 mod_;
    std::size_t width_;
    std::map<std::size_t, Vec> pivots_; // leading column -> normalized row

    void reduce_in_place(Vec& row) const;
};

/// A p-primary module Π Z/p^{k_i} with a left action of a finite group given
/// by one matrix per group element.
class GModule {
public:
    GModule(FiniteGroup G, u64 p, std::vector<u64> exps, std::vector<std::vector<Vec>> action);

    static GModule trivial(const FiniteGroup& G, u64 p, std::vector<u64> exps);
    /// Extends matrices given on a generating set to the whole group and
    /// validates multiplicativity.
    static GModule from_generators(const FiniteGroup& G, u64 p, std::vector<u64> exps,
                                   const std::vector<u64>& gens,
                                   const std::vector<std::vector<Vec>>& gen_mats);
    /// Cyclic carrier Z/p^k, each group element acts as a scalar.
    static GModule scalar_action(const FiniteGroup& G, u64 p, u64 k,
                                 const std::vector<u64>& scalar_per_element);

    const FiniteGroup& group() const { return G_; }
    u64 p() const { return p_; }
    u64 max_exp() const { return K_; }
    std::size_t comps() const { return exps_.size(); }
    const std::vector<u64>& part_mods() const { return part_mods_; }
    u64 order() const { return order_; }
    u64 log_order() const { return log_order_; }
    const std::vector<Vec>& action_of(u64 g) const { return action_[g]; }

    Vec zero() const { return Vec(comps(), 0); }
    Vec add(const Vec& a, const Vec& b) const;
    Vec sub(const Vec& a, const Vec& b) const;
    Vec scalar_mul(u64 c, const Vec& a) const;
    Vec apply(u64 g, const Vec& a) const;
    u64 encode(const Vec& a) const;
    Vec decode(u64 key) const;

    /// Same carrier with the action multiplied by chi(g) (chi given as a value
    /// per group element).
    GModule twist(const std::vector<u64>& chi_values) const;

    /// Restriction to a subgroup: module over the standalone subgroup, with
    /// the element map from subgroup indices into G.
    std::pair<GModule, std::vector<u64>> restrict_to(Mask subgroup) const;

private:
    FiniteGroup G_;
    u64 p_;
    u64 K_ = 1;
    std::vector<u64> exps_;
    std::vector<u64> part_mods_;
    std::vector<u64> strides_;
    std::vector<std::vector<Vec>> action_; // [g][row] -> row vector
    u64 order_ = 1;
    u64 log_order_ = 0;
};

struct BruteCohomology {
    u64 log_order = 0;
    u64 order = 1;
    std::vector<u64> invariant_factors; // descending p-powers
};

/// 1-cocycles as explicit functions G -> A, plus the coboundary set.
struct H1Data {
    std::vector<std::vector<Vec>> cocycles; // [cocycle][element] -> value
    std::set<std::vector<u64>> coboundary_keys;
    BruteCohomology summary;

    std::vector<u64> key_of(const GModule& M, const std::vector<Vec>& f) const;
};

H1Data brute_h1(const GModule& M);
BruteCohomology brute_h2(const GModule& M);
BruteCohomology brute_cohomology(const GModule& M, int degree);

/// 2-cocycle tables f(g,h) with coboundary membership testing; class
/// representatives for cyclic groups come from the fixed-point construction
/// f_a(g^i, g^j) = [i+j >= N]·a, each validated against the raw cocycle
/// identity and separated by explicit coboundary tests.
class H2Classes {
public:
    explicit H2Classes(const GModule& M);

    using Table = std::vector<std::vector<Vec>>; // [g][h] -> value

    bool is_cocycle(const Table& t) const;
    bool is_coboundary(const Table& t) const;
    bool cohomologous(const Table& a, const Table& b) const;

    /// Representative tables, one per cohomology class (requires the acting
    /// group to be cyclic; the class count is cross-checked against brute_h2).
    const std::vector<Table>& representatives() const { return reps_; }

    /// σ·f for σ in a supergroup action: caller supplies the module action of
    /// σ and the conjugation permutation k -> σ^-1 k σ.
    Table transform(const Table& t, const std::vector<Vec>& sigma_mat,
                    const std::vector<u64>& conj_perm) const;

    std::size_t class_index_of(const Table& t) const;

    const GModule& module() const { return M_; }

private:
    GModule M_;
    PAdicRowSpace coboundary_space_;
    std::vector<Table> reps_;

    Vec table_lift(const Table& t) const;
};

} // namespace ptower::groups
