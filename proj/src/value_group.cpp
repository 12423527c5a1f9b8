#include "ptower/value_group.hpp"

#include <algorithm>
#include <numeric>

namespace ptower::valn {

namespace {

// Row-style Hermite normal form for small integer matrices; pivots positive,
// entries above pivots reduced. Rows span the same lattice afterwards.
void hermite(std::vector<std::vector<i64>>& rows, std::size_t width) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
        // Euclid over the entries in this column at or below pivot_row.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot_row; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (best == rows.size() ||
                    std::abs(rows[r][col]) < std::abs(rows[best][col]))
                    best = r;
            }
            if (best == rows.size()) break;
            std::swap(rows[pivot_row], rows[best]);
            bool reduced_all = true;
            for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                i64 q = rows[r][col] / rows[pivot_row][col];
                for (std::size_t j = 0; j < width; ++j) rows[r][j] -= q * rows[pivot_row][j];
                if (rows[r][col] != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (rows[pivot_row][col] == 0) continue;
        if (rows[pivot_row][col] < 0)
            for (std::size_t j = 0; j < width; ++j) rows[pivot_row][j] = -rows[pivot_row][j];
        // Reduce the rows above.
        for (std::size_t r = 0; r < pivot_row; ++r) {
            i64 q = rows[r][col] / rows[pivot_row][col];
            if (rows[r][col] % rows[pivot_row][col] < 0) --q; // floor division
            if (q != 0)
                for (std::size_t j = 0; j < width; ++j) rows[r][j] -= q * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
}

} // namespace

LexValueGroup::LexValueGroup(u64 rank, u64 p, u64 p_divisible_prefix,
                             std::vector<std::vector<Rational>> generators)
    : rank_(rank), p_(p), prefix_(p_divisible_prefix), gens_(std::move(generators)) {
    if (rank_ == 0) throw domain_error("LexValueGroup: rank must be positive");
    if (prefix_ > rank_) throw domain_error("LexValueGroup: prefix exceeds rank");
    if (!is_prime(p_)) throw domain_error("LexValueGroup: p must be prime");
    canonicalize();
}

void LexValueGroup::canonicalize() {
    std::size_t width = rank_ - prefix_;
    // Denominators must be p-powers; prefix coordinates absorb into Z[1/p].
    u64 D = 1;
    for (auto& g : gens_) {
        if (g.size() != rank_) throw domain_error("LexValueGroup: generator rank mismatch");
        for (std::size_t i = 0; i < rank_; ++i) {
            u64 den = (u64)g[i].den();
            u64 rest = den;
            while (rest % p_ == 0) rest /= p_;
            if (rest != 1)
                throw domain_error("LexValueGroup: generator denominator is not a p-power");
            if (i >= prefix_) D = lcm_u64(D, den);
        }
    }
    denom_ = D;
    hnf_.clear();
    if (width == 0) {
        denom_ = 1;
        return;
    }
    std::vector<std::vector<i64>> rows;
    for (std::size_t i = 0; i < width; ++i) {
        std::vector<i64> r(width, 0);
        r[i] = (i64)D;
        rows.push_back(std::move(r));
    }
    for (const auto& g : gens_) {
        std::vector<i64> r(width, 0);
        for (std::size_t i = prefix_; i < rank_; ++i) {
            Rational scaled = g[i] * Rational((i64)D);
            require(scaled.is_integer(), "LexValueGroup: scaling did not clear denominators");
            r[i - prefix_] = scaled.num();
        }
        rows.push_back(std::move(r));
    }
    hermite(rows, width);
    require(rows.size() == width, "LexValueGroup: lattice lost full rank");
    // Minimize the denominator: strip common p factors.
    while (denom_ % p_ == 0) {
        bool divisible = true;
        for (const auto& r : rows)
            for (i64 x : r)
                if (x % (i64)p_ != 0) divisible = false;
        if (!divisible) break;
        for (auto& r : rows)
            for (auto& x : r) x /= (i64)p_;
        denom_ /= p_;
    }
    hnf_ = std::move(rows);
}

LexValueGroup LexValueGroup::adjoin(const std::vector<Rational>& gen) const {
    auto gens = gens_;
    gens.push_back(gen);
    return LexValueGroup(rank_, p_, prefix_, std::move(gens));
}

u64 LexValueGroup::finite_index_over_standard() const {
    // [ (1/D)·L : Z^w ] = D^w / det(L).
    std::size_t width = rank_ - prefix_;
    if (width == 0) return 1;
    u128 det = 1;
    for (std::size_t i = 0; i < width; ++i) det *= (u64)hnf_[i][i];
    u128 num = 1;
    for (std::size_t i = 0; i < width; ++i) num *= denom_;
    require(num % det == 0, "LexValueGroup: index not integral");
    u128 idx = num / det;
    require(idx <= UINT64_MAX, "LexValueGroup: index overflow");
    return (u64)idx;
}

bool LexValueGroup::contains(const std::vector<Rational>& v) const {
    if (v.size() != rank_) return false;
    for (std::size_t i = 0; i < prefix_; ++i) {
        u64 den = (u64)v[i].den();
        while (den % p_ == 0) den /= p_;
        if (den != 1) return false;
    }
    // Solve y·H = D·v by forward substitution: H is upper triangular, so
    // column c is settled by row c once earlier rows are subtracted.
    std::size_t width = rank_ - prefix_;
    std::vector<Rational> target(width);
    for (std::size_t i = 0; i < width; ++i) target[i] = v[prefix_ + i] * Rational((i64)denom_);
    for (std::size_t col = 0; col < width; ++col) {
        if (target[col].is_zero()) continue;
        Rational coef = target[col] / Rational(hnf_[col][col]);
        if (!coef.is_integer()) return false;
        for (std::size_t j = 0; j < width; ++j)
            target[j] -= coef * Rational(hnf_[col][j]);
    }
    for (const auto& t : target)
        if (!t.is_zero()) return false;
    return true;
}

bool LexValueGroup::operator==(const LexValueGroup& o) const {
    return rank_ == o.rank_ && p_ == o.p_ && prefix_ == o.prefix_ && denom_ == o.denom_ &&
           hnf_ == o.hnf_;
}

std::string LexValueGroup::str() const {
    std::string s;
    for (std::size_t i = 0; i < rank_; ++i) {
        if (i) s += " x ";
        if (i < prefix_)
            s += "Z[1/" + std::to_string(p_) + "]";
        else
            s += "Z";
    }
    if (finite_index_over_standard() > 1)
        s += " refined by index " + std::to_string(finite_index_over_standard());
    return s;
}

bool in_p_gamma(const std::vector<i64>& v, u64 p) {
    for (i64 x : v)
        if (((x % (i64)p) + (i64)p) % (i64)p != 0) return false;
    return true;
}

bool independent_mod_p(const std::vector<i64>& a, const std::vector<i64>& b, u64 p) {
    // Rank-2 test over F_p.
    if (in_p_gamma(a, p) || in_p_gamma(b, p)) return false;
    // b must not be a scalar multiple of a mod p: check all 2x2 minors.
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            i64 det = a[i] * b[j] - a[j] * b[i];
            if (((det % (i64)p) + (i64)p) % (i64)p != 0) return true;
        }
    return false;
}

} // namespace ptower::valn
