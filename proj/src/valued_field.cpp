#include "ptower/valued_field.hpp"

namespace ptower::valn {

void ValuedFieldDescriptor::validate() const {
    if (rank == 0) throw domain_error("descriptor: rank must be positive");
    if (!is_prime(p) || p < 3) throw domain_error("descriptor: p must be an odd prime");
    if (mu_p_flags.size() != rank + 1)
        throw domain_error("descriptor: need rank+1 residue-chain flags");
    for (std::size_t j = 1; j < mu_p_flags.size(); ++j)
        if (mu_p_flags[j - 1] && !mu_p_flags[j])
            throw domain_error("descriptor: μ_p flags must be monotone along coarsenings");
    if (residue_q) {
        auto split = prime_power_split(*residue_q);
        if (!split) throw domain_error("descriptor: residue order must be a prime power");
        if (split->first == p)
            throw residue_char_p_error("descriptor: residue characteristic equals p");
        bool has_mu = (*residue_q - 1) % p == 0;
        if (has_mu != mu_p_flags[rank])
            throw domain_error("descriptor: top μ_p flag contradicts the residue order");
    }
}

ValuedFieldDescriptor ValuedFieldDescriptor::laurent(u64 q, u64 p, u64 rank) {
    ValuedFieldDescriptor d;
    d.rank = rank;
    d.p = p;
    d.residue_q = q;
    d.residue_label = "F" + std::to_string(q);
    // Equicharacteristic Laurent tower: every coarsening has the same
    // constant field, so all flags agree with the residue.
    bool has_mu = (q - 1) % p == 0;
    d.mu_p_flags.assign(rank + 1, has_mu);
    d.validate();
    return d;
}

ExtendToLResult extend_to_L(const ValuedFieldDescriptor& desc, u64 p) {
    desc.validate();
    if (desc.p != p) throw domain_error("extend_to_L: descriptor built for a different p");
    ExtendToLResult r{1, 1, 1, LexValueGroup::standard(desc.rank, p), ""};
    if (desc.residue_q) {
        // [L:F] = [k(μ_p):k] for equicharacteristic Laurent fields.
        u64 s = multiplicative_order(*desc.residue_q % p, p);
        r.degree_LF = s;
        r.residue_ext_degree = s;
    } else {
        if (!desc.degree_LF || !desc.residue_mu_degree)
            throw domain_error("extend_to_L: symbolic residue needs explicit degrees");
        r.degree_LF = *desc.degree_LF;
        r.residue_ext_degree = desc.residue_has_mu_p() ? 1 : *desc.residue_mu_degree;
    }
    if (r.degree_LF % r.residue_ext_degree != 0)
        throw domain_error("extend_to_L: residue degree does not divide [L:F]");
    r.ell = r.degree_LF / r.residue_ext_degree;
    r.residue_label = desc.residue_has_mu_p() ? desc.residue_label
                                              : desc.residue_label + "(mu_" + std::to_string(p) + ")";
    return r;
}

FpPrediction predict_Fp_extension(const ValuedFieldDescriptor& desc, u64 p) {
    desc.validate();
    if (desc.p != p) throw domain_error("predict_Fp_extension: descriptor built for a different p");
    FpPrediction out{desc.residue_label + "(" + std::to_string(p) + ")",
                     LexValueGroup::standard(desc.rank, p)};
    // P is the largest coarsening whose quotient still misses μ_p: the value
    // group scales by Z[1/p] exactly on the coordinates below it.
    u64 t_star = 0;
    bool found = false;
    for (u64 j = 0; j <= desc.rank; ++j)
        if (!desc.mu_p_flags[j]) {
            t_star = j;
            found = true;
        }
    u64 prefix = found ? desc.rank - t_star : desc.rank;
    out.value_group = LexValueGroup(desc.rank, p, prefix);
    return out;
}

std::vector<StageReport> count_extensions_along(const ValuedFieldDescriptor& desc,
                                                const std::vector<KummerCase>& steps) {
    desc.validate();
    if (!desc.residue_q)
        throw domain_error("count_extensions_along: needs a finite residue field");
    std::vector<StageReport> out;
    u64 q = *desc.residue_q;
    u64 count = 1, value_index = 1;
    u64 ell0 = 0;
    for (u64 stage = 0; stage <= steps.size(); ++stage) {
        StageReport rep;
        rep.stage = stage;
        rep.residue_q = q;
        // Prop 4.3 at this stage: ℓ = [S'(μ_p):S'] / [residue(μ_p):residue];
        // both degrees are the multiplicative order of the residue size mod p.
        u64 top = multiplicative_order(q % desc.p, desc.p);
        u64 bottom = top;
        rep.ell = top / bottom;
        rep.extension_count = count;
        rep.value_index = value_index;
        if (stage == 0) ell0 = rep.ell;
        require(rep.ell == ell0, "count_extensions_along: ℓ changed along the tower");
        out.push_back(rep);
        if (stage == steps.size()) break;
        switch (steps[stage]) {
            case KummerCase::I:
                value_index *= desc.p;
                break;
            case KummerCase::II:
                q = checked_pow(q, desc.p);
                break;
            case KummerCase::III:
                count *= desc.p;
                break;
        }
    }
    return out;
}

} // namespace ptower::valn
