#pragma once

#include <stdexcept>
#include <string>

namespace ptower {

// Input violates a documented precondition (CLI exit code 2).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_divisor_error : domain_error {
    using domain_error::domain_error;
};
struct non_semisimple_error : domain_error {
    using domain_error::domain_error;
};
struct bad_characteristic_error : domain_error {
    using domain_error::domain_error;
};
struct residue_char_p_error : domain_error {
    using domain_error::domain_error;
};
struct hypothesis_violated_error : domain_error {
    using domain_error::domain_error;
};
struct not_primitive_root_error : domain_error {
    using domain_error::domain_error;
};
struct zero_slot_error : domain_error {
    using domain_error::domain_error;
};
struct not_coprime_error : domain_error {
    using domain_error::domain_error;
};
struct out_of_range_error : domain_error {
    using domain_error::domain_error;
};
struct character_not_trivial_error : domain_error {
    using domain_error::domain_error;
};
struct invalid_instance_error : domain_error {
    using domain_error::domain_error;
};
struct too_large_error : domain_error {
    using domain_error::domain_error;
};
struct bad_order_error : domain_error {
    using domain_error::domain_error;
};
struct precision_exhausted_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency check failed; indicates a bug, not bad input.
struct check_failure : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw check_failure(msg);
}

} // namespace ptower
