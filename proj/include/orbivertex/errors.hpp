#pragma once

#include <stdexcept>
#include <string>

namespace orbivertex {

enum class errc {
    non_empty_core,
    size_mismatch,
    modulus_mismatch,
    window_underflow,
    non_unit_constant_term,
    divergent_substitution,
    cutoff_too_small,
    incompatible_order,
    non_integer_gamma_gap,
    zero_weight,
    zero_disk_factor,
    no_consistent_offset,
    invalid_input,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace orbivertex
