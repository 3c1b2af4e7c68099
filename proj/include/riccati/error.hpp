#ifndef RICCATI_ERROR_HPP
#define RICCATI_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riccati {

/// Error codes shared by the whole library. The CLI maps them onto exit
/// codes: syntax_error -> 2, bound_violation -> 3, everything else -> 1.
enum class Errc {
    not_divisible,
    zero_divisor,
    undefined_gcd,
    undefined_roots,
    cannot_factor_zero,
    bad_modulus,
    linear_equation,
    degenerate_equation,
    not_a_solution,
    degenerate_seed_pair,
    degenerate_quadruple,
    not_solutions_of_same_equation,
    bad_parameters,
    bound_violation,
    not_reduced,
    not_a_trig_poly,
    syntax_error,
    bad_grid,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    Error(Errc code, std::string message, std::size_t position)
        : std::runtime_error(std::string(errc_name(code)) + " at offset " +
                             std::to_string(position) + ": " + message),
          code_(code),
          position_(position),
          has_position_(true) {}

    Errc code() const noexcept { return code_; }
    bool has_position() const noexcept { return has_position_; }
    std::size_t position() const noexcept { return position_; }

  private:
    Errc code_;
    std::size_t position_ = 0;
    bool has_position_ = false;
};

[[noreturn]] inline void raise(Errc code, std::string message) {
    throw Error(code, std::move(message));
}

}  // namespace riccati

#endif
