#ifndef MODO_ERROR_HPP
#define MODO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace modo {

enum class Errc {
    division_by_zero,
    singular_matrix,
    dimension_mismatch,
    wrong_order,
    singular_leading_coefficient,
    noncommuting_pair,
    noncommuting_arguments,
    nonconstant_coefficients,
    unsupported_factorization,
    invalid_user_factorization,
    joint_minimality_failure,
    zero_denominator_entry,
    not_akns_shape,
    syntax_error,
    undeclared_symbol,
    zero_input,
    domain_mismatch,
};

const char* errc_name(Errc c);

class ModoError : public std::runtime_error {
  public:
    ModoError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw ModoError(code, what); }

} // namespace modo

#endif
