#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracsolve {

/// Error categories surfaced by the library. CLI maps these to exit codes.
enum class Errc {
    dimension_mismatch,
    unsupported_order,
    bad_span,
    bad_initial_shape,
    bad_config,
    domain_error,
    convergence_error,
    index_error,
    plan_error,
    singular_matrix,
    diverged,
    max_iterations,
    missing_jacobian,
    length_mismatch,
    unknown_model,
    file_not_found,
    no_exact_solution,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Non-finite state encountered while stepping; carries the offending step.
class DivergedError : public Error {
public:
    DivergedError(std::size_t step, const std::string& msg)
        : Error(Errc::diverged, msg), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace fracsolve
