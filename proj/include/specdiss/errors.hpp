#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specdiss {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_parameter : error {
    using error::error;
};

struct invalid_edge : error {
    using error::error;
};

struct invalid_interval : error {
    using error::error;
};

// Malformed text input; offset is the byte position of the first bad byte.
struct parse_error : error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t at) : error(msg + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

struct resource_limit : error {
    using error::error;
};

struct convergence_error : error {
    double best_rho;
    double best_residual;
    int iterations;
    convergence_error(const std::string& msg, double rho, double res, int iters)
        : error(msg), best_rho(rho), best_residual(res), iterations(iters) {}
};

struct model_error : error {
    using error::error;
};

struct no_candidates : error {
    using error::error;
};

}  // namespace specdiss
