#pragma once

#include <stdexcept>
#include <string>

namespace radlab {

// Bad inputs: parameter ranges, preconditions, malformed requests.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// The computation itself failed (no convergence, no bracket, ...).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Integration reached r_max with the profile still positive.  Carries the
// last state so callers can report how far the run got.
class zero_not_found : public numerical_error {
public:
    zero_not_found(const std::string& what, double r_last, double phi_last)
        : numerical_error(what), r_last(r_last), phi_last(phi_last) {}
    double r_last;
    double phi_last;
};

} // namespace radlab
