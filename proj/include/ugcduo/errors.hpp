#pragma once
#include <stdexcept>
#include <string>

namespace ugcduo {

/// An interval of zero or negative length where a mean is required.
class degenerate_interval_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Expected market share exactly 1/2: the realized-share map is singular there.
class singular_share_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iteration orbit landed on the singular share mid-flight.
class singular_orbit_error : public singular_share_error {
public:
    explicit singular_orbit_error(int step)
        : singular_share_error("orbit reached share 1/2 at step " + std::to_string(step)),
          step_(step) {}
    int step() const noexcept { return step_; }

private:
    int step_;
};

/// A reported game solution failed its own deviation audit.
class inconsistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ugcduo
