#ifndef LEGENDRIAN_ERRORS_HPP
#define LEGENDRIAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace legendrian {

// Malformed or illegal input: bad diagram, unknown edge, bad rotation system.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed request that has no answer: inadmissible invariants, no zigzag at
// a site, a move pattern that does not match, no subdivision witness.
class Infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace legendrian

#endif
