#ifndef FK_ERROR_HPP
#define FK_ERROR_HPP

#include <stdexcept>

namespace fk {

// A broken internal invariant, e.g. a reduction trace that does not fit the
// family it claims to describe. Not reachable through valid inputs.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace fk

#endif
