#pragma once

#include <stdexcept>
#include <string>

namespace matroidlab {

// Thrown when an exhaustively checked structural statement fails on an
// instance that satisfies its hypotheses. Tests treat any such throw as a
// failure, never as a recoverable condition.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace matroidlab
