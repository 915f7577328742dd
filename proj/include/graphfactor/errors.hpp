#pragma once

#include <stdexcept>
#include <string>

namespace graphfactor {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6 line, edge list, f-spec, H selector).
struct ParseError : Error {
    using Error::Error;
};

/// A size guard or enumeration cap was exceeded. Refusal is loud, never a
/// silent truncation of the search space.
struct CapError : Error {
    using Error::Error;
};

/// A B-colored vertex with no incident edges cannot have odd degree; this is
/// reported distinctly because it signals instant non-existence rather than a
/// malformed input.
struct IsolatedBlueVertex : Error {
    explicit IsolatedBlueVertex(int v)
        : Error("B-colored vertex " + std::to_string(v) + " is isolated; no odd degree is achievable"),
          vertex(v) {}
    int vertex;
};

} // namespace graphfactor
