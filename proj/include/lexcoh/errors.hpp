#pragma once

#include <stdexcept>
#include <string>

namespace lexcoh {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: parse errors, bad ring data, incompatible contexts.
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

// Independent generic coordinate changes produced different initial ideals.
struct GinCertificationError : Error {
    explicit GinCertificationError(const std::string& what) : Error(what) {}
};

// A mechanically checked identity that must hold by theory failed on a
// concrete instance.  Reaching this means either a bug or a counterexample;
// it is never swallowed.
struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& what) : Error(what) {}
};

// Instance exceeds the configured desk-scale limits (generator caps,
// resolution length, construction degree bounds).
struct ResourceError : Error {
    explicit ResourceError(const std::string& what) : Error(what) {}
};

}  // namespace lexcoh
