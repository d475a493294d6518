#pragma once

#include <stdexcept>
#include <string>

namespace chevkit {

/// Base class of all chevkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cartan type outside the supported rank range.
struct RankError : Error {
  using Error::Error;
};

/// Operation defined only for simply laced root systems.
struct NotSimplyLacedError : Error {
  using Error::Error;
};

/// p/q requested for alpha = +-beta, where the root string is undefined.
struct RootStringError : Error {
  using Error::Error;
};

/// alpha + beta is not a root.
struct NotComposableError : Error {
  using Error::Error;
};

/// Elements of different algebras mixed in one operation.
struct MismatchError : Error {
  using Error::Error;
};

/// Cocycle failed validation; the message carries the counterexample.
struct CocycleError : Error {
  using Error::Error;
};

/// Sign-extension identities clash; the message carries the witness.
struct SignConsistencyError : Error {
  using Error::Error;
};

/// Folding data failed an internal consistency check.
struct FoldingError : Error {
  using Error::Error;
};

/// Malformed textual input (root literals, type names).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace chevkit
