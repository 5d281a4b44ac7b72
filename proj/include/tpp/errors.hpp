#pragma once

#include <stdexcept>
#include <string>

namespace tpp {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// group construction / validation
struct NotAGroup : Error { using Error::Error; };
struct EmptyGeneratorList : Error { using Error::Error; };
struct ClosureCapExceeded : Error { using Error::Error; };
struct UnknownConstructor : Error { using Error::Error; };
struct ParamOutOfRange : Error { using Error::Error; };

// set algebra
struct EmptySet : Error { using Error::Error; };
struct GroupMismatch : Error { using Error::Error; };
struct CandidateInsideSet : Error { using Error::Error; };

// triples and upgrades
struct NotBasic : Error { using Error::Error; };
struct NotSorted : Error { using Error::Error; };

// search
struct CapExceeded : Error { using Error::Error; };
struct InvalidDegrees : Error { using Error::Error; };

// reduction
struct NothingDeletable : Error { using Error::Error; };
struct ElementNotInTriple : Error { using Error::Error; };

// io / orchestration
struct IoError : Error { using Error::Error; };

/// Raised when a postcondition the library itself guarantees is found
/// broken at runtime (maps to CLI exit code 3).
struct InternalError : Error { using Error::Error; };

}  // namespace tpp
