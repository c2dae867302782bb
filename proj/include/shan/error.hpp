#pragma once

#include <stdexcept>
#include <string>

namespace shan {

// Error taxonomy used across the library. Everything derives from Error so the
// CLI boundary can catch a single type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };  // operand shape mismatch
struct ParameterError : Error { using Error::Error; };  // invalid argument value
struct ContractError : Error { using Error::Error; };   // API misuse (non-scalar loss, ...)
struct FormatError : Error { using Error::Error; };     // malformed file contents
struct IoError : Error { using Error::Error; };         // missing or unreadable file
struct IntegrityError : Error { using Error::Error; };  // dangling reference, empty corpus
struct LookupError : Error { using Error::Error; };     // unknown image/caption id
struct EvalError : Error { using Error::Error; };       // non-finite numeric result

}  // namespace shan
