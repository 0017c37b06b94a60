#ifndef OFG_ERRORS_HPP
#define OFG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ofg {

// Stable machine-readable codes. The CLI prints them as `error[<code>]: ...`
// and maps ValidationError -> exit 1, InternalError -> exit 2.
enum class ErrorCode {
  InvalidMv,        // malformed MV string or assignment fails validity
  InvalidAngles,    // angles don't sum to 360, non-positive, wrong count
  Kawasaki,         // alternating angle sum nonzero
  InvalidFace,      // face/crease index out of range
  LengthMismatch,   // assignments of different degree combined
  DegreeMismatch,   // pattern degree disagrees with argument
  LimitExceeded,    // n above the configured enumeration limit
  BadFormat,        // unparsable document or unknown format selector
  Internal,         // consistency failure: formula/brute mismatch, exhausted
                    // search for a face whose existence is guaranteed
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

// Caller handed us bad data (exit 1 in the CLI).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A step the mathematics guarantees cannot fail did; always a bug
// (exit 2 in the CLI).
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error(ErrorCode::Internal, message) {}
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidMv: return "invalid-mv";
    case ErrorCode::InvalidAngles: return "invalid-angles";
    case ErrorCode::Kawasaki: return "kawasaki";
    case ErrorCode::InvalidFace: return "invalid-face";
    case ErrorCode::LengthMismatch: return "length-mismatch";
    case ErrorCode::DegreeMismatch: return "degree-mismatch";
    case ErrorCode::LimitExceeded: return "limit-exceeded";
    case ErrorCode::BadFormat: return "bad-format";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace ofg

#endif  // OFG_ERRORS_HPP
