#ifndef XYD_ERRORS_HPP
#define XYD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xyd {

// Numeric failure categories surfaced through the C API as error codes.
enum class ErrorCode : int {
  Ok = 0,
  InvalidArgument = 1,
  QuadratureFailure = 2,
  UnsupportedRange = 3,
  PositivityViolation = 4,
  FormViolation = 5,
  DegenerateState = 6,
  DomainEdge = 7,
  MultiRoot = 8,
  NoPeak = 9,
  Internal = 10,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

struct QuadratureFailure : Error {
  explicit QuadratureFailure(const std::string& w)
      : Error(ErrorCode::QuadratureFailure, w) {}
};
struct UnsupportedRange : Error {
  explicit UnsupportedRange(const std::string& w)
      : Error(ErrorCode::UnsupportedRange, w) {}
};
struct PositivityViolation : Error {
  explicit PositivityViolation(const std::string& w)
      : Error(ErrorCode::PositivityViolation, w) {}
};
struct FormViolation : Error {
  explicit FormViolation(const std::string& w)
      : Error(ErrorCode::FormViolation, w) {}
};
struct DegenerateState : Error {
  explicit DegenerateState(const std::string& w)
      : Error(ErrorCode::DegenerateState, w) {}
};
struct DomainEdge : Error {
  explicit DomainEdge(const std::string& w) : Error(ErrorCode::DomainEdge, w) {}
};
struct MultiRoot : Error {
  explicit MultiRoot(const std::string& w) : Error(ErrorCode::MultiRoot, w) {}
};
struct NoPeak : Error {
  explicit NoPeak(const std::string& w) : Error(ErrorCode::NoPeak, w) {}
};
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w)
      : Error(ErrorCode::InvalidArgument, w) {}
};

const char* error_name(ErrorCode code);

}  // namespace xyd

#endif
