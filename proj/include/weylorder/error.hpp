#ifndef WEYLORDER_ERROR_HPP
#define WEYLORDER_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylorder {

enum class ErrorCode : std::uint8_t {
  InvalidArgument,
  RankMismatch,
  NotDominant,
  NotAdmissible,
  GuardExceeded,
  Parse,
  Internal,
};

/// All library failures are reported as this exception; the C API maps `code()`
/// onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown when an enumeration would exceed the configured size cap.
class GuardExceeded : public Error {
 public:
  GuardExceeded(std::uint64_t estimate, std::uint64_t guard)
      : Error(ErrorCode::GuardExceeded,
              "enumeration guard exceeded: estimated " + std::to_string(estimate) +
                  " tuples, guard is " + std::to_string(guard)),
        estimate_(estimate),
        guard_(guard) {}

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t guard() const noexcept { return guard_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t guard_;
};

}  // namespace weylorder

#endif  // WEYLORDER_ERROR_HPP
