#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypertest {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i32 = std::int32_t;
using i64 = std::int64_t;

// Every failure the library raises deliberately carries one of these kinds.
// Guard failures (work limits, representation limits) and postcondition
// failures (randomized constructions that exhausted their retry budget) are
// kept apart so the CLI can map them to distinct exit codes.
enum class ErrorKind {
  InvalidArgument,
  Guard,
  Postcondition,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) {
  throw Error(ErrorKind::InvalidArgument, msg);
}
[[noreturn]] inline void fail_guard(const std::string& msg) {
  throw Error(ErrorKind::Guard, msg);
}
[[noreturn]] inline void fail_postcondition(const std::string& msg) {
  throw Error(ErrorKind::Postcondition, msg);
}

// Default work limit for subset/assignment enumerations. Operations that
// enumerate take an explicit cap so callers can relax or tighten it; this is
// the documented default.
inline constexpr u64 kDefaultEnumCap = 10'000'000;

}  // namespace hypertest
