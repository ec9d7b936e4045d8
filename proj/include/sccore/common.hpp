#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sccore {

/// Exact integer used for every coefficient and count.
using BigInt = boost::multiprecision::cpp_int;

enum class ErrorCode {
  InvalidPartition,
  InvalidHooks,
  NotSelfConjugate,
  OutOfDiagram,
  ResourceLimit,
  LengthTooSmall,
  NotACore,
  AlreadyCore,
  UnsupportedT,
  MissingTable,
  OutOfRange,
  OutOfDomain,
  NotInB,
  NoKnownCharacterization,
  UndefinedAtN,
  NotCoprime,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Process-wide cap on brute-force enumeration sizes (partition oracles).
int oracle_cap() noexcept;
void set_oracle_cap(int cap);

}  // namespace sccore
