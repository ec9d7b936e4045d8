#include "sccore/common.hpp"

#include <atomic>

namespace sccore {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidHooks: return "InvalidHooks";
    case ErrorCode::NotSelfConjugate: return "NotSelfConjugate";
    case ErrorCode::OutOfDiagram: return "OutOfDiagram";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::LengthTooSmall: return "LengthTooSmall";
    case ErrorCode::NotACore: return "NotACore";
    case ErrorCode::AlreadyCore: return "AlreadyCore";
    case ErrorCode::UnsupportedT: return "UnsupportedT";
    case ErrorCode::MissingTable: return "MissingTable";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotInB: return "NotInB";
    case ErrorCode::NoKnownCharacterization: return "NoKnownCharacterization";
    case ErrorCode::UndefinedAtN: return "UndefinedAtN";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {
std::atomic<int> g_oracle_cap{200};
}

int oracle_cap() noexcept { return g_oracle_cap.load(std::memory_order_relaxed); }

void set_oracle_cap(int cap) {
  if (cap < 0) throw Error(ErrorCode::InvalidArgument, "oracle cap must be non-negative");
  g_oracle_cap.store(cap, std::memory_order_relaxed);
}

}  // namespace sccore
