#pragma once

#include <stdexcept>
#include <string>

namespace arglab {

// Every throwing path in the library raises Error with one of these kinds,
// so callers (and the CLI exit-code mapping) can dispatch without string
// matching.  Check failures that carry witnesses are returned as result
// structs instead of being thrown.
enum class ErrorKind {
  InvalidPrimePower,
  DivisionByZero,
  ZeroInput,
  NoQuarticStructure,
  InvalidEdge,
  SameVertex,
  NotHalfCaseSrg,
  NotAntipodal,
  NoUniqueAntipode,
  MalformedInstance,
  InvalidPartition,
  MalformedGraph6,
  MalformedJson,
  CongruenceError,
  InvalidOrder,
  InvalidValency,
  OrderLimitExceeded,
  NotApplicable,
  InfeasibleParameters,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPrimePower: return "InvalidPrimePower";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NoQuarticStructure: return "NoQuarticStructure";
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::NotHalfCaseSrg: return "NotHalfCaseSrg";
    case ErrorKind::NotAntipodal: return "NotAntipodal";
    case ErrorKind::NoUniqueAntipode: return "NoUniqueAntipode";
    case ErrorKind::MalformedInstance: return "MalformedInstance";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::MalformedJson: return "MalformedJson";
    case ErrorKind::CongruenceError: return "CongruenceError";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidValency: return "InvalidValency";
    case ErrorKind::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, long long detail_a = 0,
        long long detail_b = 0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_a_(detail_a),
        detail_b_(detail_b) {}

  ErrorKind kind() const { return kind_; }
  // Operation-specific payload, e.g. (vertex, count) for NoUniqueAntipode.
  long long detail_a() const { return detail_a_; }
  long long detail_b() const { return detail_b_; }

 private:
  ErrorKind kind_;
  long long detail_a_;
  long long detail_b_;
};

}  // namespace arglab
