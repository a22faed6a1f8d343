#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gapset {

using Int = std::int64_t;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
  using Error::Error;
};

// An operation was applied outside its domain (ratio of the empty gapset,
// brute-force enumeration past its guard, a map precondition, ...).
class DomainError : public Error {
  using Error::Error;
};

// The configured node-expansion budget was exhausted.
class BudgetExceeded : public Error {
  using Error::Error;
};

// Witness that a candidate set is not a gapset: z is in the set,
// z = x + y with positive x, y, and neither summand is in the set.
struct GapsetViolation {
  Int z = 0;
  Int x = 0;
  Int y = 0;
  std::string describe() const;
};

class InvalidGapset : public Error {
 public:
  explicit InvalidGapset(const GapsetViolation& v);
  const GapsetViolation& violation() const { return violation_; }

 private:
  GapsetViolation violation_;
};

// First violated constraint of the Kunz inequality system, in
// lexicographic (i, j) order.
struct KunzViolation {
  enum class Kind {
    kNonPositive,  // k_i < 1
    kDirect,       // k_i + k_j < k_{i+j}        (i + j < m)
    kWrapped,      // k_i + k_j + 1 < k_{i+j-m}  (i + j > m)
  };
  Kind kind = Kind::kDirect;
  Int i = 0;  // 1-based coordinate indices
  Int j = 0;
  Int lhs = 0;
  Int rhs = 0;
  Int m = 0;  // multiplicity of the offending tuple (its length + 1)

  Int target_index() const { return kind == Kind::kWrapped ? i + j - m : i + j; }
  std::string describe() const;
};

class InvalidKunzTuple : public Error {
 public:
  explicit InvalidKunzTuple(const KunzViolation& v);
  const KunzViolation& violation() const { return violation_; }

 private:
  KunzViolation violation_;
};

}  // namespace gapset
