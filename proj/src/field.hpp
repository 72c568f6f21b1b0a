#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace enlab {

// Thrown on malformed user input (files, CLI literals, precondition violations).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a pair of differentials fails d∘d = 0; carries one witness entry.
class NotAComplexError : public std::runtime_error {
 public:
  NotAComplexError(const std::string& msg, int row, int col, std::string value)
      : std::runtime_error(msg), row(row), col(col), value(std::move(value)) {}
  int row;
  int col;
  std::string value;
};

// Exact field element. Rationals are kept canonical by gmpxx; prime-field
// values are integer residues in [0, p) with denominator 1.
using Scalar = mpq_class;

// The coefficient field: ℚ or 𝔽_p for a prime p < 2^31. All scalar
// arithmetic goes through this class so both kinds share one element type.
class Field {
 public:
  enum class Kind { Rational, Prime };

  static Field rationals();
  static Field prime(std::uint64_t p);

  // "Q" or "F:p" (CLI syntax).
  static Field parse(const std::string& spec);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return reduce(Scalar(1)); }
  Scalar from_long(long v) const { return reduce(Scalar(v)); }
  // Accepts a decimal integer or "num/den".
  Scalar from_string(const std::string& s) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  std::string str(const Scalar& a) const;
  std::string name() const;  // "Q" or "F:p"

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Scalar reduce(const Scalar& a) const;

  Kind kind_;
  std::uint64_t p_ = 0;
};

}  // namespace enlab
