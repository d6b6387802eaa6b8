#pragma once

// Exact scalars over Q (GMP rationals, kept in lowest terms) or over a prime
// field F_p with p an odd prime. Every Scalar carries its field; mixing
// fields in one operation is an input_error, never a silent coercion.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qhopf/errors.hpp"

namespace qhopf {

enum class FieldKind : uint8_t { Rational, Prime };

struct Field {
  FieldKind kind = FieldKind::Rational;
  uint64_t p = 0;  // modulus, Prime only

  static Field rational() { return Field{FieldKind::Rational, 0}; }
  // Requires an odd prime < 2^31; p = 2 is rejected (sign characters and
  // dual-basis Gram inverses need -1 != 1).
  static Field prime(uint64_t p);

  bool operator==(const Field&) const = default;
  std::string to_string() const;
};

class Scalar {
 public:
  Scalar() = default;  // zero over Q

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long n);
  static Scalar of_ratio(const Field& f, long num, long den);
  // Accepts "n" or "n/d" (d nonzero, and invertible mod p for F_p).
  static Scalar parse(const Field& f, const std::string& s);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;  // input_error on zero
  bool operator==(const Scalar& o) const;

  // Human form: "5", "-3/2"; residues as plain digits.
  std::string to_string() const;
  // Serialized form: rationals always carry the slash ("5/1"), residues are
  // plain digits. parse() accepts both forms.
  std::string to_json_string() const;

  uint64_t residue() const;           // Prime only
  const mpq_class& rational() const;  // Rational only

 private:
  Field f_{};
  mpq_class q_{0};
  uint64_t r_ = 0;

  void check_same(const Scalar& o) const;
};

}  // namespace qhopf
