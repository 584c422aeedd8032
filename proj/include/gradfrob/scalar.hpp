#pragma once

// Exact field elements: arbitrary-precision rationals or residues mod a prime
// p < 2^31. Nothing in the library ever touches floating point.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace gradfrob {

/// Random state threaded explicitly through every randomized routine.
using Rng = std::mt19937_64;

class Field {
 public:
  enum class Kind { rationals, prime };

  Field() = default;

  static Field rationals() noexcept { return Field{}; }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Accepts the declaration literals "Q" and "F<p>" (e.g. "F7").
  static Field parse(std::string_view literal);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::rationals; }
  bool is_prime_field() const noexcept { return kind_ == Kind::prime; }
  /// 0 for Q.
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::rationals;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  static Scalar zero(const Field& field);
  static Scalar one(const Field& field);
  static Scalar from_int(const Field& field, long long value);
  static Scalar from_rational(mpq_class value);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  /// Valid only over Q.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  /// Valid only over F_p; canonical representative in [0, p).
  std::uint32_t residue() const { return std::get<Residue>(value_).value; }

  /// "a" or "a/b" over Q (lowest terms, positive denominator); "r" over F_p.
  std::string to_string() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar operator-() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

 private:
  struct Residue {
    std::uint32_t value = 0;
    std::uint32_t modulus = 2;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  void require_same_field(const Scalar& rhs) const;

  std::variant<mpq_class, Residue> value_;
};

/// Parses "a" or "a/b". Over F_p only integers are accepted; they are reduced
/// mod p. Throws std::invalid_argument on malformed literals, zero
/// denominators and fraction literals over a prime field.
Scalar parse_scalar(std::string_view text, const Field& field);

/// Uniform integer in [-bound, bound] over Q (bound >= 1), uniform residue over
/// F_p (bound ignored).
Scalar sample_scalar(const Field& field, Rng& rng, std::uint64_t bound);

/// Size of the set sample_scalar draws from.
std::uint64_t sample_set_size(const Field& field, std::uint64_t bound);

}  // namespace gradfrob
