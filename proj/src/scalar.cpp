#include "gradfrob/scalar.hpp"

#include <cctype>
#include <limits>

namespace gradfrob {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  return Field(Kind::prime, static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view literal) {
  if (literal == "Q") return rationals();
  if (literal.size() >= 2 && literal[0] == 'F' && is_integer_literal(literal.substr(1)) &&
      literal[1] != '-' && literal[1] != '+') {
    mpz_class p = parse_integer(literal.substr(1));
    if (p > std::numeric_limits<std::uint32_t>::max()) {
      throw std::invalid_argument("field characteristic too large: " + std::string(literal));
    }
    return prime(p.get_ui());
  }
  throw std::invalid_argument("unknown field literal '" + std::string(literal) +
                              "' (expected Q or F<p>)");
}

std::string Field::to_string() const {
  return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& field) { return from_int(field, 0); }

Scalar Scalar::one(const Field& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const Field& field, long long value) {
  if (field.is_rationals()) return Scalar(mpq_class(static_cast<long>(value)));
  const auto p = static_cast<long long>(field.characteristic());
  long long r = value % p;
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<std::uint32_t>(r), field.characteristic()});
}

Scalar Scalar::from_rational(mpq_class value) {
  value.canonicalize();
  return Scalar(std::move(value));
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(Field::Kind::prime, r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{inverse_mod(r->value, r->modulus), r->modulus});
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

void Scalar::require_same_field(const Scalar& rhs) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&rhs.value_);
  if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus)) {
    throw FieldMismatch("arithmetic between scalars of different fields");
  }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t s = std::uint64_t{r->value} + std::get<Residue>(rhs.value_).value;
    if (s >= r->modulus) s -= r->modulus;
    r->value = static_cast<std::uint32_t>(s);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const std::uint32_t b = std::get<Residue>(rhs.value_).value;
    r->value = r->value >= b ? r->value - b : r->value + (r->modulus - b);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = static_cast<std::uint32_t>(std::uint64_t{r->value} *
                                          std::get<Residue>(rhs.value_).value % r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  mpq_class q = -std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

bool operator==(const Scalar& lhs, const Scalar& rhs) { return lhs.value_ == rhs.value_; }

Scalar parse_scalar(std::string_view text, const Field& field) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw std::invalid_argument("malformed scalar literal '" + std::string(text) + "'");
    }
    const mpz_class value = parse_integer(text);
    if (field.is_rationals()) return Scalar::from_rational(mpq_class(value));
    return Scalar::from_int(field, reduce(value, field.characteristic()));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw std::invalid_argument("malformed scalar literal '" + std::string(text) + "'");
  }
  if (!field.is_rationals()) {
    throw std::invalid_argument("fraction literal '" + std::string(text) + "' given to " +
                                field.to_string());
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Scalar::from_rational(mpq_class(parse_integer(num), d));
}

Scalar sample_scalar(const Field& field, Rng& rng, std::uint64_t bound) {
  if (field.is_prime_field()) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
    return Scalar::from_int(field, dist(rng));
  }
  if (bound == 0) bound = 1;
  const auto b = static_cast<long long>(bound);
  std::uniform_int_distribution<long long> dist(-b, b);
  return Scalar::from_int(field, dist(rng));
}

std::uint64_t sample_set_size(const Field& field, std::uint64_t bound) {
  if (field.is_prime_field()) return field.characteristic();
  if (bound == 0) bound = 1;
  return 2 * bound + 1;
}

}  // namespace gradfrob
