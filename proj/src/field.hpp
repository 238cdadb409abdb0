#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace idealkit {

class Polynomial;
class Ring;
class Coeff;

// Residue in [0, modulus).
struct ModInt {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;
};

// num/den over a parameter ring; den is nonzero with grevlex leading coefficient 1.
struct RatFunc {
  std::shared_ptr<const Polynomial> num;
  std::shared_ptr<const Polynomial> den;
};

class Field {
 public:
  enum class Kind { kRational, kPrime, kRationalFunction };

  static constexpr std::uint32_t kMaxPrime = 1u << 20;

  Field();  // the rationals
  static Field rationals();
  // p must be prime and below kMaxPrime.
  static Field prime(std::uint64_t p);
  static Field rational_functions(const Field& base, std::vector<std::string> parameters);
  // "Q", "Fp:5", "Q(x1,x2)", "Fp:2(t)".
  static Field parse(std::string_view descriptor);

  Kind kind() const;
  bool is_rational() const { return kind() == Kind::kRational; }
  bool is_prime() const { return kind() == Kind::kPrime; }
  bool is_rational_function() const { return kind() == Kind::kRationalFunction; }
  std::uint32_t characteristic() const;
  // Prime field modulus; 0 otherwise.
  std::uint32_t modulus() const;
  bool is_finite() const { return is_prime(); }

  const Field& base() const;
  const std::vector<std::string>& parameters() const;
  const Ring& parameter_ring() const;

  Coeff zero() const;
  Coeff one() const;
  Coeff from_integer(long v) const;
  Coeff from_mpz(const mpz_class& v) const;
  Coeff from_rational(const mpq_class& v) const;
  // i-th parameter of a rational function field.
  Coeff parameter(std::size_t i) const;
  // All elements of a prime field in increasing residue order.
  std::vector<Coeff> elements() const;

  bool owns(const Coeff& c) const;
  std::string descriptor() const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

class Coeff {
 public:
  Coeff() : v_(mpq_class(0)) {}
  explicit Coeff(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
  explicit Coeff(ModInt m) : v_(m) {}
  // Normalizes: strips the common monomial factor, the univariate gcd and makes den monic.
  static Coeff rational_function(const Polynomial& num, const Polynomial& den);

  bool is_rational() const { return v_.index() == 0; }
  bool is_mod() const { return v_.index() == 1; }
  bool is_rational_function() const { return v_.index() == 2; }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  ModInt mod() const { return std::get<ModInt>(v_); }
  const Polynomial& numerator() const { return *std::get<RatFunc>(v_).num; }
  const Polynomial& denominator() const { return *std::get<RatFunc>(v_).den; }

  bool is_zero() const;
  bool is_one() const;
  bool is_minus_one() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff operator-() const;
  Coeff inverse() const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  // Rational functions compare by cross-multiplication.
  friend bool operator==(const Coeff& a, const Coeff& b);
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  Coeff zero_like() const;
  Coeff one_like() const;
  Coeff from_integer_like(long v) const;
  bool same_field(const Coeff& o) const;

  // Deterministic total order used for tie-breaking only.
  int compare_key(const Coeff& o) const;
  // Negative rational, or a single-term polynomial with negative coefficient; prints with a leading minus.
  bool is_negative() const;
  // True when printing as a factor needs parentheses.
  bool is_compound() const;
  std::string to_string() const;

 private:
  std::variant<mpq_class, ModInt, RatFunc> v_;
  friend class Field;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
bool is_prime_u64(std::uint64_t n);

}  // namespace idealkit
