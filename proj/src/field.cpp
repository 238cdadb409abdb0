#include "field.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"
#include "polynomial.hpp"
#include "ring.hpp"

namespace idealkit {

struct Field::Impl {
  Kind kind = Kind::kRational;
  std::uint32_t p = 0;
  std::unique_ptr<Field> base;
  std::vector<std::string> params;
  std::unique_ptr<Ring> ring;
};

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) fail(ErrorCode::kDivisionByZero, "residue is not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

namespace {

const std::shared_ptr<const Field::Impl>& rational_impl() {
  static const std::shared_ptr<const Field::Impl> impl = std::make_shared<const Field::Impl>();
  return impl;
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Field::Field() : impl_(rational_impl()) {}

Field Field::rationals() { return Field(); }

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxPrime) fail(ErrorCode::kBadFieldDescriptor, "prime modulus must be below 2^20");
  if (!is_prime_u64(p)) fail(ErrorCode::kBadFieldDescriptor, std::to_string(p) + " is not prime");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kPrime;
  impl->p = static_cast<std::uint32_t>(p);
  return Field(std::move(impl));
}

Field Field::rational_functions(const Field& base, std::vector<std::string> parameters) {
  if (base.is_rational_function()) fail(ErrorCode::kBadFieldDescriptor, "nested rational function fields");
  if (parameters.empty()) fail(ErrorCode::kBadFieldDescriptor, "rational function field needs parameters");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kRationalFunction;
  impl->p = base.characteristic();
  impl->base = std::make_unique<Field>(base);
  impl->params = parameters;
  impl->ring = std::make_unique<Ring>(base, std::move(parameters));
  return Field(std::move(impl));
}

Field Field::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::string head = s;
  std::vector<std::string> params;
  auto open = s.find('(');
  if (open != std::string::npos) {
    if (s.back() != ')') fail(ErrorCode::kBadFieldDescriptor, "unbalanced parameter list in '" + s + "'");
    head = s.substr(0, open);
    std::string body = s.substr(open + 1, s.size() - open - 2);
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || body[i] == ',') {
        std::string name = body.substr(start, i - start);
        if (!is_valid_identifier(name)) fail(ErrorCode::kBadFieldDescriptor, "bad parameter name '" + name + "'");
        params.push_back(name);
        start = i + 1;
      }
    }
  }
  Field base;
  if (head == "Q") {
    base = rationals();
  } else if (head.rfind("Fp:", 0) == 0) {
    std::string digits = head.substr(3);
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(ErrorCode::kBadFieldDescriptor, "bad prime in '" + s + "'");
    base = prime(std::stoull(digits));
  } else {
    fail(ErrorCode::kBadFieldDescriptor, "unknown field '" + s + "'");
  }
  if (params.empty()) return base;
  return rational_functions(base, std::move(params));
}

Field::Kind Field::kind() const { return impl_->kind; }
std::uint32_t Field::characteristic() const { return impl_->p; }
std::uint32_t Field::modulus() const { return impl_->kind == Kind::kPrime ? impl_->p : 0; }

const Field& Field::base() const {
  if (!impl_->base) fail(ErrorCode::kInvalidArgument, "field has no base");
  return *impl_->base;
}
const std::vector<std::string>& Field::parameters() const { return impl_->params; }
const Ring& Field::parameter_ring() const {
  if (!impl_->ring) fail(ErrorCode::kInvalidArgument, "field has no parameters");
  return *impl_->ring;
}

Coeff Field::zero() const { return from_integer(0); }
Coeff Field::one() const { return from_integer(1); }
Coeff Field::from_integer(long v) const { return from_mpz(mpz_class(v)); }

Coeff Field::from_mpz(const mpz_class& v) const {
  switch (impl_->kind) {
    case Kind::kRational:
      return Coeff(mpq_class(v));
    case Kind::kPrime:
      return Coeff(ModInt{reduce_mpz(v, impl_->p), impl_->p});
    case Kind::kRationalFunction: {
      Coeff c;
      c.v_ = RatFunc{std::make_shared<const Polynomial>(Polynomial::constant(*impl_->ring, impl_->base->from_mpz(v))),
                     std::make_shared<const Polynomial>(Polynomial::constant(*impl_->ring, impl_->base->one()))};
      return c;
    }
  }
  return Coeff();
}

Coeff Field::from_rational(const mpq_class& v) const {
  if (impl_->kind == Kind::kRational) return Coeff(v);
  return from_mpz(v.get_num()) / from_mpz(v.get_den());
}

Coeff Field::parameter(std::size_t i) const {
  if (impl_->kind != Kind::kRationalFunction || i >= impl_->params.size())
    fail(ErrorCode::kInvalidArgument, "no such field parameter");
  return Coeff::rational_function(Polynomial::variable(*impl_->ring, i),
                                  Polynomial::constant(*impl_->ring, impl_->base->one()));
}

std::vector<Coeff> Field::elements() const {
  if (impl_->kind != Kind::kPrime) fail(ErrorCode::kInvalidArgument, "only prime fields are enumerable");
  std::vector<Coeff> out;
  for (std::uint32_t v = 0; v < impl_->p; ++v) out.emplace_back(ModInt{v, impl_->p});
  return out;
}

bool Field::owns(const Coeff& c) const {
  switch (impl_->kind) {
    case Kind::kRational:
      return c.is_rational();
    case Kind::kPrime:
      return c.is_mod() && c.mod().modulus == impl_->p;
    case Kind::kRationalFunction:
      return c.is_rational_function() && c.numerator().ring() == *impl_->ring;
  }
  return false;
}

std::string Field::descriptor() const {
  std::string s = impl_->kind == Kind::kRational ? "Q" : "Fp:" + std::to_string(impl_->p);
  if (impl_->kind == Kind::kRationalFunction) {
    s = impl_->base->descriptor() + "(";
    for (std::size_t i = 0; i < impl_->params.size(); ++i) s += (i ? "," : "") + impl_->params[i];
    s += ")";
  }
  return s;
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.impl_->kind != b.impl_->kind || a.impl_->p != b.impl_->p) return false;
  if (a.impl_->kind != Field::Kind::kRationalFunction) return true;
  return a.impl_->params == b.impl_->params && *a.impl_->base == *b.impl_->base;
}

// ---- Coeff ----

namespace {

[[noreturn]] void mixed() { fail(ErrorCode::kMixedFields, "operands belong to different fields"); }

Monomial monomial_content(const Polynomial& a, const Polynomial& b) {
  Monomial g = a.terms().front().mono;
  for (const auto& t : a.terms()) g = g.gcd(t.mono);
  for (const auto& t : b.terms()) g = g.gcd(t.mono);
  return g;
}

Polynomial divide_monomial(const Polynomial& p, const Monomial& g) {
  std::vector<Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) ts.push_back({t.mono / g, t.coeff});
  return Polynomial::from_canonical(p.ring(), std::move(ts));
}

// Euclid in a single variable; inputs nonzero.
Polynomial univariate_gcd(Polynomial a, Polynomial b) {
  const auto lex = MonomialOrder::lex();
  while (!b.is_zero()) {
    Polynomial r = divide(a, {b}, lex).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic(lex);
}

}  // namespace

Coeff Coeff::rational_function(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) fail(ErrorCode::kDivisionByZero, "zero denominator");
  if (num.ring() != den.ring()) fail(ErrorCode::kMixedRings, "numerator and denominator rings differ");
  Polynomial n = num, d = den;
  if (n.is_zero()) {
    d = Polynomial::constant(den.ring(), den.terms()[0].coeff.one_like());
  } else {
    Monomial g = monomial_content(n, d);
    if (!g.is_one()) {
      n = divide_monomial(n, g);
      d = divide_monomial(d, g);
    }
    if (!d.is_constant()) {
      auto sn = n.support(), sd = d.support();
      std::vector<std::size_t> all = sn;
      all.insert(all.end(), sd.begin(), sd.end());
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());
      if (all.size() == 1) {
        Polynomial gg = univariate_gcd(n, d);
        if (!gg.is_constant()) {
          n = *exact_quotient(n, gg);
          d = *exact_quotient(d, gg);
        }
      }
    }
    Coeff lc = d.leading_coeff(MonomialOrder::grevlex());
    if (!lc.is_one()) {
      Coeff inv = lc.inverse();
      n = n * inv;
      d = d * inv;
    }
  }
  Coeff c;
  c.v_ = RatFunc{std::make_shared<const Polynomial>(std::move(n)), std::make_shared<const Polynomial>(std::move(d))};
  return c;
}

bool Coeff::is_zero() const {
  switch (v_.index()) {
    case 0:
      return sgn(std::get<0>(v_)) == 0;
    case 1:
      return std::get<1>(v_).value == 0;
    default:
      return numerator().is_zero();
  }
}

bool Coeff::is_one() const {
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_) == 1;
    case 1:
      return std::get<1>(v_).value == 1 || std::get<1>(v_).modulus == 1;
    default:
      return numerator() == denominator();
  }
}

bool Coeff::is_minus_one() const { return (-*this).is_one(); }

bool Coeff::same_field(const Coeff& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (is_mod()) return mod().modulus == o.mod().modulus;
  if (is_rational_function()) return numerator().ring() == o.numerator().ring();
  return true;
}

Coeff Coeff::operator+(const Coeff& o) const {
  if (!same_field(o)) mixed();
  switch (v_.index()) {
    case 0:
      return Coeff(mpq_class(rational() + o.rational()));
    case 1: {
      ModInt a = mod(), b = o.mod();
      std::uint64_t s = std::uint64_t(a.value) + b.value;
      if (s >= a.modulus) s -= a.modulus;
      return Coeff(ModInt{static_cast<std::uint32_t>(s), a.modulus});
    }
    default:
      if (is_zero()) return o;
      if (o.is_zero()) return *this;
      if (denominator() == o.denominator()) return rational_function(numerator() + o.numerator(), denominator());
      return rational_function(numerator() * o.denominator() + o.numerator() * denominator(),
                               denominator() * o.denominator());
  }
}

Coeff Coeff::operator-() const {
  switch (v_.index()) {
    case 0:
      return Coeff(mpq_class(-rational()));
    case 1: {
      ModInt a = mod();
      return Coeff(ModInt{a.value == 0 ? 0 : a.modulus - a.value, a.modulus});
    }
    default: {
      Coeff c;
      c.v_ = RatFunc{std::make_shared<const Polynomial>(-numerator()), std::get<RatFunc>(v_).den};
      return c;
    }
  }
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
  if (!same_field(o)) mixed();
  switch (v_.index()) {
    case 0:
      return Coeff(mpq_class(rational() * o.rational()));
    case 1: {
      ModInt a = mod(), b = o.mod();
      return Coeff(ModInt{static_cast<std::uint32_t>((std::uint64_t(a.value) * b.value) % a.modulus), a.modulus});
    }
    default:
      if (is_zero()) return *this;
      if (o.is_zero()) return o;
      if (is_one()) return o;
      if (o.is_one()) return *this;
      return rational_function(numerator() * o.numerator(), denominator() * o.denominator());
  }
}

Coeff Coeff::inverse() const {
  if (is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero");
  switch (v_.index()) {
    case 0:
      return Coeff(mpq_class(1 / rational()));
    case 1: {
      ModInt a = mod();
      return Coeff(ModInt{mod_inverse(a.value, a.modulus), a.modulus});
    }
    default:
      return rational_function(denominator(), numerator());
  }
}

Coeff Coeff::operator/(const Coeff& o) const {
  if (!same_field(o)) mixed();
  if (o.is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero");
  if (is_rational_function()) {
    if (o.is_one()) return *this;
    return rational_function(numerator() * o.denominator(), denominator() * o.numerator());
  }
  return *this * o.inverse();
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (!a.same_field(b)) return false;
  switch (a.v_.index()) {
    case 0:
      return a.rational() == b.rational();
    case 1:
      return a.mod().value == b.mod().value;
    default:
      if (a.denominator() == b.denominator()) return a.numerator() == b.numerator();
      return a.numerator() * b.denominator() == b.numerator() * a.denominator();
  }
}

Coeff Coeff::zero_like() const { return from_integer_like(0); }
Coeff Coeff::one_like() const { return from_integer_like(1); }

Coeff Coeff::from_integer_like(long v) const {
  switch (v_.index()) {
    case 0:
      return Coeff(mpq_class(v));
    case 1: {
      std::uint32_t p = mod().modulus;
      long r = v % static_cast<long>(p);
      if (r < 0) r += p;
      return Coeff(ModInt{static_cast<std::uint32_t>(r), p});
    }
    default: {
      const Ring& ring = numerator().ring();
      Coeff base_one = denominator().terms()[0].coeff.from_integer_like(v);
      Coeff c;
      c.v_ = RatFunc{std::make_shared<const Polynomial>(Polynomial::constant(ring, base_one)),
                     std::make_shared<const Polynomial>(Polynomial::constant(ring, base_one.one_like()))};
      return c;
    }
  }
}

int Coeff::compare_key(const Coeff& o) const {
  if (v_.index() != o.v_.index()) return v_.index() < o.v_.index() ? -1 : 1;
  switch (v_.index()) {
    case 0:
      return cmp(rational(), o.rational()) < 0 ? -1 : (cmp(rational(), o.rational()) > 0 ? 1 : 0);
    case 1:
      return mod().value < o.mod().value ? -1 : (mod().value > o.mod().value ? 1 : 0);
    default: {
      auto a = to_string(), b = o.to_string();
      return a < b ? -1 : (a > b ? 1 : 0);
    }
  }
}

bool Coeff::is_negative() const {
  if (is_rational()) return sgn(rational()) < 0;
  if (!is_rational_function() || !denominator().is_one() || numerator().size() != 1) return false;
  return numerator().terms()[0].coeff.is_negative();
}

bool Coeff::is_compound() const {
  if (!is_rational_function()) return false;
  return !denominator().is_one() || numerator().size() > 1;
}

std::string Coeff::to_string() const {
  switch (v_.index()) {
    case 0:
      return rational().get_str();
    case 1:
      return std::to_string(mod().value);
    default:
      if (denominator().is_one()) return numerator().to_string();
      return "(" + numerator().to_string() + ")/(" + denominator().to_string() + ")";
  }
}

}  // namespace idealkit
