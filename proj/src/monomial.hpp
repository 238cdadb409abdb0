#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>

#include "errors.hpp"

namespace idealkit {

class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;
  static constexpr std::uint32_t kMaxExponent = 0xFFFF;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) fail(ErrorCode::kResourceLimit, "too many variables");
  }
  Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (auto e : exps) set(i++, e);
  }
  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t e = 1) {
    Monomial m(nvars);
    m.set(i, e);
    return m;
  }

  std::size_t size() const { return n_; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, std::uint32_t e) {
    if (e > kMaxExponent) fail(ErrorCode::kResourceLimit, "exponent overflow");
    deg_ = deg_ - e_[i] + e;
    e_[i] = static_cast<std::uint16_t>(e);
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] != 0 && o.e_[i] != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint32_t e = std::uint32_t(e_[i]) + o.e_[i];
      if (e > kMaxExponent) fail(ErrorCode::kResourceLimit, "exponent overflow");
      r.e_[i] = static_cast<std::uint16_t>(e);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
  }
  // Requires o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
    r.deg_ = deg_ - o.deg_;
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.set(i, e_[i] > o.e_[i] ? e_[i] : o.e_[i]);
    return r;
  }
  Monomial gcd(const Monomial& o) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.set(i, e_[i] < o.e_[i] ? e_[i] : o.e_[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_ || a.deg_ != b.deg_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n_; ++i) h = (h ^ e_[i]) * 1099511628211ull;
    return h;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace idealkit
