#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace idealkit {

// Exact non-negative rational expression kept symbolic so towers never materialize.
class BoundExpr {
 public:
  enum class Kind { kInteger, kRational, kParam, kAdd, kMul, kPow, kBinom, kMin, kMax, kFloor, kLabel };
  struct Node;

  static BoundExpr integer(const mpz_class& v);
  static BoundExpr integer(long v) { return integer(mpz_class(v)); }
  static BoundExpr rational(const mpq_class& v);
  // Named exact integer; prints as its name.
  static BoundExpr param(std::string name, const mpz_class& value);
  static BoundExpr add(std::vector<BoundExpr> terms);
  static BoundExpr mul(std::vector<BoundExpr> factors);
  // Exponent must evaluate to an exact non-negative integer.
  static BoundExpr pow(BoundExpr base, BoundExpr exponent);
  // Bottom must evaluate to a small exact non-negative integer.
  static BoundExpr binom(BoundExpr top, BoundExpr bottom);
  static BoundExpr min(std::vector<BoundExpr> items);
  static BoundExpr max(std::vector<BoundExpr> items);
  static BoundExpr floor(BoundExpr x);
  // Prints as `text` when nested inside a larger expression.
  static BoundExpr label(std::string text, BoundExpr x);

  Kind kind() const;
  const std::vector<BoundExpr>& children() const;
  const std::string& text() const;  // param name or label text
  const Node* node() const { return node_.get(); }

  // Tower form; a top-level label shows its definition.
  std::string to_string() const;

  friend BoundExpr operator+(const BoundExpr& a, const BoundExpr& b) { return add({a, b}); }
  friend BoundExpr operator*(const BoundExpr& a, const BoundExpr& b) { return mul({a, b}); }

 private:
  static BoundExpr make(Kind kind, std::vector<BoundExpr> kids, std::string text = {});
  explicit BoundExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

bool structurally_equal(const BoundExpr& a, const BoundExpr& b);

enum class Ordering { kLess, kEqual, kGreater };
const char* to_string(Ordering o);

// Default 2^26; overridden by IDEALKIT_BIT_CAP.
std::uint64_t default_bit_cap();

// Exact value when every intermediate fits in `bit_cap` bits.
std::optional<mpq_class> exact_value(const BoundExpr& e, std::uint64_t bit_cap = default_bit_cap());

// Exact, never wrong; throws ComparisonOverflow when logarithm intervals cannot separate and
// expansion would exceed `bit_cap`.
Ordering compare_bounds(const BoundExpr& a, const BoundExpr& b, std::uint64_t bit_cap = default_bit_cap());

// floor of the value, as a degree cap.
std::optional<mpz_class> degree_cap(const BoundExpr& e, std::uint64_t bit_cap = default_bit_cap());

struct BoundParams {
  long n = 1;
  long d = 1;
  std::optional<long> r, p, m, N1, N2, B, k, d0;
};

struct Bound {
  std::string name;
  BoundExpr expr = BoundExpr::integer(0);
  std::vector<std::pair<std::string, long>> params;

  // Exact digits when the value needs at most `digit_bits` bits, else the tower form with parameters.
  std::string render(std::uint64_t digit_bits = kDisplayBits) const;
  std::string tower() const;
  static constexpr std::uint64_t kDisplayBits = 4096;
};

const std::vector<std::string>& bound_names();
// Throws UnknownBound or InvalidParameters.
Bound evaluate_bound(const std::string& name, const BoundParams& params);

struct LemmaPoint {
  enum class Status { kHolds, kFails, kOverflow };
  long n = 0, d = 0;
  std::optional<long> r, k;
  Status status = Status::kHolds;
  std::string detail;
};

struct LemmaReport {
  std::string id;
  std::vector<LemmaPoint> points;
  bool all_hold() const;
};

const std::vector<std::string>& lemma_ids();
// Iterates r over 1..n-1 for r-dependent lemmas and k over 3..n-2 for maxind.
LemmaReport verify_estimate_lemma(const std::string& id, long n_max, long d_max, unsigned threads = 1,
                                  long n_min = 1, long d_min = 1);
const char* to_string(LemmaPoint::Status s);

}  // namespace idealkit
