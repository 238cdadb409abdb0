#include "bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "errors.hpp"
#include "field.hpp"

namespace idealkit {

struct BoundExpr::Node {
  Kind kind;
  mpq_class value;  // integer, rational and param leaves
  std::string text;
  std::vector<BoundExpr> kids;
};

namespace {

std::shared_ptr<BoundExpr::Node> make_node(BoundExpr::Kind k) {
  auto n = std::make_shared<BoundExpr::Node>();
  n->kind = k;
  return n;
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

BoundExpr BoundExpr::integer(const mpz_class& v) {
  if (v < 0) fail(ErrorCode::kInvalidParameters, "bound leaves are non-negative");
  auto n = make_node(Kind::kInteger);
  n->value = v;
  return BoundExpr(n);
}

BoundExpr BoundExpr::rational(const mpq_class& v) {
  if (v < 0) fail(ErrorCode::kInvalidParameters, "bound leaves are non-negative");
  auto n = make_node(Kind::kRational);
  n->value = v;
  n->value.canonicalize();
  return BoundExpr(n);
}

BoundExpr BoundExpr::param(std::string name, const mpz_class& value) {
  if (value < 0) fail(ErrorCode::kInvalidParameters, "parameter " + name + " is negative");
  auto n = make_node(Kind::kParam);
  n->value = value;
  n->text = std::move(name);
  return BoundExpr(n);
}

BoundExpr BoundExpr::make(Kind kind, std::vector<BoundExpr> kids, std::string text) {
  auto n = make_node(kind);
  n->kids = std::move(kids);
  n->text = std::move(text);
  return BoundExpr(n);
}

BoundExpr BoundExpr::add(std::vector<BoundExpr> terms) {
  if (terms.empty()) return integer(0);
  if (terms.size() == 1) return terms[0];
  return make(Kind::kAdd, std::move(terms));
}

BoundExpr BoundExpr::mul(std::vector<BoundExpr> factors) {
  if (factors.empty()) return integer(1);
  if (factors.size() == 1) return factors[0];
  return make(Kind::kMul, std::move(factors));
}

BoundExpr BoundExpr::pow(BoundExpr base, BoundExpr exponent) {
  return make(Kind::kPow, std::vector<BoundExpr>{std::move(base), std::move(exponent)});
}

BoundExpr BoundExpr::binom(BoundExpr top, BoundExpr bottom) {
  return make(Kind::kBinom, std::vector<BoundExpr>{std::move(top), std::move(bottom)});
}

BoundExpr BoundExpr::min(std::vector<BoundExpr> items) {
  if (items.empty()) fail(ErrorCode::kInvalidParameters, "min of nothing");
  if (items.size() == 1) return items[0];
  return make(Kind::kMin, std::move(items));
}

BoundExpr BoundExpr::max(std::vector<BoundExpr> items) {
  if (items.empty()) fail(ErrorCode::kInvalidParameters, "max of nothing");
  if (items.size() == 1) return items[0];
  return make(Kind::kMax, std::move(items));
}

BoundExpr BoundExpr::floor(BoundExpr x) { return make(Kind::kFloor, std::vector<BoundExpr>{std::move(x)}); }

BoundExpr BoundExpr::label(std::string text, BoundExpr x) {
  return make(Kind::kLabel, {std::move(x)}, std::move(text));
}

BoundExpr::Kind BoundExpr::kind() const { return node_->kind; }
const std::vector<BoundExpr>& BoundExpr::children() const { return node_->kids; }
const std::string& BoundExpr::text() const { return node_->text; }

namespace {

// Printing precedence: 1 sum, 2 product, 3 power, 4 atom.
int precedence(const BoundExpr& e) {
  switch (e.kind()) {
    case BoundExpr::Kind::kAdd: return 1;
    case BoundExpr::Kind::kMul: return 2;
    case BoundExpr::Kind::kRational: return 2;
    case BoundExpr::Kind::kPow: return 3;
    case BoundExpr::Kind::kParam: return is_identifier(e.text()) ? 4 : 1;
    default: return 4;
  }
}

std::string print(const BoundExpr& e, bool top);

std::string wrap(const BoundExpr& e, bool paren) {
  std::string s = print(e, false);
  return paren ? "(" + s + ")" : s;
}

std::string join(const std::vector<BoundExpr>& kids, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < kids.size(); ++i) s += (i ? sep : "") + print(kids[i], false);
  return s;
}

std::string print(const BoundExpr& e, bool top) {
  const auto& k = e.children();
  switch (e.kind()) {
    case BoundExpr::Kind::kInteger: return e.node()->value.get_num().get_str();
    case BoundExpr::Kind::kRational: return e.node()->value.get_str();
    case BoundExpr::Kind::kParam: return e.text();
    case BoundExpr::Kind::kAdd: {
      std::string s;
      for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "+" : "") + wrap(k[i], precedence(k[i]) < 1);
      return s;
    }
    case BoundExpr::Kind::kMul: {
      std::string s;
      for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "*" : "") + wrap(k[i], precedence(k[i]) < 2);
      return s;
    }
    case BoundExpr::Kind::kPow: return wrap(k[0], precedence(k[0]) <= 3) + "^" + wrap(k[1], precedence(k[1]) < 4);
    case BoundExpr::Kind::kBinom: return "binom(" + join(k, ",") + ")";
    case BoundExpr::Kind::kMin: return "min(" + join(k, ",") + ")";
    case BoundExpr::Kind::kMax: return "max(" + join(k, ",") + ")";
    case BoundExpr::Kind::kFloor: return "floor(" + join(k, ",") + ")";
    case BoundExpr::Kind::kLabel: return top ? print(k[0], true) : e.text();
  }
  return "?";
}

}  // namespace

std::string BoundExpr::to_string() const { return print(*this, true); }

bool structurally_equal(const BoundExpr& a, const BoundExpr& b) {
  if (a.node() == b.node()) return true;
  // Labels and parameter names are presentation only.
  if (a.kind() == BoundExpr::Kind::kLabel) return structurally_equal(a.children()[0], b);
  if (b.kind() == BoundExpr::Kind::kLabel) return structurally_equal(a, b.children()[0]);
  auto leaf = [](BoundExpr::Kind k) {
    return k == BoundExpr::Kind::kInteger || k == BoundExpr::Kind::kRational || k == BoundExpr::Kind::kParam;
  };
  if (leaf(a.kind()) && leaf(b.kind())) return a.node()->value == b.node()->value;
  if (a.kind() != b.kind() || a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!structurally_equal(a.children()[i], b.children()[i])) return false;
  return true;
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::kLess: return "Less";
    case Ordering::kEqual: return "Equal";
    case Ordering::kGreater: return "Greater";
  }
  return "?";
}

std::uint64_t default_bit_cap() {
  if (const char* s = std::getenv("IDEALKIT_BIT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 26;
}

namespace {

std::uint64_t bits_of(const mpq_class& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

constexpr std::uint64_t kMaxBinomBottom = 1000000;

// ---- exact evaluation ----

class ExactEvaluator {
 public:
  explicit ExactEvaluator(std::uint64_t cap) : cap_(cap) {}

  std::optional<mpq_class> eval(const BoundExpr& e) {
    auto it = memo_.find(e.node());
    if (it != memo_.end()) return it->second;
    auto v = compute(e);
    if (v && bits_of(*v) > cap_) v.reset();
    memo_.emplace(e.node(), v);
    return v;
  }

 private:
  std::optional<mpq_class> compute(const BoundExpr& e) {
    const auto& k = e.children();
    switch (e.kind()) {
      case BoundExpr::Kind::kInteger:
      case BoundExpr::Kind::kRational:
      case BoundExpr::Kind::kParam: return e.node()->value;
      case BoundExpr::Kind::kLabel: return eval(k[0]);
      case BoundExpr::Kind::kAdd:
      case BoundExpr::Kind::kMul: {
        bool add = e.kind() == BoundExpr::Kind::kAdd;
        std::vector<std::optional<mpq_class>> vals;
        for (const auto& c : k) vals.push_back(eval(c));
        // A zero factor decides a product even when other factors are too large.
        if (!add)
          for (const auto& v : vals)
            if (v && *v == 0) return mpq_class(0);
        std::uint64_t total = 0;
        for (const auto& v : vals) {
          if (!v) return std::nullopt;
          total += bits_of(*v);
        }
        if (total > cap_ + 64) return std::nullopt;
        mpq_class acc = add ? 0 : 1;
        for (const auto& v : vals) acc = add ? mpq_class(acc + *v) : mpq_class(acc * *v);
        return acc;
      }
      case BoundExpr::Kind::kPow: {
        auto ex = eval(k[1]);
        if (!ex) return std::nullopt;
        if (ex->get_den() != 1 || *ex < 0)
          fail(ErrorCode::kInvalidParameters, "power exponent is not a non-negative integer");
        if (*ex == 0) return mpq_class(1);
        auto b = eval(k[0]);
        if (!b) return std::nullopt;
        if (*b == 0 || *b == 1) return *b;
        mpz_class e1 = ex->get_num();
        mpz_class est = e1 * (bits_of(*b) - 2);
        if (est > cap_ || !e1.fits_ulong_p()) return std::nullopt;
        unsigned long u = e1.get_ui();
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), b->get_num_mpz_t(), u);
        mpz_pow_ui(den.get_mpz_t(), b->get_den_mpz_t(), u);
        return mpq_class(num, den);
      }
      case BoundExpr::Kind::kBinom: {
        auto bot = eval(k[1]);
        if (!bot) return std::nullopt;
        if (bot->get_den() != 1 || *bot < 0 || *bot > kMaxBinomBottom)
          fail(ErrorCode::kInvalidParameters, "binomial bottom must be a small non-negative integer");
        unsigned long kk = bot->get_num().get_ui();
        auto top = eval(k[0]);
        if (!top) return std::nullopt;
        if (bits_of(*top) * kk > cap_ + 64) return std::nullopt;
        mpq_class acc = 1;
        for (unsigned long i = 0; i < kk; ++i) acc *= (*top - i);
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), kk);
        acc /= fact;
        if (acc < 0) fail(ErrorCode::kInvalidParameters, "binomial coefficient is negative");
        return acc;
      }
      case BoundExpr::Kind::kMin:
      case BoundExpr::Kind::kMax: {
        std::optional<mpq_class> best;
        for (const auto& c : k) {
          auto v = eval(c);
          if (!v) return std::nullopt;
          if (!best || (e.kind() == BoundExpr::Kind::kMin ? *v < *best : *v > *best)) best = v;
        }
        return best;
      }
      case BoundExpr::Kind::kFloor: {
        auto v = eval(k[0]);
        if (!v) return std::nullopt;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), v->get_num_mpz_t(), v->get_den_mpz_t());
        return mpq_class(f);
      }
    }
    return std::nullopt;
  }

  std::uint64_t cap_;
  std::unordered_map<const BoundExpr::Node*, std::optional<mpq_class>> memo_;
};

// ---- logarithm intervals ----

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Either an exact value or a positive value whose natural log lies in [lo, hi].
struct Val {
  bool exact = true;
  mpq_class q;
  std::optional<Real> lo, hi;
};

class IntervalEvaluator {
 public:
  IntervalEvaluator(mpfr_prec_t prec, std::uint64_t exact_bits) : prec_(prec), exact_(exact_bits) {}

  const Val& eval(const BoundExpr& e) {
    auto it = memo_.find(e.node());
    if (it != memo_.end()) return it->second;
    Val v = compute(e);
    return memo_.emplace(e.node(), std::move(v)).first->second;
  }

  // Log interval of any positive value.
  std::pair<Real, Real> log_interval(const Val& v) {
    if (!v.exact) return {*v.lo, *v.hi};
    if (v.q <= 0) fail(ErrorCode::kInvariantViolation, "logarithm of zero");
    Real lo(prec_), hi(prec_);
    mpfr_set_q(lo.get(), v.q.get_mpq_t(), MPFR_RNDD);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_set_q(hi.get(), v.q.get_mpq_t(), MPFR_RNDU);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
    return {lo, hi};
  }

 private:
  Val exact(mpq_class q) {
    Val v;
    v.q = std::move(q);
    return v;
  }

  Val interval(Real lo, Real hi) {
    Val v;
    v.exact = false;
    v.lo = std::move(lo);
    v.hi = std::move(hi);
    return v;
  }

  // log(e^a + e^b) rounded in direction rnd.
  Real log_sum_exp(const Real& a, const Real& b, mpfr_rnd_t rnd) {
    Real m(prec_), t(prec_);
    bool a_big = mpfr_cmp(a.get(), b.get()) >= 0;
    const Real& big = a_big ? a : b;
    const Real& small = a_big ? b : a;
    mpfr_sub(t.get(), small.get(), big.get(), rnd);
    mpfr_exp(t.get(), t.get(), rnd);
    mpfr_log1p(t.get(), t.get(), rnd);
    mpfr_add(m.get(), big.get(), t.get(), rnd);
    return m;
  }

  // log(e^x - c) for e^x well above c >= 0, rounded in direction rnd.
  Real log_minus(const Real& x, const mpz_class& c, mpfr_rnd_t rnd) {
    if (c == 0) return x;
    Real t(prec_), out(prec_);
    mpfr_rnd_t opp = rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD;
    mpfr_neg(t.get(), x.get(), opp);
    mpfr_exp(t.get(), t.get(), opp);
    mpfr_mul_z(t.get(), t.get(), c.get_mpz_t(), opp);
    if (mpfr_cmp_ui(t.get(), 1) >= 0) fail(ErrorCode::kComparisonOverflow, "interval too wide to subtract");
    mpfr_neg(t.get(), t.get(), rnd);
    mpfr_log1p(t.get(), t.get(), rnd);
    mpfr_add(out.get(), x.get(), t.get(), rnd);
    return out;
  }

  Val compute(const BoundExpr& e) {
    // Small exact values are kept exactly.
    {
      ExactEvaluator& ex = exact_eval();
      if (auto v = ex.eval(e)) return exact(*v);
    }
    const auto& k = e.children();
    switch (e.kind()) {
      case BoundExpr::Kind::kInteger:
      case BoundExpr::Kind::kRational:
      case BoundExpr::Kind::kParam: return exact(e.node()->value);
      case BoundExpr::Kind::kLabel: return eval(k[0]);
      case BoundExpr::Kind::kAdd: {
        std::optional<Real> lo, hi;
        for (const auto& c : k) {
          const Val& v = eval(c);
          if (v.exact && v.q == 0) continue;
          auto [l, h] = log_interval(v);
          lo = lo ? log_sum_exp(*lo, l, MPFR_RNDD) : l;
          hi = hi ? log_sum_exp(*hi, h, MPFR_RNDU) : h;
        }
        if (!lo) return exact(0);
        return interval(*lo, *hi);
      }
      case BoundExpr::Kind::kMul: {
        Real lo(prec_), hi(prec_);
        mpfr_set_zero(lo.get(), 1);
        mpfr_set_zero(hi.get(), 1);
        for (const auto& c : k) {
          const Val& v = eval(c);
          if (v.exact && v.q == 0) return exact(0);
        }
        for (const auto& c : k) {
          auto [l, h] = log_interval(eval(c));
          mpfr_add(lo.get(), lo.get(), l.get(), MPFR_RNDD);
          mpfr_add(hi.get(), hi.get(), h.get(), MPFR_RNDU);
        }
        return interval(lo, hi);
      }
      case BoundExpr::Kind::kPow: {
        const Val& ev = eval(k[1]);
        if (!ev.exact) fail(ErrorCode::kComparisonOverflow, "power exponent too large to evaluate exactly");
        if (ev.q.get_den() != 1 || ev.q < 0)
          fail(ErrorCode::kInvalidParameters, "power exponent is not a non-negative integer");
        if (ev.q == 0) return exact(1);
        const Val& bv = eval(k[0]);
        if (bv.exact && (bv.q == 0 || bv.q == 1)) return exact(bv.q);
        auto [bl, bh] = log_interval(bv);
        mpz_class ex = ev.q.get_num();
        Real lo(prec_), hi(prec_), e_lo(prec_), e_hi(prec_);
        mpfr_set_z(e_lo.get(), ex.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(e_hi.get(), ex.get_mpz_t(), MPFR_RNDU);
        mpfr_mul(lo.get(), mpfr_sgn(bl.get()) >= 0 ? e_lo.get() : e_hi.get(), bl.get(), MPFR_RNDD);
        mpfr_mul(hi.get(), mpfr_sgn(bh.get()) >= 0 ? e_hi.get() : e_lo.get(), bh.get(), MPFR_RNDU);
        return interval(lo, hi);
      }
      case BoundExpr::Kind::kBinom: {
        const Val& bot = eval(k[1]);
        if (!bot.exact || bot.q.get_den() != 1 || bot.q < 0 || bot.q > kMaxBinomBottom)
          fail(ErrorCode::kInvalidParameters, "binomial bottom must be a small non-negative integer");
        unsigned long kk = bot.q.get_num().get_ui();
        if (kk == 0) return exact(1);
        const Val& top = eval(k[0]);
        auto [tl, th] = log_interval(top);
        Real lo(prec_), hi(prec_), f_lo(prec_), f_hi(prec_);
        mpfr_set_zero(lo.get(), 1);
        for (unsigned long i = 0; i < kk; ++i) {
          Real l = log_minus(tl, mpz_class(i), MPFR_RNDD);
          mpfr_add(lo.get(), lo.get(), l.get(), MPFR_RNDD);
        }
        mpfr_mul_ui(hi.get(), th.get(), kk, MPFR_RNDU);
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), kk);
        mpfr_set_z(f_lo.get(), fact.get_mpz_t(), MPFR_RNDD);
        mpfr_log(f_lo.get(), f_lo.get(), MPFR_RNDD);
        mpfr_set_z(f_hi.get(), fact.get_mpz_t(), MPFR_RNDU);
        mpfr_log(f_hi.get(), f_hi.get(), MPFR_RNDU);
        mpfr_sub(lo.get(), lo.get(), f_hi.get(), MPFR_RNDD);
        mpfr_sub(hi.get(), hi.get(), f_lo.get(), MPFR_RNDU);
        return interval(lo, hi);
      }
      case BoundExpr::Kind::kMin:
      case BoundExpr::Kind::kMax: {
        bool is_min = e.kind() == BoundExpr::Kind::kMin;
        std::optional<mpq_class> best_exact;
        std::vector<const Val*> inexact;
        for (const auto& c : k) {
          const Val& v = eval(c);
          if (v.exact) {
            if (!best_exact || (is_min ? v.q < *best_exact : v.q > *best_exact)) best_exact = v.q;
          } else {
            inexact.push_back(&v);
          }
        }
        if (is_min && best_exact && *best_exact == 0) return exact(0);
        if (best_exact && *best_exact != 0) {
          // The exact candidate wins outright when it is separated from every inexact one.
          auto [el, eh] = log_interval(exact(*best_exact));
          bool wins = true;
          for (const Val* v : inexact)
            wins = wins && (is_min ? mpfr_cmp(eh.get(), v->lo->get()) < 0 : mpfr_cmp(el.get(), v->hi->get()) > 0);
          if (wins) return exact(*best_exact);
        }
        std::optional<Real> lo, hi;
        auto take = [&](const Real& l, const Real& h) {
          if (!lo) {
            lo = l;
            hi = h;
            return;
          }
          bool pick_lo = is_min ? mpfr_cmp(l.get(), lo->get()) < 0 : mpfr_cmp(l.get(), lo->get()) > 0;
          bool pick_hi = is_min ? mpfr_cmp(h.get(), hi->get()) < 0 : mpfr_cmp(h.get(), hi->get()) > 0;
          if (pick_lo) *lo = l;
          if (pick_hi) *hi = h;
        };
        for (const Val* v : inexact) take(*v->lo, *v->hi);
        if (best_exact && *best_exact != 0) {
          auto [el, eh] = log_interval(exact(*best_exact));
          take(el, eh);
        }
        return interval(*lo, *hi);
      }
      case BoundExpr::Kind::kFloor: {
        const Val& v = eval(k[0]);
        if (v.exact) fail(ErrorCode::kInvariantViolation, "floor of an exact value escaped exact evaluation");
        return interval(log_minus(*v.lo, mpz_class(1), MPFR_RNDD), *v.hi);
      }
    }
    fail(ErrorCode::kInvariantViolation, "unknown bound node");
  }

  ExactEvaluator& exact_eval() {
    if (!exact_eval_) exact_eval_ = std::make_unique<ExactEvaluator>(exact_);
    return *exact_eval_;
  }

  mpfr_prec_t prec_;
  std::uint64_t exact_;
  std::unique_ptr<ExactEvaluator> exact_eval_;
  std::unordered_map<const BoundExpr::Node*, Val> memo_;
};

constexpr std::uint64_t kIntervalExactBits = 65536;

struct MpfrRange {
  MpfrRange() {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
  }
};

// The exponent range is per thread.
void ensure_mpfr_range() { thread_local MpfrRange range; }

}  // namespace

std::optional<mpq_class> exact_value(const BoundExpr& e, std::uint64_t bit_cap) {
  ExactEvaluator ev(bit_cap);
  return ev.eval(e);
}

std::optional<mpz_class> degree_cap(const BoundExpr& e, std::uint64_t bit_cap) {
  auto v = exact_value(BoundExpr::floor(e), bit_cap);
  if (!v) return std::nullopt;
  return v->get_num();
}

namespace {

Ordering order_of(const mpq_class& x, const mpq_class& y) {
  int c = cmp(x, y);
  return c < 0 ? Ordering::kLess : c > 0 ? Ordering::kGreater : Ordering::kEqual;
}

const BoundExpr& strip_labels(const BoundExpr& e) {
  const BoundExpr* p = &e;
  while (p->kind() == BoundExpr::Kind::kLabel) p = &p->children()[0];
  return *p;
}

// Items of nested max (or min) nodes, through labels.
void flatten(const BoundExpr& e, BoundExpr::Kind kind, std::vector<BoundExpr>& out) {
  const BoundExpr& s = strip_labels(e);
  if (s.kind() != kind) {
    out.push_back(s);
    return;
  }
  for (const auto& c : s.children()) flatten(c, kind, out);
}

std::optional<Ordering> separate(const BoundExpr& a, const BoundExpr& b, std::uint64_t bit_cap) {
  for (mpfr_prec_t prec = 64; prec <= 2048; prec *= 2) {
    IntervalEvaluator ev(prec, std::min<std::uint64_t>(kIntervalExactBits, bit_cap));
    const Val& va = ev.eval(a);
    const Val& vb = ev.eval(b);
    if (va.exact && vb.exact) return order_of(va.q, vb.q);
    if (va.exact && va.q == 0) return Ordering::kLess;
    if (vb.exact && vb.q == 0) return Ordering::kGreater;
    auto [al, ah] = ev.log_interval(va);
    auto [bl, bh] = ev.log_interval(vb);
    if (mpfr_cmp(ah.get(), bl.get()) < 0) return Ordering::kLess;
    if (mpfr_cmp(al.get(), bh.get()) > 0) return Ordering::kGreater;
  }
  return std::nullopt;
}

Ordering compare_impl(const BoundExpr& a, const BoundExpr& b, std::uint64_t bit_cap);

// The extreme item of a max or min list, found with exact comparisons.
BoundExpr extreme(const std::vector<BoundExpr>& items, bool want_max, std::uint64_t bit_cap) {
  BoundExpr best = items[0];
  for (std::size_t i = 1; i < items.size(); ++i) {
    Ordering o = compare_impl(items[i], best, bit_cap);
    if (want_max ? o == Ordering::kGreater : o == Ordering::kLess) best = items[i];
  }
  return best;
}

Ordering compare_impl(const BoundExpr& a, const BoundExpr& b, std::uint64_t bit_cap) {
  if (structurally_equal(a, b)) return Ordering::kEqual;
  if (auto o = separate(a, b, bit_cap)) return *o;
  // Values that coincide through a shared max or min item are resolved structurally.
  for (auto kind : {BoundExpr::Kind::kMax, BoundExpr::Kind::kMin}) {
    std::vector<BoundExpr> xs, ys;
    flatten(a, kind, xs);
    flatten(b, kind, ys);
    if (xs.size() == 1 && ys.size() == 1) continue;
    bool want_max = kind == BoundExpr::Kind::kMax;
    return compare_impl(extreme(xs, want_max, bit_cap), extreme(ys, want_max, bit_cap), bit_cap);
  }
  ExactEvaluator ex(bit_cap);
  auto va = ex.eval(a);
  auto vb = ex.eval(b);
  if (va && vb) return order_of(*va, *vb);
  fail(ErrorCode::kComparisonOverflow, "values are too close to separate and too large to expand");
}

}  // namespace

Ordering compare_bounds(const BoundExpr& a, const BoundExpr& b, std::uint64_t bit_cap) {
  ensure_mpfr_range();
  return compare_impl(a, b, bit_cap);
}

// ---- bound formulas ----

namespace {

using E = BoundExpr;

E I(long v) { return E::integer(v); }

struct Ctx {
  long n, d;
  E N, D;
  explicit Ctx(long n_, long d_) : n(n_), d(d_), N(E::param("n", n_)), D(E::param("d", d_)) {}
};

// Named integer for a small derived quantity such as n-1.
E named(const std::string& name, long v) { return E::param(name, v); }

bool is_exactly_one(const E& x) {
  auto v = exact_value(x, 256);
  return v && *v == 1;
}

// min{2 D^(2^N), 2 (D^2/2 + D)^(2^(N-1))}, and 1 when D = 1.
E b1_of(const E& nexp, const E& nexp_minus_one, const E& dexp) {
  if (is_exactly_one(dexp)) return I(1);
  E first = I(2) * E::pow(dexp, E::pow(I(2), nexp));
  E dube = I(2) * E::pow(E::add({E::mul({E::rational(mpq_class(1, 2)), E::pow(dexp, I(2))}), dexp}),
                          E::pow(I(2), nexp_minus_one));
  return E::min({first, dube});
}

E b1(const Ctx& c) { return E::label("b1(n,d)", b1_of(c.N, named("n-1", c.n - 1), c.D)); }

E b1_next(const Ctx& c, const E& dexp) { return b1_of(c.N + I(1), c.N, dexp); }

E gb_count(const Ctx& c) { return E::pow(b1(c) + I(1), named("n-1", c.n - 1)); }

E b2(const Ctx& c) {
  return E::label("b2(n,d)", b1_next(c, E::mul({gb_count(c), b1(c)}) + I(1)));
}

E b3(const Ctx& c) { return E::label("b3(n,d)", b1_next(c, b2(c) + I(1))); }

E b4(const Ctx& c) { return E::label("b4(n,d)", b1_next(c, named("n-1", c.n - 1) * b3(c) + I(1))); }

E b5(const Ctx& c) {
  E expo = E::pow(I(2), E::add({I(3) * E::pow(c.N, I(2)), I(2) * c.N}));
  return E::label("b5(n,d)", E::pow(I(2) * c.D, expo));
}

struct RCtx {
  const Ctx& c;
  long r;
  E R, NR;  // r, n-r
  RCtx(const Ctx& ctx, long r_) : c(ctx), r(r_), R(E::param("r", r_)), NR(named("n-r", ctx.n - r_)) {}
};

E flat_system(const RCtx& x, const E& b) {
  E inner = E::pow(I(2) * x.NR * b, E::pow(I(2), x.c.N));
  E bin = E::binom(E::add({inner, x.c.D, x.NR}), x.NR);
  return E::pow(E::mul({I(2), bin, x.NR, b}), E::pow(I(2), x.R));
}

E N1(const RCtx& x) { return E::label("N1", flat_system(x, b1(x.c))); }
E N2(const RCtx& x) { return E::label("N2", flat_system(x, E::pow(b1(x.c), I(2)))); }
E N3(const RCtx& x) { return E::label("N3", E::pow(b1(x.c), x.NR)); }
E N4(const RCtx& x) { return E::label("N4", N3(x) * N2(x) + N1(x)); }

E N5(const RCtx& x) {
  if (x.r < 1) fail(ErrorCode::kInvalidParameters, "N5 needs r >= 1");
  E n3 = N3(x), n4 = N4(x);
  E base = E::mul({I(2), E::pow(n3, I(2)), n3 + I(1), E::binom(n4 + x.R, x.R),
                   E::pow(b1(x.c), named("r-1", x.r - 1)), n4});
  return E::label("N5", E::pow(base, E::pow(I(2), x.R)));
}

E N6(const RCtx& x) { return E::label("N6", N5(x) + x.NR * E::pow(b1(x.c), I(2))); }

E dtilde(const RCtx& x) {
  return E::label("dtilde", E::mul({N3(x), N6(x), I(1) + E::pow(I(1) + b1(x.c), x.NR)}));
}

E dtilde_binom(const RCtx& x) {
  E dt = dtilde(x);
  return dt * (I(1) + E::binom(dt + x.c.N, x.c.N));
}

E b6(const RCtx& x) {
  return E::label("b6(n,d,r=" + std::to_string(x.r) + ")", E::max({b4(x.c), b5(x.c), dtilde_binom(x)}));
}

E b_main(const Ctx& c) {
  if (c.d == 1) return I(0);
  if (c.n == 1) return c.D;
  std::vector<E> items{c.N * b1(c)};
  for (long r = 1; r <= c.n - 1; ++r) items.push_back(b6(RCtx(c, r)));
  return E::max(items);
}

E b_simple(const Ctx& c) {
  E expo = E::pow(c.N, I(3)) * E::pow(I(2), I(6) * E::pow(c.N, I(2)));
  return E::pow(E::mul({I(2), c.N, c.D}), expo);
}

mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

E m_bound(const Ctx& c) {
  if (c.d == 1) return I(1);
  if (c.n == 1) return c.D;
  if (c.n == 2) return I(4) * E::pow(c.D, I(4));
  E expo = E::mul({named("n-1", c.n - 1), E::param("n!", factorial(c.n)),
                   E::pow(I(2), named("n-2", c.n - 2) * c.N)});
  return E::pow(I(2) * c.D, expo);
}

E m_simple(const Ctx& c) {
  E expo = E::mul({c.N, E::param("n!", factorial(c.n)), E::pow(I(2), named("n-1", c.n - 1) * c.N)});
  return E::pow(I(2) * c.D, expo);
}

// E_n = d, D_{n-k} = (E_{n-k+1}+1)^(n-k), E_{n-k} = 2 (D_{n-k} E_{n-k+1})^(2^(n-k+1)).
std::pair<E, E> noether_chain(const Ctx& c, long k) {
  E e = c.D;
  E dk = I(1);
  for (long j = 1; j <= k; ++j) {
    long nk = c.n - j;
    dk = E::label("D_" + std::to_string(nk), E::pow(e + I(1), named(std::to_string(nk), nk)));
    e = E::label("E_" + std::to_string(nk),
                 I(2) * E::pow(dk * e, E::pow(I(2), named(std::to_string(nk + 1), nk + 1))));
  }
  return {dk, e};
}

long need(const std::optional<long>& v, const char* name) {
  if (!v) fail(ErrorCode::kInvalidParameters, std::string("missing parameter ") + name);
  if (*v < 0) fail(ErrorCode::kInvalidParameters, std::string("negative parameter ") + name);
  return *v;
}

long need_r(const BoundParams& p) {
  long r = need(p.r, "r");
  if (r > p.n) fail(ErrorCode::kInvalidParameters, "r must satisfy 0 <= r <= n");
  return r;
}

E two_nd(const Ctx& c) { return E::mul({I(2), c.N, c.D}); }

// (2nd)^(n*coef*2^(a*n+b)) with coef optional.
E two_nd_tower(const Ctx& c, std::vector<E> coef, long a, long b) {
  std::vector<E> f{c.N};
  for (auto& x : coef) f.push_back(x);
  f.push_back(E::pow(I(2), E::add({a == 1 ? c.N : I(a) * c.N, I(b)})));
  return E::pow(two_nd(c), E::mul(f));
}

}  // namespace

const std::vector<std::string>& bound_names() {
  static const std::vector<std::string> names{
      "b1",     "gb_count", "b2",     "b3",     "b4",     "b5",        "N1",         "N2",
      "N3",     "N4",       "N5",     "N6",     "dtilde", "b6",        "b_main",     "b_simple",
      "flat",   "flat_p",   "fflat_p", "clear_denom", "theta_deg", "theta_ydeg", "reduce_deg", "m",
      "m_simple", "noether_chain", "noether_chain_E"};
  return names;
}

Bound evaluate_bound(const std::string& name, const BoundParams& p) {
  if (std::find(bound_names().begin(), bound_names().end(), name) == bound_names().end())
    fail(ErrorCode::kUnknownBound, "unknown bound '" + name + "'");
  if (p.n < 1 || p.d < 1) fail(ErrorCode::kInvalidParameters, "n and d must be at least 1");
  Ctx c(p.n, p.d);
  Bound out;
  out.name = name;
  out.params = {{"n", p.n}, {"d", p.d}};
  auto with_r = [&]() {
    long r = need_r(p);
    out.params.emplace_back("r", r);
    return r;
  };
  auto extra = [&](const std::optional<long>& v, const char* nm) {
    long x = need(v, nm);
    out.params.emplace_back(nm, x);
    return E::param(nm, x);
  };
  E e = I(0);
  if (name == "b1") e = b1(c);
  else if (name == "gb_count") e = gb_count(c);
  else if (name == "b2") e = b2(c);
  else if (name == "b3") e = b3(c);
  else if (name == "b4") e = b4(c);
  else if (name == "b5") e = b5(c);
  else if (name == "N1") e = N1(RCtx(c, with_r()));
  else if (name == "N2") e = N2(RCtx(c, with_r()));
  else if (name == "N3") e = N3(RCtx(c, with_r()));
  else if (name == "N4") e = N4(RCtx(c, with_r()));
  else if (name == "N5") e = N5(RCtx(c, with_r()));
  else if (name == "N6") e = N6(RCtx(c, with_r()));
  else if (name == "dtilde") e = dtilde(RCtx(c, with_r()));
  else if (name == "b6") {
    long r = with_r();
    if (r < 1) fail(ErrorCode::kInvalidParameters, "b6 needs r >= 1");
    e = b6(RCtx(c, r));
  } else if (name == "b_main") e = b_main(c);
  else if (name == "b_simple") e = b_simple(c);
  else if (name == "flat") {
    E n1 = extra(p.N1, "N1");
    e = E::pow(E::mul({I(2), n1, c.D}), E::pow(I(2), c.N));
  } else if (name == "flat_p" || name == "fflat_p") {
    E pp = extra(p.p, "p"), mm = extra(p.m, "m"), n1 = extra(p.N1, "N1"), n2 = extra(p.N2, "N2"), bb = extra(p.B, "B");
    if (!is_prime_u64(static_cast<std::uint64_t>(*p.p))) fail(ErrorCode::kInvalidParameters, "p must be prime");
    E cols = name == "flat_p" ? n2 : n2 + I(1);
    E base = E::mul({I(2), E::pow(n1, I(2)), cols, E::binom(bb + c.N, c.N),
                     E::pow(pp, mm * named("n-1", c.n - 1)), bb});
    e = E::pow(base, E::pow(I(2), c.N));
  } else if (name == "clear_denom") {
    E bb = extra(p.B, "B");
    e = bb * (I(1) + E::binom(bb + c.N, c.N));
  } else if (name == "theta_ydeg") {
    e = N3(RCtx(c, with_r()));
  } else if (name == "theta_deg" || name == "reduce_deg") {
    RCtx x(c, with_r());
    E d0 = extra(p.d0, "d0");
    E red = d0 * E::pow(I(1) + b1(c), x.NR);
    e = name == "reduce_deg" ? red : N3(x) * red;
  } else if (name == "m") e = m_bound(c);
  else if (name == "m_simple") e = m_simple(c);
  else if (name == "noether_chain" || name == "noether_chain_E") {
    long k = need(p.k, "k");
    if (k < 1 || k >= p.n) fail(ErrorCode::kInvalidParameters, "noether_chain needs 0 < k < n");
    out.params.emplace_back("k", k);
    auto [dk, ek] = noether_chain(c, k);
    e = name == "noether_chain" ? dk : ek;
  }
  out.expr = E::label(name, e);
  return out;
}

std::string Bound::tower() const {
  std::string s = expr.to_string() + " @ ";
  for (std::size_t i = 0; i < params.size(); ++i)
    s += (i ? "," : "") + params[i].first + "=" + std::to_string(params[i].second);
  return s;
}

std::string Bound::render(std::uint64_t digit_bits) const {
  if (auto v = exact_value(expr, digit_bits)) return v->get_str();
  return tower();
}

// ---- estimate lemmas ----

namespace {

struct Inequality {
  E lhs, rhs;
  std::string what;
};

std::vector<Inequality> lemma_sides(const std::string& id, const Ctx& c, std::optional<long> r, std::optional<long> k) {
  auto nd = [&](std::vector<E> coef, long a, long b) { return two_nd_tower(c, std::move(coef), a, b); };
  E n_plus_1 = c.N + I(1);
  if (id == "b2_le")
    return {{b2(c), E::pow(I(2), c.N * E::pow(I(2), c.N + I(3))) * E::pow(c.D, c.N * E::pow(I(2), I(2) * c.N + I(1))),
             "b2 <= 2^(n 2^(n+3)) d^(n 2^(2n+1))"}};
  if (id == "b3_le")
    return {{b3(c), E::pow(I(2), c.N * E::pow(I(2), I(2) * c.N + I(6))) * E::pow(c.D, c.N * E::pow(I(2), I(3) * c.N + I(2))),
             "b3 <= 2^(n 2^(2n+6)) d^(n 2^(3n+2))"}};
  if (id == "b4_le") return {{b4(c), nd({}, 4, 8), "b4 <= (2nd)^(n 2^(4n+8))"}};
  if (id == "final_le")
    return {{b_main(c), E::max({b5(c), nd({E::pow(n_plus_1, I(2))}, 4, 6)}), "b <= max{(2d)^(2^(3n^2+2n)), (2nd)^(n(n+1)^2 2^(4n+6))}"}};
  if (id == "simple_le") return {{b_main(c), b_simple(c), "b <= (2nd)^(n^3 2^(6n^2))"}};
  if (id == "m_simple_le") return {{m_bound(c), m_simple(c), "m <= (2d)^(n n! 2^((n-1)n))"}};
  if (id == "maxind") {
    long kk = *k;
    mpz_class falling = 1;
    for (long i = 0; i <= kk; ++i) falling *= c.n - i;
    E fall = E::param("n(n-1)...(n-k)", falling);
    E dd = E::pow(I(2) * c.D, fall * E::pow(I(2), named("(k-1)n", (kk - 1) * c.n)));
    E lhs = E::pow(I(2) * dd, named("n-k-1", c.n - kk - 1) * E::pow(I(2), named("n-k+2", c.n - kk + 2)));
    E rhs = E::pow(I(2) * c.D, E::mul({fall, named("n-k-1", c.n - kk - 1), E::pow(I(2), named("kn", kk * c.n))}));
    return {{lhs, rhs, "(2D)^((n-k-1)2^(n-k+2)) <= (2d)^(n...(n-k)(n-k-1)2^(kn))"}};
  }
  RCtx x(c, *r);
  if (id == "N12_le")
    return {{N1(x), N2(x), "N1 <= N2"}, {N2(x), nd({}, 3, 2), "N2 <= (2nd)^(n 2^(3n+2))"}};
  if (id == "N3_le") return {{N3(x), E::pow(I(2), c.N) * E::pow(c.D, c.N * E::pow(I(2), c.N)), "N3 <= 2^n d^(n 2^n)"}};
  if (id == "N4_le") return {{N4(x), nd({}, 3, 3), "N4 <= (2nd)^(n 2^(3n+3))"}};
  if (id == "N5_le") return {{N5(x), nd({n_plus_1}, 4, 4), "N5 <= (2nd)^(n(n+1) 2^(4n+4))"}};
  if (id == "N6_le") return {{N6(x), I(2) * nd({n_plus_1}, 4, 4), "N6 <= 2 (2nd)^(n(n+1) 2^(4n+4))"}};
  if (id == "dtilde_le") return {{dtilde(x), nd({n_plus_1}, 4, 5), "dtilde <= (2nd)^(n(n+1) 2^(4n+5))"}};
  if (id == "dtilde_binom_le")
    return {{dtilde_binom(x), nd({E::pow(n_plus_1, I(2))}, 4, 6), "dtilde(1+binom(dtilde+n,n)) <= (2nd)^(n(n+1)^2 2^(4n+6))"}};
  fail(ErrorCode::kUnknownBound, "unknown lemma '" + id + "'");
}

enum class Index { kNone, kR, kK };

Index lemma_index(const std::string& id) {
  if (id == "maxind") return Index::kK;
  static const std::vector<std::string> with_r{"N12_le", "N3_le", "N4_le", "N5_le", "N6_le", "dtilde_le", "dtilde_binom_le"};
  if (std::find(with_r.begin(), with_r.end(), id) != with_r.end()) return Index::kR;
  return Index::kNone;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"b2_le",     "b3_le",          "b4_le",    "N12_le",    "N3_le",
                                            "N4_le",     "N5_le",          "N6_le",    "dtilde_le", "dtilde_binom_le",
                                            "final_le",  "simple_le",      "maxind",   "m_simple_le"};
  return ids;
}

bool LemmaReport::all_hold() const {
  return std::all_of(points.begin(), points.end(), [](const LemmaPoint& p) { return p.status == LemmaPoint::Status::kHolds; });
}

const char* to_string(LemmaPoint::Status s) {
  switch (s) {
    case LemmaPoint::Status::kHolds: return "holds";
    case LemmaPoint::Status::kFails: return "FAILS";
    case LemmaPoint::Status::kOverflow: return "overflow";
  }
  return "?";
}

LemmaReport verify_estimate_lemma(const std::string& id, long n_max, long d_max, unsigned threads, long n_min,
                                  long d_min) {
  if (std::find(lemma_ids().begin(), lemma_ids().end(), id) == lemma_ids().end())
    fail(ErrorCode::kUnknownBound, "unknown lemma '" + id + "'");
  if (n_min < 1 || d_min < 1 || n_max < n_min || d_max < d_min)
    fail(ErrorCode::kInvalidParameters, "lemma ranges need 1 <= min <= max");
  LemmaReport report;
  report.id = id;
  Index idx = lemma_index(id);
  for (long n = n_min; n <= n_max; ++n)
    for (long d = d_min; d <= d_max; ++d) {
      if (idx == Index::kNone) {
        report.points.push_back({n, d, std::nullopt, std::nullopt, LemmaPoint::Status::kHolds, {}});
      } else if (idx == Index::kR) {
        for (long r = 1; r <= n - 1; ++r) report.points.push_back({n, d, r, std::nullopt, LemmaPoint::Status::kHolds, {}});
      } else {
        for (long k = 3; k <= n - 2; ++k) report.points.push_back({n, d, std::nullopt, k, LemmaPoint::Status::kHolds, {}});
      }
    }
  auto check = [&](LemmaPoint& pt) {
    try {
      Ctx c(pt.n, pt.d);
      for (const auto& ineq : lemma_sides(id, c, pt.r, pt.k)) {
        Ordering o = compare_bounds(ineq.lhs, ineq.rhs);
        if (o == Ordering::kGreater) {
          pt.status = LemmaPoint::Status::kFails;
          pt.detail = ineq.what;
          return;
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kComparisonOverflow) throw;
      pt.status = LemmaPoint::Status::kOverflow;
      pt.detail = e.what();
    }
  };
  unsigned nt = std::max(1u, threads);
  if (nt == 1) {
    for (auto& pt : report.points) check(pt);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex mu;
    for (unsigned t = 0; t < nt; ++t)
      pool.emplace_back([&, t] {
        ensure_mpfr_range();
        try {
          for (std::size_t i = t; i < report.points.size(); i += nt) check(report.points[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  return report;
}

}  // namespace idealkit
