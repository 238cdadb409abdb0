#include "univariate.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "errors.hpp"

namespace idealkit {

UPoly::UPoly(std::vector<Coeff> c, Coeff zero) : c_(std::move(c)), zero_(std::move(zero)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  std::vector<Coeff> c(p.degree_in(var) + 1, p.ring().field().zero());
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != t.mono[var]) fail(ErrorCode::kInvalidArgument, "polynomial is not univariate");
    c[t.mono[var]] = t.coeff;
  }
  return UPoly(std::move(c), p.ring().field().zero());
}

UPoly UPoly::monomial(const Coeff& c, std::size_t deg, const Coeff& zero) {
  std::vector<Coeff> v(deg + 1, zero);
  v[deg] = c;
  return UPoly(std::move(v), zero);
}

Polynomial UPoly::to_polynomial(const Ring& ring, std::size_t var) const {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) ts.push_back({Monomial::variable(ring.nvars(), var, static_cast<std::uint32_t>(i)), c_[i]});
  return Polynomial(ring, std::move(ts));
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Coeff> c(std::max(c_.size(), o.c_.size()), zero_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)[i] + o[i];
  return UPoly(std::move(c), zero_);
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Coeff> c(std::max(c_.size(), o.c_.size()), zero_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)[i] - o[i];
  return UPoly(std::move(c), zero_);
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(zero_);
  std::vector<Coeff> c(c_.size() + o.c_.size() - 1, zero_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) c[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(c), zero_);
}

UPoly UPoly::operator*(const Coeff& s) const {
  std::vector<Coeff> c = c_;
  for (auto& x : c) x = x * s;
  return UPoly(std::move(c), zero_);
}

UPoly UPoly::monic() const {
  if (is_zero() || lc().is_one()) return *this;
  return *this * lc().inverse();
}

UPoly UPoly::derivative() const {
  std::vector<Coeff> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * c_[i].from_integer_like(static_cast<long>(i)));
  return UPoly(std::move(c), zero_);
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) fail(ErrorCode::kDivisionByZero, "division by the zero polynomial");
  std::vector<Coeff> r = c_;
  long dd = d.degree();
  if (degree() < dd) return {UPoly(zero_), *this};
  std::vector<Coeff> q(static_cast<std::size_t>(degree() - dd + 1), zero_);
  Coeff inv = d.lc().inverse();
  for (long i = degree(); i >= dd; --i) {
    const Coeff& top = r[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    Coeff f = top * inv;
    q[static_cast<std::size_t>(i - dd)] = f;
    for (long j = 0; j <= dd; ++j) {
      const Coeff& dj = d.c_[static_cast<std::size_t>(j)];
      if (!dj.is_zero()) r[static_cast<std::size_t>(i - dd + j)] -= f * dj;
    }
  }
  r.resize(static_cast<std::size_t>(dd));
  return {UPoly(std::move(q), zero_), UPoly(std::move(r), zero_)};
}

Coeff UPoly::evaluate(const Coeff& x) const {
  Coeff acc = zero_;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

bool operator==(const UPoly& a, const UPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& m) {
  UPoly result = UPoly::monomial(base.zero().one_like(), 0, base.zero()).mod(m);
  UPoly b = base.mod(m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result).mod(m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b).mod(m);
  }
  return result;
}

Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, std::size_t var) {
  return gcd(UPoly::from_polynomial(a, var), UPoly::from_polynomial(b, var)).to_polynomial(a.ring(), var);
}

namespace {

using Kind = Irreducibility::Kind;

struct UResult {
  Kind kind = Kind::kUnknown;
  std::optional<UPoly> factor;
  std::string reason;
};

UResult irreducible(std::string why) { return {Kind::kIrreducible, std::nullopt, std::move(why)}; }
UResult factor(UPoly f, std::string why) { return {Kind::kFactor, std::move(f), std::move(why)}; }
UResult unknown(std::string why) { return {Kind::kUnknown, std::nullopt, std::move(why)}; }

UPoly x_poly(const Coeff& zero) { return UPoly::monomial(zero.one_like(), 1, zero); }

// Splits a squarefree monic product of at least two degree-i irreducibles over Fp.
std::optional<UPoly> equal_degree_split(const UPoly& f, long i) {
  const Coeff& zero = f.zero();
  std::uint32_t p = zero.mod().modulus;
  long n = f.degree();
  std::mt19937_64 rng(0x5eed0000ull + static_cast<std::uint64_t>(n) * 131 + static_cast<std::uint64_t>(i));
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(i));
  mpz_class half = (q - 1) / 2;
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::vector<Coeff> c;
    for (long k = 0; k < n; ++k) c.emplace_back(ModInt{static_cast<std::uint32_t>(rng() % p), p});
    UPoly a(std::move(c), zero);
    if (a.degree() < 1) continue;
    UPoly g = gcd(f, a);
    if (g.degree() > 0 && g.degree() < n) return g;
    UPoly b(zero);
    if (p == 2) {
      UPoly cur = a.mod(f);
      b = cur;
      for (long j = 1; j < i; ++j) {
        cur = (cur * cur).mod(f);
        b = b + cur;
      }
    } else {
      b = powmod(a, half, f) - UPoly::monomial(zero.one_like(), 0, zero);
    }
    g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < n) return g;
  }
  return std::nullopt;
}

UResult fp_irreducible(const UPoly& f0) {
  UPoly f = f0.monic();
  long n = f.degree();
  std::uint32_t p = f.zero().mod().modulus;
  if (n == 1) return irreducible("degree 1");
  UPoly df = f.derivative();
  if (df.is_zero()) {
    std::vector<Coeff> hc;
    for (long i = 0; i * static_cast<long>(p) <= n; ++i) hc.push_back(f[static_cast<std::size_t>(i * p)]);
    return factor(UPoly(std::move(hc), f.zero()), "p-th power");
  }
  UPoly g = gcd(f, df);
  if (g.degree() > 0) return factor(g, "repeated factor");
  UPoly x = x_poly(f.zero());
  UPoly h = x;
  for (long i = 1; 2 * i <= n; ++i) {
    h = powmod(h, mpz_class(p), f);
    g = gcd(f, h - x);
    if (g.degree() <= 0) continue;
    if (g.degree() < n) return factor(g, "distinct-degree factor");
    auto split = equal_degree_split(f, i);
    if (split) return factor(*split, "equal-degree split");
    return unknown("equal-degree splitting did not converge");
  }
  return irreducible("distinct-degree sieve");
}

// ---- rationals ----

std::vector<mpz_class> integer_primitive(const UPoly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class content = 0;
  for (const auto& c : f.coeffs()) {
    mpq_class v = c.rational() * l;
    out.push_back(v.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num_mpz_t());
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

const mpz_class kDivisorLimit("1000000000000");

std::optional<std::vector<mpz_class>> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n == 0 || n > kDivisorLimit) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

mpz_class eval_int(const std::vector<mpz_class>& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

UPoly from_integers(const std::vector<mpz_class>& f) {
  std::vector<Coeff> c;
  for (const auto& v : f) c.emplace_back(mpq_class(v));
  return UPoly(std::move(c), Coeff(mpq_class(0)));
}

// Linear factor t - r for a rational root, or nullopt; `complete` reports whether the search was exhaustive.
std::optional<UPoly> rational_root_factor(const std::vector<mpz_class>& f, bool& complete) {
  complete = true;
  Coeff zero{mpq_class(0)};
  if (f[0] == 0) return UPoly::monomial(zero.one_like(), 1, zero);
  auto ps = positive_divisors(f[0]);
  auto qs = positive_divisors(f.back());
  if (!ps || !qs) {
    complete = false;
    return std::nullopt;
  }
  std::vector<mpq_class> cands;
  for (const auto& p : *ps)
    for (const auto& q : *qs) {
      mpq_class r(p, q);
      r.canonicalize();
      cands.push_back(r);
      cands.push_back(-r);
    }
  std::sort(cands.begin(), cands.end(), [](const mpq_class& a, const mpq_class& b) {
    int c = cmp(abs(a), abs(b));
    if (c != 0) return c < 0;
    return a > b;
  });
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  long n = static_cast<long>(f.size()) - 1;
  for (const auto& r : cands) {
    // q^n f(p/q) with exact integers.
    mpz_class num = r.get_num(), den = r.get_den(), acc = 0, dpow = 1;
    std::vector<mpz_class> dp(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
      dp[static_cast<std::size_t>(i)] = dpow;
      dpow *= den;
    }
    mpz_class npow = 1;
    for (long i = 0; i <= n; ++i) {
      acc += f[static_cast<std::size_t>(i)] * npow * dp[static_cast<std::size_t>(n - i)];
      npow *= num;
    }
    if (acc == 0) {
      std::vector<Coeff> c{Coeff(mpq_class(-r)), Coeff(mpq_class(1))};
      return UPoly(std::move(c), zero);
    }
  }
  return std::nullopt;
}

std::vector<std::uint64_t> small_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; out.size() < count; ++p)
    if (is_prime_u64(p)) out.push_back(p);
  return out;
}

// Degrees admissible for a factor over Q according to factorization patterns modulo primes.
bool modular_pattern_proves_irreducible(const std::vector<mpz_class>& f) {
  long n = static_cast<long>(f.size()) - 1;
  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  int used = 0;
  for (auto p : small_primes(200)) {
    if (used >= 25) break;
    if (f.back() % p == 0) continue;
    Field fp = Field::prime(p);
    std::vector<Coeff> c;
    for (const auto& v : f) c.push_back(fp.from_mpz(v));
    UPoly fb = UPoly(std::move(c), fp.zero()).monic();
    if (gcd(fb, fb.derivative()).degree() != 0) continue;
    ++used;
    auto degs = distinct_degree_pattern(fb);
    std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
    sums[0] = true;
    for (long d : degs)
      for (long s = n; s >= d; --s)
        if (sums[static_cast<std::size_t>(s - d)]) sums[static_cast<std::size_t>(s)] = true;
    bool any = false;
    for (long k = 1; k < n; ++k) {
      possible[static_cast<std::size_t>(k)] = possible[static_cast<std::size_t>(k)] && sums[static_cast<std::size_t>(k)];
      any = any || possible[static_cast<std::size_t>(k)];
    }
    if (!any) return true;
  }
  return false;
}

// Exhaustive search for integer factors of degree 2..n/2 by interpolation through divisor values.
UResult kronecker_search(const std::vector<mpz_class>& f, std::uint64_t cap) {
  long n = static_cast<long>(f.size()) - 1;
  UPoly fq = from_integers(f);
  Coeff zero{mpq_class(0)};
  for (long k = 2; 2 * k <= n; ++k) {
    std::vector<std::pair<mpz_class, mpz_class>> pts;  // (|f(a)|, a)
    for (long t = 0; static_cast<long>(pts.size()) < 2 * k + 6; ++t) {
      mpz_class a = (t % 2 == 0) ? mpz_class(t / 2) : mpz_class(-(t + 1) / 2);
      mpz_class v = eval_int(f, a);
      if (v == 0) return factor(UPoly({Coeff(mpq_class(-a)), Coeff(mpq_class(1))}, zero), "integer root");
      pts.emplace_back(abs(v), a);
    }
    std::stable_sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    pts.resize(static_cast<std::size_t>(k) + 1);
    std::vector<std::vector<mpz_class>> divs;
    mpz_class combos = 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto d = positive_divisors(pts[i].first);
      if (!d) return unknown("value too large for divisor enumeration");
      std::vector<mpz_class> signed_d;
      for (const auto& x : *d) {
        signed_d.push_back(x);
        if (i > 0) signed_d.push_back(-x);
      }
      combos *= signed_d.size();
      divs.push_back(std::move(signed_d));
    }
    if (combos > cap) return unknown("factor search exceeds its candidate cap");
    std::vector<std::size_t> idx(divs.size(), 0);
    for (;;) {
      // Newton interpolation through (a_i, d_i).
      std::vector<mpq_class> xs, dd;
      for (std::size_t i = 0; i < divs.size(); ++i) {
        xs.emplace_back(pts[i].second);
        dd.emplace_back(divs[i][idx[i]]);
      }
      for (std::size_t j = 1; j < dd.size(); ++j)
        for (std::size_t i = dd.size() - 1; i >= j; --i) {
          dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
          if (i == j) break;
        }
      if (dd.back() != 0) {
        std::vector<Coeff> acc{Coeff(dd.back())};
        UPoly g(acc, zero);
        for (std::size_t i = dd.size() - 1; i-- > 0;) {
          g = g * UPoly({Coeff(mpq_class(-xs[i])), Coeff(mpq_class(1))}, zero) + UPoly({Coeff(dd[i])}, zero);
        }
        bool integral = g.degree() == k;
        for (const auto& c : g.coeffs()) integral = integral && c.rational().get_den() == 1;
        if (integral && f.back() % g.lc().rational().get_num() == 0 && fq.mod(g).is_zero())
          return factor(g, "interpolated integer factor");
      }
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == divs[pos].size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  }
  return irreducible("exhaustive factor search");
}

UResult q_irreducible(const UPoly& f0) {
  UPoly f = f0.monic();
  long n = f.degree();
  if (n == 1) return irreducible("degree 1");
  auto zf = integer_primitive(f);
  bool complete = false;
  if (auto r = rational_root_factor(zf, complete)) return factor(*r, "rational root");
  if (n <= 3) {
    if (complete) return irreducible("no rational root");
  }
  UPoly g = gcd(f, f.derivative());
  if (g.degree() > 0) return factor(g, "repeated factor");
  if (modular_pattern_proves_irreducible(zf)) return irreducible("modular factorization pattern");
  if (n <= 3) return unknown("rational root search incomplete");
  return kronecker_search(zf, 2000000);
}

UResult univariate_irreducible(const UPoly& f) {
  const Coeff& z = f.zero();
  if (z.is_mod()) return fp_irreducible(f);
  if (z.is_rational()) return q_irreducible(f);
  if (f.degree() == 1) return irreducible("degree 1");
  return unknown("irreducibility over rational function fields is not decided");
}

// Smallest monomial m with every term a power of m, if the support has at least two variables.
std::optional<Monomial> disguise_base(const Polynomial& f) {
  std::size_t n = f.ring().nvars();
  long g = 0;
  for (const auto& t : f.terms())
    for (std::size_t v = 0; v < n; ++v) g = std::gcd(g, static_cast<long>(t.mono[v]));
  if (g == 0) return std::nullopt;
  // Candidate base: direction of any nonconstant term reduced by the gcd of its exponents.
  const Monomial* ref = nullptr;
  for (const auto& t : f.terms())
    if (!t.mono.is_one()) {
      ref = &t.mono;
      break;
    }
  long rg = 0;
  for (std::size_t v = 0; v < n; ++v) rg = std::gcd(rg, static_cast<long>((*ref)[v]));
  Monomial base(n);
  for (std::size_t v = 0; v < n; ++v) base.set(v, static_cast<std::uint32_t>((*ref)[v] / rg));
  for (const auto& t : f.terms()) {
    if (t.mono.is_one()) continue;
    long k = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (base[v] == 0) {
        if (t.mono[v] != 0) return std::nullopt;
        continue;
      }
      if (t.mono[v] % base[v] != 0) return std::nullopt;
      long kv = t.mono[v] / base[v];
      if (k == -1) k = kv;
      if (kv != k) return std::nullopt;
    }
  }
  return base;
}

bool proper_divisor(const Polynomial& g, const Polynomial& f) {
  if (g.is_constant() || g.total_degree() >= f.total_degree()) return false;
  return exact_quotient(f, g).has_value();
}

}  // namespace

std::vector<long> distinct_degree_pattern(const UPoly& f) {
  std::uint32_t p = f.zero().mod().modulus;
  std::vector<long> degs;
  UPoly rest = f.monic();
  UPoly x = x_poly(f.zero());
  UPoly h = x;
  for (long i = 1; 2 * i <= rest.degree(); ++i) {
    h = powmod(h, mpz_class(p), rest);
    UPoly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      for (long k = 0; k < g.degree() / i; ++k) degs.push_back(i);
      rest = rest.divmod(g).first;
      h = h.mod(rest);
    }
  }
  if (rest.degree() > 0) degs.push_back(rest.degree());
  return degs;
}

Irreducibility is_irreducible(const Polynomial& f) {
  if (f.is_constant()) fail(ErrorCode::kConstantInput, "irreducibility of a constant");
  const Ring& ring = f.ring();
  const Field& field = ring.field();
  std::size_t n = ring.nvars();
  Irreducibility out;
  auto verified = [&](Polynomial g, std::string why) {
    if (!proper_divisor(g, f)) fail(ErrorCode::kInvariantViolation, "claimed factor does not divide");
    Irreducibility r;
    r.kind = Kind::kFactor;
    r.factor = std::move(g);
    r.reason = std::move(why);
    return r;
  };
  auto support = f.support();
  if (support.size() == 1) {
    std::size_t v = support[0];
    UResult r = univariate_irreducible(UPoly::from_polynomial(f, v));
    if (r.kind == Kind::kFactor) return verified(r.factor->to_polynomial(ring, v), r.reason);
    out.kind = r.kind;
    out.reason = r.reason;
    return out;
  }
  // Common variable factor.
  for (std::size_t v : support) {
    bool all = true;
    for (const auto& t : f.terms()) all = all && t.mono[v] > 0;
    if (all) {
      if (f.size() == 1 && f.total_degree() == 1) {
        out.kind = Kind::kIrreducible;
        out.reason = "degree 1";
        return out;
      }
      return verified(Polynomial::variable(ring, v), "common variable factor");
    }
  }
  if (f.total_degree() == 1) {
    out.kind = Kind::kIrreducible;
    out.reason = "degree 1";
    return out;
  }
  // Linear in some variable: a*x + b is irreducible when a and b share no factor.
  for (std::size_t v : support) {
    if (f.degree_in(v) != 1) continue;
    Polynomial a = f.coefficient_of(v, 1), b = f.coefficient_of(v, 0);
    auto coprime_to_monomial = [&](const Polynomial& mono, const Polynomial& other) {
      for (std::size_t u = 0; u < n; ++u) {
        if (mono.terms()[0].mono[u] == 0) continue;
        bool divides_all = true;
        for (const auto& t : other.terms()) divides_all = divides_all && t.mono[u] > 0;
        if (divides_all) return false;
      }
      return true;
    };
    if (a.is_constant() || b.is_constant() || (a.size() == 1 && coprime_to_monomial(a, b)) ||
        (b.size() == 1 && coprime_to_monomial(b, a))) {
      out.kind = Kind::kIrreducible;
      out.reason = "primitive and linear in " + ring.var_name(v);
      return out;
    }
  }
  // Homogeneous in two variables: dehomogenize at the second one.
  if (support.size() == 2) {
    std::size_t x = support[0], y = support[1];
    bool homogeneous = true;
    for (const auto& t : f.terms()) homogeneous = homogeneous && t.mono.degree() == f.terms()[0].mono.degree();
    if (homogeneous) {
      std::vector<Coeff> c(static_cast<std::size_t>(f.total_degree()) + 1, field.zero());
      for (const auto& t : f.terms()) c[t.mono[x]] = t.coeff;
      UResult r = univariate_irreducible(UPoly(std::move(c), field.zero()));
      if (r.kind == Kind::kFactor) {
        long k = r.factor->degree();
        std::vector<Term> ts;
        for (long i = 0; i <= k; ++i) {
          const Coeff& ci = (*r.factor)[static_cast<std::size_t>(i)];
          if (ci.is_zero()) continue;
          Monomial m(n);
          m.set(x, static_cast<std::uint32_t>(i));
          m.set(y, static_cast<std::uint32_t>(k - i));
          ts.push_back({m, ci});
        }
        return verified(Polynomial(ring, std::move(ts)), "homogeneous: " + r.reason);
      }
      if (r.kind == Kind::kIrreducible) {
        out.kind = Kind::kIrreducible;
        out.reason = "homogeneous: " + r.reason;
        return out;
      }
    }
  }
  // Univariate in a monomial.
  if (auto base = disguise_base(f)) {
    std::vector<Coeff> c(f.total_degree() / base->degree() + 1, field.zero());
    for (const auto& t : f.terms()) c[t.mono.degree() / base->degree()] = t.coeff;
    UResult r = univariate_irreducible(UPoly(std::move(c), field.zero()));
    if (r.kind == Kind::kFactor) {
      Polynomial mono = Polynomial::term(ring, *base, field.one());
      Polynomial g(ring);
      for (std::size_t i = 0; i < r.factor->coeffs().size(); ++i)
        g += mono.pow(static_cast<unsigned>(i)) * (*r.factor)[i];
      return verified(g, "univariate in a monomial: " + r.reason);
    }
  }
  // Brute force over small prime fields.
  if (field.is_prime()) {
    std::uint64_t q = field.modulus();
    std::int64_t dmax = f.total_degree() / 2;
    std::vector<Monomial> monos;
    for (const auto& m : monomials_up_to(n, static_cast<std::uint32_t>(dmax))) {
      bool ok = true;
      for (std::size_t v = 0; v < n; ++v)
        if (m[v] > f.degree_in(v)) ok = false;
      if (ok) monos.push_back(m);
    }
    const std::uint64_t kCap = 1u << 16;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < monos.size() && count <= kCap; ++i) count *= q;
    if (count <= kCap) {
      auto elems = field.elements();
      std::vector<std::size_t> digits(monos.size(), 0);
      for (std::uint64_t k = 1; k < count; ++k) {
        std::size_t pos = 0;
        while (++digits[pos] == q) digits[pos++] = 0;
        std::vector<Term> ts;
        for (std::size_t i = 0; i < monos.size(); ++i)
          if (digits[i]) ts.push_back({monos[i], elems[digits[i]]});
        Polynomial g(ring, std::move(ts));
        if (g.is_constant() || !g.leading_coeff(MonomialOrder::grevlex()).is_one()) continue;
        if (proper_divisor(g, f)) return verified(g, "exhaustive factor search");
      }
      out.kind = Kind::kIrreducible;
      out.reason = "exhaustive factor search";
      return out;
    }
  }
  out.kind = Kind::kUnknown;
  out.reason = "multivariate irreducibility not decided";
  return out;
}

}  // namespace idealkit
