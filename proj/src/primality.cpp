#include "primality.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "ideals.hpp"
#include "univariate.hpp"

namespace idealkit {

namespace {

// Candidate f of degree <= b, canonical up to scalar: leading grevlex coefficient 1.
// Shards are leading monomials by degree ascending, grevlex descending within a degree; inside a shard
// the coefficients of the lower monomials count in base q with the smallest monomial least significant.
class CandidateSpace {
 public:
  CandidateSpace(const Ring& ring, std::uint32_t b, std::uint64_t cap) : ring_(ring) {
    const Field& field = ring.field();
    if (!field.is_prime())
      fail(ErrorCode::kInfeasibleEnumeration, "exhaustive enumeration needs a finite coefficient field");
    q_ = field.modulus();
    monos_ = monomials_up_to(ring.nvars(), b);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < monos_.size(); ++i) {
      if (total > cap / q_) fail(ErrorCode::kInfeasibleEnumeration, "candidate space exceeds the enumeration cap");
      total *= q_;
    }
    for (std::size_t k = 0; k < monos_.size(); ++k) order_.push_back(k);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      if (monos_[x].degree() != monos_[y].degree()) return monos_[x].degree() < monos_[y].degree();
      return x > y;
    });
    std::uint64_t off = 0;
    for (std::size_t k : order_) {
      offsets_.push_back(off);
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < k; ++i) size *= q_;
      off += size;
    }
    size_ = off;
    elements_ = field.elements();
  }

  std::uint64_t size() const { return size_; }

  Polynomial at(std::uint64_t index) const {
    std::size_t shard = static_cast<std::size_t>(
        std::upper_bound(offsets_.begin(), offsets_.end(), index) - offsets_.begin() - 1);
    std::size_t lead = order_[shard];
    std::uint64_t rest = index - offsets_[shard];
    std::vector<Term> ts;
    ts.push_back({monos_[lead], elements_[1]});
    for (std::size_t i = 0; i < lead; ++i) {
      std::uint64_t digit = rest % q_;
      rest /= q_;
      if (digit) ts.push_back({monos_[i], elements_[digit]});
    }
    return Polynomial(ring_, std::move(ts));
  }

 private:
  Ring ring_;
  std::uint64_t q_ = 2;
  std::vector<Monomial> monos_;
  std::vector<std::size_t> order_;
  std::vector<std::uint64_t> offsets_;
  std::uint64_t size_ = 0;
  std::vector<Coeff> elements_;
};

// Outcome of testing one candidate: nullopt when it passes, otherwise the witness payload.
using Probe = std::function<std::optional<std::optional<Polynomial>>(const Polynomial& f)>;

struct SearchResult {
  std::optional<Polynomial> f;
  std::optional<Polynomial> payload;
  std::uint64_t checked = 0;
};

// Least failing index over the candidate space; workers take ascending chunks so the result is deterministic.
SearchResult exhaustive_search(const CandidateSpace& space, const Probe& probe, unsigned threads) {
  constexpr std::uint64_t kChunk = 16;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::atomic<std::uint64_t> checked{0};
  std::mutex mu;
  SearchResult result;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (;;) {
        std::uint64_t start = next.fetch_add(kChunk);
        if (start >= space.size() || start > best.load()) return;
        std::uint64_t end = std::min(space.size(), start + kChunk);
        for (std::uint64_t i = start; i < end && i < best.load(); ++i) {
          Polynomial f = space.at(i);
          checked.fetch_add(1);
          auto out = probe(f);
          if (!out) continue;
          std::lock_guard<std::mutex> lock(mu);
          if (i < best.load()) {
            best.store(i);
            result.f = std::move(f);
            result.payload = std::move(*out);
          }
          break;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };
  unsigned n = std::max(1u, threads);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  result.checked = checked.load();
  return result;
}

// Memo keyed by the normal form modulo I, shared by worker threads.
template <typename V>
class NormalFormMemo {
 public:
  std::optional<V> find(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void put(const std::string& key, V v) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(key, std::move(v));
  }

 private:
  std::mutex mu_;
  std::map<std::string, V> map_;
};

void require_proper(const Ideal& ideal) {
  if (!ideal.is_zero() && !ideal.is_proper()) fail(ErrorCode::kImproperIdeal, "the unit ideal is not proper");
}

bool in_ideal(const Ideal& ideal, const Polynomial& f) { return contains(ideal, f); }

// Some g of degree <= b with f*g in I and g not in I.
std::optional<Polynomial> zero_divisor_partner(const Ideal& ideal, const Polynomial& nf, std::uint32_t b) {
  if (ideal.is_zero()) return std::nullopt;
  Ideal colon = quotient_by_poly(ideal, nf);
  DegreeSlice slice = degree_slice(colon, b);
  for (const auto& e : slice.basis)
    if (!in_ideal(ideal, e)) return e.monic();
  return std::nullopt;
}

bool invertible_mod(const Ideal& ideal, const Polynomial& nf) {
  std::vector<Polynomial> gens = ideal.generators();
  gens.push_back(nf);
  return !Ideal(ideal.ring(), std::move(gens)).is_proper();
}

Polynomial reduce_mod(const Ideal& ideal, const Polynomial& f) {
  if (ideal.is_zero()) return f;
  return normal_form(f, ideal.groebner_basis());
}

// Structured candidates for witness search, deduplicated, degree <= b.
std::vector<Polynomial> witness_pool(const Ideal& ideal, std::uint32_t b, const EnumerationOptions& options) {
  const Ring& ring = ideal.ring();
  const Field& field = ring.field();
  std::vector<Polynomial> pool;
  std::map<std::string, bool> seen;
  auto add = [&](const Polynomial& p) {
    if (p.is_zero() || p.is_constant() || p.total_degree() > static_cast<std::int64_t>(b)) return;
    Polynomial m = p.monic();
    if (seen.emplace(m.to_string(), true).second) pool.push_back(std::move(m));
  };
  for (const auto& g : ideal.generators()) {
    if (g.is_constant()) continue;
    auto irr = is_irreducible(g);
    if (irr.kind == Irreducibility::Kind::kFactor) {
      add(*irr.factor);
      if (auto co = exact_quotient(g, *irr.factor)) add(*co);
    }
  }
  for (std::size_t v = 0; v < ring.nvars(); ++v) add(Polynomial::variable(ring, v));
  std::vector<Polynomial> colon_by;
  for (std::size_t v = 0; v < ring.nvars(); ++v) colon_by.push_back(Polynomial::variable(ring, v));
  std::size_t structured = pool.size();
  for (std::size_t i = 0; i < structured; ++i) colon_by.push_back(pool[i]);
  for (const auto& h : colon_by) {
    if (in_ideal(ideal, h)) continue;
    Ideal colon = quotient_by_poly(ideal, h);
    for (const auto& e : colon.groebner_basis().elements) add(e);
  }
  std::mt19937_64 rng(options.seed);
  for (std::uint32_t deg = 1; deg <= b; ++deg) {
    auto monos = monomials_up_to(ring.nvars(), deg);
    std::vector<Monomial> top;
    for (const auto& m : monos)
      if (m.degree() == deg) top.push_back(m);
    for (std::size_t k = 0; k < options.random_per_degree; ++k) {
      std::vector<Term> ts;
      ts.push_back({top[rng() % top.size()], field.one()});
      std::size_t extra = 1 + rng() % 3;
      for (std::size_t e = 0; e < extra; ++e) {
        Coeff c = field.is_prime() ? field.from_integer(static_cast<long>(1 + rng() % (field.modulus() - 1)))
                                   : field.from_integer(static_cast<long>(rng() % 7) - 3);
        ts.push_back({monos[rng() % monos.size()], c});
      }
      add(Polynomial(ring, std::move(ts)));
    }
  }
  return pool;
}

void verify_counterexample(const Ideal& ideal, const Polynomial& f, const Polynomial& g) {
  check_invariant(in_ideal(ideal, f * g) && !in_ideal(ideal, f) && !in_ideal(ideal, g),
                  "primality counterexample failed verification");
}

}  // namespace

PrimalityVerdict prime_up_to(const Ideal& ideal, std::uint32_t b, EnumerationMode mode,
                             const EnumerationOptions& options) {
  require_proper(ideal);
  PrimalityVerdict v;
  v.bound = b;
  NormalFormMemo<std::optional<Polynomial>> memo;
  Probe probe = [&](const Polynomial& f) -> std::optional<std::optional<Polynomial>> {
    Polynomial nf = reduce_mod(ideal, f);
    if (nf.is_zero()) return std::nullopt;
    std::string key = nf.to_string();
    auto cached = memo.find(key);
    std::optional<Polynomial> g = cached ? *cached : zero_divisor_partner(ideal, nf, b);
    if (!cached) memo.put(key, g);
    if (!g) return std::nullopt;
    return std::optional<Polynomial>(*g);
  };
  SearchResult r;
  if (mode == EnumerationMode::kExhaustive) {
    CandidateSpace space(ideal.ring(), b, options.cap);
    r = exhaustive_search(space, probe, options.threads);
  } else {
    for (const auto& f : witness_pool(ideal, b, options)) {
      ++r.checked;
      if (auto out = probe(f)) {
        r.f = f;
        r.payload = *out;
        break;
      }
    }
  }
  v.candidates = r.checked;
  if (r.f) {
    verify_counterexample(ideal, *r.f, *r.payload);
    v.status = PrimalityVerdict::Status::kCounterexample;
    v.f = r.f;
    v.g = r.payload;
    v.reason = "f*g lies in the ideal while neither factor does";
  } else if (mode == EnumerationMode::kExhaustive) {
    v.status = PrimalityVerdict::Status::kPrimeUpTo;
    v.reason = "no counterexample among all candidates";
  } else {
    v.status = PrimalityVerdict::Status::kUndetermined;
    v.reason = "no counterexample among " + std::to_string(r.checked) + " structured candidates";
  }
  return v;
}

MaximalityVerdict maximal_up_to(const Ideal& ideal, std::uint32_t b, EnumerationMode mode,
                                const EnumerationOptions& options) {
  require_proper(ideal);
  MaximalityVerdict v;
  v.bound = b;
  NormalFormMemo<bool> memo;
  Probe probe = [&](const Polynomial& f) -> std::optional<std::optional<Polynomial>> {
    Polynomial nf = reduce_mod(ideal, f);
    if (nf.is_zero()) return std::nullopt;
    std::string key = nf.to_string();
    auto cached = memo.find(key);
    bool inv = cached ? *cached : invertible_mod(ideal, nf);
    if (!cached) memo.put(key, inv);
    if (inv) return std::nullopt;
    return std::optional<Polynomial>();
  };
  SearchResult r;
  if (mode == EnumerationMode::kExhaustive) {
    CandidateSpace space(ideal.ring(), b, options.cap);
    r = exhaustive_search(space, probe, options.threads);
  } else {
    for (const auto& f : witness_pool(ideal, b, options)) {
      ++r.checked;
      if (probe(f)) {
        r.f = f;
        break;
      }
    }
  }
  v.candidates = r.checked;
  if (r.f) {
    check_invariant(!in_ideal(ideal, *r.f) && !invertible_mod(ideal, reduce_mod(ideal, *r.f)),
                    "non-invertibility witness failed verification");
    v.status = MaximalityVerdict::Status::kNonInvertible;
    v.f = r.f;
    v.reason = "f is not in the ideal and has no inverse modulo it";
  } else if (mode == EnumerationMode::kExhaustive) {
    v.status = MaximalityVerdict::Status::kMaximalUpTo;
    v.reason = "every candidate outside the ideal is invertible";
  } else {
    v.status = MaximalityVerdict::Status::kUndetermined;
    v.reason = "no witness among " + std::to_string(r.checked) + " structured candidates";
  }
  return v;
}

namespace {

OracleVerdict from_irreducibility(const Ideal& ideal, const Polynomial& f, const std::string& context) {
  OracleVerdict v;
  if (f.total_degree() == 1) {
    v.status = OracleVerdict::Status::kPrime;
    v.reason = context + " generator of degree 1";
    return v;
  }
  auto irr = is_irreducible(f);
  switch (irr.kind) {
    case Irreducibility::Kind::kIrreducible:
      v.status = OracleVerdict::Status::kPrime;
      v.reason = context + " generator is irreducible (" + irr.reason + ")";
      break;
    case Irreducibility::Kind::kFactor: {
      Polynomial h = irr.factor->monic();
      auto co = exact_quotient(f, h);
      check_invariant(co.has_value(), "factor does not divide");
      v.status = OracleVerdict::Status::kNotPrime;
      v.f = h;
      v.g = co->monic();
      verify_counterexample(ideal, *v.f, *v.g);
      v.reason = context + " generator factors (" + irr.reason + ")";
      break;
    }
    case Irreducibility::Kind::kUnknown:
      v.status = OracleVerdict::Status::kUnknown;
      v.reason = "irreducibility undecided: " + irr.reason;
      break;
  }
  return v;
}

}  // namespace

OracleVerdict primality_oracle_small(const Ideal& ideal) {
  OracleVerdict v;
  if (ideal.is_zero()) {
    v.status = OracleVerdict::Status::kPrime;
    v.reason = "zero ideal";
    return v;
  }
  const auto& gb = ideal.groebner_basis();
  if (gb.is_unit()) {
    v.status = OracleVerdict::Status::kNotPrime;
    v.reason = "unit ideal is not proper";
    return v;
  }
  const Ring& ring = ideal.ring();
  if (ring.nvars() == 1) {
    Polynomial g(ring);
    for (const auto& p : ideal.generators()) g = g.is_zero() ? p.monic() : univariate_gcd(g, p, 0);
    return from_irreducibility(ideal, g, "gcd");
  }
  if (gb.elements.size() == 1) return from_irreducibility(ideal, gb.elements[0], "principal");
  if (ideal.max_degree() <= 1) {
    v.status = OracleVerdict::Status::kPrime;
    v.reason = "proper ideal generated by linear polynomials";
    return v;
  }
  v.status = OracleVerdict::Status::kUnknown;
  v.reason = "outside the exactly decided families";
  return v;
}

namespace {

// Leading coefficient in the last variable after the substitution, from the top terms only.
// Returns 1 when monic with constant c, 0 when not monic, -1 when the top cancels completely.
int quick_monic(const Polynomial& f, const std::vector<std::uint32_t>& a, Coeff& lead) {
  std::size_t n = f.ring().nvars();
  std::uint64_t best = 0;
  bool first = true;
  std::map<std::vector<std::uint32_t>, Coeff> groups;
  for (const auto& t : f.terms()) {
    std::uint64_t e = t.mono[n - 1];
    for (std::size_t i = 0; i + 1 < n; ++i) e += static_cast<std::uint64_t>(t.mono[i]) * a[i];
    if (first || e > best) {
      best = e;
      first = false;
      groups.clear();
    }
    if (e < best) continue;
    std::vector<std::uint32_t> beta(n - 1, 0);
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (a[i] == 0) beta[i] = t.mono[i];
    auto it = groups.find(beta);
    if (it == groups.end())
      groups.emplace(beta, t.coeff);
    else
      it->second += t.coeff;
  }
  bool any = false;
  for (const auto& [beta, c] : groups) {
    if (c.is_zero()) continue;
    any = true;
    bool zero_beta = std::all_of(beta.begin(), beta.end(), [](std::uint32_t x) { return x == 0; });
    if (!zero_beta) return 0;
    lead = c;
  }
  return any ? 1 : -1;
}

}  // namespace

NoetherStep noether_normalize_step(const Polynomial& f) {
  const Ring& ring = f.ring();
  std::size_t n = ring.nvars();
  if (n < 1) fail(ErrorCode::kInvalidArgument, "Noether normalization needs at least one variable");
  if (f.is_zero()) fail(ErrorCode::kZeroPolynomial, "Noether normalization of the zero polynomial");
  std::uint64_t d = static_cast<std::uint64_t>(std::max<std::int64_t>(f.total_degree(), 1));
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) bound *= d + 1;
  std::vector<std::uint32_t> a(n - 1, 0);
  std::size_t last = n - 1;
  for (;;) {
    Coeff lead;
    int quick = quick_monic(f, a, lead);
    if (quick != 0) {
      std::vector<Polynomial> images;
      Polynomial y = Polynomial::variable(ring, last);
      for (std::size_t i = 0; i + 1 < n; ++i)
        images.push_back(a[i] == 0 ? Polynomial::variable(ring, i) : Polynomial::variable(ring, i) + y.pow(a[i]));
      images.push_back(y);
      Polynomial t = f.compose(images, ring);
      Polynomial top = t.coefficient_of(last, t.degree_in(last));
      if (top.is_constant() && !top.is_zero()) {
        NoetherStep step;
        step.a = a;
        step.c = top.constant_term().inverse();
        step.transformed = t * step.c;
        return step;
      }
    }
    std::size_t pos = 0;
    while (pos < a.size() && a[pos] == bound) a[pos++] = 0;
    if (pos == a.size()) break;
    ++a[pos];
  }
  fail(ErrorCode::kCandidateExhaustion, "no substitution within the exponent bound makes f monic");
}

const char* to_string(PrimalityVerdict::Status s) {
  switch (s) {
    case PrimalityVerdict::Status::kPrimeUpTo: return "PrimeUpTo";
    case PrimalityVerdict::Status::kCounterexample: return "CounterexampleFound";
    case PrimalityVerdict::Status::kUndetermined: return "Undetermined";
  }
  return "?";
}

const char* to_string(MaximalityVerdict::Status s) {
  switch (s) {
    case MaximalityVerdict::Status::kMaximalUpTo: return "MaximalUpTo";
    case MaximalityVerdict::Status::kNonInvertible: return "NonInvertibleWitness";
    case MaximalityVerdict::Status::kUndetermined: return "Undetermined";
  }
  return "?";
}

const char* to_string(OracleVerdict::Status s) {
  switch (s) {
    case OracleVerdict::Status::kPrime: return "Prime";
    case OracleVerdict::Status::kNotPrime: return "NotPrime";
    case OracleVerdict::Status::kUnknown: return "Unknown";
  }
  return "?";
}

}  // namespace idealkit
