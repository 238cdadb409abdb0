#include "groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <queue>
#include <string>

#include "errors.hpp"

namespace idealkit {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long x = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0') return fallback;
  return x;
}

using detail::Terms;

Terms shifted(const Terms& t, std::size_t from, const Monomial& m) {
  Terms out;
  out.reserve(t.size() - from);
  for (std::size_t i = from; i < t.size(); ++i) out.push_back({t[i].mono * m, t[i].coeff});
  return out;
}

void make_monic(Terms& t) {
  if (t.empty() || t.front().coeff.is_one()) return;
  Coeff inv = t.front().coeff.inverse();
  for (auto& x : t) x.coeff *= inv;
}

struct PendingPair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

Limits Limits::from_env() {
  Limits l;
  l.max_pairs = static_cast<std::size_t>(env_or("IDEALKIT_MAX_PAIRS", l.max_pairs));
  l.max_degree = static_cast<std::uint32_t>(env_or("IDEALKIT_MAX_DEGREE", l.max_degree));
  return l;
}

GroebnerBasis make_groebner_basis(MonomialOrder order, std::vector<Polynomial> elements, bool reduced) {
  GroebnerBasis g;
  g.order = std::move(order);
  auto sorted = std::make_shared<std::vector<Terms>>();
  for (auto& e : elements) {
    e = e.monic(g.order);
    sorted->push_back(detail::sorted_terms(e, g.order));
  }
  g.elements = std::move(elements);
  g.sorted = std::move(sorted);
  g.reduced = reduced;
  return g;
}

struct Ideal::Cache {
  std::mutex mu;
  std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.ring() != ring_) fail(ErrorCode::kMixedRings, "generator ring differs from ideal ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

std::int64_t Ideal::max_degree() const {
  std::int64_t d = Polynomial::kMinusInfinity;
  for (const auto& g : gens_) d = std::max(d, g.total_degree());
  return d;
}

const GroebnerBasis& Ideal::groebner_basis(const MonomialOrder& order) const {
  std::string key = order.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto gb = std::make_shared<const GroebnerBasis>(buchberger(*this, order));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->bases.emplace(key, gb);
  return *it->second;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const Limits& limits) {
  const Ring& ring = ideal.ring();
  order.validate(ring.nvars());
  std::vector<Terms> basis;
  std::vector<const Terms*> ptrs;
  // status[j][i] for i < j: 1 pending, 2 treated.
  std::vector<std::vector<char>> status;
  auto cmp = [&](const PendingPair& a, const PendingPair& b) {
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  };
  std::priority_queue<PendingPair, std::vector<PendingPair>, decltype(cmp)> queue(cmp);

  auto unit_basis = [&]() {
    return make_groebner_basis(order, {Polynomial::constant(ring, ring.field().one())}, true);
  };
  auto rebuild_ptrs = [&]() {
    ptrs.clear();
    for (const auto& b : basis) ptrs.push_back(&b);
  };
  // Returns true when the new element is a unit.
  auto add = [&](Terms h) -> bool {
    make_monic(h);
    if (h.front().mono.is_one()) return true;
    if (h.front().mono.degree() > limits.max_degree)
      fail(ErrorCode::kResourceLimit, "basis degree exceeds " + std::to_string(limits.max_degree));
    for (const auto& t : h)
      if (t.mono.degree() > limits.max_degree)
        fail(ErrorCode::kResourceLimit, "basis degree exceeds " + std::to_string(limits.max_degree));
    std::size_t j = basis.size();
    basis.push_back(std::move(h));
    rebuild_ptrs();
    status.emplace_back(j, 1);
    for (std::size_t i = 0; i < j; ++i)
      queue.push({i, j, basis[i].front().mono.lcm(basis[j].front().mono)});
    return false;
  };

  for (const auto& g : ideal.generators()) {
    Terms h = detail::reduce(detail::sorted_terms(g, order), ptrs, order);
    if (!h.empty() && add(std::move(h))) return unit_basis();
  }

  std::size_t treated = 0;
  while (!queue.empty()) {
    PendingPair p = queue.top();
    queue.pop();
    status[p.j][p.i] = 2;
    const Monomial& li = basis[p.i].front().mono;
    const Monomial& lj = basis[p.j].front().mono;
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].front().mono.divides(p.lcm)) continue;
      char sik = p.i < k ? status[k][p.i] : status[p.i][k];
      char sjk = p.j < k ? status[k][p.j] : status[p.j][k];
      chain = sik == 2 && sjk == 2;
    }
    if (chain) continue;
    if (++treated > limits.max_pairs)
      fail(ErrorCode::kResourceLimit, "more than " + std::to_string(limits.max_pairs) + " S-pairs");
    Terms a = shifted(basis[p.i], 1, p.lcm / li);
    Terms s = detail::sub_scaled(a, 0, basis[p.j].front().coeff, p.lcm / lj, basis[p.j], 1, order);
    Terms h = detail::reduce(std::move(s), ptrs, order);
    if (!h.empty() && add(std::move(h))) return unit_basis();
  }

  // Minimal basis, then tail reduction.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial& lk = basis[k].front().mono;
      const Monomial& lmi = basis[i].front().mono;
      if (lk.divides(lmi) && (lk != lmi || k < i)) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Terms> reduced;
  for (std::size_t i : keep) {
    std::vector<const Terms*> others;
    for (std::size_t k : keep)
      if (k != i) others.push_back(&basis[k]);
    Terms t = detail::reduce(basis[i], others, order);
    make_monic(t);
    reduced.push_back(std::move(t));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Terms& a, const Terms& b) { return order.compare(a.front().mono, b.front().mono) > 0; });
  GroebnerBasis out;
  out.order = order;
  out.reduced = true;
  auto sorted = std::make_shared<std::vector<Terms>>();
  for (auto& t : reduced) {
    out.elements.emplace_back(ring, t);
    sorted->push_back(std::move(t));
  }
  out.sorted = std::move(sorted);
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  std::vector<Terms> local;
  const std::vector<Terms>* sorted = basis.sorted.get();
  if (!sorted) {
    for (const auto& e : basis.elements) local.push_back(detail::sorted_terms(e, basis.order));
    sorted = &local;
  }
  for (const auto& e : basis.elements)
    if (e.ring() != f.ring()) fail(ErrorCode::kMixedRings, "basis ring differs");
  std::vector<const Terms*> ptrs;
  for (const auto& t : *sorted) ptrs.push_back(&t);
  return Polynomial(f.ring(), detail::reduce(detail::sorted_terms(f, basis.order), ptrs, basis.order));
}

bool contains(const GroebnerBasis& basis, const Polynomial& f) {
  if (f.is_zero()) return true;
  if (basis.is_unit()) return true;
  return normal_form(f, basis).is_zero();
}

bool contains(const Ideal& ideal, const Polynomial& f) {
  if (f.ring() != ideal.ring()) fail(ErrorCode::kMixedRings, "polynomial ring differs from ideal ring");
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  return contains(ideal.groebner_basis(), f);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& els = basis.elements;
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j)
      if (!normal_form(s_polynomial(els[i], els[j], basis.order), basis).is_zero()) return false;
  return true;
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
  for (const auto& g : small.generators())
    if (!contains(big, g)) return false;
  return true;
}

bool ideals_equal(const Ideal& a, const Ideal& b) { return ideal_contains(a, b) && ideal_contains(b, a); }

}  // namespace idealkit
