#include "polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "errors.hpp"

namespace idealkit {

namespace {

bool grevlex_greater(const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; }

// Sorts descending by grevlex, combines equal monomials and drops zeros.
void canonicalize(std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(), grevlex_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < ts.size();) {
    Term acc = std::move(ts[i]);
    std::size_t j = i + 1;
    while (j < ts.size() && ts[j].mono == acc.mono) {
      acc.coeff += ts[j].coeff;
      ++j;
    }
    if (!acc.coeff.is_zero()) ts[out++] = std::move(acc);
    i = j;
  }
  ts.resize(out);
}

std::string monomial_string(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.var_name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.mono.size() != ring_.nvars()) fail(ErrorCode::kMixedRings, "monomial arity does not match ring");
    if (!ring_.field().owns(t.coeff)) fail(ErrorCode::kMixedFields, "coefficient outside the ring's field");
  }
  canonicalize(terms_);
}

Polynomial Polynomial::from_canonical(Ring ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(const Ring& ring, const Coeff& c) {
  if (!ring.field().owns(c)) fail(ErrorCode::kMixedFields, "coefficient outside the ring's field");
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring.nvars()), c});
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t i) {
  if (i >= ring.nvars()) fail(ErrorCode::kInvalidArgument, "variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(ring.nvars(), i), ring.field().one()});
  return p;
}

Polynomial Polynomial::term(const Ring& ring, const Monomial& m, const Coeff& c) {
  if (!ring.field().owns(c)) fail(ErrorCode::kMixedFields, "coefficient outside the ring's field");
  if (m.size() != ring.nvars()) fail(ErrorCode::kMixedRings, "monomial arity does not match ring");
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

Coeff Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return ring_.field().zero();
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grevlex_compare(t.mono, x) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return ring_.field().zero();
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) fail(ErrorCode::kZeroPolynomial, "leading term of the zero polynomial");
  if (order.kind() == MonomialOrder::Kind::kGrevlex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  const Coeff& lc = leading_coeff(order);
  if (lc.is_one()) return *this;
  return *this * lc.inverse();
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ != o.ring_) fail(ErrorCode::kMixedRings, "operands belong to different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grevlex_compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Coeff s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) out.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return from_canonical(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Coeff& c) const {
  if (!ring_.field().owns(c)) fail(ErrorCode::kMixedFields, "coefficient outside the ring's field");
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Coeff& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, a.coeff * b.coeff);
      else
        it->second += a.coeff * b.coeff;
    }
  }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) ts.push_back({m, std::move(c)});
  std::sort(ts.begin(), ts.end(), grevlex_greater);
  return from_canonical(ring_, std::move(ts));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, ring_.field().one());
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Monomial m = t.mono;
    m.set(var, m[var] - 1);
    ts.push_back({m, t.coeff * t.coeff.from_integer_like(static_cast<long>(t.mono[var]))});
  }
  return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  check_ring(value);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring_.nvars(); ++i)
    images.push_back(i == var ? value : variable(ring_, i));
  return compose(images, ring_);
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images, const Ring& target) const {
  if (images.size() != ring_.nvars()) fail(ErrorCode::kDimensionMismatch, "one image per variable required");
  for (const auto& im : images)
    if (im.ring() != target) fail(ErrorCode::kMixedRings, "images must lie in the target ring");
  // Powers are cached per variable.
  std::vector<std::vector<Polynomial>> powers(ring_.nvars());
  auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(constant(target, target.field().one()));
    while (pv.size() <= e) pv.push_back(pv.back() * images[v]);
    return pv[e];
  };
  Polynomial out(target);
  for (const auto& t : terms_) {
    Polynomial acc = constant(target, t.coeff);
    for (std::size_t v = 0; v < ring_.nvars() && !acc.is_zero(); ++v)
      if (t.mono[v]) acc = acc * power(v, t.mono[v]);
    out += acc;
  }
  return out;
}

Polynomial Polynomial::remap(const Ring& target, const std::vector<std::optional<std::size_t>>& map) const {
  if (map.size() != ring_.nvars()) fail(ErrorCode::kDimensionMismatch, "one map entry per variable required");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target.nvars());
    for (std::size_t v = 0; v < ring_.nvars(); ++v) {
      if (t.mono[v] == 0) continue;
      if (!map[v]) fail(ErrorCode::kMixedRings, "variable '" + ring_.var_name(v) + "' has no image");
      m.set(*map[v], m[*map[v]] + t.mono[v]);
    }
    ts.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(ts));
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<bool> used(ring_.nvars(), false);
  for (const auto& t : terms_)
    for (std::size_t v = 0; v < ring_.nvars(); ++v)
      if (t.mono[v]) used[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < used.size(); ++v)
    if (used[v]) out.push_back(v);
  return out;
}

bool Polynomial::uses_only(const std::vector<bool>& allowed) const {
  for (const auto& t : terms_)
    for (std::size_t v = 0; v < ring_.nvars(); ++v)
      if (t.mono[v] && !allowed[v]) return false;
  return true;
}

Polynomial Polynomial::coefficient_of(std::size_t var, std::uint32_t e) const {
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    if (t.mono[var] != e) continue;
    Monomial m = t.mono;
    m.set(var, 0);
    ts.push_back({m, t.coeff});
  }
  return Polynomial(ring_, std::move(ts));
}

std::string Polynomial::to_string() const { return terms_string(ring_, terms_); }

std::string Polynomial::to_string(const MonomialOrder& order) const {
  return terms_string(ring_, detail::sorted_terms(*this, order));
}

std::string Polynomial::terms_string(const Ring& ring, const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms) {
    std::string mono = monomial_string(ring, t.mono);
    Coeff c = t.coeff;
    bool negative = c.is_negative();
    if (negative) c = -c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string cs;
    if (c.is_rational_function()) {
      cs = c.to_string();
      if (c.denominator().is_one() && c.numerator().size() > 1) cs = "(" + cs + ")";
    } else {
      cs = c.to_string();
    }
    if (mono.empty()) {
      s += cs;
    } else if (c.is_one()) {
      s += mono;
    } else {
      s += cs + "*" + mono;
    }
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

// ---- division ----

namespace detail {

Terms sorted_terms(const Polynomial& p, const MonomialOrder& order) {
  Terms ts = p.terms();
  if (order.kind() != MonomialOrder::Kind::kGrevlex)
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return ts;
}

Terms sub_scaled(const Terms& a, std::size_t a_from, const Coeff& c, const Monomial& m, const Terms& b,
                 std::size_t b_from, const MonomialOrder& order) {
  Terms out;
  out.reserve(a.size() - a_from + b.size() - b_from);
  std::size_t i = a_from, j = b_from;
  Monomial mb;
  bool have_b = false;
  auto load_b = [&]() {
    if (j < b.size()) {
      mb = b[j].mono * m;
      have_b = true;
    } else {
      have_b = false;
    }
  };
  load_b();
  while (i < a.size() && have_b) {
    int cmp = order.compare(a[i].mono, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({mb, -(c * b[j].coeff)});
      ++j;
      load_b();
    } else {
      Coeff s = a[i].coeff - c * b[j].coeff;
      if (!s.is_zero()) out.push_back({mb, std::move(s)});
      ++i;
      ++j;
      load_b();
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  while (have_b) {
    out.push_back({mb, -(c * b[j].coeff)});
    ++j;
    load_b();
  }
  return out;
}

Terms reduce(Terms p, const std::vector<const Terms*>& basis, const MonomialOrder& order,
             std::vector<Terms>* quotients) {
  if (quotients) quotients->assign(basis.size(), Terms{});
  Terms rem;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Term& lt = p[pos];
    std::size_t k = 0;
    for (; k < basis.size(); ++k) {
      const Terms& g = *basis[k];
      if (!g.empty() && g.front().mono.divides(lt.mono)) break;
    }
    if (k == basis.size()) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const Terms& g = *basis[k];
    Monomial q = lt.mono / g.front().mono;
    Coeff c = g.front().coeff.is_one() ? lt.coeff : lt.coeff / g.front().coeff;
    if (quotients) (*quotients)[k].push_back({q, c});
    p = sub_scaled(p, pos + 1, c, q, g, 1, order);
    pos = 0;
  }
  return rem;
}

}  // namespace detail

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order) {
  order.validate(f.ring().nvars());
  std::vector<detail::Terms> sorted;
  sorted.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.ring() != f.ring()) fail(ErrorCode::kMixedRings, "divisor ring differs");
    if (g.is_zero()) fail(ErrorCode::kZeroDivisorInput, "zero divisor");
    sorted.push_back(detail::sorted_terms(g, order));
  }
  std::vector<const detail::Terms*> ptrs;
  for (const auto& s : sorted) ptrs.push_back(&s);
  std::vector<detail::Terms> qs;
  detail::Terms rem = detail::reduce(detail::sorted_terms(f, order), ptrs, order, &qs);
  DivisionResult out;
  for (auto& q : qs) out.quotients.emplace_back(f.ring(), std::move(q));
  out.remainder = Polynomial(f.ring(), std::move(rem));
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.ring() != g.ring()) fail(ErrorCode::kMixedRings, "operands belong to different rings");
  const Term& a = f.leading_term(order);
  const Term& b = g.leading_term(order);
  Monomial l = a.mono.lcm(b.mono);
  return f.mul_term(l / a.mono, a.coeff.inverse()) - g.mul_term(l / b.mono, b.coeff.inverse());
}

std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) fail(ErrorCode::kZeroDivisorInput, "zero divisor");
  auto r = divide(f, {g}, MonomialOrder::grevlex());
  if (!r.remainder.is_zero()) return std::nullopt;
  return r.quotients[0];
}

Polynomial extend_ring(const Polynomial& f, const Ring& target) {
  if (target.nvars() < f.ring().nvars()) fail(ErrorCode::kMixedRings, "target ring is smaller");
  std::vector<std::optional<std::size_t>> map;
  for (std::size_t i = 0; i < f.ring().nvars(); ++i) map.emplace_back(i);
  return f.remap(target, map);
}

Polynomial restrict_ring(const Polynomial& f, const Ring& target, const std::vector<std::size_t>& keep) {
  std::vector<std::optional<std::size_t>> map(f.ring().nvars());
  for (std::size_t k = 0; k < keep.size(); ++k) map[keep[k]] = k;
  return f.remap(target, map);
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t deg) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  // Enumerate exponent vectors recursively.
  auto rec = [&](auto&& self, std::size_t v, std::uint32_t left) -> void {
    if (v == nvars) {
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      m.set(v, e);
      self(self, v + 1, left - e);
    }
    m.set(v, 0);
  };
  rec(rec, 0, deg);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
  return out;
}

}  // namespace idealkit
