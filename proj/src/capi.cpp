#include <idealkit/idealkit.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "bounds.hpp"
#include "errors.hpp"
#include "ideals.hpp"
#include "parse.hpp"
#include "pipeline.hpp"
#include "primality.hpp"
#include "report.hpp"

struct ik_ideal {
  idealkit::Ideal ideal;
  std::optional<idealkit::MonomialOrder> order;
};

namespace {

using namespace idealkit;

static_assert(static_cast<int>(ErrorCode::kInvalidArgument) + 1 == IK_ERR_INVALID_ARGUMENT);
static_assert(static_cast<int>(ErrorCode::kParseError) + 1 == IK_ERR_PARSE);
static_assert(static_cast<int>(ErrorCode::kInvariantViolation) + 1 == IK_ERR_INVARIANT_VIOLATION);

thread_local std::string last_error;

template <class F>
ik_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return IK_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<ik_status>(static_cast<int>(e.code()) + 1);
  } catch (const std::bad_alloc&) {
    last_error = "ResourceLimit: out of memory";
    return IK_ERR_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return IK_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

void emit(char** out, const std::string& s) {
  need(out, "output pointer");
  *out = dup(s);
}

BoundParams to_params(const ik_bound_params* p) {
  need(p, "bound parameters");
  BoundParams bp;
  bp.n = p->n;
  bp.d = p->d;
  auto opt = [](long v) { return v < 0 ? std::nullopt : std::optional<long>(v); };
  bp.r = opt(p->r);
  bp.p = opt(p->p);
  bp.m = opt(p->m);
  bp.N1 = opt(p->N1);
  bp.N2 = opt(p->N2);
  bp.B = opt(p->B);
  bp.k = opt(p->k);
  bp.d0 = opt(p->d0);
  return bp;
}

EnumerationOptions to_options(const ik_enum_options* o) {
  EnumerationOptions eo;
  if (!o) return eo;
  eo.cap = o->cap;
  eo.threads = o->threads == 0 ? 1 : o->threads;
  eo.seed = o->seed;
  eo.random_per_degree = o->random_per_degree;
  return eo;
}

bool json_flag(int flags) { return (flags & IK_JSON) != 0; }

// Degree bound chosen by the caller or materialized from `auto_bound`; nullopt after writing a refusal.
std::optional<std::uint32_t> resolve_bound(const ik_ideal* ideal, long b, const char* auto_bound, int flags,
                                           char** out) {
  if (b >= 0) {
    if (b > 0xFFFF) fail(ErrorCode::kInvalidArgument, "degree bound too large");
    return static_cast<std::uint32_t>(b);
  }
  BoundParams bp;
  bp.n = static_cast<long>(ideal->ideal.ring().nvars());
  bp.d = std::max<long>(1, static_cast<long>(ideal->ideal.max_degree()));
  Bound bound = evaluate_bound(auto_bound, bp);
  auto v = exact_value(bound.expr, 64);
  if (!v || *v > 0xFFFF) {
    emit(out, render_refusal(bound, "automatic bound is not materializable", json_flag(flags)));
    return std::nullopt;
  }
  mpz_class fl = v->get_num() / v->get_den();
  return static_cast<std::uint32_t>(fl.get_ui());
}

}  // namespace

extern "C" {

const char* ik_version(void) { return "1.0.0"; }

const char* ik_status_name(ik_status status) {
  if (status == IK_OK) return "Ok";
  if (status == IK_ERR_INTERNAL) return "Internal";
  if (status > IK_OK && status < IK_ERR_INTERNAL) return error_code_name(static_cast<ErrorCode>(status - 1));
  return "Unknown";
}

const char* ik_last_error(void) { return last_error.c_str(); }

void ik_string_free(char* s) { std::free(s); }

void ik_bound_params_init(ik_bound_params* p) {
  if (!p) return;
  p->n = 1;
  p->d = 1;
  p->r = p->p = p->m = p->N1 = p->N2 = p->B = p->k = p->d0 = -1;
}

void ik_enum_options_init(ik_enum_options* o) {
  if (!o) return;
  EnumerationOptions d;
  o->cap = d.cap;
  o->threads = d.threads;
  o->seed = d.seed;
  o->random_per_degree = d.random_per_degree;
}

ik_status ik_ideal_from_json(const char* json, ik_ideal** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "output pointer");
    auto doc = parse_ideal_document(json);
    *out = new ik_ideal{Ideal(doc.ring, doc.generators), doc.order};
  });
}

ik_status ik_ideal_from_strings(const char* field, const char* const* vars, size_t nvars,
                                const char* const* generators, size_t ngenerators, ik_ideal** out) {
  return guarded([&] {
    need(field, "field");
    need(out, "output pointer");
    std::vector<std::string> names;
    for (size_t i = 0; i < nvars; ++i) {
      need(vars[i], "variable name");
      if (!is_valid_identifier(vars[i])) fail(ErrorCode::kInvalidArgument, std::string("invalid variable name ") + vars[i]);
      names.emplace_back(vars[i]);
    }
    Ring ring(Field::parse(field), names);
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < ngenerators; ++i) {
      need(generators[i], "generator");
      gens.push_back(parse_polynomial(generators[i], ring));
    }
    *out = new ik_ideal{Ideal(ring, gens), std::nullopt};
  });
}

void ik_ideal_free(ik_ideal* ideal) { delete ideal; }

size_t ik_ideal_nvars(const ik_ideal* ideal) { return ideal ? ideal->ideal.ring().nvars() : 0; }

long ik_ideal_degree(const ik_ideal* ideal) {
  if (!ideal || ideal->ideal.is_zero()) return -1;
  return static_cast<long>(ideal->ideal.max_degree());
}

ik_status ik_ideal_contains(const ik_ideal* ideal, const char* polynomial, int* out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(polynomial, "polynomial");
    need(out, "output pointer");
    *out = contains(ideal->ideal, parse_polynomial(polynomial, ideal->ideal.ring())) ? 1 : 0;
  });
}

ik_status ik_groebner(const ik_ideal* ideal, const char* order, int flags, char** out) {
  return guarded([&] {
    need(ideal, "ideal");
    const Ring& ring = ideal->ideal.ring();
    MonomialOrder mo = order ? MonomialOrder::parse(order, ring) : ideal->order.value_or(MonomialOrder::grevlex());
    emit(out, render_groebner(ring, ideal->ideal.groebner_basis(mo), json_flag(flags)));
  });
}

ik_status ik_eliminate(const ik_ideal* ideal, const char* keep, int flags, char** out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(keep, "variable list");
    emit(out, render_ideal(eliminate(ideal->ideal, parse_var_list(keep, ideal->ideal.ring())), json_flag(flags)));
  });
}

ik_status ik_quotient(const ik_ideal* ideal, const char* f, int flags, char** out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(f, "polynomial");
    auto q = quotient_by_poly(ideal->ideal, parse_polynomial(f, ideal->ideal.ring()));
    emit(out, render_groebner(q.ring(), q.groebner_basis(), json_flag(flags)));
  });
}

ik_status ik_saturate(const ik_ideal* ideal, const char* g, int flags, char** out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(g, "polynomial");
    auto s = saturate_by_poly(ideal->ideal, parse_polynomial(g, ideal->ideal.ring()));
    emit(out, render_groebner(s.ring(), s.groebner_basis(), json_flag(flags)));
  });
}

ik_status ik_saturate_subring(const ik_ideal* ideal, const char* base, int flags, char** out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(base, "variable list");
    auto s = saturate_by_subring(ideal->ideal, parse_var_list(base, ideal->ideal.ring()));
    emit(out, render_groebner(s.ring(), s.groebner_basis(), json_flag(flags)));
  });
}

ik_status ik_minpoly(const ik_ideal* ideal, const char* u, const char* base, int flags, char** out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(u, "polynomial");
    const Ring& ring = ideal->ideal.ring();
    auto mp = minimal_poly_mod_ideal(ideal->ideal, parse_polynomial(u, ring), base ? parse_var_list(base, ring)
                                                                                  : std::vector<std::size_t>{});
    if (!mp) fail(ErrorCode::kNotAlgebraic, "element is transcendental over the base modulo the ideal");
    emit(out, render_minpoly(*mp, json_flag(flags)));
  });
}

ik_status ik_bound_eval(const char* name, const ik_bound_params* params, uint64_t digit_bits, int flags,
                        char** out) {
  return guarded([&] {
    need(name, "bound name");
    Bound b = evaluate_bound(name, to_params(params));
    emit(out, render_bound(b, digit_bits == 0 ? Bound::kDisplayBits : std::min(digit_bits, default_bit_cap()),
                            json_flag(flags)));
  });
}

ik_status ik_bound_value(const char* name, const ik_bound_params* params, uint64_t bit_cap, char** out) {
  return guarded([&] {
    need(name, "bound name");
    Bound b = evaluate_bound(name, to_params(params));
    auto v = exact_value(b.expr, bit_cap == 0 ? default_bit_cap() : bit_cap);
    if (!v) fail(ErrorCode::kResourceLimit, "value exceeds the bit cap: " + b.tower());
    emit(out, v->get_str());
  });
}

ik_status ik_bound_compare(const char* a, const ik_bound_params* pa, const char* b, const ik_bound_params* pb,
                           int* sign) {
  return guarded([&] {
    need(a, "bound name");
    need(b, "bound name");
    need(sign, "output pointer");
    auto o = compare_bounds(evaluate_bound(a, to_params(pa)).expr, evaluate_bound(b, to_params(pb)).expr);
    *sign = o == Ordering::kLess ? -1 : o == Ordering::kEqual ? 0 : 1;
  });
}

size_t ik_bound_count(void) { return bound_names().size(); }
const char* ik_bound_name(size_t i) { return i < bound_names().size() ? bound_names()[i].c_str() : nullptr; }
size_t ik_lemma_count(void) { return lemma_ids().size(); }
const char* ik_lemma_id(size_t i) { return i < lemma_ids().size() ? lemma_ids()[i].c_str() : nullptr; }

ik_status ik_lemma_verify(const char* id, long n_max, long d_max, unsigned threads, int flags, char** out,
                          int* all_hold) {
  return guarded([&] {
    need(id, "lemma id");
    auto rep = verify_estimate_lemma(id, n_max, d_max, threads == 0 ? 1 : threads);
    if (all_hold) *all_hold = rep.all_hold() ? 1 : 0;
    emit(out, render_lemma(rep, json_flag(flags)));
  });
}

ik_status ik_verify_estimates(long n_max, long d_max, unsigned threads, int flags, char** out, int* all_hold) {
  return guarded([&] {
    std::vector<LemmaReport> reps;
    bool ok = true;
    for (const auto& id : lemma_ids()) {
      reps.push_back(verify_estimate_lemma(id, n_max, d_max, threads == 0 ? 1 : threads));
      ok = ok && reps.back().all_hold();
    }
    if (all_hold) *all_hold = ok ? 1 : 0;
    emit(out, render_lemma_summary(reps, json_flag(flags)));
  });
}

ik_status ik_prime_check(const ik_ideal* ideal, long b, ik_mode mode, const ik_enum_options* options, int flags,
                         char** out, ik_verdict* verdict) {
  return guarded([&] {
    need(ideal, "ideal");
    if (verdict) *verdict = IK_VERDICT_UNDETERMINED;
    auto bound = resolve_bound(ideal, b, "b_main", flags, out);
    if (!bound) return;
    auto v = prime_up_to(ideal->ideal, *bound,
                         mode == IK_MODE_EXHAUSTIVE ? EnumerationMode::kExhaustive : EnumerationMode::kWitnessSearch,
                         to_options(options));
    if (verdict)
      *verdict = v.status == PrimalityVerdict::Status::kPrimeUpTo        ? IK_VERDICT_POSITIVE
                 : v.status == PrimalityVerdict::Status::kCounterexample ? IK_VERDICT_NEGATIVE
                                                                         : IK_VERDICT_UNDETERMINED;
    emit(out, render_primality(v, json_flag(flags)));
  });
}

ik_status ik_max_check(const ik_ideal* ideal, long b, ik_mode mode, const ik_enum_options* options, int flags,
                       char** out, ik_verdict* verdict) {
  return guarded([&] {
    need(ideal, "ideal");
    if (verdict) *verdict = IK_VERDICT_UNDETERMINED;
    auto bound = resolve_bound(ideal, b, "m", flags, out);
    if (!bound) return;
    auto v = maximal_up_to(ideal->ideal, *bound,
                           mode == IK_MODE_EXHAUSTIVE ? EnumerationMode::kExhaustive : EnumerationMode::kWitnessSearch,
                           to_options(options));
    if (verdict)
      *verdict = v.status == MaximalityVerdict::Status::kMaximalUpTo       ? IK_VERDICT_POSITIVE
                 : v.status == MaximalityVerdict::Status::kNonInvertible ? IK_VERDICT_NEGATIVE
                                                                         : IK_VERDICT_UNDETERMINED;
    emit(out, render_maximality(v, json_flag(flags)));
  });
}

ik_status ik_noether(const ik_ideal* ideal, int flags, char** out) {
  return guarded([&] {
    need(ideal, "ideal");
    std::vector<NoetherStep> steps;
    for (const auto& g : ideal->ideal.generators()) steps.push_back(noether_normalize_step(g));
    emit(out, render_noether(steps, json_flag(flags)));
  });
}

ik_status ik_pipeline(const ik_ideal* ideal, int flags, char** out, ik_verdict* verdict) {
  return guarded([&] {
    need(ideal, "ideal");
    auto rep = run_pipeline(ideal->ideal);
    if (verdict)
      *verdict = rep.i_prime == Tri::kYes  ? IK_VERDICT_POSITIVE
                 : rep.i_prime == Tri::kNo ? IK_VERDICT_NEGATIVE
                                           : IK_VERDICT_UNDETERMINED;
    emit(out, render_pipeline(rep, ideal->ideal.ring(), json_flag(flags)));
  });
}

}  // extern "C"
