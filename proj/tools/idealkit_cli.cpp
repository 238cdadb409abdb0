#include <idealkit/idealkit.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

// Exit codes: 0 verdict or success, 1 usage or input error, 2 undetermined or resource limit, 3 internal.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitInternal = 3;

int exit_code(ik_status s) {
  switch (s) {
    case IK_OK:
      return kExitOk;
    case IK_ERR_RESOURCE_LIMIT:
    case IK_ERR_INFEASIBLE_ENUMERATION:
    case IK_ERR_COMPARISON_OVERFLOW:
    case IK_ERR_CANDIDATE_EXHAUSTION:
      return kExitUndetermined;
    case IK_ERR_INVARIANT_VIOLATION:
    case IK_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

struct Global {
  bool json = false;
  unsigned threads = 1;
  bool force_digits = false;
  int flags() const { return json ? IK_JSON : IK_TEXT; }
};

struct IdealDeleter {
  void operator()(ik_ideal* p) const { ik_ideal_free(p); }
};
using IdealPtr = std::unique_ptr<ik_ideal, IdealDeleter>;

int report_error(ik_status s) {
  std::cerr << "error: " << ik_last_error() << "\n";
  return exit_code(s);
}

// Prints and frees the result string.
int finish(ik_status s, char* out) {
  if (s != IK_OK) return report_error(s);
  if (out) {
    std::fputs(out, stdout);
    ik_string_free(out);
  }
  return kExitOk;
}

int finish_verdict(ik_status s, char* out, ik_verdict v) {
  int code = finish(s, out);
  if (code != kExitOk) return code;
  return v == IK_VERDICT_UNDETERMINED ? kExitUndetermined : kExitOk;
}

std::optional<IdealPtr> load(const std::string& path, int& code) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    code = kExitUsage;
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  ik_ideal* raw = nullptr;
  ik_status s = ik_ideal_from_json(ss.str().c_str(), &raw);
  if (s != IK_OK) {
    code = report_error(s);
    return std::nullopt;
  }
  return IdealPtr(raw);
}

struct BoundOptions {
  long n = 1, d = 1;
  std::optional<long> r, p, m, N1, N2, B, k, d0;
};

void add_bound_options(CLI::App* cmd, BoundOptions& o) {
  cmd->add_option("--n", o.n, "number of variables")->required();
  cmd->add_option("--d", o.d, "generator degree")->required();
  cmd->add_option("--r", o.r, "transcendence degree");
  cmd->add_option("--p", o.p, "characteristic");
  cmd->add_option("--m", o.m, "p-power exponent");
  cmd->add_option("--B", o.B, "degree bound B");
  cmd->add_option("--N1", o.N1, "flatness bound N1");
  cmd->add_option("--N2", o.N2, "flatness bound N2");
  cmd->add_option("--k", o.k, "induction index k");
  cmd->add_option("--d0", o.d0, "degree d0");
}

ik_bound_params to_params(const BoundOptions& o) {
  ik_bound_params p;
  ik_bound_params_init(&p);
  p.n = o.n;
  p.d = o.d;
  p.r = o.r.value_or(-1);
  p.p = o.p.value_or(-1);
  p.m = o.m.value_or(-1);
  p.B = o.B.value_or(-1);
  p.N1 = o.N1.value_or(-1);
  p.N2 = o.N2.value_or(-1);
  p.k = o.k.value_or(-1);
  p.d0 = o.d0.value_or(-1);
  return p;
}

struct CheckOptions {
  std::string file;
  std::string b = "auto";
  std::string mode = "exhaustive";
  std::optional<std::uint64_t> cap, seed;
  std::optional<std::size_t> random;
};

void add_check_options(CLI::App* cmd, CheckOptions& o) {
  cmd->add_option("ideal", o.file, "ideal JSON document")->required();
  cmd->add_option("--b", o.b, "degree bound: an integer or 'auto'");
  cmd->add_option("--mode", o.mode, "exhaustive or witness")->check(CLI::IsMember({"exhaustive", "witness"}));
  cmd->add_option("--cap", o.cap, "largest admissible exhaustive candidate count");
  cmd->add_option("--seed", o.seed, "seed for witness search");
  cmd->add_option("--random-per-degree", o.random, "random witness candidates per degree");
}

int run_check(const CheckOptions& o, const Global& g, bool maximal) {
  int code = kExitOk;
  auto ideal = load(o.file, code);
  if (!ideal) return code;
  long b = -1;
  if (o.b != "auto") {
    try {
      std::size_t used = 0;
      b = std::stol(o.b, &used);
      if (used != o.b.size() || b < 0) throw std::invalid_argument(o.b);
    } catch (const std::exception&) {
      std::cerr << "error: --b expects a non-negative integer or 'auto'\n";
      return kExitUsage;
    }
  }
  ik_enum_options opts;
  ik_enum_options_init(&opts);
  opts.threads = g.threads;
  if (o.cap) opts.cap = *o.cap;
  if (o.seed) opts.seed = *o.seed;
  if (o.random) opts.random_per_degree = *o.random;
  ik_mode mode = o.mode == "witness" ? IK_MODE_WITNESS_SEARCH : IK_MODE_EXHAUSTIVE;
  char* out = nullptr;
  ik_verdict v = IK_VERDICT_UNDETERMINED;
  ik_status s = maximal ? ik_max_check(ideal->get(), b, mode, &opts, g.flags(), &out, &v)
                        : ik_prime_check(ideal->get(), b, mode, &opts, g.flags(), &out, &v);
  return finish_verdict(s, out, v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polynomial ideal toolkit: Groebner bases, ideal operations, degree bounds, bounded primality."};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--json", g.json, "machine-readable JSON output");
  app.add_option("--threads", g.threads, "worker threads (results do not depend on it)")->check(CLI::Range(1u, 256u));
  app.add_flag("--force-digits", g.force_digits, "print bound digits up to the bit cap instead of the tower form");
  app.fallthrough();

  std::string file, order, keep, by, subring, u, base;

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  gb->add_option("ideal", file, "ideal JSON document")->required();
  gb->add_option("--order", order, "lex, grevlex or block:...");

  auto* elim = app.add_subcommand("eliminate", "intersection with the subring on the kept variables");
  elim->add_option("ideal", file, "ideal JSON document")->required();
  elim->add_option("--keep", keep, "comma-separated variables to keep")->required();

  auto* quot = app.add_subcommand("quotient", "ideal quotient I : (f)");
  quot->add_option("ideal", file, "ideal JSON document")->required();
  quot->add_option("--by", by, "polynomial f")->required();

  auto* sat = app.add_subcommand("saturate", "saturation by a polynomial or by the nonzero elements of a subring");
  sat->add_option("ideal", file, "ideal JSON document")->required();
  auto* sat_by = sat->add_option("--by", by, "polynomial g");
  auto* sat_sub = sat->add_option("--subring", subring, "comma-separated subring variables");
  sat_by->excludes(sat_sub);

  auto* minp = app.add_subcommand("minpoly", "minimal polynomial of u modulo the ideal over k(base)");
  minp->add_option("ideal", file, "ideal JSON document")->required();
  minp->add_option("--u", u, "polynomial u")->required();
  minp->add_option("--base", base, "comma-separated base variables");

  auto* bounds = app.add_subcommand("bounds", "degree-bound evaluation and estimate verification");
  bounds->require_subcommand(1);
  std::string bound_name;
  BoundOptions bopts;
  auto* beval = bounds->add_subcommand("eval", "evaluate a named bound");
  beval->add_option("name", bound_name, "bound name")->required();
  add_bound_options(beval, bopts);
  std::string lemma;
  long n_max = 6, d_max = 6;
  auto* bverify = bounds->add_subcommand("verify", "check an estimate lemma on a parameter grid");
  bverify->add_option("lemma", lemma, "lemma identifier or 'all'")->required();
  bverify->add_option("--n-max", n_max, "largest n")->check(CLI::PositiveNumber);
  bverify->add_option("--d-max", d_max, "largest d")->check(CLI::PositiveNumber);
  auto* blist = bounds->add_subcommand("list", "list bound names and lemma identifiers");

  CheckOptions prime_opts, max_opts;
  auto* prime = app.add_subcommand("prime-check", "decide primality up to degree b");
  add_check_options(prime, prime_opts);
  auto* maxc = app.add_subcommand("max-check", "decide maximality up to degree b");
  add_check_options(maxc, max_opts);

  auto* noether = app.add_subcommand("noether", "Noether normalization step for each generator");
  noether->add_option("ideal", file, "ideal JSON document")->required();

  auto* pipe = app.add_subcommand("pipeline", "localization pipeline report");
  pipe->add_option("ideal", file, "ideal JSON document")->required();

  long vn = 6, vd = 6;
  auto* verify = app.add_subcommand("verify-estimates", "check every estimate lemma on a parameter grid");
  verify->add_option("--n-max", vn, "largest n")->check(CLI::PositiveNumber);
  verify->add_option("--d-max", vd, "largest d")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  char* out = nullptr;
  int code = kExitOk;
  auto with_ideal = [&](auto&& call) {
    auto ideal = load(file, code);
    if (!ideal) return code;
    ik_status s = call(ideal->get());
    return finish(s, out);
  };

  if (gb->parsed())
    return with_ideal([&](ik_ideal* I) { return ik_groebner(I, order.empty() ? nullptr : order.c_str(), g.flags(), &out); });
  if (elim->parsed()) return with_ideal([&](ik_ideal* I) { return ik_eliminate(I, keep.c_str(), g.flags(), &out); });
  if (quot->parsed()) return with_ideal([&](ik_ideal* I) { return ik_quotient(I, by.c_str(), g.flags(), &out); });
  if (sat->parsed()) {
    if (!*sat_by && !*sat_sub) {
      std::cerr << "error: saturate needs --by or --subring\n";
      return kExitUsage;
    }
    return with_ideal([&](ik_ideal* I) {
      return *sat_by ? ik_saturate(I, by.c_str(), g.flags(), &out)
                     : ik_saturate_subring(I, subring.c_str(), g.flags(), &out);
    });
  }
  if (minp->parsed())
    return with_ideal([&](ik_ideal* I) {
      return ik_minpoly(I, u.c_str(), base.empty() ? nullptr : base.c_str(), g.flags(), &out);
    });
  if (beval->parsed()) {
    auto p = to_params(bopts);
    ik_status s = ik_bound_eval(bound_name.c_str(), &p, g.force_digits ? UINT64_MAX : 0, g.flags(), &out);
    return finish(s, out);
  }
  if (bverify->parsed()) {
    int all = 0;
    ik_status s = lemma == "all" ? ik_verify_estimates(n_max, d_max, g.threads, g.flags(), &out, &all)
                                 : ik_lemma_verify(lemma.c_str(), n_max, d_max, g.threads, g.flags(), &out, &all);
    code = finish(s, out);
    return code != kExitOk ? code : (all ? kExitOk : kExitInternal);
  }
  if (blist->parsed()) {
    std::cout << "bounds:";
    for (std::size_t i = 0; i < ik_bound_count(); ++i) std::cout << " " << ik_bound_name(i);
    std::cout << "\nlemmas:";
    for (std::size_t i = 0; i < ik_lemma_count(); ++i) std::cout << " " << ik_lemma_id(i);
    std::cout << "\n";
    return kExitOk;
  }
  if (prime->parsed()) return run_check(prime_opts, g, false);
  if (maxc->parsed()) return run_check(max_opts, g, true);
  if (noether->parsed()) return with_ideal([&](ik_ideal* I) { return ik_noether(I, g.flags(), &out); });
  if (pipe->parsed()) {
    auto ideal = load(file, code);
    if (!ideal) return code;
    ik_verdict v = IK_VERDICT_UNDETERMINED;
    ik_status s = ik_pipeline(ideal->get(), g.flags(), &out, &v);
    return finish_verdict(s, out, v);
  }
  if (verify->parsed()) {
    int all = 0;
    ik_status s = ik_verify_estimates(vn, vd, g.threads, g.flags(), &out, &all);
    code = finish(s, out);
    return code != kExitOk ? code : (all ? kExitOk : kExitInternal);
  }
  return kExitUsage;
}
