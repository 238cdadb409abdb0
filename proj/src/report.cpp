#include "report.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace idealkit {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json opt_poly(const std::optional<Polynomial>& p) { return p ? Json(p->to_string()) : Json(nullptr); }

std::vector<std::string> strings(const std::vector<Polynomial>& ps, const MonomialOrder& order) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(order));
  return out;
}

}  // namespace

std::string render_groebner(const Ring& ring, const GroebnerBasis& gb, bool json) {
  auto elems = strings(gb.elements, gb.order);
  if (json) {
    Json j;
    j["field"] = ring.field().descriptor();
    j["vars"] = ring.vars();
    j["order"] = gb.order.describe(ring);
    j["basis"] = elems;
    return dump(j);
  }
  std::string s;
  for (const auto& e : elems) s += e + "\n";
  return s;
}

std::string render_ideal(const Ideal& ideal, bool json) {
  auto gens = strings(ideal.generators(), MonomialOrder::grevlex());
  if (json) {
    Json j;
    j["field"] = ideal.ring().field().descriptor();
    j["vars"] = ideal.ring().vars();
    j["generators"] = gens;
    return dump(j);
  }
  std::string s = "vars: ";
  for (std::size_t i = 0; i < ideal.ring().nvars(); ++i) s += (i ? "," : "") + ideal.ring().var_name(i);
  s += "\n";
  if (gens.empty()) s += "0\n";
  for (const auto& g : gens) s += g + "\n";
  return s;
}

std::string render_minpoly(const MinimalPolynomial& mp, bool json) {
  if (json) {
    Json j;
    j["vars"] = mp.poly.ring().vars();
    j["poly"] = mp.poly.to_string();
    j["y_degree"] = mp.y_degree();
    return dump(j);
  }
  return mp.poly.to_string() + "\n";
}

std::string render_bound(const Bound& bound, std::uint64_t digit_bits, bool json) {
  auto v = exact_value(bound.expr, digit_bits);
  if (json) {
    Json j;
    j["name"] = bound.name;
    Json params = Json::object();
    for (const auto& [k, val] : bound.params) params[k] = val;
    j["params"] = params;
    j["value"] = v ? Json(v->get_str()) : Json(nullptr);
    j["tower"] = bound.tower();
    return dump(j);
  }
  return (v ? v->get_str() : bound.tower()) + "\n";
}

std::string render_lemma(const LemmaReport& report, bool json) {
  if (json) {
    Json j;
    j["id"] = report.id;
    j["all_hold"] = report.all_hold();
    Json pts = Json::array();
    for (const auto& p : report.points) {
      Json q;
      q["n"] = p.n;
      q["d"] = p.d;
      q["r"] = p.r ? Json(*p.r) : Json(nullptr);
      q["k"] = p.k ? Json(*p.k) : Json(nullptr);
      q["status"] = to_string(p.status);
      if (!p.detail.empty()) q["detail"] = p.detail;
      pts.push_back(q);
    }
    j["points"] = pts;
    return dump(j);
  }
  // One cell per (n, d), the worst status over r and k.
  std::map<std::pair<long, long>, LemmaPoint::Status> cell;
  long nlo = std::numeric_limits<long>::max(), nhi = 0, dlo = std::numeric_limits<long>::max(), dhi = 0;
  std::size_t held = 0;
  for (const auto& p : report.points) {
    auto& c = cell.try_emplace({p.n, p.d}, LemmaPoint::Status::kHolds).first->second;
    if (p.status != LemmaPoint::Status::kHolds && c != LemmaPoint::Status::kFails) c = p.status;
    if (p.status == LemmaPoint::Status::kHolds) ++held;
    nlo = std::min(nlo, p.n), nhi = std::max(nhi, p.n), dlo = std::min(dlo, p.d), dhi = std::max(dhi, p.d);
  }
  std::ostringstream os;
  os << report.id << ": " << (report.all_hold() ? "PASS" : "FAIL") << " (" << held << "/" << report.points.size()
     << " points hold)\n";
  if (cell.empty()) return os.str();
  os << "     ";
  for (long d = dlo; d <= dhi; ++d) os << " d=" << d << (d < 10 ? " " : "");
  os << "\n";
  for (long n = nlo; n <= nhi; ++n) {
    os << "n=" << n << (n < 10 ? "  " : " ");
    for (long d = dlo; d <= dhi; ++d) {
      auto it = cell.find({n, d});
      const char* mark = it == cell.end()                                ? "  - "
                         : it->second == LemmaPoint::Status::kHolds     ? "  ok"
                         : it->second == LemmaPoint::Status::kFails     ? "FAIL"
                                                                        : " OVF";
      os << " " << mark;
    }
    os << "\n";
  }
  for (const auto& p : report.points)
    if (p.status != LemmaPoint::Status::kHolds) os << "  n=" << p.n << " d=" << p.d << ": " << p.detail << "\n";
  return os.str();
}

std::string render_lemma_summary(const std::vector<LemmaReport>& reports, bool json) {
  if (json) {
    Json j = Json::array();
    for (const auto& r : reports) {
      std::size_t held = 0;
      for (const auto& p : r.points) held += p.status == LemmaPoint::Status::kHolds;
      Json q;
      q["id"] = r.id;
      q["all_hold"] = r.all_hold();
      q["points"] = r.points.size();
      q["holding"] = held;
      j.push_back(q);
    }
    return dump(j);
  }
  std::string s;
  for (const auto& r : reports) {
    std::size_t held = 0;
    for (const auto& p : r.points) held += p.status == LemmaPoint::Status::kHolds;
    s += r.id + ": " + (r.all_hold() ? "PASS" : "FAIL") + " (" + std::to_string(held) + "/" +
         std::to_string(r.points.size()) + ")\n";
  }
  return s;
}

std::string render_primality(const PrimalityVerdict& v, bool json) {
  if (json) {
    Json j;
    j["status"] = to_string(v.status);
    j["bound"] = v.bound;
    j["f"] = opt_poly(v.f);
    j["g"] = opt_poly(v.g);
    j["candidates"] = v.candidates;
    j["reason"] = v.reason;
    return dump(j);
  }
  std::string s = std::string(to_string(v.status)) + " b=" + std::to_string(v.bound);
  if (v.f) s += "\nf: " + v.f->to_string() + "\ng: " + v.g->to_string();
  if (!v.reason.empty()) s += "\nreason: " + v.reason;
  return s + "\ncandidates: " + std::to_string(v.candidates) + "\n";
}

std::string render_maximality(const MaximalityVerdict& v, bool json) {
  if (json) {
    Json j;
    j["status"] = to_string(v.status);
    j["bound"] = v.bound;
    j["f"] = opt_poly(v.f);
    j["candidates"] = v.candidates;
    j["reason"] = v.reason;
    return dump(j);
  }
  std::string s = std::string(to_string(v.status)) + " b=" + std::to_string(v.bound);
  if (v.f) s += "\nf: " + v.f->to_string();
  if (!v.reason.empty()) s += "\nreason: " + v.reason;
  return s + "\ncandidates: " + std::to_string(v.candidates) + "\n";
}

std::string render_noether(const std::vector<NoetherStep>& steps, bool json) {
  if (json) {
    Json j = Json::array();
    for (const auto& st : steps) {
      Json q;
      q["a"] = st.a;
      q["c"] = st.c.to_string();
      q["transformed"] = st.transformed.to_string();
      j.push_back(q);
    }
    return dump(j);
  }
  std::string s;
  for (const auto& st : steps) {
    s += "a=(";
    for (std::size_t i = 0; i < st.a.size(); ++i) s += (i ? "," : "") + std::to_string(st.a[i]);
    s += ") c=" + st.c.to_string() + "\n" + st.transformed.to_string() + "\n";
  }
  return s;
}

std::string render_pipeline(const PipelineReport& rep, const Ring& ring, bool json) {
  auto names = [&](const std::vector<std::size_t>& vs) {
    std::vector<std::string> out;
    for (auto v : vs) out.push_back(ring.var_name(v));
    return out;
  };
  if (json) {
    Json j;
    j["r"] = rep.r;
    j["basis_vars"] = names(rep.basis_vars);
    Json w = Json::object(), d = Json::object(), wi = Json::object(), phi = Json::object();
    for (const auto& [k, p] : rep.w) w[ring.var_name(k)] = p.to_string();
    for (const auto& [k, v] : rep.d) d[ring.var_name(k)] = v;
    for (const auto& [k, v] : rep.w_irreducible) wi[ring.var_name(k)] = to_string(v);
    for (const auto& [k, p] : rep.phi) phi[ring.var_name(k)] = p.to_string();
    j["w"] = w;
    j["d"] = d;
    j["w_irreducible"] = wi;
    j["contraction_ok"] = rep.contraction_ok;
    j["U"] = opt_poly(rep.u);
    j["h"] = opt_poly(rep.h);
    j["phi"] = phi;
    j["quotient_dim"] = rep.quotient_dim;
    Json verdicts;
    verdicts["J_maximal"] = to_string(rep.j_maximal);
    Json ip;
    ip["verdict"] = to_string(rep.i_prime);
    if (rep.f) ip["witness"] = {rep.f->to_string(), rep.g->to_string()};
    verdicts["I_prime"] = ip;
    j["verdicts"] = verdicts;
    j["inseparable"] = rep.inseparable;
    j["easy_case"] = rep.easy_case.empty() ? Json(nullptr) : Json(rep.easy_case);
    j["notes"] = rep.notes;
    j["certificates"] = rep.certificates;
    return dump(j);
  }
  std::ostringstream os;
  os << "r: " << rep.r << "\nbasis:";
  for (const auto& n : names(rep.basis_vars)) os << " " << n;
  os << "\n";
  if (!rep.easy_case.empty()) os << "easy case: " << rep.easy_case << "\n";
  for (const auto& [k, p] : rep.w) {
    os << "w_" << ring.var_name(k) << ": " << p.to_string() << " (d=" << rep.d.at(k);
    if (rep.w_irreducible.count(k)) os << ", irreducible " << to_string(rep.w_irreducible.at(k));
    os << ")\n";
  }
  os << "contraction: " << (rep.contraction_ok ? "ok" : "fails") << "\n";
  if (rep.u) os << "U: " << rep.u->to_string() << "\n";
  if (rep.h) os << "h: " << rep.h->to_string() << "\n";
  for (const auto& [k, p] : rep.phi) os << "phi_" << ring.var_name(k) << ": " << p.to_string() << "\n";
  os << "quotient_dim: " << rep.quotient_dim << "\n";
  if (rep.inseparable) os << "Inseparable\n";
  os << "J_maximal: " << to_string(rep.j_maximal) << "\n";
  os << "I_prime: " << to_string(rep.i_prime);
  if (rep.f) os << " (" << rep.f->to_string() << ", " << rep.g->to_string() << ")";
  os << "\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  for (const auto& c : rep.certificates) os << "certificate: " << c << "\n";
  return os.str();
}

std::string render_refusal(const Bound& bound, const std::string& why, bool json) {
  if (json) {
    Json j;
    j["status"] = "Refused";
    j["reason"] = why;
    j["bound"] = bound.tower();
    return dump(j);
  }
  return "Refused: " + why + "\nbound: " + bound.tower() + "\n";
}

}  // namespace idealkit
