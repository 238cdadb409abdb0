#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "ideals.hpp"
#include "pipeline.hpp"
#include "primality.hpp"

namespace idealkit {

// Text renderings end with a newline; JSON renderings are indented objects with stable key order.

std::string render_groebner(const Ring& ring, const GroebnerBasis& gb, bool json);
std::string render_ideal(const Ideal& ideal, bool json);
std::string render_minpoly(const MinimalPolynomial& mp, bool json);
std::string render_bound(const Bound& bound, std::uint64_t digit_bits, bool json);
std::string render_lemma(const LemmaReport& report, bool json);
std::string render_lemma_summary(const std::vector<LemmaReport>& reports, bool json);
std::string render_primality(const PrimalityVerdict& v, bool json);
std::string render_maximality(const MaximalityVerdict& v, bool json);
std::string render_noether(const std::vector<NoetherStep>& steps, bool json);
std::string render_pipeline(const PipelineReport& report, const Ring& ring, bool json);
// Refusal to run with an automatic bound that cannot be materialized.
std::string render_refusal(const Bound& bound, const std::string& why, bool json);

}  // namespace idealkit
