#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "order.hpp"
#include "polynomial.hpp"

namespace idealkit {

// Grammar: integers, identifiers, + - * / ^, parentheses; juxtaposition is rejected.
// Division is allowed only by nonzero constants of the coefficient field.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

struct IdealDocument {
  Ring ring;
  std::vector<Polynomial> generators;
  std::optional<MonomialOrder> order;
};

// {"field": "...", "vars": [...], "generators": [...], "order": "..."?}
IdealDocument parse_ideal_document(std::string_view json_text);
std::string ideal_document_to_json(const IdealDocument& doc);

// Comma-separated variable names resolved against `ring`.
std::vector<std::size_t> parse_var_list(std::string_view text, const Ring& ring);

}  // namespace idealkit
