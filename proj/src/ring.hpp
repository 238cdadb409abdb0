#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"

namespace idealkit {

class Ring {
 public:
  Ring();  // Q with no variables
  Ring(Field field, std::vector<std::string> vars);

  const Field& field() const;
  std::size_t nvars() const;
  const std::vector<std::string>& vars() const;
  const std::string& var_name(std::size_t i) const { return vars()[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // New variables are appended after the existing ones.
  Ring extended(const std::vector<std::string>& names) const;
  // Keeps the listed variables in the listed order.
  Ring subring(const std::vector<std::size_t>& keep) const;
  // A variable name not used by the ring or its field parameters.
  std::string fresh_name(std::string_view stem) const;

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

bool is_valid_identifier(std::string_view name);

}  // namespace idealkit
