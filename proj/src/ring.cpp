#include "ring.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"
#include "monomial.hpp"

namespace idealkit {

struct Ring::Impl {
  Field field;
  std::vector<std::string> vars;
};

namespace {

const std::shared_ptr<const Ring::Impl>& default_impl() {
  static const std::shared_ptr<const Ring::Impl> impl = std::make_shared<const Ring::Impl>();
  return impl;
}

}  // namespace

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Ring::Ring() : impl_(default_impl()) {}

Ring::Ring(Field field, std::vector<std::string> vars) {
  if (vars.size() > Monomial::kMaxVars) fail(ErrorCode::kResourceLimit, "too many variables");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!is_valid_identifier(vars[i])) fail(ErrorCode::kInvalidArgument, "invalid variable name '" + vars[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars[i] == vars[j]) fail(ErrorCode::kInvalidArgument, "duplicate variable '" + vars[i] + "'");
    if (field.is_rational_function()) {
      const auto& ps = field.parameters();
      if (std::find(ps.begin(), ps.end(), vars[i]) != ps.end())
        fail(ErrorCode::kInvalidArgument, "variable '" + vars[i] + "' is also a field parameter");
    }
  }
  impl_ = std::make_shared<const Impl>(Impl{std::move(field), std::move(vars)});
}

const Field& Ring::field() const { return impl_->field; }
std::size_t Ring::nvars() const { return impl_->vars.size(); }
const std::vector<std::string>& Ring::vars() const { return impl_->vars; }

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < impl_->vars.size(); ++i)
    if (impl_->vars[i] == name) return i;
  return std::nullopt;
}

Ring Ring::extended(const std::vector<std::string>& names) const {
  auto vars = impl_->vars;
  vars.insert(vars.end(), names.begin(), names.end());
  return Ring(impl_->field, std::move(vars));
}

Ring Ring::subring(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> vars;
  for (auto i : keep) vars.push_back(impl_->vars.at(i));
  return Ring(impl_->field, std::move(vars));
}

std::string Ring::fresh_name(std::string_view stem) const {
  auto taken = [&](const std::string& s) {
    if (index_of(s)) return true;
    if (field().is_rational_function()) {
      const auto& ps = field().parameters();
      if (std::find(ps.begin(), ps.end(), s) != ps.end()) return true;
    }
    return false;
  };
  std::string name(stem);
  for (int k = 1; taken(name); ++k) name = std::string(stem) + "_" + std::to_string(k);
  return name;
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->vars == b.impl_->vars && a.impl_->field == b.impl_->field;
}

}  // namespace idealkit
