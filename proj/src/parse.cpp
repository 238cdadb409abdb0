#include "parse.hpp"

#include <cctype>
#include <json.hpp>

#include "errors.hpp"

namespace idealkit {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) {
      if (starts_operand()) error("implicit multiplication is not allowed");
      error(std::string("unexpected '") + text_[pos_] + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_operand() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant()) {
          pos_ = at;
          error("division by a non-constant");
        }
        if (d.is_zero()) {
          pos_ = at;
          error("division by zero");
        }
        acc = acc * d.terms()[0].coeff.inverse();
      } else if (starts_operand()) {
        error("implicit multiplication is not allowed");
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("exponent must be a non-negative integer");
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 5 || std::stoul(digits) > Monomial::kMaxExponent) {
        pos_ = start;
        error("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
      if (peek('^')) error("chained exponents need parentheses");
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class v(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, ring_.field().from_mpz(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (auto idx = ring_.index_of(name)) return Polynomial::variable(ring_, *idx);
      const Field& f = ring_.field();
      if (f.is_rational_function()) {
        const auto& ps = f.parameters();
        for (std::size_t i = 0; i < ps.size(); ++i)
          if (ps[i] == name) return Polynomial::constant(ring_, f.parameter(i));
      }
      throw Error(ErrorCode::kUnknownVariable, "unknown variable '" + name + "'");
    }
    error(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) { return PolyParser(text, ring).parse(); }

IdealDocument parse_ideal_document(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(json_text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, col);
  }
  if (!doc.is_object()) throw ParseError("ideal document must be a JSON object", 1, 1);
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'", 1, 1);
    return doc.at(key);
  };
  const auto& jfield = need("field");
  const auto& jvars = need("vars");
  const auto& jgens = need("generators");
  if (!jfield.is_string()) throw ParseError("'field' must be a string", 1, 1);
  if (!jvars.is_array()) throw ParseError("'vars' must be an array", 1, 1);
  if (!jgens.is_array()) throw ParseError("'generators' must be an array", 1, 1);
  Field field = Field::parse(jfield.get<std::string>());
  std::vector<std::string> vars;
  for (const auto& v : jvars) {
    if (!v.is_string()) throw ParseError("variable names must be strings", 1, 1);
    auto name = v.get<std::string>();
    if (!is_valid_identifier(name)) throw ParseError("invalid variable name '" + name + "'", 1, 1);
    vars.push_back(name);
  }
  IdealDocument out{Ring(field, vars), {}, std::nullopt};
  for (std::size_t i = 0; i < jgens.size(); ++i) {
    if (!jgens[i].is_string()) throw ParseError("generator " + std::to_string(i) + " must be a string", 1, 1);
    try {
      out.generators.push_back(parse_polynomial(jgens[i].get<std::string>(), out.ring));
    } catch (const ParseError& e) {
      throw ParseError("generator " + std::to_string(i) + ": " + e.what(), e.line(), e.column());
    }
  }
  if (doc.contains("order")) {
    if (!doc["order"].is_string()) throw ParseError("'order' must be a string", 1, 1);
    out.order = MonomialOrder::parse(doc["order"].get<std::string>(), out.ring);
  }
  return out;
}

std::string ideal_document_to_json(const IdealDocument& doc) {
  nlohmann::ordered_json j;
  j["field"] = doc.ring.field().descriptor();
  j["vars"] = doc.ring.vars();
  std::vector<std::string> gens;
  for (const auto& g : doc.generators) gens.push_back(g.to_string());
  j["generators"] = gens;
  if (doc.order) j["order"] = doc.order->describe(doc.ring);
  return j.dump(2);
}

std::vector<std::size_t> parse_var_list(std::string_view text, const Ring& ring) {
  std::vector<std::size_t> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    auto idx = ring.index_of(cur);
    if (!idx) fail(ErrorCode::kUnknownVariable, "unknown variable '" + cur + "'");
    out.push_back(*idx);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

}  // namespace idealkit
