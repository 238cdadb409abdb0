#include "order.hpp"

#include <algorithm>
#include <cctype>

#include "ring.hpp"

namespace idealkit {

int lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

int block_compare(const MonomialOrder::Block& blk, const Monomial& a, const Monomial& b) {
  if (blk.inner == MonomialOrder::Kind::kLex) {
    for (std::size_t v : blk.vars) {
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
  }
  std::uint32_t da = 0, db = 0;
  for (std::size_t v : blk.vars) {
    da += a[v];
    db += b[v];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = blk.vars.size(); k-- > 0;) {
    std::size_t v = blk.vars[k];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

MonomialOrder MonomialOrder::block(std::vector<Block> blocks) {
  MonomialOrder o(Kind::kBlock);
  for (auto& b : blocks) {
    if (b.inner == Kind::kBlock) fail(ErrorCode::kInvalidArgument, "block inner order must be lex or grevlex");
    if (!b.vars.empty()) o.blocks_.push_back(std::move(b));
  }
  return o;
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& big) {
  std::vector<bool> is_big(nvars, false);
  for (auto v : big) is_big.at(v) = true;
  Block hi, lo;
  for (std::size_t i = 0; i < nvars; ++i) (is_big[i] ? hi : lo).vars.push_back(i);
  return block({hi, lo});
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::kLex:
      return lex_compare(a, b);
    case Kind::kGrevlex:
      return grevlex_compare(a, b);
    case Kind::kBlock:
      for (const auto& blk : blocks_) {
        int c = block_compare(blk, a, b);
        if (c != 0) return c;
      }
      return 0;
  }
  return 0;
}

void MonomialOrder::validate(std::size_t nvars) const {
  if (kind_ != Kind::kBlock) return;
  std::vector<int> seen(nvars, 0);
  for (const auto& blk : blocks_) {
    for (auto v : blk.vars) {
      if (v >= nvars) fail(ErrorCode::kInvalidArgument, "block order names a variable outside the ring");
      ++seen[v];
    }
  }
  for (auto s : seen)
    if (s != 1) fail(ErrorCode::kInvalidArgument, "block order must cover every variable exactly once");
}

std::string MonomialOrder::key() const {
  switch (kind_) {
    case Kind::kLex:
      return "lex";
    case Kind::kGrevlex:
      return "grevlex";
    case Kind::kBlock:
      break;
  }
  std::string s = "block:";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) s += ';';
    s += blocks_[b].inner == Kind::kLex ? "lex(" : "grevlex(";
    for (std::size_t i = 0; i < blocks_[b].vars.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(blocks_[b].vars[i]);
    }
    s += ')';
  }
  return s;
}

std::string MonomialOrder::describe(const Ring& ring) const {
  if (kind_ != Kind::kBlock) return key();
  std::string s = "block:";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) s += ';';
    s += blocks_[b].inner == Kind::kLex ? "lex(" : "grevlex(";
    for (std::size_t i = 0; i < blocks_[b].vars.size(); ++i) {
      if (i) s += ',';
      s += ring.var_name(blocks_[b].vars[i]);
    }
    s += ')';
  }
  return s;
}

MonomialOrder MonomialOrder::parse(std::string_view text, const Ring& ring) {
  std::string t = trim(text);
  if (t == "lex") return lex();
  if (t == "grevlex") return grevlex();
  if (t.rfind("block:", 0) != 0) fail(ErrorCode::kInvalidArgument, "unknown monomial order '" + t + "'");
  std::vector<Block> blocks;
  for (const auto& part : split(std::string_view(t).substr(6), ';')) {
    Block blk;
    std::string body = part;
    if (body.rfind("lex(", 0) == 0 && body.back() == ')') {
      blk.inner = Kind::kLex;
      body = body.substr(4, body.size() - 5);
    } else if (body.rfind("grevlex(", 0) == 0 && body.back() == ')') {
      body = body.substr(8, body.size() - 9);
    }
    for (const auto& name : split(body, ',')) {
      auto idx = ring.index_of(name);
      if (!idx) fail(ErrorCode::kUnknownVariable, "order names unknown variable '" + name + "'");
      blk.vars.push_back(*idx);
    }
    blocks.push_back(std::move(blk));
  }
  MonomialOrder o = block(std::move(blocks));
  o.validate(ring.nvars());
  return o;
}

}  // namespace idealkit
