#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monomial.hpp"

namespace idealkit {

class Ring;

// Variable index 0 is the greatest variable in lex and grevlex.
class MonomialOrder {
 public:
  enum class Kind { kLex, kGrevlex, kBlock };
  struct Block {
    std::vector<std::size_t> vars;
    Kind inner = Kind::kGrevlex;  // kLex or kGrevlex
  };

  MonomialOrder() = default;  // grevlex
  static MonomialOrder lex() { return MonomialOrder(Kind::kLex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::kGrevlex); }
  // Earlier blocks dominate; together the blocks must cover every variable once.
  static MonomialOrder block(std::vector<Block> blocks);
  // Two grevlex blocks: `big` dominates the remaining variables.
  static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& big);
  // "lex", "grevlex", or "block:" followed by ';'-separated blocks, each "a,b" (grevlex),
  // "lex(a,b)" or "grevlex(a,b)".
  static MonomialOrder parse(std::string_view text, const Ring& ring);

  Kind kind() const { return kind_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  // Sign of a - b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool is_degree_compatible() const { return kind_ == Kind::kGrevlex; }
  void validate(std::size_t nvars) const;
  std::string key() const;
  std::string describe(const Ring& ring) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.key() == b.key(); }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}
  Kind kind_ = Kind::kGrevlex;
  std::vector<Block> blocks_;
};

int grevlex_compare(const Monomial& a, const Monomial& b);
int lex_compare(const Monomial& a, const Monomial& b);

}  // namespace idealkit
