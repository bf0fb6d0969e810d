#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "vlogic/error.hpp"

namespace vlogic {

/// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  enum class Kind : unsigned char { True, False, Var, Not, And, Or, Impl, Equiv, Xor, Nand, Nor };

  static Formula top();
  static Formula bottom();
  static Formula constant(bool value) { return value ? top() : bottom(); }
  /// Throws ErrorKind::invalid_argument unless name matches [a-z][a-z0-9_]*
  /// and is not a reserved word.
  static Formula var(std::string name);
  static Formula negation(Formula operand);
  /// `kind` must be one of the binary kinds.
  static Formula binary(Kind kind, Formula lhs, Formula rhs);

  Kind kind() const noexcept;
  bool is_constant() const noexcept { return kind() == Kind::True || kind() == Kind::False; }
  bool is_var() const noexcept { return kind() == Kind::Var; }
  bool is_negation() const noexcept { return kind() == Kind::Not; }
  bool is_binary() const noexcept { return kind() >= Kind::And; }

  /// Variable name; empty for other kinds.
  const std::string& name() const noexcept;
  /// Operand of a negation.
  const Formula& operand() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool is_identifier(std::string_view name);

inline Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::And, std::move(a), std::move(b));
}
inline Formula operator|(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::Or, std::move(a), std::move(b));
}
inline Formula operator^(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::Xor, std::move(a), std::move(b));
}
inline Formula implies(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::Impl, std::move(a), std::move(b));
}
inline Formula iff(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::Equiv, std::move(a), std::move(b));
}
inline Formula nand(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::Nand, std::move(a), std::move(b));
}
inline Formula nor(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::Nor, std::move(a), std::move(b));
}

/// Distinct variable names in first-occurrence order.
using VariableSet = std::vector<std::string>;

VariableSet variables(const Formula& f);
bool contains_variable(const Formula& f, std::string_view name);

/// Grammar, loosest binding first:
///   <->  (left)   ->  (right)   ^  (left)   | !|  (left)   & !&  (left)   ! (prefix)
/// Atoms: identifiers, `1` `0` `true` `false`, parenthesized formulas.
/// Throws ParseError (lexical / syntax / unbalanced) with a 1-based position.
Formula parse(std::string_view text);

enum class Notation { infix, polish };

/// Infix output parenthesizes every binary operand of a binary operator or of
/// `!`. Polish output is prefix notation using the gate letters
/// (N C D L S P E X) and `1`/`0` for the constants.
std::string render(const Formula& f, Notation notation = Notation::infix);

Formula substitute(const Formula& f, std::string_view var, const Formula& g);
/// Simultaneous substitution.
Formula substitute(const Formula& f, const std::map<std::string, Formula, std::less<>>& bindings);

/// ⊤/⊥ absorption and double-negation removal. Every rewrite is exact in the
/// probabilistic semantics as well as the binary one.
Formula fold_constants(const Formula& f);

std::size_t node_count(const Formula& f);
std::size_t depth(const Formula& f);

}  // namespace vlogic
