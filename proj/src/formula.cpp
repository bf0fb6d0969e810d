#include "vlogic/formula.hpp"

#include <algorithm>
#include <unordered_set>

namespace vlogic {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> children;
};

namespace {

using Kind = Formula::Kind;

bool is_reserved(std::string_view name) { return name == "true" || name == "false"; }

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Formula Formula::top() {
  static const auto node = std::make_shared<const Node>(Node{Kind::True, {}, {}});
  return Formula(node);
}

Formula Formula::bottom() {
  static const auto node = std::make_shared<const Node>(Node{Kind::False, {}, {}});
  return Formula(node);
}

Formula Formula::var(std::string name) {
  if (!is_identifier(name) || is_reserved(name))
    throw Error(ErrorKind::invalid_argument, "'" + name + "' is not a variable name");
  return Formula(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(operand)}}));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  if (kind < Kind::And)
    throw Error(ErrorKind::invalid_argument, "not a binary connective");
  return Formula(std::make_shared<const Node>(
      Node{kind, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::name() const noexcept { return node_->name; }

const Formula& Formula::operand() const {
  if (kind() != Kind::Not) throw Error(ErrorKind::invalid_argument, "not a negation");
  return node_->children[0];
}

const Formula& Formula::lhs() const {
  if (!is_binary()) throw Error(ErrorKind::invalid_argument, "not a binary formula");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (!is_binary()) throw Error(ErrorKind::invalid_argument, "not a binary formula");
  return node_->children[1];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Var:
      return a.name() == b.name();
    case Kind::Not:
      return a.operand() == b.operand();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// ---------------------------------------------------------------------------
// Traversal helpers

namespace {

void collect_variables(const Formula& f, VariableSet& out,
                       std::unordered_set<std::string>& seen) {
  switch (f.kind()) {
    case Kind::True:
    case Kind::False:
      return;
    case Kind::Var:
      if (seen.insert(f.name()).second) out.push_back(f.name());
      return;
    case Kind::Not:
      collect_variables(f.operand(), out, seen);
      return;
    default:
      collect_variables(f.lhs(), out, seen);
      collect_variables(f.rhs(), out, seen);
  }
}

}  // namespace

VariableSet variables(const Formula& f) {
  VariableSet out;
  std::unordered_set<std::string> seen;
  collect_variables(f, out, seen);
  return out;
}

bool contains_variable(const Formula& f, std::string_view name) {
  switch (f.kind()) {
    case Kind::True:
    case Kind::False:
      return false;
    case Kind::Var:
      return f.name() == name;
    case Kind::Not:
      return contains_variable(f.operand(), name);
    default:
      return contains_variable(f.lhs(), name) || contains_variable(f.rhs(), name);
  }
}

std::size_t node_count(const Formula& f) {
  if (f.is_negation()) return 1 + node_count(f.operand());
  if (f.is_binary()) return 1 + node_count(f.lhs()) + node_count(f.rhs());
  return 1;
}

std::size_t depth(const Formula& f) {
  if (f.is_negation()) return 1 + depth(f.operand());
  if (f.is_binary()) return 1 + std::max(depth(f.lhs()), depth(f.rhs()));
  return 0;
}

// ---------------------------------------------------------------------------
// Lexer / parser

namespace {

enum class Tok { ident, top, bottom, lnot, land, lor, lxor, impl, equiv, nand, nor, lparen, rparen, end };

struct Token {
  Tok type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count && i < text.size(); ++k, ++i) {
      const auto byte = static_cast<unsigned char>(text[i]);
      if (byte == '\n') {
        ++line;
        column = 1;
      } else if ((byte & 0xC0) != 0x80) {
        ++column;  // count code points, not UTF-8 continuation bytes
      }
    }
  };
  auto starts_with = [&](std::string_view s) { return text.substr(i).starts_with(s); };

  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    const std::size_t tl = line, tc = column;
    auto emit = [&](Tok t, std::size_t len) {
      tokens.push_back({t, std::string(text.substr(i, len)), tl, tc});
      advance(len);
    };
    if (starts_with("<->")) emit(Tok::equiv, 3);
    else if (starts_with("->")) emit(Tok::impl, 2);
    else if (starts_with("!&")) emit(Tok::nand, 2);
    else if (starts_with("!|")) emit(Tok::nor, 2);
    else if (c == '!') emit(Tok::lnot, 1);
    else if (c == '&') emit(Tok::land, 1);
    else if (c == '|') emit(Tok::lor, 1);
    else if (c == '^') emit(Tok::lxor, 1);
    else if (c == '(') emit(Tok::lparen, 1);
    else if (c == ')') emit(Tok::rparen, 1);
    else if (c == '1') emit(Tok::top, 1);
    else if (c == '0') emit(Tok::bottom, 1);
    else if (c >= 'a' && c <= 'z') {
      std::size_t len = 1;
      while (i + len < text.size() &&
             ((text[i + len] >= 'a' && text[i + len] <= 'z') ||
              (text[i + len] >= '0' && text[i + len] <= '9') || text[i + len] == '_'))
        ++len;
      const std::string_view word = text.substr(i, len);
      emit(word == "true" ? Tok::top : word == "false" ? Tok::bottom : Tok::ident, len);
    } else {
      std::size_t len = 1;
      const auto byte = static_cast<unsigned char>(c);
      if (byte >= 0x80)
        while (i + len < text.size() &&
               (static_cast<unsigned char>(text[i + len]) & 0xC0) == 0x80)
          ++len;
      throw ParseError(ErrorKind::lexical,
                       "unexpected character '" + std::string(text.substr(i, len)) + "'",
                       tl, tc);
    }
  }
  tokens.push_back({Tok::end, "", line, column});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = parse_equiv();
    const Token& t = peek();
    if (t.type == Tok::rparen)
      throw ParseError(ErrorKind::unbalanced, "unmatched ')'", t.line, t.column);
    if (t.type != Tok::end)
      throw ParseError(ErrorKind::syntax, "unexpected '" + t.text + "'", t.line, t.column);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Tok t) {
    if (peek().type != t) return false;
    ++pos_;
    return true;
  }

  Formula parse_equiv() {
    Formula lhs = parse_impl();
    while (accept(Tok::equiv)) lhs = iff(std::move(lhs), parse_impl());
    return lhs;
  }

  Formula parse_impl() {
    Formula lhs = parse_xor();
    if (accept(Tok::impl)) return implies(std::move(lhs), parse_impl());
    return lhs;
  }

  Formula parse_xor() {
    Formula lhs = parse_or();
    while (accept(Tok::lxor)) lhs = std::move(lhs) ^ parse_or();
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    for (;;) {
      if (accept(Tok::lor)) lhs = std::move(lhs) | parse_and();
      else if (accept(Tok::nor)) lhs = nor(std::move(lhs), parse_and());
      else return lhs;
    }
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    for (;;) {
      if (accept(Tok::land)) lhs = std::move(lhs) & parse_unary();
      else if (accept(Tok::nand)) lhs = nand(std::move(lhs), parse_unary());
      else return lhs;
    }
  }

  Formula parse_unary() {
    if (accept(Tok::lnot)) return !parse_unary();
    return parse_atom();
  }

  Formula parse_atom() {
    const Token& t = next();
    switch (t.type) {
      case Tok::ident:
        return Formula::var(t.text);
      case Tok::top:
        return Formula::top();
      case Tok::bottom:
        return Formula::bottom();
      case Tok::lparen: {
        Formula inner = parse_equiv();
        if (!accept(Tok::rparen)) {
          const Token& close = peek();
          if (close.type == Tok::end)
            throw ParseError(ErrorKind::unbalanced, "unclosed '('", t.line, t.column);
          throw ParseError(ErrorKind::syntax, "expected ')' but found '" + close.text + "'",
                           close.line, close.column);
        }
        return inner;
      }
      case Tok::end:
        throw ParseError(ErrorKind::syntax, "expected operand but reached end of input",
                         t.line, t.column);
      case Tok::rparen:
        if (depth_of_open() == 0)
          throw ParseError(ErrorKind::unbalanced, "unmatched ')'", t.line, t.column);
        [[fallthrough]];
      default:
        throw ParseError(ErrorKind::syntax, "expected operand but found '" + t.text + "'",
                         t.line, t.column);
    }
  }

  // Open parentheses before the current position that are not yet closed.
  int depth_of_open() const {
    int open = 0;
    for (std::size_t k = 0; k + 1 < pos_; ++k) {
      if (tokens_[k].type == Tok::lparen) ++open;
      if (tokens_[k].type == Tok::rparen) --open;
    }
    return open;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string_view infix_symbol(Kind k) {
  switch (k) {
    case Kind::And: return "&";
    case Kind::Or: return "|";
    case Kind::Impl: return "->";
    case Kind::Equiv: return "<->";
    case Kind::Xor: return "^";
    case Kind::Nand: return "!&";
    case Kind::Nor: return "!|";
    default: return "?";
  }
}

std::string_view polish_letter(Kind k) {
  switch (k) {
    case Kind::Not: return "N";
    case Kind::And: return "C";
    case Kind::Or: return "D";
    case Kind::Impl: return "L";
    case Kind::Equiv: return "E";
    case Kind::Xor: return "X";
    case Kind::Nand: return "S";
    case Kind::Nor: return "P";
    default: return "?";
  }
}

void render_infix(const Formula& f, std::string& out) {
  auto operand = [&out](const Formula& g) {
    if (g.is_binary()) {
      out += '(';
      render_infix(g, out);
      out += ')';
    } else {
      render_infix(g, out);
    }
  };
  switch (f.kind()) {
    case Kind::True: out += '1'; return;
    case Kind::False: out += '0'; return;
    case Kind::Var: out += f.name(); return;
    case Kind::Not:
      out += '!';
      operand(f.operand());
      return;
    default:
      operand(f.lhs());
      out += ' ';
      out += infix_symbol(f.kind());
      out += ' ';
      operand(f.rhs());
  }
}

void render_polish(const Formula& f, std::string& out) {
  if (!out.empty()) out += ' ';
  switch (f.kind()) {
    case Kind::True: out += '1'; return;
    case Kind::False: out += '0'; return;
    case Kind::Var: out += f.name(); return;
    case Kind::Not:
      out += polish_letter(f.kind());
      render_polish(f.operand(), out);
      return;
    default:
      out += polish_letter(f.kind());
      render_polish(f.lhs(), out);
      render_polish(f.rhs(), out);
  }
}

}  // namespace

std::string render(const Formula& f, Notation notation) {
  std::string out;
  if (notation == Notation::infix) render_infix(f, out);
  else render_polish(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Substitution and folding

Formula substitute(const Formula& f, const std::map<std::string, Formula, std::less<>>& bindings) {
  switch (f.kind()) {
    case Kind::True:
    case Kind::False:
      return f;
    case Kind::Var: {
      auto it = bindings.find(f.name());
      return it == bindings.end() ? f : it->second;
    }
    case Kind::Not:
      return !substitute(f.operand(), bindings);
    default:
      return Formula::binary(f.kind(), substitute(f.lhs(), bindings),
                             substitute(f.rhs(), bindings));
  }
}

Formula substitute(const Formula& f, std::string_view var, const Formula& g) {
  std::map<std::string, Formula, std::less<>> bindings;
  bindings.emplace(std::string(var), g);
  return substitute(f, bindings);
}

namespace {

Formula fold_not(Formula x) {
  if (x.kind() == Kind::True) return Formula::bottom();
  if (x.kind() == Kind::False) return Formula::top();
  if (x.is_negation()) return x.operand();
  return !std::move(x);
}

// Folds `k(c, x)` with c constant and c on the given side.
Formula fold_with_constant(Kind k, bool c, bool c_on_left, const Formula& x,
                           const Formula& original) {
  switch (k) {
    case Kind::And: return c ? x : Formula::bottom();
    case Kind::Or: return c ? Formula::top() : x;
    case Kind::Xor: return c ? fold_not(x) : x;
    case Kind::Equiv: return c ? x : fold_not(x);
    case Kind::Nand: return c ? fold_not(x) : Formula::top();
    case Kind::Nor: return c ? Formula::bottom() : fold_not(x);
    case Kind::Impl:
      if (c_on_left) return c ? x : Formula::top();
      return c ? Formula::top() : fold_not(x);
    default: return original;
  }
}

}  // namespace

Formula fold_constants(const Formula& f) {
  switch (f.kind()) {
    case Kind::True:
    case Kind::False:
    case Kind::Var:
      return f;
    case Kind::Not:
      return fold_not(fold_constants(f.operand()));
    default: {
      Formula a = fold_constants(f.lhs());
      Formula b = fold_constants(f.rhs());
      if (a.is_constant())
        return fold_with_constant(f.kind(), a.kind() == Kind::True, true, b, f);
      if (b.is_constant())
        return fold_with_constant(f.kind(), b.kind() == Kind::True, false, a, f);
      return Formula::binary(f.kind(), std::move(a), std::move(b));
    }
  }
}

}  // namespace vlogic
