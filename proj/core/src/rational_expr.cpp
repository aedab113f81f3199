#include "freedense/rational_expr.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace freedense {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const FreeAlphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  RationalExpr parse() {
    RationalExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw ExprSyntaxError("syntax error at position " + std::to_string(pos_) + ": " + what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool starts_base(char c) {
    return c == '(' || c == '0' || c == '1' || std::isalpha(static_cast<unsigned char>(c)) != 0;
  }

  RationalExpr expr() {
    std::vector<RationalExpr> terms;
    terms.push_back(term());
    while (peek() == '|' || peek() == '+') {
      ++pos_;
      terms.push_back(term());
    }
    if (terms.size() == 1) return std::move(terms.front());
    return RationalExpr::alternation(std::move(terms));
  }

  RationalExpr term() {
    std::vector<RationalExpr> factors;
    while (starts_base(peek())) factors.push_back(factor());
    if (factors.empty()) {
      if (pos_ >= text_.size()) error("unexpected end of input");
      error("expected a letter, '1', '0' or '('");
    }
    if (factors.size() == 1) return std::move(factors.front());
    return RationalExpr::concat(std::move(factors));
  }

  RationalExpr factor() {
    RationalExpr e = base();
    while (peek() == '*') {
      ++pos_;
      e = RationalExpr::star(std::move(e));
    }
    return e;
  }

  RationalExpr base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RationalExpr inner = expr();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '1') {
      ++pos_;
      return RationalExpr::epsilon();
    }
    if (c == '0') {
      ++pos_;
      return RationalExpr::empty_set();
    }
    const auto l = letter_from_char(c);
    if (!l) error("unexpected '" + std::string(1, c) + "'");
    if (l->generator() >= alphabet_.rank()) {
      error("letter '" + std::string(1, c) + "' exceeds rank " + std::to_string(alphabet_.rank()));
    }
    ++pos_;
    return RationalExpr::symbol(*l);
  }

  std::string_view text_;
  const FreeAlphabet& alphabet_;
  std::size_t pos_ = 0;
};

// Binding strength: union < concat < star/atom.
int precedence(const RationalExpr& e) {
  switch (e.kind) {
    case RationalExpr::Kind::Union:
      return 0;
    case RationalExpr::Kind::Concat:
      return 1;
    default:
      return 2;
  }
}

void print(const RationalExpr& e, std::string& out);

void print_child(const RationalExpr& child, int min_precedence, std::string& out) {
  if (precedence(child) < min_precedence) {
    out.push_back('(');
    print(child, out);
    out.push_back(')');
  } else {
    print(child, out);
  }
}

void print(const RationalExpr& e, std::string& out) {
  switch (e.kind) {
    case RationalExpr::Kind::EmptySet:
      out.push_back('0');
      break;
    case RationalExpr::Kind::Epsilon:
      out.push_back('1');
      break;
    case RationalExpr::Kind::Symbol:
      out.push_back(e.letter.to_char());
      break;
    case RationalExpr::Kind::Concat:
      // A nested concat must keep its parentheses to survive a re-parse as one node.
      for (const auto& c : e.children) print_child(c, c.kind == RationalExpr::Kind::Concat ? 2 : 1, out);
      break;
    case RationalExpr::Kind::Union:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out.push_back('|');
        const auto& c = e.children[i];
        print_child(c, c.kind == RationalExpr::Kind::Union ? 1 : 0, out);
      }
      break;
    case RationalExpr::Kind::Star:
      print_child(e.children.front(), 2, out);
      out.push_back('*');
      break;
  }
}

struct Fragment {
  State start;
  State accept;
};

Fragment build(const RationalExpr& e, Automaton& a) {
  const State start = a.add_state();
  const State accept = a.add_state();
  switch (e.kind) {
    case RationalExpr::Kind::EmptySet:
      break;
    case RationalExpr::Kind::Epsilon:
      a.add_epsilon(start, accept);
      break;
    case RationalExpr::Kind::Symbol:
      a.add_transition(start, e.letter, accept);
      break;
    case RationalExpr::Kind::Concat: {
      State cursor = start;
      for (const auto& c : e.children) {
        const Fragment f = build(c, a);
        a.add_epsilon(cursor, f.start);
        cursor = f.accept;
      }
      a.add_epsilon(cursor, accept);
      break;
    }
    case RationalExpr::Kind::Union:
      for (const auto& c : e.children) {
        const Fragment f = build(c, a);
        a.add_epsilon(start, f.start);
        a.add_epsilon(f.accept, accept);
      }
      break;
    case RationalExpr::Kind::Star: {
      const Fragment f = build(e.children.front(), a);
      a.add_epsilon(start, f.start);
      a.add_epsilon(f.accept, f.start);
      a.add_epsilon(f.accept, accept);
      a.add_epsilon(start, accept);
      break;
    }
  }
  return {start, accept};
}

}  // namespace

RationalExpr parse_expr(std::string_view text, const FreeAlphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

std::string to_string(const RationalExpr& e) {
  std::string out;
  print(e, out);
  return out;
}

Automaton compile_to_nfa(const RationalExpr& e, const FreeAlphabet& alphabet) {
  Automaton a(alphabet);
  const Fragment f = build(e, a);
  a.add_initial(f.start);
  a.set_final(f.accept);
  return a;
}

int star_height(const RationalExpr& e) {
  int h = 0;
  for (const auto& c : e.children) h = std::max(h, star_height(c));
  return e.kind == RationalExpr::Kind::Star ? h + 1 : h;
}

}  // namespace freedense
