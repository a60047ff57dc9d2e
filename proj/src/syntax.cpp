#include "epistle/syntax.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "epistle/errors.hpp"

namespace epistle {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n_agents) : text_(text), n_(n_agents) {}

  Formula parse() {
    auto f = implication();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  int number() {
    skip_space();
    const auto start = pos_;
    int value = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || text_[start] == '-' || text_[start] == '+') fail("expected index");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  int bounded(int value, std::size_t at, const char* what) {
    if (value < 0 || value >= n_) {
      throw IndexOutOfRange(std::string(what) + " index " + std::to_string(value) +
                            " out of range for " + std::to_string(n_) + " agents at offset " +
                            std::to_string(at));
    }
    return value;
  }

  int agent_index() {
    expect("[");
    skip_space();
    const auto at = pos_;
    const int a = number();
    expect("]");
    return bounded(a, at, "agent");
  }

  Formula implication() {
    auto lhs = disjunction();
    if (accept("->")) return Formula::implication(std::move(lhs), implication());
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (accept("|")) parts.push_back(conjunction());
    return Formula::disjunction(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (accept("&")) parts.push_back(unary());
    return Formula::conjunction(std::move(parts));
  }

  Formula unary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept("~")) return Formula::negation(unary());
    if (accept("Kw")) {
      const int a = agent_index();
      return Formula::knows_whether(AgentId{a}, unary());
    }
    if (accept("K")) {
      const int a = agent_index();
      return Formula::knows(AgentId{a}, unary());
    }
    if (accept("[")) {
      expect("!");
      auto ann = implication();
      expect("]");
      return Formula::announced(std::move(ann), unary());
    }
    if (accept("(")) {
      auto inner = implication();
      expect(")");
      return inner;
    }
    if (text_[pos_] == 'p') {
      const auto at = pos_;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected digits after 'p'");
      }
      const int p = number();
      return Formula::atom(PropId{bounded(p, at, "predicate")});
    }
    fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

bool is_binary(const Formula& f) {
  switch (f.kind()) {
    case Connective::conjunction:
    case Connective::disjunction:
    case Connective::implication:
      return true;
    default:
      return false;
  }
}

void print(const Formula& f, std::string& out);

void print_grouped(const Formula& f, bool group, std::string& out) {
  if (group) out += '(';
  print(f, out);
  if (group) out += ')';
}

void print_joined(const Formula& f, const char* op, std::string& out) {
  bool first = true;
  for (const auto& c : f.children()) {
    if (!first) out += op;
    first = false;
    const bool group = c.kind() == Connective::implication || c.kind() == Connective::disjunction ||
                       (f.kind() == Connective::conjunction && c.kind() == Connective::conjunction);
    print_grouped(c, group, out);
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::atom:
      out += 'p';
      out += std::to_string(f.prop().index);
      return;
    case Connective::negation:
      out += '~';
      print_grouped(f.child(0), is_binary(f.child(0)), out);
      return;
    case Connective::knows:
    case Connective::knows_whether:
      out += f.kind() == Connective::knows ? "K[" : "Kw[";
      out += std::to_string(f.agent().index);
      out += "] ";
      print_grouped(f.child(0), is_binary(f.child(0)), out);
      return;
    case Connective::announcement:
      out += "[! ";
      print(f.child(0), out);
      out += "] ";
      print_grouped(f.child(1), is_binary(f.child(1)), out);
      return;
    case Connective::conjunction:
      print_joined(f, " & ", out);
      return;
    case Connective::disjunction:
      print_joined(f, " | ", out);
      return;
    case Connective::implication:
      print_grouped(f.child(0), f.child(0).kind() == Connective::implication, out);
      out += " -> ";
      print(f.child(1), out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text, int n_agents) { return Parser(text, n_agents).parse(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace epistle
