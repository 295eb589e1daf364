#include "scp/threshold_expr.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

namespace scp {

namespace {

// Expression tree over doubles with the single variable n.
struct Node {
  virtual ~Node() = default;
  virtual double eval(double n) const = 0;
};
using NodePtr = std::unique_ptr<Node>;

struct Const : Node {
  double value;
  explicit Const(double v) : value(v) {}
  double eval(double) const override { return value; }
};

struct Var : Node {
  double eval(double n) const override { return n; }
};

struct Binary : Node {
  char op;
  NodePtr lhs, rhs;
  Binary(char o, NodePtr l, NodePtr r)
      : op(o), lhs(std::move(l)), rhs(std::move(r)) {}
  double eval(double n) const override {
    const double a = lhs->eval(n), b = rhs->eval(n);
    switch (op) {
    case '+':
      return a + b;
    case '-':
      return a - b;
    case '*':
      return a * b;
    default:
      return a / b;
    }
  }
};

struct Call : Node {
  std::string name;
  std::vector<NodePtr> args;
  double eval(double n) const override {
    const double a = args[0]->eval(n);
    if (name == "log2")
      return std::log2(a);
    if (name == "sqrt")
      return std::sqrt(a);
    if (name == "floor")
      return std::floor(a);
    if (name == "ceil")
      return std::ceil(a);
    const double b = args[1]->eval(n);
    return name == "min" ? std::min(a, b) : std::max(a, b);
  }
};

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("threshold expression: " + what +
                                " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(ch()))
      ++pos_;
  }

  unsigned char ch() const { return static_cast<unsigned char>(text_[pos_]); }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (eat('+'))
        lhs = std::make_unique<Binary>('+', std::move(lhs), term());
      else if (eat('-'))
        lhs = std::make_unique<Binary>('-', std::move(lhs), term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      if (eat('*'))
        lhs = std::make_unique<Binary>('*', std::move(lhs), factor());
      else if (eat('/'))
        lhs = std::make_unique<Binary>('/', std::move(lhs), factor());
      else
        return lhs;
    }
  }

  NodePtr factor() {
    skip_space();
    if (pos_ >= text_.size())
      fail("expected a value");
    if (eat('(')) {
      NodePtr e = expr();
      if (!eat(')'))
        fail("expected ')'");
      return e;
    }
    if (std::isdigit(ch()) || text_[pos_] == '.')
      return number();
    if (std::isalpha(ch()))
      return name();
    fail("expected a number, n, or a function");
  }

  NodePtr number() {
    std::size_t end = pos_;
    while (end < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[end])) ||
            text_[end] == '.'))
      ++end;
    const double v = std::stod(text_.substr(pos_, end - pos_));
    pos_ = end;
    return std::make_unique<Const>(v);
  }

  NodePtr name() {
    std::size_t end = pos_;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end]))))
      ++end;
    const std::string id = text_.substr(pos_, end - pos_);
    pos_ = end;
    if (id == "n")
      return std::make_unique<Var>();

    const bool binary = id == "min" || id == "max";
    if (!binary && id != "log2" && id != "sqrt" && id != "floor" &&
        id != "ceil")
      fail("unknown name '" + id + "'");
    if (!eat('('))
      fail("expected '(' after " + id);
    auto call = std::make_unique<Call>();
    call->name = id;
    call->args.push_back(expr());
    if (binary) {
      if (!eat(','))
        fail("expected ',' in " + id);
      call->args.push_back(expr());
    }
    if (!eat(')'))
      fail("expected ')'");
    return call;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

} // namespace

std::function<std::size_t(std::size_t)>
compile_threshold_expr(const std::string& text) {
  std::shared_ptr<Node> root{Parser(text).parse().release()};
  return [root](std::size_t n) {
    const double v = std::floor(root->eval(static_cast<double>(n)));
    if (!(v > 0))
      return std::size_t{0};
    return std::min(static_cast<std::size_t>(v), n);
  };
}

} // namespace scp
