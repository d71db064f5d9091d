#include "hypchain/field.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "hypchain/errors.hpp"

namespace hypchain {

namespace detail {

struct ExprNode {
  enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Sin, Cos };
  Op op;
  double value = 0.0;
  std::shared_ptr<const ExprNode> lhs, rhs;

  double eval(double x) const {
    switch (op) {
      case Op::Const: return value;
      case Op::Var: return x;
      case Op::Add: return lhs->eval(x) + rhs->eval(x);
      case Op::Sub: return lhs->eval(x) - rhs->eval(x);
      case Op::Mul: return lhs->eval(x) * rhs->eval(x);
      case Op::Div: return lhs->eval(x) / rhs->eval(x);
      case Op::Neg: return -lhs->eval(x);
      case Op::Sin: return std::sin(lhs->eval(x));
      case Op::Cos: return std::cos(lhs->eval(x));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make(ExprNode::Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr,
             double value = 0.0) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->value = value;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  NodePtr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != src_.size())
      fail("unexpected trailing input");
    return e;
  }

 private:
  NodePtr expr() {
    auto lhs = term();
    for (;;) {
      skip_ws();
      if (consume('+'))
        lhs = make(ExprNode::Op::Add, lhs, term());
      else if (consume('-'))
        lhs = make(ExprNode::Op::Sub, lhs, term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    auto lhs = unary();
    for (;;) {
      skip_ws();
      if (consume('*'))
        lhs = make(ExprNode::Op::Mul, lhs, unary());
      else if (consume('/'))
        lhs = make(ExprNode::Op::Div, lhs, unary());
      else
        return lhs;
    }
  }

  NodePtr unary() {
    skip_ws();
    if (consume('-'))
      return make(ExprNode::Op::Neg, unary());
    return primary();
  }

  NodePtr primary() {
    skip_ws();
    if (consume('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(peek()) || peek() == '.')
      return number();
    if (std::isalpha(peek())) {
      std::string id = ident();
      if (id == "x")
        return make(ExprNode::Op::Var);
      if (id == "sin" || id == "cos") {
        expect('(');
        auto arg = expr();
        expect(')');
        return make(id == "sin" ? ExprNode::Op::Sin : ExprNode::Op::Cos, arg);
      }
      if (id == "pi")
        return make(ExprNode::Op::Const, nullptr, nullptr, M_PI);
      fail("unknown identifier '" + id + "'");
    }
    fail("expected expression");
    return nullptr;
  }

  NodePtr number() {
    size_t end = pos_;
    while (end < src_.size() &&
           (std::isdigit(src_[end]) || src_[end] == '.' || src_[end] == 'e' ||
            src_[end] == 'E' ||
            ((src_[end] == '+' || src_[end] == '-') && end > pos_ &&
             (src_[end - 1] == 'e' || src_[end - 1] == 'E'))))
      ++end;
    double v;
    try {
      v = std::stod(src_.substr(pos_, end - pos_));
    } catch (const std::exception&) {
      fail("malformed number");
      return nullptr;
    }
    pos_ = end;
    return make(ExprNode::Op::Const, nullptr, nullptr, v);
  }

  std::string ident() {
    size_t end = pos_;
    while (end < src_.size() && std::isalpha(src_[end]))
      ++end;
    std::string id = src_.substr(pos_, end - pos_);
    pos_ = end;
    return id;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (!consume(c))
      fail(std::string("expected '") + c + "'");
  }
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(src_[pos_]))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ConfigError("expression parse error at position " +
                      std::to_string(pos_) + " in \"" + src_ + "\": " + why);
  }

  const std::string& src_;
  size_t pos_ = 0;
};

}  // namespace
}  // namespace detail

ScalarField::ScalarField(double c) {
  kind_ = Kind::Constant;
  value_ = c;
  std::ostringstream os;
  os.precision(17);
  os << c;
  descr_ = os.str();
}

ScalarField ScalarField::constant(double c) { return ScalarField(c); }

ScalarField ScalarField::expression(const std::string& src) {
  ScalarField f;
  f.kind_ = Kind::Expr;
  f.expr_ = detail::Parser(src).parse();
  f.descr_ = "expr:" + src;
  return f;
}

ScalarField ScalarField::samples(std::vector<double> values) {
  if (values.size() < 2)
    throw ConfigError("sampled field needs at least 2 values");
  ScalarField f;
  f.kind_ = Kind::Samples;
  f.samples_ = std::move(values);
  std::ostringstream os;
  os.precision(17);
  os << "samples:";
  for (double v : f.samples_) os << v << ",";
  f.descr_ = os.str();
  return f;
}

double ScalarField::operator()(double x) const {
  switch (kind_) {
    case Kind::Constant: return value_;
    case Kind::Expr: return expr_->eval(x);
    case Kind::Samples: {
      const size_t n = samples_.size();
      double s = x * static_cast<double>(n - 1);
      if (s <= 0.0) return samples_.front();
      if (s >= static_cast<double>(n - 1)) return samples_.back();
      size_t k = static_cast<size_t>(s);
      double f = s - static_cast<double>(k);
      return samples_[k] * (1.0 - f) + samples_[k + 1] * f;
    }
  }
  return 0.0;
}

bool ScalarField::is_literal_zero() const {
  if (kind_ == Kind::Constant) return value_ == 0.0;
  if (kind_ == Kind::Samples) {
    for (double v : samples_)
      if (v != 0.0) return false;
    return true;
  }
  return false;
}

MatrixField::MatrixField(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows * cols)) {}

Matrix MatrixField::eval(double x) const {
  Matrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      out(r, c) = entries_[idx(r, c)](x);
  return out;
}

std::string MatrixField::describe() const {
  std::string s = std::to_string(rows_) + "x" + std::to_string(cols_) + "[";
  for (const auto& e : entries_) s += e.describe() + ";";
  return s + "]";
}

}  // namespace hypchain
