#pragma once

// Spatially varying coefficients on [0,1]: closed-form expressions in a
// minimal grammar (+, -, *, /, sin, cos, constants, variable x) or uniform
// grid samples with linear interpolation.

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

namespace hypchain {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

namespace detail {
struct ExprNode;
}

class ScalarField {
 public:
  ScalarField() : ScalarField(0.0) {}
  static ScalarField constant(double c);
  static ScalarField expression(const std::string& src);  // throws ConfigError on parse failure
  static ScalarField samples(std::vector<double> values);  // uniform on [0,1], size >= 2

  explicit ScalarField(double c);

  double operator()(double x) const;

  // True when the field is the literal constant zero (structural checks only).
  bool is_literal_zero() const;

  // Stable description used for spec hashing and serialization.
  const std::string& describe() const { return descr_; }

 private:
  enum class Kind { Constant, Expr, Samples };
  Kind kind_ = Kind::Constant;
  double value_ = 0.0;
  std::shared_ptr<const detail::ExprNode> expr_;
  std::vector<double> samples_;
  std::string descr_;
};

class MatrixField {
 public:
  MatrixField() = default;
  MatrixField(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  ScalarField& at(int r, int c) { return entries_[idx(r, c)]; }
  const ScalarField& at(int r, int c) const { return entries_[idx(r, c)]; }

  Matrix eval(double x) const;

  std::string describe() const;

 private:
  int idx(int r, int c) const { return r * cols_ + c; }
  int rows_ = 0, cols_ = 0;
  std::vector<ScalarField> entries_;
};

}  // namespace hypchain
