#ifndef VEMSUPG_EXPR_HPP
#define VEMSUPG_EXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>

namespace vemsupg {

struct ExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arithmetic expressions in the variables x and y with +, -, *, /, ^,
/// parentheses and the functions sin, cos, exp. Used for inline coefficient
/// definitions in run configs.
class Expr {
 public:
  static Expr parse(const std::string& text);
  double eval(double x, double y) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace vemsupg

#endif
