// Copyright 2026 The icx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// 1-expressions: binary trees over the constant 1 with sum and product nodes.
//
// Text form (ASCII, no whitespace):
//
//   expr  := "1" | "(" expr ("+" expr)+ ")" | "(" expr ("*" expr)+ ")"
//
// A group with more than two operands is right-nested, so "(1+1+1)" is
// sum(1, sum(1, 1)). render() emits exactly this form: a right child of the
// same kind is folded into its parent's group, everything else gets its own
// parentheses. Hence parse(render(e)) == e and the number of '1' characters
// in render(e) equals ones(e).

#ifndef ICX_EXPRESSION_HPP_
#define ICX_EXPRESSION_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace icx {

class ComplexityTable;

class Expression {
 public:
  enum class Kind : std::uint8_t { kOne, kSum, kProduct };

  // The leaf 1.
  Expression();

  static Expression one() { return Expression(); }
  static Expression sum(Expression left, Expression right);
  static Expression product(Expression left, Expression right);

  Kind kind() const noexcept;
  bool is_one() const noexcept { return kind() == Kind::kOne; }

  // Children; precondition: !is_one().
  const Expression& left() const;
  const Expression& right() const;

  // Number of 1 leaves.
  std::uint64_t ones() const noexcept;

  friend bool operator==(const Expression& a, const Expression& b);

 private:
  struct Node;
  static const std::shared_ptr<const Node>& one_node();
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline std::uint64_t ones(const Expression& e) { return e.ones(); }

// An optimal expression for n: ones(result) == ||n||. Ties prefer the product
// split with the smallest divisor d >= 2, then the sum split with the
// smallest left addend.
Expression reconstruct(const ComplexityTable& table, std::uint64_t n);

// Exact value.
mpz_class evaluate(const Expression& e);

std::string render(const Expression& e);

// Throws SyntaxError carrying the offset of the first bad character.
Expression parse(std::string_view text);

}  // namespace icx

#endif  // ICX_EXPRESSION_HPP_
