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

#include "icx/expression.hpp"

#include <utility>
#include <vector>

#include "icx/core_table.hpp"
#include "icx/errors.hpp"

namespace icx {

struct Expression::Node {
  Kind kind = Kind::kOne;
  std::uint64_t ones = 1;
  Expression left{nullptr};
  Expression right{nullptr};
};

Expression::Expression() : node_(one_node()) {}

Expression Expression::sum(Expression left, Expression right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kSum;
  node->ones = left.ones() + right.ones();
  node->left = std::move(left);
  node->right = std::move(right);
  return Expression(std::move(node));
}

Expression Expression::product(Expression left, Expression right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kProduct;
  node->ones = left.ones() + right.ones();
  node->left = std::move(left);
  node->right = std::move(right);
  return Expression(std::move(node));
}

Expression::Kind Expression::kind() const noexcept { return node_->kind; }

const Expression& Expression::left() const {
  if (is_one()) throw Error(ErrorKind::kInvalidArgument, "leaf has no children");
  return node_->left;
}

const Expression& Expression::right() const {
  if (is_one()) throw Error(ErrorKind::kInvalidArgument, "leaf has no children");
  return node_->right;
}

std::uint64_t Expression::ones() const noexcept { return node_->ones; }

bool operator==(const Expression& a, const Expression& b) {
  std::vector<std::pair<const Expression::Node*, const Expression::Node*>> todo{
      {a.node_.get(), b.node_.get()}};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    if (x == y) continue;
    if (x->kind != y->kind || x->ones != y->ones) return false;
    if (x->kind == Expression::Kind::kOne) continue;
    todo.emplace_back(x->left.node_.get(), y->left.node_.get());
    todo.emplace_back(x->right.node_.get(), y->right.node_.get());
  }
  return true;
}

const std::shared_ptr<const Expression::Node>& Expression::one_node() {
  static const auto node = std::make_shared<const Node>();
  return node;
}

Expression reconstruct(const ComplexityTable& table, std::uint64_t n) {
  const int target = table.query(n);
  if (n == 1) return Expression::one();

  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0 && table[d] + table[n / d] == target) {
      return Expression::product(reconstruct(table, d),
                                 reconstruct(table, n / d));
    }
  }
  for (std::uint64_t a = 1; a <= n / 2; ++a) {
    if (table[a] + table[n - a] == target) {
      return Expression::sum(reconstruct(table, a), reconstruct(table, n - a));
    }
    if (three_log3(static_cast<long double>(a) *
                   static_cast<long double>(n - a)) > target + 1e-9L) {
      break;
    }
  }
  throw Error(ErrorKind::kCorruptFile,
              "table entry for n=" + std::to_string(n) +
                  " is not realized by any split");
}

mpz_class evaluate(const Expression& e) {
  switch (e.kind()) {
    case Expression::Kind::kOne:
      return 1;
    case Expression::Kind::kSum:
      return evaluate(e.left()) + evaluate(e.right());
    case Expression::Kind::kProduct:
      return evaluate(e.left()) * evaluate(e.right());
  }
  return 0;
}

namespace {

void render_into(const Expression& e, std::string& out) {
  if (e.is_one()) {
    out += '1';
    return;
  }
  const char op = e.kind() == Expression::Kind::kSum ? '+' : '*';
  out += '(';
  render_into(e.left(), out);
  const Expression* rest = &e.right();
  while (rest->kind() == e.kind()) {
    out += op;
    render_into(rest->left(), out);
    rest = &rest->right();
  }
  out += op;
  render_into(*rest, out);
  out += ')';
}

struct Group {
  char op = 0;
  std::vector<Expression> operands;
};

}  // namespace

std::string render(const Expression& e) {
  std::string out;
  out.reserve(static_cast<std::size_t>(e.ones()) * 3);
  render_into(e, out);
  return out;
}

Expression parse(std::string_view text) {
  std::vector<Group> stack;
  std::size_t pos = 0;
  bool want_operand = true;
  Expression result;
  bool have_result = false;

  auto deliver = [&](Expression operand) {
    if (stack.empty()) {
      result = std::move(operand);
      have_result = true;
    } else {
      stack.back().operands.push_back(std::move(operand));
    }
    want_operand = false;
  };

  while (pos < text.size()) {
    const char ch = text[pos];
    if (want_operand) {
      if (ch == '1') {
        deliver(Expression::one());
      } else if (ch == '(') {
        stack.emplace_back();
      } else {
        throw SyntaxError(pos, "expected '1' or '('");
      }
      ++pos;
      continue;
    }
    if (stack.empty()) throw SyntaxError(pos, "unexpected trailing input");
    Group& group = stack.back();
    if (ch == '+' || ch == '*') {
      if (group.op != 0 && group.op != ch) {
        throw SyntaxError(pos, "mixed operators in one group");
      }
      group.op = ch;
      want_operand = true;
    } else if (ch == ')') {
      if (group.operands.size() < 2) {
        throw SyntaxError(pos, "expected '+' or '*'");
      }
      const bool is_sum = group.op == '+';
      Expression acc = std::move(group.operands.back());
      for (std::size_t i = group.operands.size() - 1; i-- > 0;) {
        acc = is_sum ? Expression::sum(std::move(group.operands[i]), std::move(acc))
                     : Expression::product(std::move(group.operands[i]), std::move(acc));
      }
      stack.pop_back();
      deliver(std::move(acc));
    } else {
      throw SyntaxError(pos, "expected '+', '*' or ')'");
    }
    ++pos;
  }
  if (!stack.empty() || !have_result) {
    throw SyntaxError(pos, "unexpected end of input");
  }
  return result;
}

}  // namespace icx
