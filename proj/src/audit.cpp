#include "braidrep/audit.hpp"

#include "braidrep/errors.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace braidrep::audit {

struct Expression::Node {
  enum class Kind { literal, variable, unary, binary, compare_chain, call };
  Kind kind;
  std::string op;  // operator, function or variable name
  BigInt value;
  std::vector<std::shared_ptr<const Node>> children;
  std::vector<std::string> chain_ops;  // compare_chain: ops between successive children
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

NodePtr make(Node::Kind kind, std::string op, std::vector<NodePtr> children = {}, BigInt value = 0) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->op = std::move(op);
  n->children = std::move(children);
  n->value = std::move(value);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr n = implication();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression '" + text_ + "' at " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  NodePtr implication() {
    NodePtr lhs = disjunction();
    if (accept("=>")) return make(Node::Kind::binary, "=>", {lhs, implication()});
    return lhs;
  }

  NodePtr disjunction() {
    NodePtr lhs = conjunction();
    while (accept("||")) lhs = make(Node::Kind::binary, "||", {lhs, conjunction()});
    return lhs;
  }

  NodePtr conjunction() {
    NodePtr lhs = negation();
    while (accept("&&")) lhs = make(Node::Kind::binary, "&&", {lhs, negation()});
    return lhs;
  }

  NodePtr negation() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '!' && text_.compare(pos_, 2, "!=") != 0) {
      ++pos_;
      return make(Node::Kind::unary, "!", {negation()});
    }
    return comparison();
  }

  std::optional<std::string> comparison_op() {
    for (std::string_view op : {"<=", ">=", "==", "!=", "<", ">"}) {
      if (accept(op)) return std::string(op);
    }
    return std::nullopt;
  }

  NodePtr comparison() {
    NodePtr first = additive();
    auto op = comparison_op();
    if (!op) return first;
    auto chain = std::make_shared<Node>();
    chain->kind = Node::Kind::compare_chain;
    chain->children.push_back(first);
    while (op) {
      chain->chain_ops.push_back(*op);
      chain->children.push_back(additive());
      op = comparison_op();
    }
    return chain;
  }

  NodePtr additive() {
    NodePtr lhs = term();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        std::string op(1, text_[pos_++]);
        lhs = make(Node::Kind::binary, op, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '/' || text_[pos_] == '%')) {
        std::string op(1, text_[pos_++]);
        lhs = make(Node::Kind::binary, op, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept("-")) return make(Node::Kind::unary, "-", {unary()});
    NodePtr base = primary();
    if (accept("^")) return make(Node::Kind::binary, "^", {base, unary()});
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return make(Node::Kind::literal, "", {}, BigInt(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      if (accept("(")) {
        std::vector<NodePtr> args;
        if (!accept(")")) {
          do args.push_back(implication());
          while (accept(","));
          expect(")");
        }
        static const std::map<std::string, std::size_t> arity{
            {"binom", 2}, {"pow", 2}, {"min", 2}, {"max", 2}, {"abs", 1}};
        auto it = arity.find(name);
        if (it == arity.end()) fail("unknown function '" + name + "'");
        if (it->second != args.size()) fail("wrong argument count for '" + name + "'");
        return make(Node::Kind::call, name, std::move(args));
      }
      return make(Node::Kind::variable, name);
    }
    if (accept("(")) {
      NodePtr inner = implication();
      expect(")");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

const BigInt& as_int(const Value& v, const std::string& where) {
  if (const auto* x = std::get_if<BigInt>(&v)) return *x;
  throw std::invalid_argument(where + ": expected an integer, got a truth value");
}

bool as_bool(const Value& v, const std::string& where) {
  if (const auto* x = std::get_if<bool>(&v)) return *x;
  throw std::invalid_argument(where + ": expected a truth value, got an integer");
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("division by zero");
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

unsigned long small_exponent(const BigInt& e) {
  if (e < 0 || e > 100000) throw std::domain_error("exponent out of range");
  return static_cast<unsigned long>(e);
}

bool compare(const std::string& op, const BigInt& a, const BigInt& b) {
  if (op == "<") return a < b;
  if (op == "<=") return a <= b;
  if (op == ">") return a > b;
  if (op == ">=") return a >= b;
  if (op == "==") return a == b;
  return a != b;
}

Value eval(const Node& n, const Environment& env) {
  switch (n.kind) {
    case Node::Kind::literal:
      return n.value;
    case Node::Kind::variable: {
      auto it = env.find(n.op);
      if (it == env.end()) throw std::invalid_argument("unbound variable '" + n.op + "'");
      return it->second;
    }
    case Node::Kind::unary: {
      Value v = eval(*n.children[0], env);
      if (n.op == "!") return !as_bool(v, "!");
      return BigInt(-as_int(v, "unary -"));
    }
    case Node::Kind::compare_chain: {
      BigInt lhs = as_int(eval(*n.children[0], env), "comparison");
      for (std::size_t i = 0; i < n.chain_ops.size(); ++i) {
        BigInt rhs = as_int(eval(*n.children[i + 1], env), "comparison");
        if (!compare(n.chain_ops[i], lhs, rhs)) return false;
        lhs = std::move(rhs);
      }
      return true;
    }
    case Node::Kind::call: {
      std::vector<BigInt> args;
      for (const auto& c : n.children) args.push_back(as_int(eval(*c, env), n.op));
      if (n.op == "abs") return BigInt(args[0] < 0 ? BigInt(-args[0]) : args[0]);
      if (n.op == "min") return std::min(args[0], args[1]);
      if (n.op == "max") return std::max(args[0], args[1]);
      if (n.op == "pow") return power(args[0], small_exponent(args[1]));
      // binom(n, k), zero outside 0 <= k <= n.
      if (args[0] < 0) throw std::domain_error("binom: negative n");
      if (args[0] > 100000) throw std::domain_error("binom: n too large");
      return binomial(static_cast<long>(args[0]), args[1] < 0 || args[1] > args[0] ? -1L : static_cast<long>(args[1]));
    }
    case Node::Kind::binary: {
      const std::string& op = n.op;
      if (op == "&&") return as_bool(eval(*n.children[0], env), op) && as_bool(eval(*n.children[1], env), op);
      if (op == "||") return as_bool(eval(*n.children[0], env), op) || as_bool(eval(*n.children[1], env), op);
      if (op == "=>") return !as_bool(eval(*n.children[0], env), op) || as_bool(eval(*n.children[1], env), op);
      BigInt a = as_int(eval(*n.children[0], env), op);
      BigInt b = as_int(eval(*n.children[1], env), op);
      if (op == "+") return BigInt(a + b);
      if (op == "-") return BigInt(a - b);
      if (op == "*") return BigInt(a * b);
      if (op == "/") return floor_div(a, b);
      if (op == "%") return BigInt(a - floor_div(a, b) * b);
      return power(a, small_exponent(b));
    }
  }
  throw std::logic_error("unreachable expression node");
}

std::optional<Expression> optional_expression(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return Expression::parse(j.at(key).get<std::string>());
}

}  // namespace

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.text_ = text;
  e.root_ = Parser(e.text_).parse_all();
  return e;
}

Value Expression::evaluate(const Environment& env) const { return eval(*root_, env); }

BigInt Expression::evaluate_integer(const Environment& env) const { return as_int(evaluate(env), text_); }

bool Expression::evaluate_bool(const Environment& env) const { return as_bool(evaluate(env), text_); }

const InequalityCase& Ledger::find(const std::string& id) const {
  for (const auto& c : cases)
    if (c.id == id) return c;
  throw std::out_of_range("unknown audit case '" + id + "'");
}

Ledger parse_ledger(const nlohmann::json& doc) {
  Ledger ledger;
  for (const auto& jc : doc.at("cases")) {
    InequalityCase c;
    c.id = jc.at("id").get<std::string>();
    c.location = jc.at("location").get<std::string>();
    c.anchor = jc.at("anchor").get<std::string>();
    for (const auto& jl : jc.at("clauses")) {
      Clause clause{jl.at("name").get<std::string>(), {}, Expression::parse(jl.at("predicate").get<std::string>()),
                    optional_expression(jl, "track")};
      for (const auto& jb : jl.at("bind")) {
        Binding b;
        b.name = jb.at("name").get<std::string>();
        b.from = optional_expression(jb, "from");
        b.to = optional_expression(jb, "to");
        b.let = optional_expression(jb, "let");
        b.margin = jb.value("margin", false);
        if (b.let.has_value() == (b.from.has_value() || b.to.has_value()) || b.from.has_value() != b.to.has_value())
          throw std::invalid_argument("audit case " + c.id + ": binding '" + b.name +
                                      "' needs either from/to or let");
        clause.bindings.push_back(std::move(b));
      }
      c.clauses.push_back(std::move(clause));
    }
    for (const auto& prior : ledger.cases)
      if (prior.id == c.id) throw std::invalid_argument("audit ledger: duplicate case id " + c.id);
    ledger.cases.push_back(std::move(c));
  }
  return ledger;
}

Ledger load_ledger(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open audit ledger " + path);
  return parse_ledger(nlohmann::json::parse(in));
}

const Ledger& builtin_ledger() {
  static const Ledger ledger = parse_ledger(nlohmann::json::parse(builtin_ledger_text()));
  return ledger;
}

CaseReport run_case(const InequalityCase& c, int margin) {
  constexpr std::size_t kKeptWitnesses = 20;
  CaseReport report;
  report.id = c.id;
  for (const auto& clause : c.clauses) {
    Environment env;
    std::uint64_t clause_tuples = 0;
    std::function<void(std::size_t)> walk = [&](std::size_t depth) {
      if (depth == clause.bindings.size()) {
        if (++clause_tuples > kMaxTuplesPerClause)
          throw ResourceLimitExceeded("audit case " + c.id + "/" + clause.name + " exceeds the tuple limit");
        ++report.tuples;
        if (!clause.predicate.evaluate_bool(env)) {
          ++report.violation_count;
          if (report.violations.size() < kKeptWitnesses) report.violations.push_back({clause.name, env});
        }
        if (clause.track && clause.track->evaluate_bool(env)) report.tracked.push_back({clause.name, env});
        return;
      }
      const Binding& b = clause.bindings[depth];
      if (b.let) {
        env[b.name] = b.let->evaluate_integer(env);
        walk(depth + 1);
        env.erase(b.name);
        return;
      }
      BigInt lo = b.from->evaluate_integer(env);
      BigInt hi = b.to->evaluate_integer(env) + (b.margin ? margin : 0);
      for (BigInt v = lo; v <= hi; ++v) {
        env[b.name] = v;
        walk(depth + 1);
      }
      env.erase(b.name);
    };
    walk(0);
  }
  return report;
}

CaseReport run_case(const std::string& id, int margin) { return run_case(builtin_ledger().find(id), margin); }

namespace {

nlohmann::json witness_json(const Witness& w) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [name, v] : w.values) values[name] = bigint_json(v);
  return {{"clause", w.clause}, {"values", values}};
}

}  // namespace

nlohmann::json to_json(const CaseReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& w : r.violations) violations.push_back(witness_json(w));
  nlohmann::json tracked = nlohmann::json::array();
  for (const auto& w : r.tracked) tracked.push_back(witness_json(w));
  return {{"case", r.id},
          {"tuples", r.tuples},
          {"violation_count", r.violation_count},
          {"violations", violations},
          {"tracked", tracked}};
}

}  // namespace braidrep::audit
