#include "vlogic/eval.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "vlogic/operators.hpp"

namespace vlogic {

using Kind = Formula::Kind;

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(std::initializer_list<std::pair<std::string, double>> weights) {
  for (const auto& [name, w] : weights) set(name, w);
}

Assignment& Assignment::set(std::string name, double weight) {
  if (!(weight >= 0.0 && weight <= 1.0))
    throw Error(ErrorKind::domain, "weight " + std::to_string(weight) + " for '" + name +
                                       "' is outside [0,1]");
  weights_.insert_or_assign(std::move(name), weight);
  return *this;
}

Assignment Assignment::with(std::string name, double weight) const {
  Assignment copy = *this;
  copy.set(std::move(name), weight);
  return copy;
}

std::optional<double> Assignment::find(std::string_view name) const {
  auto it = weights_.find(name);
  if (it == weights_.end()) return std::nullopt;
  return it->second;
}

bool Assignment::is_binary() const {
  for (const auto& [name, w] : weights_)
    if (w != 0.0 && w != 1.0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// TruthTable

TruthTable::TruthTable(VariableSet vars, std::vector<bool> bits)
    : vars_(std::move(vars)), bits_(std::move(bits)) {
  if (bits_.size() != (std::size_t{1} << vars_.size()))
    throw Error(ErrorKind::invalid_argument, "truth table length must be 2^n");
}

bool TruthTable::input(std::size_t row, std::size_t var_index) const {
  const std::size_t n = vars_.size();
  return ((row >> (n - 1 - var_index)) & 1u) == 0;
}

Assignment TruthTable::assignment(std::size_t row) const {
  Assignment a;
  for (std::size_t i = 0; i < vars_.size(); ++i) a.set(vars_[i], input(row, i) ? 1.0 : 0.0);
  return a;
}

// ---------------------------------------------------------------------------
// Pointwise evaluation

namespace {

bool binary_op(Kind k, bool a, bool b) {
  switch (k) {
    case Kind::And: return a && b;
    case Kind::Or: return a || b;
    case Kind::Impl: return !a || b;
    case Kind::Equiv: return a == b;
    case Kind::Xor: return a != b;
    case Kind::Nand: return !(a && b);
    case Kind::Nor: return !(a || b);
    default: throw Error(ErrorKind::invalid_argument, "not a binary connective");
  }
}

GateName gate_for(Kind k) {
  switch (k) {
    case Kind::Not: return GateName::N;
    case Kind::And: return GateName::C;
    case Kind::Or: return GateName::D;
    case Kind::Impl: return GateName::L;
    case Kind::Equiv: return GateName::E;
    case Kind::Xor: return GateName::X;
    case Kind::Nand: return GateName::S;
    case Kind::Nor: return GateName::P;
    default: throw Error(ErrorKind::invalid_argument, "constant or variable has no gate");
  }
}

double lookup(const Assignment& a, const std::string& name) {
  auto w = a.find(name);
  if (!w) throw Error(ErrorKind::missing_variable, "variable '" + name + "' is not assigned");
  return *w;
}

// Postfix program over variable indices for exhaustive enumeration.
class BitProgram {
 public:
  BitProgram(const Formula& f, const std::unordered_map<std::string, std::size_t>& index) {
    compile(f, index);
    stack_.reserve(code_.size());
  }

  bool run(const std::vector<bool>& inputs) {
    stack_.clear();
    for (const Instr& ins : code_) {
      switch (ins.kind) {
        case Kind::True: stack_.push_back(true); break;
        case Kind::False: stack_.push_back(false); break;
        case Kind::Var: stack_.push_back(inputs[ins.var]); break;
        case Kind::Not: stack_.back() = !stack_.back(); break;
        default: {
          const bool b = stack_.back();
          stack_.pop_back();
          stack_.back() = binary_op(ins.kind, stack_.back(), b);
        }
      }
    }
    return stack_.back();
  }

 private:
  struct Instr {
    Kind kind;
    std::size_t var;
  };

  void compile(const Formula& f, const std::unordered_map<std::string, std::size_t>& index) {
    switch (f.kind()) {
      case Kind::True:
      case Kind::False:
        code_.push_back({f.kind(), 0});
        return;
      case Kind::Var:
        code_.push_back({Kind::Var, index.at(f.name())});
        return;
      case Kind::Not:
        compile(f.operand(), index);
        code_.push_back({Kind::Not, 0});
        return;
      default:
        compile(f.lhs(), index);
        compile(f.rhs(), index);
        code_.push_back({f.kind(), 0});
    }
  }

  std::vector<Instr> code_;
  std::vector<bool> stack_;
};

void check_cap(std::size_t n, const EvalLimits& limits) {
  if (n > limits.max_vars)
    throw Error(ErrorKind::cap_exceeded, std::to_string(n) + " variables exceed the cap of " +
                                             std::to_string(limits.max_vars));
}

std::unordered_map<std::string, std::size_t> index_of(const VariableSet& vars) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vars.size(); ++i) index.emplace(vars[i], i);
  return index;
}

// Enumerates rows in table order, handing the input vector to `visit`;
// stops early when `visit` returns false.
template <typename Visitor>
void enumerate_rows(std::size_t n, Visitor&& visit) {
  const std::uint64_t rows = std::uint64_t{1} << n;
  std::vector<bool> inputs(n);
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < n; ++i) inputs[i] = ((r >> (n - 1 - i)) & 1u) == 0;
    if (!visit(inputs)) return;
  }
}

}  // namespace

bool eval_binary(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Var: {
      const double w = lookup(a, f.name());
      if (w != 0.0 && w != 1.0)
        throw Error(ErrorKind::non_binary, "variable '" + f.name() + "' has non-binary weight " +
                                               std::to_string(w));
      return w == 1.0;
    }
    case Kind::Not: return !eval_binary(f.operand(), a);
    default: return binary_op(f.kind(), eval_binary(f.lhs(), a), eval_binary(f.rhs(), a));
  }
}

TruthVec eval_vector(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Kind::True: return TruthVec::truth();
    case Kind::False: return TruthVec::falsity();
    case Kind::Var: return TruthVec::from_weight(lookup(a, f.name()));
    case Kind::Not: return apply(gate(GateName::N), eval_vector(f.operand(), a));
    default:
      return apply(gate(gate_for(f.kind())), eval_vector(f.lhs(), a), eval_vector(f.rhs(), a));
  }
}

double eval_scalar(const Formula& f, const Assignment& a) {
  return scalar_project(eval_vector(f, a));
}

TruthTable truth_table(const Formula& f, const EvalLimits& limits) {
  VariableSet vars = variables(f);
  check_cap(vars.size(), limits);
  BitProgram program(f, index_of(vars));
  std::vector<bool> bits;
  bits.reserve(std::size_t{1} << vars.size());
  enumerate_rows(vars.size(), [&](const std::vector<bool>& in) {
    bits.push_back(program.run(in));
    return true;
  });
  return TruthTable(std::move(vars), std::move(bits));
}

bool equivalent(const Formula& f, const Formula& g, const EvalLimits& limits) {
  VariableSet vars = variables(f);
  for (auto& v : variables(g))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  check_cap(vars.size(), limits);
  const auto index = index_of(vars);
  BitProgram pf(f, index);
  BitProgram pg(g, index);
  bool same = true;
  enumerate_rows(vars.size(), [&](const std::vector<bool>& in) {
    same = pf.run(in) == pg.run(in);
    return same;
  });
  return same;
}

bool is_tautology(const Formula& f, const EvalLimits& limits) {
  const VariableSet vars = variables(f);
  check_cap(vars.size(), limits);
  BitProgram program(f, index_of(vars));
  bool all = true;
  enumerate_rows(vars.size(), [&](const std::vector<bool>& in) {
    all = program.run(in);
    return all;
  });
  return all;
}

std::vector<double> grid_points(double step) {
  if (!(step > 0.0 && step <= 1.0))
    throw Error(ErrorKind::invalid_argument, "grid step must lie in (0,1]");
  std::vector<double> pts;
  for (std::size_t k = 0;; ++k) {
    const double x = static_cast<double>(k) * step;
    if (x >= 1.0 - 1e-12) break;
    pts.push_back(x);
  }
  pts.push_back(1.0);
  return pts;
}

}  // namespace vlogic
