#include "vlogic/operators.hpp"

#include <string>

namespace vlogic {

std::string_view gate_letter(GateName g) {
  switch (g) {
    case GateName::I: return "I";
    case GateName::N: return "N";
    case GateName::K: return "K";
    case GateName::M: return "M";
    case GateName::C: return "C";
    case GateName::D: return "D";
    case GateName::L: return "L";
    case GateName::S: return "S";
    case GateName::P: return "P";
    case GateName::E: return "E";
    case GateName::X: return "X";
  }
  return "?";
}

const Gate& gate(GateName g) {
  static const std::array<Gate, 11> registry = [] {
    return std::array<Gate, 11>{
        build_gate(GateName::I), build_gate(GateName::N), build_gate(GateName::K),
        build_gate(GateName::M), build_gate(GateName::C), build_gate(GateName::D),
        build_gate(GateName::L), build_gate(GateName::S), build_gate(GateName::P),
        build_gate(GateName::E), build_gate(GateName::X)};
  }();
  return registry[static_cast<std::size_t>(g)];
}

std::string_view identity_name(OperatorIdentity id) {
  switch (id) {
    case OperatorIdentity::de_morgan: return "C=ND(NxN)";
    case OperatorIdentity::implication_as_or: return "L=D(NxI)";
    case OperatorIdentity::nand_def: return "S=NC";
    case OperatorIdentity::nor_def: return "P=ND";
    case OperatorIdentity::xor_def: return "X=NE";
    case OperatorIdentity::involution: return "N^2=I";
    case OperatorIdentity::xor_negation_invariance: return "X=X(NxN)";
    case OperatorIdentity::implication_exportation: return "L(IxL)=L(CxI)";
    case OperatorIdentity::chain_example: return "NL(IxD)=C(IxND)";
  }
  return "?";
}

OperatorIdentity parse_identity(std::string_view name) {
  std::string compact;
  for (char c : name)
    if (c != ' ') compact.push_back(c);
  for (OperatorIdentity id : kAllIdentities)
    if (identity_name(id) == compact) return id;
  throw Error(ErrorKind::unknown_identity,
              "unknown operator identity '" + std::string(name) + "'");
}

std::pair<MatrixX<double>, MatrixX<double>> identity_sides(OperatorIdentity id) {
  const auto& I = gate(GateName::I).entries();
  const auto& N = gate(GateName::N).entries();
  const auto& C = gate(GateName::C).entries();
  const auto& D = gate(GateName::D).entries();
  const auto& L = gate(GateName::L).entries();
  const auto& S = gate(GateName::S).entries();
  const auto& P = gate(GateName::P).entries();
  const auto& E = gate(GateName::E).entries();
  const auto& X = gate(GateName::X).entries();

  switch (id) {
    case OperatorIdentity::de_morgan:
      return {C, N * D * kron(N, N)};
    case OperatorIdentity::implication_as_or:
      return {L, D * kron(N, I)};
    case OperatorIdentity::nand_def:
      return {S, N * C};
    case OperatorIdentity::nor_def:
      return {P, N * D};
    case OperatorIdentity::xor_def:
      return {X, N * E};
    case OperatorIdentity::involution:
      return {N * N, I};
    case OperatorIdentity::xor_negation_invariance:
      return {X, X * kron(N, N)};
    case OperatorIdentity::implication_exportation:
      return {L * kron(I, L), L * kron(C, I)};
    case OperatorIdentity::chain_example:
      return {N * L * kron(I, D), C * kron(I, MatrixX<double>(N * D))};
  }
  throw Error(ErrorKind::unknown_identity, "unknown operator identity");
}

bool check_identity(OperatorIdentity id, double tol) {
  const auto [lhs, rhs] = identity_sides(id);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return false;
  return (lhs - rhs).cwiseAbs().maxCoeff() <= tol;
}

bool check_identity(std::string_view name, double tol) {
  return check_identity(parse_identity(name), tol);
}

}  // namespace vlogic
