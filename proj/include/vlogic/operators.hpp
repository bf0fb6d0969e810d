#pragma once

#include <array>
#include <span>
#include <string_view>
#include <utility>

#include "vlogic/core.hpp"

namespace vlogic {

enum class GateName { I, N, K, M, C, D, L, S, P, E, X };

inline constexpr std::array<GateName, 11> kAllGates = {
    GateName::I, GateName::N, GateName::K, GateName::M, GateName::C, GateName::D,
    GateName::L, GateName::S, GateName::P, GateName::E, GateName::X};

constexpr int gate_arity(GateName g) {
  switch (g) {
    case GateName::I:
    case GateName::N:
    case GateName::K:
    case GateName::M:
      return 1;
    default:
      return 2;
  }
}

std::string_view gate_letter(GateName g);

namespace detail {

template <typename Scalar>
auto outer(const Vector2<Scalar>& out, const MatrixX<Scalar>& in) {
  return MatrixX<Scalar>(out * in.transpose());
}

}  // namespace detail

/// Builds a gate from its outer-product definition, e.g.
/// C = s(s⊗s)ᵀ + n(s⊗n)ᵀ + n(n⊗s)ᵀ + n(n⊗n)ᵀ. S, P, L and X are derived
/// from the primitive gates (S = NC, P = ND, L = D(N⊗I), X = NE).
template <typename Scalar = double>
LogicMatrix<Scalar> build_gate(GateName g) {
  using B = Basis<Scalar>;
  using detail::outer;
  const Vector2<Scalar> s = B::s();
  const Vector2<Scalar> n = B::n();
  const MatrixX<Scalar> ss = kron(s, s), sn = kron(s, n), ns = kron(n, s), nn = kron(n, n);
  using M = typename LogicMatrix<Scalar>::Matrix;

  switch (g) {
    case GateName::I:
      return {1, M(outer<Scalar>(s, s) + outer<Scalar>(n, n))};
    case GateName::N:
      return {1, M(outer<Scalar>(n, s) + outer<Scalar>(s, n))};
    case GateName::K:
      return {1, M(outer<Scalar>(s, s) + outer<Scalar>(s, n))};
    case GateName::M:
      return {1, M(outer<Scalar>(n, s) + outer<Scalar>(n, n))};
    case GateName::C:
      return {2, M(outer<Scalar>(s, ss) + outer<Scalar>(n, sn) + outer<Scalar>(n, ns) +
                   outer<Scalar>(n, nn))};
    case GateName::D:
      return {2, M(outer<Scalar>(s, ss) + outer<Scalar>(s, sn) + outer<Scalar>(s, ns) +
                   outer<Scalar>(n, nn))};
    case GateName::E:
      return {2, M(outer<Scalar>(s, ss) + outer<Scalar>(n, sn) + outer<Scalar>(n, ns) +
                   outer<Scalar>(s, nn))};
    case GateName::S:
      return {2, M(build_gate<Scalar>(GateName::N).entries() *
                   build_gate<Scalar>(GateName::C).entries())};
    case GateName::P:
      return {2, M(build_gate<Scalar>(GateName::N).entries() *
                   build_gate<Scalar>(GateName::D).entries())};
    case GateName::L:
      return {2, M(build_gate<Scalar>(GateName::D).entries() *
                   kron(build_gate<Scalar>(GateName::N).entries(),
                        build_gate<Scalar>(GateName::I).entries()))};
    case GateName::X:
      return {2, M(build_gate<Scalar>(GateName::N).entries() *
                   build_gate<Scalar>(GateName::E).entries())};
  }
  throw Error(ErrorKind::invalid_argument, "unknown gate");
}

/// Cached double-precision gate registry.
const Gate& gate(GateName g);

/// The registered operator-level identities.
enum class OperatorIdentity {
  de_morgan,                // C = ND(N⊗N)
  implication_as_or,        // L = D(N⊗I)
  nand_def,                 // S = NC
  nor_def,                  // P = ND
  xor_def,                  // X = NE
  involution,               // N² = I
  xor_negation_invariance,  // X = X(N⊗N)
  implication_exportation,  // L(I⊗L) = L(C⊗I)
  chain_example,            // NL(I⊗D) = C(I⊗ND)
};

inline constexpr std::array<OperatorIdentity, 9> kAllIdentities = {
    OperatorIdentity::de_morgan,
    OperatorIdentity::implication_as_or,
    OperatorIdentity::nand_def,
    OperatorIdentity::nor_def,
    OperatorIdentity::xor_def,
    OperatorIdentity::involution,
    OperatorIdentity::xor_negation_invariance,
    OperatorIdentity::implication_exportation,
    OperatorIdentity::chain_example};

/// Canonical ASCII name, e.g. "C=ND(NxN)".
std::string_view identity_name(OperatorIdentity id);
/// Throws ErrorKind::unknown_identity.
OperatorIdentity parse_identity(std::string_view name);

/// Left and right hand side matrices of an identity.
std::pair<MatrixX<double>, MatrixX<double>> identity_sides(OperatorIdentity id);

/// True iff both sides agree entrywise within `tol`.
bool check_identity(OperatorIdentity id, double tol = kExactTol);
bool check_identity(std::string_view name, double tol = kExactTol);

}  // namespace vlogic
