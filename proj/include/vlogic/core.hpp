#pragma once

// Vector truth values and matrix gates over the canonical two-dimensional
// basis s = (1,0)ᵀ (true), n = (0,1)ᵀ (false).

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>

#include "vlogic/error.hpp"

namespace vlogic {

/// Tolerance for identities that are exact up to rounding (0/1 entries).
inline constexpr double kExactTol = 1e-12;
/// Tolerance for accumulated probabilistic arithmetic.
inline constexpr double kProbTol = 1e-9;

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct Basis {
  static constexpr int dimension = 2;
  static Vector2<Scalar> s() { return Vector2<Scalar>::UnitX(); }
  static Vector2<Scalar> n() { return Vector2<Scalar>::UnitY(); }
};

/// Kronecker product A ⊗ B = [a_ij B].
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                        const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>,
                "kron operands must share a scalar type");
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  MatrixX<Scalar> out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

/// A point of Π = {αs + (1-α)n : α ∈ [0,1]}. The weight α is the stored
/// representation; the backing vector is materialized on demand.
template <typename Scalar>
class TruthVector {
 public:
  /// Throws ErrorKind::domain when α is not in [0,1] (no clamping).
  static TruthVector from_weight(Scalar alpha) {
    if (!(alpha >= Scalar(0) && alpha <= Scalar(1)))
      throw Error(ErrorKind::domain,
                  "truth weight " + std::to_string(double(alpha)) +
                      " is outside [0,1]");
    return TruthVector(alpha);
  }

  /// Accepts a vector whose coefficients are nonnegative and sum to 1 within
  /// `tol`. Rounding residue within `tol` of an endpoint is snapped onto it.
  static TruthVector from_vector(const Vector2<Scalar>& v,
                                 Scalar tol = Scalar(kExactTol)) {
    const Scalar a = v(0);
    const Scalar b = v(1);
    if (!(a >= -tol && b >= -tol) || !(std::abs(a + b - Scalar(1)) <= tol))
      throw Error(ErrorKind::domain, "vector is not a member of Π");
    Scalar alpha = a;
    if (alpha < Scalar(0)) alpha = Scalar(0);
    if (alpha > Scalar(1)) alpha = Scalar(1);
    return TruthVector(alpha);
  }

  static TruthVector truth() { return TruthVector(Scalar(1)); }
  static TruthVector falsity() { return TruthVector(Scalar(0)); }

  Scalar weight() const noexcept { return alpha_; }

  Vector2<Scalar> vector() const {
    return alpha_ * Basis<Scalar>::s() + (Scalar(1) - alpha_) * Basis<Scalar>::n();
  }

  bool is_binary() const noexcept {
    return alpha_ == Scalar(0) || alpha_ == Scalar(1);
  }

 private:
  explicit TruthVector(Scalar alpha) : alpha_(alpha) {}
  Scalar alpha_;
};

/// A monadic (2×2) or dyadic (2×4) logical gate.
template <typename Scalar>
class LogicMatrix {
 public:
  using Matrix = Eigen::Matrix<Scalar, 2, Eigen::Dynamic>;

  LogicMatrix(int arity, Matrix entries)
      : arity_(arity), entries_(std::move(entries)) {
    if (arity_ != 1 && arity_ != 2)
      throw Error(ErrorKind::arity, "gate arity must be 1 or 2");
    if (entries_.cols() != (arity_ == 1 ? 2 : 4))
      throw Error(ErrorKind::arity, "gate matrix shape does not match arity");
  }

  int arity() const noexcept { return arity_; }
  const Matrix& entries() const noexcept { return entries_; }

 private:
  int arity_;
  Matrix entries_;
};

/// sᵀu: the probability weight of truth.
template <typename Scalar>
Scalar scalar_project(const TruthVector<Scalar>& u) {
  return Basis<Scalar>::s().dot(u.vector());
}

template <typename Scalar>
TruthVector<Scalar> apply(const LogicMatrix<Scalar>& m, const TruthVector<Scalar>& u) {
  if (m.arity() != 1)
    throw Error(ErrorKind::arity, "dyadic gate applied to one argument");
  return TruthVector<Scalar>::from_vector(m.entries() * u.vector());
}

template <typename Scalar>
TruthVector<Scalar> apply(const LogicMatrix<Scalar>& m, const TruthVector<Scalar>& u,
                          const TruthVector<Scalar>& v) {
  if (m.arity() != 2)
    throw Error(ErrorKind::arity, "monadic gate applied to two arguments");
  const Vector2<Scalar> product = m.entries() * kron(u.vector(), v.vector());
  return TruthVector<Scalar>::from_vector(product);
}

template <typename Scalar>
TruthVector<Scalar> apply(const LogicMatrix<Scalar>& m,
                          std::span<const TruthVector<Scalar>> args) {
  if (args.size() != static_cast<std::size_t>(m.arity()))
    throw Error(ErrorKind::arity, "gate of arity " + std::to_string(m.arity()) +
                                      " given " + std::to_string(args.size()) +
                                      " arguments");
  return args.size() == 1 ? apply(m, args[0]) : apply(m, args[0], args[1]);
}

template <typename Scalar>
bool vec_eq(const TruthVector<Scalar>& u, const TruthVector<Scalar>& v, Scalar tol) {
  if (!(tol > Scalar(0)))
    throw Error(ErrorKind::invalid_argument, "tolerance must be positive");
  return std::abs(u.weight() - v.weight()) <= tol;
}

using TruthVec = TruthVector<double>;
using Gate = LogicMatrix<double>;

}  // namespace vlogic
