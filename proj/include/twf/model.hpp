#pragma once

#include "twf/types.hpp"

namespace twf {

enum class ModelKind {
  /// x' = tanh(U x + b); the control is the pair (U, b).
  TanhAffine,
  /// x' = u; analytic oracle for tests.
  LinearIntegrator,
};

/// Controlled dynamics selector. The control vector for TanhAffine stacks U
/// row-major followed by b, so p = n̄² + n̄; LinearIntegrator has p = n̄.
/// All modules depend on this flattening order.
struct ModelSpec {
  ModelKind kind = ModelKind::TanhAffine;
  Index state_dim = 0;  // n̄

  static ModelSpec tanh_affine(Index state_dim);
  static ModelSpec linear_integrator(Index state_dim);

  Index control_dim() const {
    return kind == ModelKind::TanhAffine ? state_dim * state_dim + state_dim
                                         : state_dim;
  }
};

/// f(x, u)
Vector eval_dynamics(const ModelSpec& model, const Vector& x,
                     const Vector& u_val);

/// A = ∂f/∂x, n̄×n̄
Matrix eval_state_jacobian(const ModelSpec& model, const Vector& x,
                           const Vector& u_val);

/// B = ∂f/∂u, n̄×p, columns in control flattening order
Matrix eval_control_jacobian(const ModelSpec& model, const Vector& x,
                             const Vector& u_val);

}  // namespace twf
