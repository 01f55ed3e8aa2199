#include "twf/model.hpp"

#include <cmath>
#include <string>

#include "twf/errors.hpp"

namespace twf {

namespace {

void check_dims(const ModelSpec& model, const Vector& x, const Vector& u_val,
                const char* op) {
  if (model.state_dim <= 0) {
    throw DimensionError(std::string(op) + ": model state dimension must be positive");
  }
  if (x.size() != model.state_dim) {
    throw DimensionError(std::string(op) + ": state has dimension " +
                         std::to_string(x.size()) + ", model expects " +
                         std::to_string(model.state_dim));
  }
  if (u_val.size() != model.control_dim()) {
    throw DimensionError(std::string(op) + ": control value has dimension " +
                         std::to_string(u_val.size()) + ", model expects " +
                         std::to_string(model.control_dim()));
  }
}

// u = [vec_rowmajor(U); b]
Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                               Eigen::RowMajor>>
weight_part(const Vector& u_val, Index n) {
  return {u_val.data(), n, n};
}

}  // namespace

ModelSpec ModelSpec::tanh_affine(Index state_dim) {
  return {ModelKind::TanhAffine, state_dim};
}

ModelSpec ModelSpec::linear_integrator(Index state_dim) {
  return {ModelKind::LinearIntegrator, state_dim};
}

Vector eval_dynamics(const ModelSpec& model, const Vector& x,
                     const Vector& u_val) {
  check_dims(model, x, u_val, "eval_dynamics");
  if (model.kind == ModelKind::LinearIntegrator) {
    return u_val;
  }
  const Index n = model.state_dim;
  const Vector z = weight_part(u_val, n) * x + u_val.tail(n);
  return z.array().tanh();
}

Matrix eval_state_jacobian(const ModelSpec& model, const Vector& x,
                           const Vector& u_val) {
  check_dims(model, x, u_val, "eval_state_jacobian");
  const Index n = model.state_dim;
  if (model.kind == ModelKind::LinearIntegrator) {
    return Matrix::Zero(n, n);
  }
  const auto U = weight_part(u_val, n);
  const Vector z = U * x + u_val.tail(n);
  const Vector sech2 = 1.0 - z.array().tanh().square();
  return sech2.asDiagonal() * U;
}

Matrix eval_control_jacobian(const ModelSpec& model, const Vector& x,
                             const Vector& u_val) {
  check_dims(model, x, u_val, "eval_control_jacobian");
  const Index n = model.state_dim;
  if (model.kind == ModelKind::LinearIntegrator) {
    return Matrix::Identity(n, n);
  }
  const auto U = weight_part(u_val, n);
  const Vector z = U * x + u_val.tail(n);
  const Vector sech2 = 1.0 - z.array().tanh().square();
  Matrix B = Matrix::Zero(n, model.control_dim());
  // ∂f_i/∂U_{jk} = sech²(z)_i δ_{ij} x_k lands in column j·n̄ + k.
  for (Index j = 0; j < n; ++j) {
    B.row(j).segment(j * n, n) = sech2(j) * x.transpose();
    B(j, n * n + j) = sech2(j);  // ∂f_j/∂b_j
  }
  return B;
}

}  // namespace twf
