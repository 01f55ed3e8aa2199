#pragma once

#include "twf/types.hpp"

namespace twf {

/// Uplift/readout pair: inputs in ℝⁿ are zero-padded into the lifted state
/// space ℝ^{n̄}, and a fixed full-row-rank linear readout maps final states
/// to outputs in ℝ^{n_o}.
struct ProblemEmbedding {
  Index input_dim = 0;  // n
  Index state_dim = 0;  // n̄ ≥ n
  Matrix readout;       // n_o × n̄

  Index output_dim() const { return readout.rows(); }
};

/// Validates dimensions and the full-row-rank requirement on the readout.
ProblemEmbedding make_embedding(Index input_dim, Index state_dim,
                                Matrix readout);

/// E(x) = (x, 0, …, 0)
Vector uplift(const ProblemEmbedding& embedding, const Vector& x);

/// R·state
Vector apply_readout(const ProblemEmbedding& embedding, const Vector& state);

}  // namespace twf
