#pragma once

#include "cdt/tensor.hpp"

namespace cdt {

struct AdapterConfig {
  int n_experts = 4;
  int rank = 8;
  float alpha = 32.0f;
  float mu = 0.1f;   // prototype/token trade-off in the gate
  int dim = 0;       // adapted projection width (model dim)
  int proto_dim = 0; // prototype (PCA) dimensionality
};

// One low-rank expert. B starts at zero so an untrained expert is a no-op.
struct LoraExpert {
  Tensor a;  // [dim, rank]
  Tensor b;  // [rank, dim]
};

struct GatingParams {
  Tensor w_c;  // [proto_dim, dim] prototype projection
  Tensor w_g;  // [dim, n_experts] gate weight
  Tensor w_n;  // [dim, n_experts] noise weight
};

struct SiteAdapter {
  std::vector<LoraExpert> experts;
  GatingParams gate;
};

// Adapters for every q/k/v projection of every layer, in layer-major order
// (layer*3 + {0:q, 1:k, 2:v}).
struct LoraMoEAdapter {
  AdapterConfig cfg;
  std::vector<SiteAdapter> sites;

  static LoraMoEAdapter init(int layers, const AdapterConfig& cfg, Rng& rng);
  std::vector<Tensor> trainable_params() const;
  int64_t param_count() const;
};

// Soft route gating per token. x: [t, dim] site input, proto: the assigned
// instruction prototype, [1, proto_dim]. Noise is sampled only in training
// mode; inference is deterministic.
Tensor gate_forward(const SiteAdapter& site, const Tensor& x,
                    const Tensor& proto, float mu, bool train_mode, Rng* rng);

// Mixture output z = (alpha/rank) * sum_n G_n * (x A_n) B_n.
Tensor moe_forward(const SiteAdapter& site, const Tensor& x,
                   const Tensor& gate, float alpha, int rank);

// Per-call adapter context threaded through a model forward pass.
struct AdapterRun {
  Tensor proto;            // assigned prototype, [1, proto_dim]
  bool train_mode = false;
  Rng* rng = nullptr;      // required when train_mode
  // Optional accumulator of mean gate weight per expert (load-balance log).
  std::vector<double>* gate_sums = nullptr;
  int64_t* gate_rows = nullptr;
};

}  // namespace cdt
