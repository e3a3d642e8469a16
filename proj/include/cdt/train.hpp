#pragma once

#include "cdt/adapter.hpp"
#include "cdt/model.hpp"

#include <string>
#include <vector>

namespace cdt {

// One comparator-training example: instruction tokens, both responses, and
// the instruction's assigned prototype (PCA space).
struct CompSample {
  std::vector<int> instruction;    // starts with BOS
  std::vector<int> factual;        // ends with EOS
  std::vector<int> hallucinated;   // ends with EOS
  Tensor proto;                    // [1, proto_dim]
};

enum class ComparatorKind { hallucinatory, truthful };

struct ComparatorTrainConfig {
  float lr = 5e-5f;
  int batch = 32;       // gradient-accumulation size
  int epochs = 3;       // 3 hallucinatory / 2 truthful by default
  float epsilon = 1.0f; // FGM magnitude (truthful only)
  bool use_pat = true;  // false: plain SFT on factual responses (ablation)
  float weight_decay = 0.01f;
};

// Masked next-token loss over the response span only. Returns the summed
// NLL; the gradient is scaled by `grad_scale` before backward.
float sft_loss_backward(const DecoderLM& model, const std::vector<int>& x,
                        const std::vector<int>& y, const AdapterRun& run,
                        float grad_scale, const Tensor* emb_perturbation = nullptr,
                        Tensor* emb_capture = nullptr);

// One optimizer update from a batch of (x, y) pairs (Eq.-4-style SFT).
// Only parameters managed by `opt` move; returns the mean per-token NLL.
float sft_step(const DecoderLM& model, const std::vector<const CompSample*>& batch,
               bool use_hallucinated, AdamW& opt, Rng& noise_rng);

// FGM perturbation: eps * g / ||g||_2 where g is the gradient of the
// hallucinated-response loss w.r.t. the embedded instruction tokens.
// Covers exactly the instruction rows, [|x|, dim]. Parameter gradients from
// this pass are suppressed. A zero gradient yields a zero perturbation.
Tensor fgm_perturbation(const DecoderLM& model, const CompSample& sample,
                        float eps, Rng& noise_rng, bool* zero_grad_event = nullptr);

// PAT: one update from clean + adversarial factual passes, perturbation from
// the hallucinated pass. Returns the summed factual losses (mean per token).
float pat_step(const DecoderLM& model, const std::vector<const CompSample*>& batch,
               float eps, AdamW& opt, Rng& noise_rng, int* zero_grad_events = nullptr);

struct ComparatorTrainResult {
  LoraMoEAdapter adapter;
  std::vector<TrainLogEntry> log;
  std::vector<double> mean_gate;  // load-balance summary per expert
  int fgm_zero_grad_events = 0;
};

// Trains an adapter of the requested kind on `samples`; the base model's
// parameters are left bitwise untouched.
ComparatorTrainResult train_comparator(ComparatorKind kind, const DecoderLM& base,
                                       const std::vector<CompSample>& samples,
                                       const AdapterConfig& acfg,
                                       const ComparatorTrainConfig& tcfg,
                                       uint64_t seed);

}  // namespace cdt
