#pragma once

#include "cdt/adapter.hpp"
#include "cdt/tensor.hpp"
#include "cdt/vocab.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cdt {

struct ModelConfig {
  int layers = 4;
  int dim = 128;
  int heads = 4;
  int ctx_len = 128;
  int vocab = 0;
};

struct LayerParams {
  Tensor ln1_g, ln1_b;
  Tensor wq, wk, wv, wo;
  Tensor ln2_g, ln2_b;
  Tensor w_fc, b_fc, w_proj, b_proj;
};

// Minimal pre-LN decoder-only transformer with learned absolute positions.
// Copying a DecoderLM shares parameter storage (tensors are handles), so a
// comparator is a cheap copy of the base plus an attached adapter.
class DecoderLM {
 public:
  ModelConfig cfg;
  Vocab vocab;
  Tensor tok_emb, pos_emb;
  std::vector<LayerParams> layers;
  Tensor lnf_g, lnf_b, w_out;

  static DecoderLM init(ModelConfig cfg, Vocab vocab, Rng& rng);

  // Per-position next-token logits, [t, vocab]. When an adapter is attached,
  // `run` carries the instruction prototype and noise stream; emb_capture,
  // when set, receives the embedded-input node (marked requires_grad) plus
  // an optional additive perturbation applied before the first layer.
  Tensor forward(const std::vector<int>& ids, const AdapterRun* run = nullptr,
                 Tensor* emb_capture = nullptr,
                 const Tensor* emb_perturbation = nullptr) const;

  // Final-layer hidden state at the last position (post final layer norm).
  std::vector<float> hidden_last(const std::vector<int>& ids,
                                 const AdapterRun* run = nullptr) const;

  void attach(const LoraMoEAdapter* adapter);
  void detach();
  const LoraMoEAdapter* adapter() const { return adapter_; }

  std::vector<std::pair<std::string, Tensor>> named_params() const;
  std::vector<Tensor> params() const;
  void set_trainable(bool trainable);

 private:
  const LoraMoEAdapter* adapter_ = nullptr;
};

struct TrainBaseConfig {
  int epochs = 3;
  int batch = 32;  // gradient-accumulation size
  float lr = 1e-3f;
  float weight_decay = 0.01f;
};

struct TrainLogEntry {
  int step;
  float loss;       // mean per-token NLL of the batch
  float grad_norm;
};

// Next-token LM training on whole documents (token id sequences). Throws
// on NaN loss. Deterministic for a fixed seed.
std::vector<TrainLogEntry> train_base(DecoderLM& model,
                                      const std::vector<std::vector<int>>& docs,
                                      const TrainBaseConfig& cfg, uint64_t seed);

// Mean per-token NLL over docs; perplexity = exp of this.
double mean_nll(const DecoderLM& model, const std::vector<std::vector<int>>& docs,
                const AdapterRun* run = nullptr);

}  // namespace cdt
