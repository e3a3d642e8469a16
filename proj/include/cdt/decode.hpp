#pragma once

#include "cdt/model.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cdt {

struct CdtConfig {
  float beta = 0.5f;
  float gamma = 0.5f;
  float delta = 0.1f;       // 0 disables truncation
  float temperature = 1.0f; // applied to the fused scores
  bool greedy = true;
  uint64_t sample_seed = 0;
  int max_new_tokens = 24;
};

// Named per-task presets (grid-searched inference table).
CdtConfig cdt_preset(const std::string& name);  // qa-mc | summarization | judge | gen

// Adaptive plausibility constraint: token i survives iff
// p(i) >= delta * max_w p(w), evaluated in log space. Never empty: the
// argmax always survives.
std::vector<uint8_t> plausibility_mask(const std::vector<float>& logits,
                                       float delta);

// One fused CDT step over raw logits; returns a probability vector that is
// exactly zero outside the plausibility set.
std::vector<float> fuse_step(const std::vector<float>& logits_target,
                             const std::vector<float>& logits_truthful,
                             const std::vector<float>& logits_hallucinatory,
                             const CdtConfig& cfg);

// The three decode-time models. Comparators carry attached adapters and
// share the target's base parameters; `run_*` hold the per-instruction
// prototype (inference mode, no noise).
struct ModelTriple {
  const DecoderLM* target = nullptr;
  const DecoderLM* truthful = nullptr;
  const DecoderLM* hallucinatory = nullptr;
  AdapterRun run_truthful;
  AdapterRun run_hallucinatory;
};

struct DecodeTrace {
  std::ostream* out = nullptr;  // line-delimited per-step records
  int top_k = 5;
};

struct DecodeResult {
  std::vector<int> tokens;  // generated (prompt excluded), EOS excluded
  bool hit_eos = false;
  bool truncated = false;   // context filled before EOS / max tokens
};

DecodeResult decode(const ModelTriple& models, const std::vector<int>& prompt,
                    const CdtConfig& cfg, DecodeTrace* trace = nullptr);

// Plain single-model decoding (the beta=gamma=0 reference path).
DecodeResult decode_single(const DecoderLM& model, const std::vector<int>& prompt,
                           const CdtConfig& cfg);

// Total log-probability of `continuation` after `prompt` under the fused
// CDT distribution.
double score_continuation(const ModelTriple& models, const std::vector<int>& prompt,
                          const std::vector<int>& continuation, const CdtConfig& cfg);

// Same, under softmax(logits/temperature) of a single model.
double score_continuation_single(const DecoderLM& model, const std::vector<int>& prompt,
                                 const std::vector<int>& continuation,
                                 const CdtConfig& cfg,
                                 const AdapterRun* run = nullptr);

}  // namespace cdt
