#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace cdt {

// Thrown for bad invocations / malformed configs (CLI exit code 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a selfcheck or eval gate fails (CLI exit code 2).
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key=value run configuration. Every key has a documented default;
// unknown keys are rejected. CLI flags override file values.
struct RunConfig {
  uint64_t seed = 0;
  bool seed_explicit = false;
  bool strict = false;     // strict mode requires an explicit seed
  int threads = 1;
  std::string out_dir = "runs/default";

  // factworld
  int n_entities = 200;
  int train_samples = 3000;
  int heldout_per_task = 600;
  int eval_subset = 150;   // per-task cap for generation evals

  // model
  int layers = 4;
  int dim = 128;
  int heads = 4;
  int ctx_len = 128;

  // base pretraining
  int base_epochs = 3;
  float base_lr = 1e-3f;
  int batch = 32;

  // prototype learning
  int pca_dim = 32;
  int prototypes = 32;

  // adapters + comparator training
  int experts = 4;
  int rank = 8;
  float alpha = 32.0f;
  float mu = 0.1f;
  float adapter_lr = 5e-5f;
  int hallucinatory_epochs = 3;
  int truthful_epochs = 2;
  float epsilon = 0.01f;

  // decoding
  std::string preset = "gen";
  bool preset_explicit = false;
  float beta = -1.0f;         // < 0 means "use preset value"
  float gamma = -1.0f;
  float delta = -1.0f;
  float temperature = -1.0f;
  int max_new_tokens = 24;
  std::string mode = "greedy";  // greedy | sampled
  uint64_t sample_seed = 0;

  static RunConfig load_file(const std::string& path);
  void apply(const std::string& key, const std::string& value);
  std::string echo() const;  // effective config, key = value lines
};

}  // namespace cdt
