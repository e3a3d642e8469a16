#pragma once

#include "cdt/config.hpp"
#include "cdt/decode.hpp"
#include "cdt/eval.hpp"
#include "cdt/factworld.hpp"
#include "cdt/prototype.hpp"
#include "cdt/train.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace cdt {

// Artifact locations under a run's out_dir.
struct Paths {
  explicit Paths(const std::string& out_dir);
  std::string out_dir, kb, train, heldout, ckpt_dir, base_ckpt, proto_ckpt,
      adapter_hallucinatory, adapter_truthful, report_dir, log_dir;
};

// --- checkpoint adapters for the domain objects ---

void save_model(const DecoderLM& model, const std::string& path);
DecoderLM load_model(const std::string& path);
void save_bank(const PrototypeBank& bank, const std::string& path);
PrototypeBank load_bank(const std::string& path);
void save_adapter(const LoraMoEAdapter& adapter, const std::string& kind,
                  const std::string& path);
LoraMoEAdapter load_adapter(const std::string& path);

// Pretraining documents: instruction/response pairs from the train split,
// declarative statements for held-out facts, and judge-formatted lines.
std::vector<std::string> base_corpus_text(const Corpus& corpus);

// [BOS] + instruction tokens / response tokens + [EOS].
std::vector<int> instruction_ids(const Vocab& v, const std::string& text);
std::vector<int> response_ids(const Vocab& v, const std::string& text);

// Builds comparator training samples with per-instruction prototypes.
std::vector<CompSample> build_comp_samples(const DecoderLM& base,
                                           const PrototypeBank& bank,
                                           const std::vector<FactSample>& samples);

// Resolves preset + overrides + mode into a concrete decode config.
CdtConfig resolve_cdt_config(const RunConfig& cfg);

// --- subcommand bodies (shared by the CLI and the acceptance suite) ---

void cmd_factworld_gen(const RunConfig& cfg);
void cmd_train_base(const RunConfig& cfg);
void cmd_fit_prototypes(const RunConfig& cfg);
void cmd_train_comparator(const RunConfig& cfg, ComparatorKind kind);
std::string cmd_decode(const RunConfig& cfg, const std::string& instruction,
                       const std::string& trace_path = "");
nlohmann::json cmd_eval(const RunConfig& cfg, const std::string& which);
int run_selfcheck(bool verbose = true);

struct PipelineOutcome {
  nlohmann::json metrics;
  std::vector<std::pair<std::string, std::string>> artifact_hashes;  // path, hash
};

// Runs gen -> base -> prototypes -> both comparators -> gen eval.
PipelineOutcome run_full_pipeline(const RunConfig& cfg);

// Loaded decode-time state for one run directory.
struct DecodeSession {
  DecoderLM base;
  PrototypeBank bank;
  LoraMoEAdapter adapter_truthful;
  LoraMoEAdapter adapter_hallucinatory;
  DecoderLM truthful;       // base copy with adapter attached
  DecoderLM hallucinatory;

  // Heap-allocated so the attached adapter addresses stay stable.
  static std::unique_ptr<DecodeSession> open(const Paths& paths);
  // Per-instruction model triple (prototype assigned from the base model).
  ModelTriple triple(const std::vector<int>& instruction) const;

  DecodeSession(const DecodeSession&) = delete;
  DecodeSession& operator=(const DecodeSession&) = delete;

 private:
  DecodeSession() = default;
};

}  // namespace cdt
