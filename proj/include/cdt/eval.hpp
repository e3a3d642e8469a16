#pragma once

#include "cdt/decode.hpp"
#include "cdt/factworld.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cdt {

// Total log-probability of a continuation given a prompt.
using Scorer = std::function<double(const std::vector<int>& prompt,
                                    const std::vector<int>& continuation)>;

struct JudgeItem {
  std::vector<int> prompt;       // judge-formatted instruction+response
  bool label_hallucinated = false;
};

struct JudgeResult {
  int tp = 0, fp = 0, tn = 0, fn = 0;
  double accuracy = 0, precision = 0, recall = 0, f1 = 0;  // percent
};

// Predict YES (hallucinated) iff score(YES) > score(NO); ties predict NO.
JudgeResult eval_judge(const Scorer& scorer, const std::vector<JudgeItem>& items,
                       int yes_id, int no_id);

struct McQuestion {
  std::vector<int> prompt;
  std::vector<std::vector<int>> correct;
  std::vector<std::vector<int>> incorrect;
};

struct McResult {
  double mc1 = 0, mc2 = 0, mc3 = 0;  // percent
  // per-question length-normalized option scores, correct then incorrect
  std::vector<std::vector<double>> option_scores;
};

// Option score = length-normalized continuation log-prob. MC1: best correct
// strictly beats every incorrect. MC2: normalized probability mass on the
// correct options. MC3: fraction of correct options beating all incorrect.
McResult eval_mc(const Scorer& scorer, const std::vector<McQuestion>& questions);

struct GenFactResult {
  int n = 0;
  int factual = 0;
  double factual_rate = 0;  // in [0,1]
  std::map<std::string, int> pattern_breakdown;  // hallucinated, by pattern
};

using GenerateFn = std::function<std::string(const FactSample&)>;

// Decodes each held-out prompt and checks the output against the KB oracle.
GenFactResult eval_gen(const GenerateFn& generate, const std::vector<FactSample>& prompts,
                       const KnowledgeBase& kb);

// Auxiliary diagnostic only: token-level ROUGE-L F-measure.
double rouge_l(const std::vector<std::string>& reference,
               const std::vector<std::string>& hypothesis);

}  // namespace cdt
