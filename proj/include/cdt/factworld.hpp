#pragma once

#include "cdt/tensor.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace cdt {

enum class Task { qa, dialogue, summarization, general };
enum class Pattern { unverifiable, non_factual, irrelevant };

std::string task_name(Task t);
std::string pattern_name(Pattern p);
Task task_from_name(const std::string& s);
Pattern pattern_from_name(const std::string& s);

enum class Relation { capital_of, author_of, genre_of, year_of };
std::string relation_name(Relation r);

struct Triple {
  std::string subject;
  Relation rel;
  std::string object;
  bool operator==(const Triple&) const = default;
};

// Closed synthetic world: countries with capitals, books with authors,
// genres, and years. Every relation is functional.
struct KnowledgeBase {
  uint64_t seed = 0;
  std::vector<std::string> countries, cities, books, authors, genres, years;
  std::vector<std::string> off_kb_words;  // reserved for unverifiable responses
  std::map<std::pair<std::string, Relation>, std::string> facts;
  std::set<std::string> entity_set;  // all valid objects/subjects

  const std::string& lookup(const std::string& subject, Relation rel) const;
  bool has(const std::string& subject, Relation rel) const;
  std::vector<std::string> lexicon() const;  // all entity + reserved words

  void save(const std::string& path) const;
  static KnowledgeBase load(const std::string& path);
};

KnowledgeBase build_kb(uint64_t seed, int n_entities = 200);

struct FactSample {
  int id = 0;
  Task task = Task::qa;
  Pattern pattern = Pattern::non_factual;  // pattern of the hallucinated side
  std::string instruction;
  std::string factual;
  std::string hallucinated;
  std::vector<Triple> grounding;
};

// Deterministic sample generation over the given subject pools (subset of
// kb.books / kb.countries). Hallucination patterns cycle uniformly.
std::vector<FactSample> gen_samples(const KnowledgeBase& kb, Task task, int n,
                                    uint64_t seed,
                                    const std::vector<std::string>& book_pool,
                                    const std::vector<std::string>& country_pool);

struct Verdict {
  bool factual = false;
  Pattern pattern = Pattern::unverifiable;  // meaningful when !factual
  bool operator==(const Verdict&) const = default;
};

// Template-level slot extraction + KB lookup. Total in the response
// (unparseable text is hallucinated/unverifiable); throws on an instruction
// that matches no known template.
Verdict oracle_check(const KnowledgeBase& kb, const std::string& instruction,
                     const std::string& response);

// Train/held-out corpus with subject pools disjoint between splits, so no
// grounding triple leaks across.
struct Corpus {
  std::vector<FactSample> train;
  std::vector<FactSample> heldout;
};

Corpus make_corpus(const KnowledgeBase& kb, uint64_t seed, int n_train = 3000,
                   int heldout_per_task = 600);

void save_samples(const std::vector<FactSample>& samples, const std::string& path);
std::vector<FactSample> load_samples(const std::string& path);

// Judge-task wrapping: YES means "contains hallucination".
std::string judge_prompt(const std::string& instruction, const std::string& response);

}  // namespace cdt
