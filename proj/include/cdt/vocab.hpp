#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace cdt {

// Word-level vocabulary over a closed lexicon, plus special tokens.
class Vocab {
 public:
  static constexpr const char* kBos = "<bos>";
  static constexpr const char* kEos = "<eos>";
  static constexpr const char* kPad = "<pad>";
  static constexpr const char* kYes = "yes";
  static constexpr const char* kNo = "no";

  Vocab() = default;
  // Builds specials + the sorted set of whitespace-separated words in docs.
  static Vocab build(const std::vector<std::string>& docs);
  static Vocab from_tokens(std::vector<std::string> tokens);

  int size() const { return static_cast<int>(tokens_.size()); }
  int id(const std::string& token) const;  // throws on unknown token
  const std::string& token(int id) const { return tokens_.at(id); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  int bos() const { return id(kBos); }
  int eos() const { return id(kEos); }
  int pad() const { return id(kPad); }
  int yes() const { return id(kYes); }
  int no() const { return id(kNo); }

  std::vector<int> encode(const std::string& text) const;
  std::string decode(const std::vector<int>& ids, bool skip_special = true) const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
};

std::vector<std::string> split_words(const std::string& text);

}  // namespace cdt
