#pragma once

#include "cdt/tensor.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace cdt {

// Versioned checkpoint container: magic "CDTCKPT1", a UTF-8 JSON metadata
// blob, then named float32 tensors (little-endian) with declared shapes.
// Round-trips bit-exactly.
struct Checkpoint {
  nlohmann::json meta;
  std::map<std::string, Tensor> tensors;  // ordered for determinism

  void put(const std::string& name, const Tensor& t) { tensors[name] = t; }
  const Tensor& get(const std::string& name) const;
  bool has(const std::string& name) const { return tensors.count(name) > 0; }

  void save(const std::string& path) const;
  static Checkpoint load(const std::string& path);
};

// FNV-1a over a file's bytes; used to fingerprint artifacts in report names.
uint64_t file_hash(const std::string& path);
std::string hash_hex(uint64_t h);

}  // namespace cdt
