#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdt {

// Deterministic RNG. All randomness in the project flows through instances
// of this class; the same seed yields bit-identical streams.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  float uniform() {
    return static_cast<float>((engine_() >> 11) * (1.0 / 9007199254740992.0));
  }

  float uniform(float lo, float hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller, no cached spare (keeps the stream
  // position a pure function of the number of calls).
  float normal() {
    float u1 = uniform();
    while (u1 <= 1e-12f) u1 = uniform();
    float u2 = uniform();
    return std::sqrt(-2.0f * std::log(u1)) *
           std::cos(2.0f * 3.14159265358979323846f * u2);
  }

  // Uniform integer in [0, n).
  size_t index(size_t n) { return static_cast<size_t>(engine_() % n); }

  // Derive an independent stream (for per-sample seeding).
  Rng fork(uint64_t salt) const {
    std::mt19937_64 tmp(engine_);  // copy, do not disturb this stream
    return Rng(tmp() ^ (salt * 0x9e3779b97f4a7c15ull));
  }

 private:
  std::mt19937_64 engine_;
};

struct TensorImpl;
using TensorImplPtr = std::shared_ptr<TensorImpl>;

// Dense row-major float32 tensor with reverse-mode autodiff. Value-semantic
// handle; the graph is a fresh tape per forward pass.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(std::vector<int> shape, bool requires_grad = false);
  static Tensor full(std::vector<int> shape, float value,
                     bool requires_grad = false);
  static Tensor from_data(std::vector<int> shape, std::vector<float> data,
                          bool requires_grad = false);
  static Tensor randn(std::vector<int> shape, Rng& rng, float stddev,
                      bool requires_grad = false);

  bool defined() const { return impl_ != nullptr; }
  const std::vector<int>& shape() const;
  int dim(int i) const;
  int64_t size() const;
  float* data();
  const float* data() const;
  float item() const;  // scalar tensors only

  bool requires_grad() const;
  void set_requires_grad(bool v);
  float* grad();              // allocates (zeroed) on first use
  const float* grad() const;  // nullptr if never allocated
  bool has_grad() const;
  void zero_grad();

  // Runs reverse-mode accumulation from this scalar.
  void backward();

  TensorImplPtr impl() const { return impl_; }
  explicit Tensor(TensorImplPtr impl) : impl_(std::move(impl)) {}

 private:
  TensorImplPtr impl_;
};

struct TensorImpl {
  std::vector<int> shape;
  std::vector<float> data;
  std::vector<float> grad;  // empty until first accumulation
  bool requires_grad = false;
  std::vector<TensorImplPtr> parents;
  std::function<void()> backward_fn;  // propagates this->grad into parents
};

// --- ops (all build tape nodes when an input requires grad) ---

Tensor matmul(const Tensor& a, const Tensor& b);  // [m,k]x[k,n] -> [m,n]
Tensor transpose(const Tensor& a);                // [m,n] -> [n,m]
Tensor add(const Tensor& a, const Tensor& b);     // same shape
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);  // elementwise
Tensor scale(const Tensor& a, float s);
Tensor add_row_bias(const Tensor& x, const Tensor& bias);  // [t,n] + [n]
// Scales row t of x by s[t]; s has shape [t] or [t,1].
Tensor rowwise_scale(const Tensor& x, const Tensor& s);
Tensor gelu(const Tensor& x);
Tensor softplus(const Tensor& x);
Tensor softmax_rows(const Tensor& x);  // softmax over the last axis of [t,n]
// Softmax over row prefix [0..row] of a [t,t] score matrix; the strictly
// upper-triangular part of the output is zero.
Tensor causal_softmax(const Tensor& scores);
Tensor layer_norm(const Tensor& x, const Tensor& gain, const Tensor& bias,
                  float eps = 1e-5f);
// Gathers rows of table; gradient scatter-adds into the table.
Tensor embedding(const Tensor& table, const std::vector<int>& ids);
Tensor slice_cols(const Tensor& x, int start, int n);
Tensor concat_cols(const std::vector<Tensor>& parts);
Tensor sum_all(const Tensor& x);  // scalar
// Masked token-level NLL: sum over positions with mask=1 of
// -log softmax(logits[t])[targets[t]].
Tensor cross_entropy(const Tensor& logits, const std::vector<int>& targets,
                     const std::vector<uint8_t>& mask);

// --- non-autodiff numeric helpers ---

float logsumexp(const float* x, int n);
void softmax_inplace(float* x, int n);                // stable, max-shifted
size_t argmax_lowest(const float* x, size_t n);       // ties -> lowest index
bool all_finite(const float* x, size_t n);
void check_finite(const Tensor& t, const std::string& what);

// AdamW with decoupled weight decay; deterministic given call order.
class AdamW {
 public:
  AdamW(std::vector<Tensor> params, float lr, float beta1 = 0.9f,
        float beta2 = 0.999f, float eps = 1e-8f, float weight_decay = 0.01f);

  void step();       // applies accumulated grads, then leaves them in place
  void zero_grad();  // clears grads of all managed params
  void set_lr(float lr) { lr_ = lr; }
  float lr() const { return lr_; }
  const std::vector<Tensor>& params() const { return params_; }

 private:
  std::vector<Tensor> params_;
  std::vector<std::vector<float>> m_, v_;
  float lr_, beta1_, beta2_, eps_, weight_decay_;
  int64_t t_ = 0;
};

}  // namespace cdt
