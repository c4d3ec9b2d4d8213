#pragma once

#include <cstdint>
#include <random>

namespace snmm {

// splitmix64: used only to spread (seed, stream id) pairs into well separated
// mt19937_64 seeds so that per-chain / per-replicate streams are independent
// and reproducible regardless of thread scheduling.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(0x9e3779b97f4a7c15ULL * (stream + 1)));
}

// One deterministic RNG stream. Every stochastic unit of work (MH chain,
// replicate, MC block) owns its own stream derived from (seed, index), so
// results do not depend on the number of workers.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}
  RngStream(std::uint64_t seed, std::uint64_t stream) : eng_(mix_seed(seed, stream)) {}

  double normal() { return normal_(eng_); }
  double normal(double mean, double sd) { return mean + sd * normal_(eng_); }
  double uniform() { return uniform_(eng_); }  // [0,1)
  std::uint64_t raw() { return eng_(); }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace snmm
