#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace cga {

// Portable deterministic generator. std::uniform_int_distribution and
// std::shuffle are implementation-defined, so instance generation and solver
// restarts go through this instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1).
  double unit();

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t x);

// 64-bit FNV-1a followed by a splitmix64 finalizer.
std::uint64_t stable_hash(std::string_view bytes);

}  // namespace cga
