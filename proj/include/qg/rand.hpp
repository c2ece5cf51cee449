#pragma once
// Deterministic random utilities.  A hand-rolled splitmix64 keeps instance
// generation byte-stable across platforms and standard-library versions,
// which std::mt19937 + std::uniform_real_distribution would not guarantee.

#include <cstdint>
#include <string>
#include <vector>

#include "qg/errors.hpp"

namespace qg {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [lo, hi], inclusive
  int int_in(int lo, int hi) {
    if (hi < lo) fail(Err::ConfigInvalid, "empty integer range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  bool coin() { return (next_u64() & 1ULL) != 0; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(int_in(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::uint64_t state_;
};

// Child seed from (master seed, label, instance index); label hashing uses
// FNV-1a so equal labels collide across runs and nothing else does in
// practice.
inline std::uint64_t derive_seed(std::uint64_t master, const std::string& label,
                                 std::uint64_t instance) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  Rng r(master ^ h ^ (instance * 0xd1342543de82ef95ULL));
  r.next_u64();
  return r.next_u64();
}

}  // namespace qg
