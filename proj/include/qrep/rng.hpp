#pragma once

#include <cstdint>

namespace qrep {

// Counter-based deterministic random stream.  Streams are split
// hierarchically: child(tag) derives an independent stream, so parallel
// sampling loops stay reproducible regardless of evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)), ctr_(0) {}

  Rng child(std::uint64_t tag) const {
    Rng r(0);
    r.key_ = mix(key_ ^ mix(tag ^ 0xbf58476d1ce4e5b9ull));
    r.ctr_ = 0;
    return r;
  }

  std::uint64_t next() { return mix(key_ ^ mix(ctr_++ ^ 0x94d049bb133111ebull)); }

  // Uniform in [0, n).  n must be positive.
  std::uint64_t below(std::uint64_t n) {
    // rejection sampling to avoid modulo bias
    std::uint64_t limit = n * (UINT64_MAX / n);
    for (;;) {
      std::uint64_t x = next();
      if (x < limit) return x % n;
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::uint64_t key_;
  std::uint64_t ctr_;
};

}  // namespace qrep
