#pragma once

// Shared plumbing: error taxonomy mapped to process exit codes, a
// counter-based deterministic RNG, bitsets, base64, FNV-1a digests,
// env-tunable resource caps and a slice-based parallel_for.

#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdl {

enum class Errc { usage = 2, verify = 3, resource = 4, internal = 5 };

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail_usage(const std::string& m) { throw Error(Errc::usage, m); }
[[noreturn]] inline void fail_verify(const std::string& m) { throw Error(Errc::verify, m); }
[[noreturn]] inline void fail_resource(const std::string& m) { throw Error(Errc::resource, m); }
[[noreturn]] inline void fail_internal(const std::string& m) { throw Error(Errc::internal, m); }

// SplitMix64 keyed by (seed, counter). Counter-based, so draws can be split
// into independent streams and replayed exactly on any platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed) {}

  uint64_t at(uint64_t counter) const {
    uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint64_t next() { return at(counter_++); }

  // uniform draw in [0, n) by rejection, no modulo bias
  uint64_t below(uint64_t n) {
    uint64_t lim = ~uint64_t(0) - ~uint64_t(0) % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= lim);
    return v % n;
  }

  Rng split(uint64_t stream) const { return Rng(at(~stream)); }
  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(uint64_t n) : n_(n), w_((n + 63) / 64, 0) {}

  uint64_t size() const { return n_; }
  bool get(uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(uint64_t i, bool v = true) {
    uint64_t m = uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  uint64_t count() const {
    uint64_t c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  Bitset complement() const {
    Bitset r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }
  bool operator==(const Bitset&) const = default;

  const std::vector<uint64_t>& words() const { return w_; }
  std::vector<uint64_t>& words() { return w_; }
  void trim() {
    if (n_ & 63) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
  }

 private:
  uint64_t n_ = 0;
  std::vector<uint64_t> w_;
};

inline uint64_t fnv1a(const void* data, size_t len, uint64_t h = 1469598103934665603ULL) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}
inline uint64_t fnv1a(const std::string& s) { return fnv1a(s.data(), s.size()); }

std::string base64_encode(const std::vector<uint8_t>& data);
std::vector<uint8_t> base64_decode(const std::string& text);

// Process-wide caps, initialized once from GDL_CAP / GDL_SEED / GDL_THREADS.
struct Caps {
  uint64_t enumeration = uint64_t(1) << 21;
  uint64_t solver_rows = 4096;
  int threads = 0;  // 0 = hardware concurrency
  uint64_t seed = 0;
};
Caps& caps();

// Runs slice(lo, hi) over a partition of [0, n) on caps().threads workers.
// Slices are disjoint index ranges, so deterministic merges are the caller's
// choice of per-slice buffers.
void parallel_for(uint64_t n, const std::function<void(uint64_t, uint64_t)>& slice);

}  // namespace gdl
