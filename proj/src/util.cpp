#include "gdl/util.hpp"

#include <cstdlib>
#include <thread>

namespace gdl {

static const char* kB64 = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_encode(const std::vector<uint8_t>& data) {
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  size_t i = 0;
  while (i + 3 <= data.size()) {
    uint32_t v = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
    out += kB64[(v >> 18) & 63];
    out += kB64[(v >> 12) & 63];
    out += kB64[(v >> 6) & 63];
    out += kB64[v & 63];
    i += 3;
  }
  size_t rest = data.size() - i;
  if (rest == 1) {
    uint32_t v = data[i] << 16;
    out += kB64[(v >> 18) & 63];
    out += kB64[(v >> 12) & 63];
    out += "==";
  } else if (rest == 2) {
    uint32_t v = (data[i] << 16) | (data[i + 1] << 8);
    out += kB64[(v >> 18) & 63];
    out += kB64[(v >> 12) & 63];
    out += kB64[(v >> 6) & 63];
    out += '=';
  }
  return out;
}

std::vector<uint8_t> base64_decode(const std::string& text) {
  int8_t rev[256];
  memset(rev, -1, sizeof rev);
  for (int i = 0; i < 64; ++i) rev[uint8_t(kB64[i])] = int8_t(i);
  std::vector<uint8_t> out;
  uint32_t acc = 0;
  int bits = 0;
  for (char c : text) {
    if (c == '=' || c == '\n' || c == '\r') continue;
    int8_t v = rev[uint8_t(c)];
    if (v < 0) fail_usage("invalid base64 character");
    acc = (acc << 6) | uint32_t(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(uint8_t(acc >> bits));
    }
  }
  return out;
}

static Caps make_caps() {
  Caps c;
  if (const char* s = std::getenv("GDL_CAP")) c.enumeration = std::strtoull(s, nullptr, 10);
  if (const char* s = std::getenv("GDL_SEED")) c.seed = std::strtoull(s, nullptr, 10);
  if (const char* s = std::getenv("GDL_THREADS")) c.threads = int(std::strtol(s, nullptr, 10));
  return c;
}

Caps& caps() {
  static Caps c = make_caps();
  return c;
}

void parallel_for(uint64_t n, const std::function<void(uint64_t, uint64_t)>& slice) {
  int nthreads = caps().threads;
  if (nthreads <= 0) nthreads = int(std::thread::hardware_concurrency());
  if (nthreads < 1) nthreads = 1;
  if (n < 4096 || nthreads == 1) {
    slice(0, n);
    return;
  }
  uint64_t chunk = (n + nthreads - 1) / nthreads;
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) {
    uint64_t lo = uint64_t(t) * chunk;
    uint64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&slice, lo, hi] { slice(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace gdl
