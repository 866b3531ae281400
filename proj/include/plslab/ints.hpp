#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace plslab {

// All weights and costs are exact, unbounded-magnitude integers.  The
// constructions multiply instance weights by structural factors (7W, 2W|X|,
// ...), so nothing in the library may silently wrap.
using Weight = boost::multiprecision::cpp_int;
using Cost = boost::multiprecision::cpp_int;

inline std::string to_string(const Cost& c) { return c.str(); }

// FNV-1a 64-bit over a byte string.  Used for instance/report digests; stable
// across platforms and runs, unlike std::hash.
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string digest_hex(const std::string& bytes) {
  static const char* hexd = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hexd[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace plslab
