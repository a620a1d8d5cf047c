#pragma once

#include <cstdint>
#include <string_view>

namespace mfblocks {

// Counter-based Gaussian stream: every variate is a pure function of
// (seed, stream, trial, index), so sampling is order-independent,
// parallel-safe, and bit-reproducible for a fixed build.
namespace rng {

uint64_t fnv1a(std::string_view s);

uint64_t splitmix64(uint64_t x);

// Key for one matrix entry; distinct (stream, trial, index) never collide in
// practice (full 64-bit avalanche mixing).
uint64_t entry_key(uint64_t seed, uint64_t stream, uint64_t trial, uint64_t index);

// Uniform in (0,1), never returning 0 or 1.
double uniform01(uint64_t bits);

// Inverse of the standard normal CDF (Wichura's AS241, double precision).
double inverse_normal_cdf(double p);

// Two independent standard normals derived from one entry key.
struct NormalPair {
    double z1, z2;
};
NormalPair normals(uint64_t key);

} // namespace rng

} // namespace mfblocks
