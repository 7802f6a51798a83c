#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "uvbraid/words.hpp"

namespace uvbraid {

/// Uniform random word of exactly `length` letters over rho_i, sigma_{i,t}^{+-1}.
UVWord random_word(const Params &params, std::size_t length, std::mt19937_64 &rng);

struct ClaimResult {
  std::string id;
  std::string claim;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
};

/// Runs the full claim-by-claim check suite, reporting each result as it finishes.
std::vector<ClaimResult> verify_claims(const VerifyOptions &options,
                                       const std::function<void(const ClaimResult &)> &on_result = {});

} // namespace uvbraid
