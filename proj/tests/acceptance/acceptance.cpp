#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include "uvbraid/verify.hpp"

// Usage: uvbraid_acceptance [--expect-fail ID[,ID...]]
// Without the flag any FAIL gives exit 1. With it, exit 0 requires the failing
// set to equal the listed ids exactly.
int main(int argc, char **argv) {
  std::set<std::string> expected;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--expect-fail" && k + 1 < argc) {
      std::stringstream ids(argv[++k]);
      for (std::string id; std::getline(ids, id, ',');)
        expected.insert(id);
    } else {
      std::fprintf(stderr, "usage: %s [--expect-fail ID[,ID...]]\n", argv[0]);
      return 2;
    }
  }

  std::set<std::string> failed;
  const auto results = uvbraid::verify_claims({}, [&](const uvbraid::ClaimResult &r) {
    std::printf("[%s] criterion %-2s %s (%.2fs)\n        %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                r.claim.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed)
      failed.insert(r.id);
  });
  std::printf("%zu criteria, %zu passed, %zu failed\n", results.size(), results.size() - failed.size(),
              failed.size());
  if (expected.empty())
    return failed.empty() ? 0 : 1;
  for (const auto &id : expected)
    if (!failed.contains(id))
      std::printf("criterion %s was expected to fail but passed\n", id.c_str());
  for (const auto &id : failed)
    if (!expected.contains(id))
      std::printf("criterion %s failed unexpectedly\n", id.c_str());
  return failed == expected ? 0 : 1;
}
