#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "uvbraid/words.hpp"

namespace uvbraid {

/// One rewrite A -> B^{-1} where A B is a cyclic rotation of a defining
/// relator or of its inverse, followed by free reduction of the whole word.
struct RewriteRule {
  std::string relation; // id of the source relation, e.g. "MR2[i=1,t=1]"
  std::vector<UVLetter> pattern;
  std::vector<UVLetter> replacement;
};

/// Every distinct non-trivial rule derived from the defining relations.
std::vector<RewriteRule> rewrite_rules(const Params &params);

struct ProofStep {
  std::size_t rule = 0;     // index into rewrite_rules(params)
  std::size_t position = 0; // letter offset of the pattern in the current word
  std::string relation;
};

enum class Verdict { ProvenEqual, Unknown };

struct ProofResult {
  Verdict verdict = Verdict::Unknown;
  /// Steps taking free_reduce(u * v^{-1}) to the empty word.
  std::vector<ProofStep> path;
  std::size_t explored = 0;
  std::string reason; // why the search stopped when Unknown
};

struct OracleBudget {
  std::size_t max_depth = 8;
  std::size_t max_width = 200'000; // largest breadth-first level allowed
};

/// Breadth-first search for a derivation of u = v from the defining relations.
/// ProvenEqual is always backed by a replayable path; Unknown proves nothing.
ProofResult bfs_equal(const UVWord &u, const UVWord &v, const OracleBudget &budget = {});

/// Applies each step (pattern match, replacement, free reduction) to `start`.
/// Throws Error if a step's pattern does not occur at its position.
UVWord replay(const UVWord &start, std::span<const ProofStep> path);

} // namespace uvbraid
