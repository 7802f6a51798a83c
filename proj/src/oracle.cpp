#include "uvbraid/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "uvbraid/relators.hpp"

namespace uvbraid {

namespace {

std::vector<UVLetter> invert(std::span<const UVLetter> w) {
  std::vector<UVLetter> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(it->inverse());
  return out;
}

// Letters packed into single chars so frontier words hash as std::string.
class Alphabet {
public:
  explicit Alphabet(const Params &params) : params_(params) {
    for (int i = 1; i <= params.n - 1; ++i) {
      letters_.push_back(UVLetter::rho(i));
      for (int t = 1; t <= params.c; ++t) {
        letters_.push_back(UVLetter::sigma(i, t, 1));
        letters_.push_back(UVLetter::sigma(i, t, -1));
      }
    }
    if (letters_.size() > 256)
      throw Error("alphabet too large for the equality oracle");
    for (std::size_t k = 0; k < letters_.size(); ++k)
      codes_[letters_[k]] = static_cast<unsigned char>(k);
    for (const auto &l : letters_)
      inverse_.push_back(static_cast<char>(codes_.at(l.inverse())));
  }

  std::string encode(std::span<const UVLetter> w) const {
    std::string out;
    for (const auto &l : w)
      out += static_cast<char>(codes_.at(l));
    return out;
  }

  UVWord decode(const std::string &s) const {
    UVWord out(params_);
    for (char ch : s)
      out.push_back(letters_[static_cast<unsigned char>(ch)]);
    return out;
  }

  char inverse(char ch) const { return inverse_[static_cast<unsigned char>(ch)]; }

  std::string free_reduce(const std::string &s) const {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
      if (!out.empty() && out.back() == inverse(ch))
        out.pop_back();
      else
        out += ch;
    }
    return out;
  }

private:
  Params params_;
  std::vector<UVLetter> letters_;
  std::map<UVLetter, unsigned char> codes_;
  std::vector<char> inverse_;
};

struct EncodedRule {
  std::string pattern;
  std::string replacement;
};

struct RuleTable {
  std::vector<RewriteRule> rules;
  std::vector<EncodedRule> encoded;
  std::vector<std::vector<std::size_t>> by_first; // first pattern letter -> rule ids
};

RuleTable build_rules(const Params &params, const Alphabet &alphabet) {
  RuleTable table;
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  for (const auto &rel : defining_relations(params)) {
    const auto relator = free_reduce(rel.relator());
    const std::vector<UVLetter> forward(relator.letters().begin(), relator.letters().end());
    for (const auto &base : {forward, invert(forward)}) {
      const auto len = base.size();
      for (std::size_t shift = 0; shift < len; ++shift) {
        std::vector<UVLetter> rotated(base.begin() + static_cast<std::ptrdiff_t>(shift), base.end());
        rotated.insert(rotated.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(shift));
        for (std::size_t split = 1; split <= len; ++split) {
          std::vector<UVLetter> pattern(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(split));
          const auto replacement =
              invert(std::span<const UVLetter>(rotated).subspan(split));
          auto key = std::make_pair(alphabet.encode(pattern), alphabet.encode(replacement));
          if (key.first == key.second || seen.contains(key))
            continue;
          seen.emplace(key, table.rules.size());
          table.rules.push_back({rel.id, pattern, replacement});
          table.encoded.push_back({key.first, key.second});
        }
      }
    }
  }
  table.by_first.resize(256);
  for (std::size_t r = 0; r < table.encoded.size(); ++r)
    table.by_first[static_cast<unsigned char>(table.encoded[r].pattern[0])].push_back(r);
  return table;
}

struct Node {
  std::string word;
  std::size_t parent;
  std::size_t rule;
  std::size_t position;
};

} // namespace

std::vector<RewriteRule> rewrite_rules(const Params &params) {
  params.validate();
  const Alphabet alphabet(params);
  return build_rules(params, alphabet).rules;
}

ProofResult bfs_equal(const UVWord &u, const UVWord &v, const OracleBudget &budget) {
  if (!(u.params() == v.params()))
    throw Error("cannot compare words with different (n, c)");
  const auto &params = u.params();
  ProofResult result;
  const auto start = free_reduce(u * v.inverse());
  if (start.empty()) {
    result.verdict = Verdict::ProvenEqual;
    return result;
  }
  const Alphabet alphabet(params);
  const auto table = build_rules(params, alphabet);

  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<Node> nodes{{alphabet.encode(start.letters()), none, none, 0}};
  std::unordered_map<std::string, std::size_t> visited{{nodes[0].word, 0}};
  std::vector<std::size_t> level{0};

  auto finish = [&](std::size_t goal) {
    std::vector<ProofStep> steps;
    for (auto k = goal; nodes[k].parent != none; k = nodes[k].parent)
      steps.push_back({nodes[k].rule, nodes[k].position, table.rules[nodes[k].rule].relation});
    std::reverse(steps.begin(), steps.end());
    result.verdict = Verdict::ProvenEqual;
    result.path = std::move(steps);
    result.explored = nodes.size();
  };

  for (std::size_t depth = 0; depth < budget.max_depth; ++depth) {
    std::vector<std::size_t> next;
    for (auto id : level) {
      const std::string word = nodes[id].word;
      for (std::size_t pos = 0; pos < word.size(); ++pos) {
        for (auto r : table.by_first[static_cast<unsigned char>(word[pos])]) {
          const auto &rule = table.encoded[r];
          if (word.compare(pos, rule.pattern.size(), rule.pattern) != 0)
            continue;
          auto candidate = alphabet.free_reduce(word.substr(0, pos) + rule.replacement +
                                                word.substr(pos + rule.pattern.size()));
          if (visited.contains(candidate))
            continue;
          visited.emplace(candidate, nodes.size());
          nodes.push_back({std::move(candidate), id, r, pos});
          if (nodes.back().word.empty()) {
            finish(nodes.size() - 1);
            return result;
          }
          next.push_back(nodes.size() - 1);
          if (next.size() > budget.max_width) {
            result.explored = nodes.size();
            result.reason = "width budget exceeded at depth " + std::to_string(depth + 1);
            return result;
          }
        }
      }
    }
    if (next.empty()) {
      result.explored = nodes.size();
      result.reason = "search space exhausted at depth " + std::to_string(depth + 1);
      return result;
    }
    level = std::move(next);
  }
  result.explored = nodes.size();
  result.reason = "depth budget exhausted";
  return result;
}

UVWord replay(const UVWord &start, std::span<const ProofStep> path) {
  const auto rules = rewrite_rules(start.params());
  auto word = free_reduce(start);
  for (const auto &step : path) {
    if (step.rule >= rules.size())
      throw Error("proof step references unknown rule " + std::to_string(step.rule));
    const auto &rule = rules[step.rule];
    const auto letters = word.letters();
    if (step.position + rule.pattern.size() > letters.size() ||
        !std::equal(rule.pattern.begin(), rule.pattern.end(),
                    letters.begin() + static_cast<std::ptrdiff_t>(step.position)))
      throw Error("proof step pattern does not occur at position " + std::to_string(step.position));
    std::vector<UVLetter> next(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(step.position));
    next.insert(next.end(), rule.replacement.begin(), rule.replacement.end());
    next.insert(next.end(), letters.begin() + static_cast<std::ptrdiff_t>(step.position + rule.pattern.size()),
                letters.end());
    word = free_reduce(UVWord(start.params(), std::move(next)));
  }
  return word;
}

} // namespace uvbraid
