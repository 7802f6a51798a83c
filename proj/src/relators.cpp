#include "uvbraid/relators.hpp"

#include <cstdlib>

namespace uvbraid {

namespace {

UVWord word_of(const Params &params, std::initializer_list<UVLetter> letters) {
  return UVWord(params, std::vector<UVLetter>(letters));
}

std::string tag(const std::string &family, std::initializer_list<std::pair<const char *, int>> kv) {
  std::string out = family + "[";
  bool first = true;
  for (const auto &[k, v] : kv) {
    if (!first)
      out += ',';
    out += std::string(k) + "=" + std::to_string(v);
    first = false;
  }
  return out + "]";
}

} // namespace

std::vector<Relation> defining_relations(const Params &params) {
  params.validate();
  const int n = params.n;
  const int c = params.c;
  using L = UVLetter;
  std::vector<Relation> out;

  for (int i = 1; i <= n - 2; ++i)
    out.push_back({"PR1", tag("PR1", {{"i", i}}),
                   word_of(params, {L::rho(i), L::rho(i + 1), L::rho(i)}),
                   word_of(params, {L::rho(i + 1), L::rho(i), L::rho(i + 1)})});

  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2)
        out.push_back({"PR2", tag("PR2", {{"i", i}, {"j", j}}),
                       word_of(params, {L::rho(i), L::rho(j)}),
                       word_of(params, {L::rho(j), L::rho(i)})});

  for (int i = 1; i <= n - 1; ++i)
    out.push_back({"PR3", tag("PR3", {{"i", i}}), word_of(params, {L::rho(i), L::rho(i)}),
                   UVWord(params)});

  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2)
        for (int t = 1; t <= c; ++t)
          for (int l = 1; l <= c; ++l)
            out.push_back({"CR", tag("CR", {{"i", i}, {"t", t}, {"j", j}, {"l", l}}),
                           word_of(params, {L::sigma(i, t), L::sigma(j, l)}),
                           word_of(params, {L::sigma(j, l), L::sigma(i, t)})});

  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2)
        for (int t = 1; t <= c; ++t)
          out.push_back({"MR1", tag("MR1", {{"i", i}, {"t", t}, {"j", j}}),
                         word_of(params, {L::sigma(i, t), L::rho(j)}),
                         word_of(params, {L::rho(j), L::sigma(i, t)})});

  for (int i = 1; i <= n - 2; ++i)
    for (int t = 1; t <= c; ++t)
      out.push_back({"MR2", tag("MR2", {{"i", i}, {"t", t}}),
                     word_of(params, {L::rho(i), L::rho(i + 1), L::sigma(i, t)}),
                     word_of(params, {L::sigma(i + 1, t), L::rho(i), L::rho(i + 1)})});
  return out;
}

} // namespace uvbraid
