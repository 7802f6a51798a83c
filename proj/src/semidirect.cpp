#include "uvbraid/semidirect.hpp"

#include <algorithm>

namespace uvbraid {

UVNormalForm to_normal_form(const UVWord &w) {
  const auto &params = w.params();
  auto prefix = Perm::identity(params.n);
  std::vector<Delta> emitted;
  for (const auto &l : w.letters()) {
    if (l.is_rho())
      prefix = prefix * Perm::adjacent(params.n, l.i);
    else
      emitted.push_back({prefix.image(l.i), prefix.image(l.i + 1), l.t, l.sign});
  }
  return {DeltaWord(params, normal_form_letters(emitted)), prefix};
}

bool is_trivial(const UVWord &w) { return to_normal_form(w).is_identity(); }

bool are_equal(const UVWord &u, const UVWord &v) {
  if (!(u.params() == v.params()))
    throw Error("cannot compare words with different (n, c)");
  return to_normal_form(u) == to_normal_form(v);
}

UVWord delta_to_uvword(const Delta &d, const Params &params) {
  check_delta(d, params);
  const int lo = std::min(d.i, d.j);
  const int hi = std::max(d.i, d.j);
  std::vector<UVLetter> letters;
  for (int k = hi - 1; k > lo; --k)
    letters.push_back(UVLetter::rho(k));
  const bool reversed = d.i > d.j;
  if (reversed)
    letters.push_back(UVLetter::rho(lo));
  letters.push_back(UVLetter::sigma(lo, d.t, d.sign));
  if (reversed)
    letters.push_back(UVLetter::rho(lo));
  for (int k = lo + 1; k < hi; ++k)
    letters.push_back(UVLetter::rho(k));
  return UVWord(params, std::move(letters));
}

UVWord expand(const DeltaWord &w) {
  UVWord out(w.params());
  for (const auto &d : w.letters())
    out.append(delta_to_uvword(d, w.params()));
  return out;
}

Delta conjugate_action(const Perm &p, const Delta &d) {
  if (d.i > p.size() || d.j > p.size())
    throw Error("delta index exceeds permutation degree");
  return {p.image(d.i), p.image(d.j), d.t, d.sign};
}

bool is_pure(const UVWord &w) { return pi_P(w).is_identity(); }

} // namespace uvbraid
