#pragma once

#include "uvbraid/perms.hpp"
#include "uvbraid/raag.hpp"
#include "uvbraid/words.hpp"

namespace uvbraid {

/// Element of KUV_n(c) x| S_n: the word equals expand(delta_nf) * iota(perm).
struct UVNormalForm {
  DeltaWord delta_nf;
  Perm perm;

  bool is_identity() const { return delta_nf.empty() && perm.is_identity(); }
  friend bool operator==(const UVNormalForm &, const UVNormalForm &) = default;
};

/// Rewrites left to right, tracking the pi_K image p of the consumed prefix: a
/// letter sigma_{i,t}^e emits delta_{p(i),p(i+1),t}^e. The emitted word is put
/// into RAAG normal form. For n = 1 the result is always the identity.
UVNormalForm to_normal_form(const UVWord &w);

/// Decides w = 1 in UV_n(c).
bool is_trivial(const UVWord &w);

/// Decides u = v in UV_n(c). Throws Error if (n, c) differ.
bool are_equal(const UVWord &u, const UVWord &v);

/// The explicit conjugate of sigma_{i,t} by rho letters representing d.
UVWord delta_to_uvword(const Delta &d, const Params &params);

/// Letterwise delta_to_uvword.
UVWord expand(const DeltaWord &w);

/// delta_{p(i),p(j),t} with the sign of d.
Delta conjugate_action(const Perm &p, const Delta &d);

/// True iff pi_P(w) is the identity.
bool is_pure(const UVWord &w);

} // namespace uvbraid
