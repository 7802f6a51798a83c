#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "uvbraid/perms.hpp"
#include "uvbraid/words.hpp"

namespace uvbraid {

using BigInt = boost::multiprecision::cpp_int;

/// Element (v, p) of (Z/d)^c x S_n with trivial action: (v, p)(w, q) = (v + w, pq).
/// Modulus 0 means Z^c (no reduction).
struct FinQuotElem {
  int modulus = 2;
  std::vector<long long> vec;
  Perm perm;

  static FinQuotElem identity(const Params &params, int modulus);
  FinQuotElem operator*(const FinQuotElem &other) const;
  bool is_identity() const;

  friend auto operator<=>(const FinQuotElem &, const FinQuotElem &) = default;
};

/// rho_i -> (0, s_i), sigma_{i,t}^{+-1} -> (+-e_t, s_i). Throws Error for d = 1 or d < 0.
FinQuotElem theta(const UVWord &w, int modulus);

struct SurjectivityCertificate {
  /// "closure": the generator images were multiplied out to the whole group.
  /// "structural": theta(sigma_{1,t}) theta(rho_1)^{-1} = (e_t, id) was checked for
  /// every t, which together with theta(rho_i) = (0, s_i) generates the group.
  std::string method;
  BigInt generated_order;
  bool surjective = false;
};

struct QuotientOrder {
  BigInt order;       // d^c * n!
  BigInt n_factorial;
  SurjectivityCertificate certificate;
};

/// Closure is used while d^c * n! <= closure_limit.
QuotientOrder quotient_order(const Params &params, int modulus,
                             std::uint64_t closure_limit = 200'000);

} // namespace uvbraid
