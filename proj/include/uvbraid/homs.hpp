#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uvbraid/perms.hpp"
#include "uvbraid/relators.hpp"
#include "uvbraid/words.hpp"

namespace uvbraid {

/// Bits (e_1, ..., e_c, e_{c+1}) selecting phi_e.
struct EpsTuple {
  std::vector<int> eps;

  int c() const noexcept { return static_cast<int>(eps.size()) - 1; }
  /// Throws Error unless every entry is 0 or 1 and there are at least two.
  void validate() const;
  /// "1,0,1" style.
  static EpsTuple parse(const std::string &text);
  std::string to_string() const;

  friend bool operator==(const EpsTuple &, const EpsTuple &) = default;
};

/// Images of the generators of UV_n(c) in S_m. `sigma[i-1][t-1]`, `rho[i-1]`.
struct HomSpec {
  Params params;
  int m = 2;
  std::vector<Perm> rho;
  std::vector<std::vector<Perm>> sigma;

  /// Throws Error if the shape does not match params or an image is not in S_m.
  void validate() const;
  const Perm &image(const UVLetter &l) const {
    return l.is_rho() ? rho[l.i - 1] : sigma[l.i - 1][l.t - 1];
  }

  friend auto operator<=>(const HomSpec &a, const HomSpec &b) {
    if (auto cmp = a.rho <=> b.rho; cmp != 0)
      return cmp;
    return a.sigma <=> b.sigma;
  }
  friend bool operator==(const HomSpec &a, const HomSpec &b) {
    return a.params == b.params && a.m == b.m && a.rho == b.rho && a.sigma == b.sigma;
  }
};

/// Product of the generator images in word order.
Perm evaluate(const HomSpec &h, const UVWord &w);

struct HomCheck {
  bool ok = true;
  std::optional<std::string> failing_relation;
};

/// Checks every defining relation instance under h, in defining_relations order.
HomCheck verify_homspec(const HomSpec &h, const Params &params);

/// True iff all generator images commute pairwise.
bool has_abelian_image(const HomSpec &h);

/// sigma_{i,t} -> (i i+1)^{e_t}, rho_i -> (i i+1)^{e_{c+1}} in S_n; c is taken from e.
HomSpec phi_eps_spec(const EpsTuple &e, int n);
Perm phi_eps(const EpsTuple &e, const UVWord &w);

/// phi_e is a homomorphism with non-abelian image. Decided by checking the
/// relations and commutation of images. Throws Error for n < 3.
bool is_admissible(const EpsTuple &e, int n);

/// Image in Z^c (+) Z/2.
struct AbelImage {
  std::vector<long long> sigma_exponents;
  int rho_parity = 0;

  bool is_zero() const;
  friend bool operator==(const AbelImage &, const AbelImage &) = default;
};

AbelImage abelianize(const UVWord &w);
/// Parity of the colour-t exponent sum. Throws Error if t is outside 1..c.
int chi_t(int t, const UVWord &w);

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  std::chrono::milliseconds max_time{std::chrono::minutes(5)};
};

class BudgetExceeded : public Error {
public:
  BudgetExceeded(std::string what, std::vector<HomSpec> partial, std::uint64_t nodes)
      : Error(std::move(what)), partial_(std::move(partial)), nodes_(nodes) {}
  const std::vector<HomSpec> &partial() const noexcept { return partial_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

private:
  std::vector<HomSpec> partial_;
  std::uint64_t nodes_;
};

struct EnumerationResult {
  std::vector<HomSpec> homs; // sorted by (rho images, sigma images)
  std::uint64_t nodes = 0;
};

/// All homomorphisms UV_n(c) -> S_m, by backtracking: rho images first, then
/// sigma images column by column, pruning each relation as soon as its
/// generators are assigned. Throws BudgetExceeded with the partial list.
EnumerationResult enumerate_homs(const Params &params, int m, const SearchBudget &budget = {});

} // namespace uvbraid
