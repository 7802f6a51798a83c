#pragma once

#include <compare>
#include <string>
#include <vector>

#include "uvbraid/words.hpp"

namespace uvbraid {

/// A permutation of {1..n}. Points are 1-based in the public interface.
///
/// Products follow function composition: compose(a, b)(x) = a(b(x)).
/// A word g_1 g_2 ... g_k therefore evaluates to g_1 o g_2 o ... o g_k, the
/// product read in word order, with g_k the first to move a point.
class Perm {
public:
  Perm() = default;

  static Perm identity(int n);
  /// The transposition (a b) in S_n.
  static Perm transposition(int n, int a, int b);
  /// s_i = (i i+1).
  static Perm adjacent(int n, int i) { return transposition(n, i, i + 1); }
  /// `images[k-1]` is the image of point k. Throws Error unless a bijection of {1..n}.
  static Perm from_images(const std::vector<int> &images);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  /// Image of the 1-based point x.
  int image(int x) const { return images_[x - 1] + 1; }
  std::vector<int> images() const;
  bool is_identity() const noexcept;
  Perm inverse() const;

  /// Cycle notation, e.g. "(1 2 3)(4 5)"; the identity prints as "()".
  std::string to_cycles() const;

  friend auto operator<=>(const Perm &, const Perm &) = default;
  friend Perm compose(const Perm &a, const Perm &b);

private:
  std::vector<int> images_; // 0-based
};

/// (a.b)(x) = a(b(x)). Throws Error on mismatched degree.
Perm compose(const Perm &a, const Perm &b);
inline Perm operator*(const Perm &a, const Perm &b) { return compose(a, b); }

/// Image under the map killing every sigma and sending rho_i to s_i.
Perm pi_K(const UVWord &w);
/// Image under the map sending both sigma_{i,t} and rho_i to s_i.
Perm pi_P(const UVWord &w);
/// Rho-only word with pi_K(iota(p)) == p, built from a bubble-sort reduced word.
UVWord iota(const Perm &p, const Params &params);

/// Every element of S_n in lexicographic order of image arrays.
std::vector<Perm> all_perms(int n);

} // namespace uvbraid
