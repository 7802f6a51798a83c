#include "uvbraid/perms.hpp"

#include <algorithm>
#include <numeric>

namespace uvbraid {

Perm Perm::identity(int n) {
  if (n < 1)
    throw Error("permutation degree must be >= 1");
  Perm p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

Perm Perm::transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n)
    throw Error("transposition point out of range");
  Perm p = identity(n);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Perm Perm::from_images(const std::vector<int> &images) {
  const int n = static_cast<int>(images.size());
  if (n < 1)
    throw Error("permutation must act on at least one point");
  std::vector<bool> seen(n, false);
  Perm p;
  p.images_.reserve(n);
  for (int x : images) {
    if (x < 1 || x > n || seen[x - 1])
      throw Error("image array is not a bijection of {1.." + std::to_string(n) + "}");
    seen[x - 1] = true;
    p.images_.push_back(x - 1);
  }
  return p;
}

std::vector<int> Perm::images() const {
  std::vector<int> out(images_.begin(), images_.end());
  for (auto &x : out)
    ++x;
  return out;
}

bool Perm::is_identity() const noexcept {
  for (int k = 0; k < size(); ++k)
    if (images_[k] != k)
      return false;
  return true;
}

Perm Perm::inverse() const {
  Perm out = *this;
  for (int k = 0; k < size(); ++k)
    out.images_[images_[k]] = k;
  return out;
}

std::string Perm::to_cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (done[start] || images_[start] == start)
      continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first)
        out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm compose(const Perm &a, const Perm &b) {
  if (a.size() != b.size())
    throw Error("cannot compose permutations of degree " + std::to_string(a.size()) + " and " +
                std::to_string(b.size()));
  Perm out = a;
  for (int k = 0; k < a.size(); ++k)
    out.images_[k] = a.images_[b.images_[k]];
  return out;
}

namespace {

// Right-multiplies p by s_i in place: p o s_i swaps the images of i and i+1.
void times_adjacent(std::vector<int> &images, int i) { std::swap(images[i - 1], images[i]); }

Perm evaluate_adjacent(const UVWord &w, bool include_sigma) {
  std::vector<int> images(w.params().n);
  std::iota(images.begin(), images.end(), 1);
  for (const auto &l : w.letters())
    if (l.is_rho() || include_sigma)
      times_adjacent(images, l.i);
  return Perm::from_images(images);
}

} // namespace

Perm pi_K(const UVWord &w) { return evaluate_adjacent(w, false); }

Perm pi_P(const UVWord &w) { return evaluate_adjacent(w, true); }

UVWord iota(const Perm &p, const Params &params) {
  if (p.size() != params.n)
    throw Error("permutation degree does not match n");
  // Sort q = p by right-multiplying with s_k at descents: p o s_k1 o ... o s_km = id,
  // so p = s_km o ... o s_k1.
  auto images = p.images();
  std::vector<int> steps;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int k = 1; k < params.n; ++k) {
      if (images[k - 1] > images[k]) {
        times_adjacent(images, k);
        steps.push_back(k);
        swapped = true;
      }
    }
  }
  UVWord w(params);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    w.push_back(UVLetter::rho(*it));
  return w;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

} // namespace uvbraid
