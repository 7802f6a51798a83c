#include "uvbraid/quotients.hpp"

#include <deque>
#include <set>

namespace uvbraid {

namespace {

void check_modulus(int modulus) {
  if (modulus < 0 || modulus == 1)
    throw Error("modulus d must be 0 (meaning Z) or >= 2");
}

long long reduce(long long x, int modulus) {
  if (modulus == 0)
    return x;
  return ((x % modulus) + modulus) % modulus;
}

FinQuotElem generator_image(const UVLetter &l, const Params &params, int modulus) {
  auto out = FinQuotElem::identity(params, modulus);
  out.perm = Perm::adjacent(params.n, l.i);
  if (!l.is_rho())
    out.vec[static_cast<std::size_t>(l.t - 1)] = reduce(l.sign, modulus);
  return out;
}

} // namespace

FinQuotElem FinQuotElem::identity(const Params &params, int modulus) {
  check_modulus(modulus);
  return {modulus, std::vector<long long>(static_cast<std::size_t>(params.c), 0),
          Perm::identity(params.n)};
}

FinQuotElem FinQuotElem::operator*(const FinQuotElem &other) const {
  if (modulus != other.modulus || vec.size() != other.vec.size())
    throw Error("quotient elements live in different groups");
  FinQuotElem out{modulus, vec, perm * other.perm};
  for (std::size_t k = 0; k < vec.size(); ++k)
    out.vec[k] = reduce(vec[k] + other.vec[k], modulus);
  return out;
}

bool FinQuotElem::is_identity() const {
  for (auto x : vec)
    if (x != 0)
      return false;
  return perm.is_identity();
}

FinQuotElem theta(const UVWord &w, int modulus) {
  if (w.params().n < 2)
    throw Error("theta needs n >= 2");
  auto out = FinQuotElem::identity(w.params(), modulus);
  for (const auto &l : w.letters())
    out = out * generator_image(l, w.params(), modulus);
  return out;
}

QuotientOrder quotient_order(const Params &params, int modulus, std::uint64_t closure_limit) {
  params.validate();
  if (modulus < 2)
    throw Error("quotient order needs a finite modulus d >= 2");
  QuotientOrder out;
  out.n_factorial = 1;
  for (int k = 2; k <= params.n; ++k)
    out.n_factorial *= k;
  BigInt vectors = 1;
  for (int k = 0; k < params.c; ++k)
    vectors *= modulus;
  out.order = vectors * out.n_factorial;

  // Generators of the image: theta of every letter of UV_n(c).
  std::vector<FinQuotElem> gens;
  for (int i = 1; i <= params.n - 1; ++i) {
    gens.push_back(generator_image(UVLetter::rho(i), params, modulus));
    for (int t = 1; t <= params.c; ++t)
      gens.push_back(generator_image(UVLetter::sigma(i, t), params, modulus));
  }
  auto &cert = out.certificate;

  if (params.n < 2) {
    // UV_1(c) is trivial; its image is the trivial subgroup of (Z/d)^c.
    cert.method = "closure";
    cert.generated_order = 1;
    cert.surjective = out.order == 1;
    return out;
  }

  if (out.order <= closure_limit) {
    cert.method = "closure";
    std::set<FinQuotElem> seen{FinQuotElem::identity(params, modulus)};
    std::deque<FinQuotElem> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (const auto &g : gens) {
        auto y = x * g;
        if (seen.insert(y).second)
          queue.push_back(std::move(y));
      }
    }
    cert.generated_order = seen.size();
    cert.surjective = cert.generated_order == out.order;
    return out;
  }

  cert.method = "structural";
  bool ok = true;
  const auto rho1 = generator_image(UVLetter::rho(1), params, modulus);
  const FinQuotElem rho1_inv{modulus, rho1.vec, rho1.perm.inverse()};
  for (int t = 1; t <= params.c; ++t) {
    const auto e = generator_image(UVLetter::sigma(1, t), params, modulus) * rho1_inv;
    auto expected = FinQuotElem::identity(params, modulus);
    expected.vec[static_cast<std::size_t>(t - 1)] = 1;
    ok = ok && e == expected;
  }
  // The rho images are the adjacent transpositions, which generate S_n.
  for (int i = 1; i <= params.n - 1; ++i) {
    const auto r = generator_image(UVLetter::rho(i), params, modulus);
    ok = ok && r.perm == Perm::adjacent(params.n, i) &&
         r.vec == std::vector<long long>(static_cast<std::size_t>(params.c), 0);
  }
  cert.surjective = ok;
  cert.generated_order = ok ? out.order : BigInt(0);
  return out;
}

} // namespace uvbraid
