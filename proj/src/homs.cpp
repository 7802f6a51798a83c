#include "uvbraid/homs.hpp"

#include <algorithm>
#include <sstream>

namespace uvbraid {

void EpsTuple::validate() const {
  if (eps.size() < 2)
    throw Error("an eps tuple needs c + 1 >= 2 entries");
  for (int e : eps)
    if (e != 0 && e != 1)
      throw Error("eps entries must be 0 or 1");
}

EpsTuple EpsTuple::parse(const std::string &text) {
  EpsTuple out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "0" || item == "1")
      out.eps.push_back(item[0] - '0');
    else
      throw Error("malformed eps entry '" + item + "'");
  }
  out.validate();
  return out;
}

std::string EpsTuple::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < eps.size(); ++k) {
    if (k)
      out += ',';
    out += std::to_string(eps[k]);
  }
  return out;
}

void HomSpec::validate() const {
  params.validate();
  if (m < 1)
    throw Error("target degree m must be >= 1");
  const auto gens = static_cast<std::size_t>(params.n - 1);
  if (rho.size() != gens || sigma.size() != gens)
    throw Error("hom spec needs n - 1 rho images and n - 1 sigma rows");
  for (const auto &p : rho)
    if (p.size() != m)
      throw Error("rho image not in S_" + std::to_string(m));
  for (const auto &row : sigma) {
    if (row.size() != static_cast<std::size_t>(params.c))
      throw Error("each sigma row needs c images");
    for (const auto &p : row)
      if (p.size() != m)
        throw Error("sigma image not in S_" + std::to_string(m));
  }
}

Perm evaluate(const HomSpec &h, const UVWord &w) {
  auto out = Perm::identity(h.m);
  for (const auto &l : w.letters()) {
    const auto &g = h.image(l);
    out = out * (l.sign > 0 ? g : g.inverse());
  }
  return out;
}

HomCheck verify_homspec(const HomSpec &h, const Params &params) {
  if (!(h.params == params))
    throw Error("hom spec was built for a different (n, c)");
  h.validate();
  for (const auto &rel : defining_relations(params))
    if (!evaluate(h, rel.relator()).is_identity())
      return {false, rel.id};
  return {true, std::nullopt};
}

bool has_abelian_image(const HomSpec &h) {
  std::vector<Perm> gens(h.rho.begin(), h.rho.end());
  for (const auto &row : h.sigma)
    gens.insert(gens.end(), row.begin(), row.end());
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (gens[a] * gens[b] != gens[b] * gens[a])
        return false;
  return true;
}

HomSpec phi_eps_spec(const EpsTuple &e, int n) {
  e.validate();
  const int c = e.c();
  HomSpec h{{n, c}, n, {}, {}};
  h.params.validate();
  const auto id = Perm::identity(n);
  for (int i = 1; i <= n - 1; ++i) {
    const auto s = Perm::adjacent(n, i);
    h.rho.push_back(e.eps[c] ? s : id);
    std::vector<Perm> row;
    for (int t = 1; t <= c; ++t)
      row.push_back(e.eps[t - 1] ? s : id);
    h.sigma.push_back(std::move(row));
  }
  return h;
}

Perm phi_eps(const EpsTuple &e, const UVWord &w) {
  if (e.c() != w.params().c)
    throw Error("eps tuple length must be c + 1");
  return evaluate(phi_eps_spec(e, w.params().n), w);
}

bool is_admissible(const EpsTuple &e, int n) {
  if (n < 3)
    throw Error("admissibility is only defined for n >= 3");
  const auto h = phi_eps_spec(e, n);
  return verify_homspec(h, h.params).ok && !has_abelian_image(h);
}

bool AbelImage::is_zero() const {
  return rho_parity == 0 &&
         std::all_of(sigma_exponents.begin(), sigma_exponents.end(), [](long long x) { return x == 0; });
}

AbelImage abelianize(const UVWord &w) {
  AbelImage out;
  out.sigma_exponents.assign(static_cast<std::size_t>(w.params().c), 0);
  for (const auto &l : w.letters()) {
    if (l.is_rho())
      out.rho_parity ^= 1;
    else
      out.sigma_exponents[static_cast<std::size_t>(l.t - 1)] += l.sign;
  }
  return out;
}

int chi_t(int t, const UVWord &w) {
  if (t < 1 || t > w.params().c)
    throw Error("colour t = " + std::to_string(t) + " outside 1.." + std::to_string(w.params().c));
  const auto e = abelianize(w).sigma_exponents[static_cast<std::size_t>(t - 1)];
  return static_cast<int>(((e % 2) + 2) % 2);
}

namespace {

struct GenRef {
  std::size_t gen;
  bool inverted;
};

class HomEnumerator {
public:
  HomEnumerator(const Params &params, int m, const SearchBudget &budget)
      : params_(params), m_(m), budget_(budget), elements_(all_perms(m)) {
    const int rows = params.n - 1;
    gen_count_ = static_cast<std::size_t>(rows) * static_cast<std::size_t>(params.c + 1);
    // Generator order: rho_1..rho_{n-1}, then sigma_{1,1..c}, sigma_{2,1..c}, ...
    auto position = [&](const UVLetter &l) -> std::size_t {
      if (l.is_rho())
        return static_cast<std::size_t>(l.i - 1);
      return static_cast<std::size_t>(rows) +
             static_cast<std::size_t>((l.i - 1) * params.c + (l.t - 1));
    };
    checks_.resize(gen_count_);
    for (const auto &rel : defining_relations(params)) {
      std::vector<GenRef> word;
      std::size_t last = 0;
      const auto relator = rel.relator();
      for (const auto &l : relator.letters()) {
        word.push_back({position(l), l.sign < 0});
        last = std::max(last, position(l));
      }
      checks_[last].push_back(std::move(word));
    }
    for (const auto &p : elements_)
      inverses_.push_back(index_of(p.inverse()));
  }

  EnumerationResult run() {
    start_ = std::chrono::steady_clock::now();
    assignment_.assign(gen_count_, 0);
    search(0);
    std::sort(found_.begin(), found_.end());
    return {std::move(found_), nodes_};
  }

private:
  std::size_t index_of(const Perm &p) const {
    return static_cast<std::size_t>(std::lower_bound(elements_.begin(), elements_.end(), p) -
                                    elements_.begin());
  }

  bool consistent(std::size_t depth) const {
    for (const auto &word : checks_[depth]) {
      auto acc = Perm::identity(m_);
      for (const auto &ref : word) {
        const auto idx = assignment_[ref.gen];
        acc = acc * elements_[ref.inverted ? inverses_[idx] : idx];
      }
      if (!acc.is_identity())
        return false;
    }
    return true;
  }

  void tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes)
      fail("node budget of " + std::to_string(budget_.max_nodes) + " exceeded");
    if ((nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() - start_ > budget_.max_time)
      fail("time budget exceeded");
  }

  [[noreturn]] void fail(const std::string &why) {
    std::sort(found_.begin(), found_.end());
    throw BudgetExceeded("hom enumeration: " + why + " after " + std::to_string(found_.size()) +
                             " homomorphisms",
                         found_, nodes_);
  }

  void search(std::size_t depth) {
    if (depth == gen_count_) {
      found_.push_back(to_spec());
      return;
    }
    for (std::size_t e = 0; e < elements_.size(); ++e) {
      tick();
      assignment_[depth] = e;
      if (consistent(depth))
        search(depth + 1);
    }
  }

  HomSpec to_spec() const {
    HomSpec h{params_, m_, {}, {}};
    const auto rows = static_cast<std::size_t>(params_.n - 1);
    const auto c = static_cast<std::size_t>(params_.c);
    for (std::size_t i = 0; i < rows; ++i)
      h.rho.push_back(elements_[assignment_[i]]);
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<Perm> row;
      for (std::size_t t = 0; t < c; ++t)
        row.push_back(elements_[assignment_[rows + i * c + t]]);
      h.sigma.push_back(std::move(row));
    }
    return h;
  }

  Params params_;
  int m_;
  SearchBudget budget_;
  std::vector<Perm> elements_; // sorted
  std::vector<std::size_t> inverses_;
  std::size_t gen_count_ = 0;
  std::vector<std::vector<std::vector<GenRef>>> checks_;
  std::vector<std::size_t> assignment_;
  std::vector<HomSpec> found_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

} // namespace

EnumerationResult enumerate_homs(const Params &params, int m, const SearchBudget &budget) {
  params.validate();
  if (m < 1)
    throw Error("target degree m must be >= 1");
  return HomEnumerator(params, m, budget).run();
}

} // namespace uvbraid
