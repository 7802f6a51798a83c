#include "uvbraid/json_io.hpp"

namespace uvbraid::json_io {

json perm_images(const Perm &p) { return p.images(); }

Perm perm_from_json(const json &j) {
  if (!j.is_array())
    throw Error("permutation must be a JSON array of images");
  return Perm::from_images(j.get<std::vector<int>>());
}

json delta_tokens(std::span<const Delta> letters) {
  json out = json::array();
  for (const auto &d : letters)
    out.push_back(to_token(d));
  return out;
}

json normal_form(const UVNormalForm &nf) {
  return {{"delta_nf", delta_tokens(nf.delta_nf.letters())},
          {"perm", nf.perm.to_cycles()},
          {"perm_images", perm_images(nf.perm)}};
}

json hom_spec(const HomSpec &h) {
  json rho = json::array();
  for (const auto &p : h.rho)
    rho.push_back(perm_images(p));
  json sigma = json::array();
  for (const auto &row : h.sigma) {
    json r = json::array();
    for (const auto &p : row)
      r.push_back(perm_images(p));
    sigma.push_back(std::move(r));
  }
  return {{"n", h.params.n}, {"c", h.params.c}, {"m", h.m}, {"rho", rho}, {"sigma", sigma}};
}

HomSpec hom_spec_from_json(const json &j) {
  try {
    HomSpec h{{j.at("n").get<int>(), j.at("c").get<int>()}, j.at("m").get<int>(), {}, {}};
    for (const auto &p : j.at("rho"))
      h.rho.push_back(perm_from_json(p));
    for (const auto &row : j.at("sigma")) {
      std::vector<Perm> r;
      for (const auto &p : row)
        r.push_back(perm_from_json(p));
      h.sigma.push_back(std::move(r));
    }
    h.validate();
    return h;
  } catch (const json::exception &e) {
    throw Error(std::string("malformed hom spec: ") + e.what());
  }
}

json abel_image(const AbelImage &a) {
  return {{"sigma_exponents", a.sigma_exponents}, {"rho_parity", a.rho_parity}};
}

json quotient_element(const FinQuotElem &x) {
  return {{"d", x.modulus}, {"vec", x.vec}, {"perm", x.perm.to_cycles()},
          {"perm_images", perm_images(x.perm)}};
}

json proof(const ProofResult &r) {
  json path = json::array();
  for (const auto &s : r.path)
    path.push_back({{"rule", s.rule}, {"position", s.position}, {"relation", s.relation}});
  json out = {{"verdict", r.verdict == Verdict::ProvenEqual ? "ProvenEqual" : "Unknown"},
              {"depth", r.path.size()},
              {"explored", r.explored},
              {"path", path}};
  if (!r.reason.empty())
    out["reason"] = r.reason;
  return out;
}

} // namespace uvbraid::json_io
