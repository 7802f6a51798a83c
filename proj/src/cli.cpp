#include "uvbraid/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "uvbraid/homs.hpp"
#include "uvbraid/json_io.hpp"
#include "uvbraid/oracle.hpp"
#include "uvbraid/perms.hpp"
#include "uvbraid/quotients.hpp"
#include "uvbraid/raag.hpp"
#include "uvbraid/semidirect.hpp"
#include "uvbraid/verify.hpp"

namespace uvbraid {

namespace {

using json_io::json;

struct Config {
  int n = 3;
  int c = 1;
  int d = 2;
  int t = 1;
  int m = 3;
  std::string eps;
  std::optional<std::string> word;
  std::vector<std::string> words;
  std::size_t depth = 8;
  std::size_t width = 200'000;
  std::uint64_t max_nodes = 50'000'000;
  double max_seconds = 300;
  std::string file = "-";
  std::string format = "json";
  std::uint64_t seed = VerifyOptions{}.seed;

  Params params() const {
    Params p{n, c};
    p.validate();
    return p;
  }
};

const std::vector<std::string> &command_names() {
  static const std::vector<std::string> names = {
      "nf",  "eq",    "trivial",    "pure",           "perm",         "graph", "vcd",
      "howson", "lerf-witness", "center-witness", "hom", "ab",  "chi",   "quot", "oracle",
      "verify-paper"};
  return names;
}

json header(const std::string &command, int n, int c) {
  return {{"schema", 1}, {"command", command}, {"n", n}, {"c", c}};
}

json big(const BigInt &x) {
  if (x <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(x);
  return x.str();
}

json triple(const std::array<Delta, 3> &p) {
  return json_io::delta_tokens(std::span<const Delta>(p.data(), p.size()));
}

json quad(const std::array<Delta, 4> &q) {
  return json_io::delta_tokens(std::span<const Delta>(q.data(), q.size()));
}

void emit(const json &j, const Config &cfg, std::ostream &out) {
  if (cfg.format == "json") {
    out << j.dump() << '\n';
    return;
  }
  for (const auto &[key, value] : j.items()) {
    if (key == "schema")
      continue;
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

UVWord input_word(const Config &cfg) { return parse_word(cfg.word.value_or(""), cfg.params()); }

std::string read_source(const std::string &file) {
  if (file == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(file);
  if (!in)
    throw Error("cannot open '" + file + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::pair<UVWord, UVWord> word_pair(const Config &cfg) {
  if (cfg.words.size() != 2)
    throw Error("expected exactly two words");
  return {parse_word(cfg.words[0], cfg.params()), parse_word(cfg.words[1], cfg.params())};
}

int verify_paper(const Config &cfg, std::ostream &out) {
  json claims = json::array();
  bool all = true;
  const bool text = cfg.format != "json";
  verify_claims({cfg.seed}, [&](const ClaimResult &r) {
    all = all && r.passed;
    claims.push_back({{"id", r.id}, {"claim", r.claim}, {"passed", r.passed}, {"detail", r.detail},
                      {"seconds", r.seconds}});
    if (text)
      out << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.claim << " -- " << r.detail
          << std::endl;
  });
  if (!text)
    out << json{{"schema", 1}, {"command", "verify-paper"}, {"seed", cfg.seed}, {"passed", all},
                {"claims", claims}}
               .dump()
        << '\n';
  return all ? kExitOk : kExitClaimFailed;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  if (!args.empty() && !args[0].starts_with("-") &&
      std::find(command_names().begin(), command_names().end(), args[0]) == command_names().end()) {
    err << "unknown subcommand '" << args[0] << "'\n";
    return kExitUnknownCommand;
  }

  Config cfg;
  CLI::App app{"Word problem, normal forms and certificates for universal virtual braid groups"};
  app.require_subcommand(1);

  auto common = [&](CLI::App *sub) {
    sub->add_option("--n", cfg.n, "strand count")->capture_default_str();
    sub->add_option("--c", cfg.c, "number of crossing types")->capture_default_str();
    sub->add_option("--format", cfg.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };
  auto with_word = [&](CLI::App *sub) {
    common(sub);
    sub->add_option("--word", cfg.word, "word tokens, e.g. \"r1 s2.1 S1.1\"");
  };

  std::string chosen;
  std::string action;
  auto add = [&](const std::string &name, const std::string &help) {
    auto *sub = app.add_subcommand(name, help);
    sub->callback([&chosen, name] { chosen = name; });
    return sub;
  };
  auto add_action = [&](CLI::App *parent, const std::string &name, const std::string &help) {
    auto *sub = parent->add_subcommand(name, help);
    sub->callback([&action, name] { action = name; });
    return sub;
  };

  with_word(add("nf", "semidirect normal form (delta word, permutation)"));
  auto *eq = add("eq", "decide u = v");
  common(eq);
  eq->add_option("words", cfg.words, "the two words")->expected(2)->required();
  with_word(add("trivial", "decide w = 1"));
  with_word(add("pure", "decide pi_P(w) = 1"));
  with_word(add("perm", "pi_K, pi_P and the section word"));
  auto *graph = add("graph", "commutation graph");
  graph->require_subcommand(1);
  common(add_action(graph, "dot", "Graphviz output"));
  common(add_action(graph, "stats", "vertex, edge and certificate summary"));
  common(add("vcd", "clique number of the commutation graph"));
  common(add("howson", "Howson property via P3-freeness"));
  common(add("lerf-witness", "F2 x F2 obstruction to subgroup separability"));
  common(add("center-witness", "dominating vertices and a non-commuting pair"));

  auto *hom = add("hom", "homomorphisms to symmetric groups");
  hom->require_subcommand(1);
  auto *hom_check = add_action(hom, "check", "check a hom spec read as JSON");
  hom_check->add_option("--file", cfg.file, "JSON file, '-' for stdin")->capture_default_str();
  hom_check->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  auto *hom_phi = add_action(hom, "phi", "the map phi_eps");
  with_word(hom_phi);
  hom_phi->add_option("--eps", cfg.eps, "comma separated bits e_1..e_{c+1}")->required();
  auto *hom_enum = add_action(hom, "enumerate", "all homomorphisms to S_m");
  common(hom_enum);
  hom_enum->add_option("--m", cfg.m, "target degree")->capture_default_str();
  hom_enum->add_option("--max-nodes", cfg.max_nodes)->capture_default_str();
  hom_enum->add_option("--max-seconds", cfg.max_seconds)->capture_default_str();

  with_word(add("ab", "image in the abelianization Z^c + Z/2"));
  auto *chi = add("chi", "colour-t parity");
  with_word(chi);
  chi->add_option("--t", cfg.t, "crossing type")->capture_default_str();

  auto *quot = add("quot", "finite quotients (Z/d)^c x S_n");
  quot->require_subcommand(1);
  auto *quot_eval = add_action(quot, "eval", "evaluate theta on a word");
  with_word(quot_eval);
  quot_eval->add_option("--d", cfg.d, "modulus")->capture_default_str();
  auto *quot_order = add_action(quot, "order", "order and surjectivity certificate");
  common(quot_order);
  quot_order->add_option("--d", cfg.d, "modulus")->capture_default_str();

  auto *oracle = add("oracle", "bounded equality prover over the presentation");
  oracle->require_subcommand(1);
  auto *oracle_eq = add_action(oracle, "eq", "search for a derivation of u = v");
  common(oracle_eq);
  oracle_eq->add_option("--depth", cfg.depth)->capture_default_str();
  oracle_eq->add_option("--width", cfg.width)->capture_default_str();
  oracle_eq->add_option("words", cfg.words, "the two words")->expected(2)->required();

  auto *verify = add("verify-paper", "run every claim check and report");
  verify->add_option("--seed", cfg.seed)->capture_default_str();
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << e.what() << '\n';
    return kExitDomainError;
  }

  try {
    if (chosen == "verify-paper")
      return verify_paper(cfg, out);

    auto j = header(chosen == "hom" || chosen == "quot" || chosen == "graph" || chosen == "oracle"
                        ? chosen + " " + action
                        : chosen,
                    cfg.n, cfg.c);

    if (chosen == "nf") {
      const auto w = input_word(cfg);
      j["word"] = to_string(w);
      j.update(json_io::normal_form(to_normal_form(w)));
    } else if (chosen == "eq") {
      const auto [u, v] = word_pair(cfg);
      const auto nu = to_normal_form(u);
      const auto nv = to_normal_form(v);
      j["equal"] = nu == nv;
      j["nf_u"] = json_io::normal_form(nu);
      j["nf_v"] = json_io::normal_form(nv);
    } else if (chosen == "trivial") {
      const auto nf = to_normal_form(input_word(cfg));
      j["trivial"] = nf.is_identity();
      j["nf"] = json_io::normal_form(nf);
    } else if (chosen == "pure") {
      const auto w = input_word(cfg);
      j["pure"] = is_pure(w);
      j["pi_P"] = pi_P(w).to_cycles();
      j["nf"] = json_io::normal_form(to_normal_form(w));
    } else if (chosen == "perm") {
      const auto w = input_word(cfg);
      const auto k = pi_K(w);
      const auto p = pi_P(w);
      j["pi_K"] = {{"cycles", k.to_cycles()}, {"images", json_io::perm_images(k)}};
      j["pi_P"] = {{"cycles", p.to_cycles()}, {"images", json_io::perm_images(p)}};
      j["iota_pi_K"] = to_string(iota(k, w.params()));
    } else if (chosen == "graph") {
      const auto g = build_graph(cfg.params());
      if (action == "dot") {
        out << g.to_dot();
        return kExitOk;
      }
      j["vertices"] = g.vertex_count();
      j["edges"] = g.edge_count();
      j["clique_number"] = clique_number(g);
      j["p3_free"] = is_p3_free(g).p3_free;
      j["dominating_vertices"] = dominating_vertices(g).size();
    } else if (chosen == "vcd") {
      const auto r = maximum_clique(build_graph(cfg.params()));
      j["clique_number"] = r.size;
      j["vcd"] = r.size;
      j["max_clique"] = json_io::delta_tokens(r.clique);
    } else if (chosen == "howson") {
      const auto r = is_p3_free(build_graph(cfg.params()));
      j["howson"] = r.p3_free;
      j["p3_witness"] = r.witness ? triple(*r.witness) : json(nullptr);
    } else if (chosen == "lerf-witness") {
      const auto w = f2xf2_witness(build_graph(cfg.params()));
      j["lerf"] = !w.has_value();
      j["f2xf2_witness"] = w ? quad(*w) : json(nullptr);
    } else if (chosen == "center-witness") {
      const auto params = cfg.params();
      const auto dom = dominating_vertices(build_graph(params));
      j["dominating_vertices"] = json_io::delta_tokens(dom);
      if (params.n >= 3) {
        const auto u = parse_word("r1 s1.1", params);
        const auto v = parse_word("s1.1 r1", params);
        j["noncommuting_pair"] = {{"u", to_string(u)}, {"v", to_string(v)}, {"equal", are_equal(u, v)}};
      }
    } else if (chosen == "hom" && action == "check") {
      const auto h = json_io::hom_spec_from_json(json::parse(read_source(cfg.file)));
      const auto check = verify_homspec(h, h.params);
      j = header("hom check", h.params.n, h.params.c);
      j["m"] = h.m;
      j["homomorphism"] = check.ok;
      j["failing_relation"] = check.failing_relation ? json(*check.failing_relation) : json(nullptr);
      j["abelian_image"] = has_abelian_image(h);
    } else if (chosen == "hom" && action == "phi") {
      const auto e = EpsTuple::parse(cfg.eps);
      if (e.c() != cfg.c)
        throw Error("--eps needs c + 1 = " + std::to_string(cfg.c + 1) + " entries");
      const auto h = phi_eps_spec(e, cfg.n);
      j["eps"] = e.eps;
      j["homomorphism"] = verify_homspec(h, h.params).ok;
      j["abelian_image"] = has_abelian_image(h);
      j["admissible"] = cfg.n >= 3 ? json(is_admissible(e, cfg.n)) : json(nullptr);
      if (cfg.word) {
        const auto w = input_word(cfg);
        const auto image = phi_eps(e, w);
        j["word"] = to_string(w);
        j["image"] = image.to_cycles();
        j["image_images"] = json_io::perm_images(image);
      }
      j["spec"] = json_io::hom_spec(h);
    } else if (chosen == "hom" && action == "enumerate") {
      SearchBudget budget;
      budget.max_nodes = cfg.max_nodes;
      budget.max_time = std::chrono::milliseconds(static_cast<long long>(cfg.max_seconds * 1000));
      j["m"] = cfg.m;
      auto report = [&](const std::vector<HomSpec> &homs, std::uint64_t nodes, bool complete) {
        json list = json::array();
        std::size_t abelian = 0;
        for (const auto &h : homs) {
          abelian += has_abelian_image(h);
          list.push_back(json_io::hom_spec(h));
        }
        j["complete"] = complete;
        j["count"] = homs.size();
        j["abelian_count"] = abelian;
        j["nodes"] = nodes;
        j["homs"] = std::move(list);
      };
      try {
        const auto r = enumerate_homs(cfg.params(), cfg.m, budget);
        report(r.homs, r.nodes, true);
      } catch (const BudgetExceeded &e) {
        report(e.partial(), e.nodes(), false);
        emit(j, cfg, out);
        err << e.what() << '\n';
        return kExitDomainError;
      }
    } else if (chosen == "ab") {
      j.update(json_io::abel_image(abelianize(input_word(cfg))));
    } else if (chosen == "chi") {
      j["t"] = cfg.t;
      j["chi"] = chi_t(cfg.t, input_word(cfg));
    } else if (chosen == "quot" && action == "eval") {
      j.update(json_io::quotient_element(theta(input_word(cfg), cfg.d)));
    } else if (chosen == "quot" && action == "order") {
      const auto q = quotient_order(cfg.params(), cfg.d);
      j["d"] = cfg.d;
      j["order"] = big(q.order);
      j["n_factorial"] = big(q.n_factorial);
      j["larger_than_n_factorial"] = q.order > q.n_factorial;
      j["certificate"] = {{"method", q.certificate.method},
                          {"generated_order", big(q.certificate.generated_order)},
                          {"surjective", q.certificate.surjective}};
    } else if (chosen == "oracle") {
      const auto [u, v] = word_pair(cfg);
      j.update(json_io::proof(bfs_equal(u, v, {cfg.depth, cfg.width})));
    }
    emit(j, cfg, out);
    return kExitOk;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const nlohmann::json::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

} // namespace uvbraid
