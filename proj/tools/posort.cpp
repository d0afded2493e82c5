#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "posort/posort.hpp"

using json = nlohmann::json;
using namespace posort;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

// Uniform extension sampling and exact log e(P) stay cheap up to here.
constexpr int kOracleGuard = 20;

struct OracleSpec {
  bool adversary = false;
  std::uint64_t seed = 0;
};

OracleSpec parse_oracle(const std::string& text) {
  if (text == "adversary") return {true, 0};
  const std::string prefix = "hidden:";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    std::size_t used = 0;
    const std::string digits = text.substr(prefix.size());
    const auto seed = std::stoull(digits, &used);
    if (used == digits.size()) return {false, seed};
  }
  throw std::invalid_argument("oracle must be hidden:<seed> or adversary, got '" + text + "'");
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

int cmd_gen(int n, double density, std::uint64_t seed, const std::string& out_path) {
  const Poset p = random_poset(n, density, seed);
  if (out_path.empty() || out_path == "-") {
    write_poset(std::cout, p);
  } else {
    write_poset_file(out_path, p);
  }
  return kOk;
}

int cmd_sort(const std::string& path, const std::string& algo_name, const std::string& oracle_text, bool as_json,
             bool verify) {
  const Poset p = read_poset_file(path);
  const Algorithm algo = parse_algorithm(algo_name);
  const OracleSpec spec = parse_oracle(oracle_text);
  const int n = p.size();

  std::optional<HiddenOrderOracle> hidden;
  std::optional<AdversaryOracle> adversary;
  ComparisonSource* src = nullptr;
  if (spec.adversary) {
    adversary.emplace(p, level_intervals(p));
    src = &*adversary;
  } else {
    std::mt19937_64 rng(spec.seed);
    hidden.emplace(sample_linear_extension(p, rng), p);
    src = &*hidden;
  }

  const auto start = std::chrono::steady_clock::now();
  const SortResult res = run_sorter(algo, p, *src);
  const double elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  bool order_ok = false;
  if (hidden) {
    order_ok = res.order == hidden->order();
  } else {
    // The answers must force exactly the returned order.
    const Poset forced = add_chain_relations(p, res.order);
    order_ok = p.is_linear_extension(res.order) && adversary->consistent();
    for (const auto& [u, v] : adversary->answered()) order_ok = order_ok && forced.less(u, v);
  }

  std::optional<double> log_e;
  if (verify ? n <= kMaxCountableSize : n <= kOracleGuard) log_e = log2_linear_extensions(p);
  const bool bound_ok = !std::isfinite(res.bound_value) || static_cast<double>(res.comparisons) <= res.bound_value + 1e-9;
  const bool ok = order_ok && (!verify || bound_ok);

  if (as_json) {
    json report = {
        {"n", n},
        {"algorithm", algorithm_name(algo)},
        {"oracle", spec.adversary ? "adversary" : "hidden"},
        {"seed", spec.adversary ? json(nullptr) : json(spec.seed)},
        {"comparisons", res.comparisons},
        {"bound_value", finite_or_null(res.bound_value)},
        {"log2_extensions", log_e ? json(*log_e) : json(nullptr)},
        {"elapsed_ms", elapsed_ms},
    };
    std::cout << report.dump() << '\n';
  } else {
    std::cout << "n            " << n << '\n'
              << "algorithm    " << algorithm_name(algo) << '\n'
              << "oracle       " << oracle_text << '\n'
              << "comparisons  " << res.comparisons << '\n';
    if (std::isfinite(res.bound_value)) std::cout << "bound        " << res.bound_value << '\n';
    if (log_e) std::cout << "log2 e(P)    " << *log_e << '\n';
    std::cout << "elapsed ms   " << elapsed_ms << '\n'
              << "order        " << (order_ok ? "verified" : "WRONG") << '\n';
    if (verify) std::cout << "bound check  " << (bound_ok ? "pass" : "FAIL") << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_entropy(const std::string& path, bool as_json) {
  const Poset p = read_poset_file(path);
  const int n = p.size();
  const double greedy_nh = n * point_entropy(greedy_point(greedy_chain_decomposition(p)));

  json report = {{"n", n}, {"greedy_nH", greedy_nh}};
  if (const auto cover = find_two_chain_cover(p)) {
    const auto g = build_two_chain_cover(p, cover->first, cover->second).graph();
    const double nh = n * convex_bipartite_entropy(g).first.entropy;
    report["exact"] = true;
    report["nH"] = nh;
  } else {
    // Exact only for the chain-vs-rest subgraph, which bounds nH from below.
    const Chain a = maximum_chain(p);
    std::vector<char> in_a(n, 0);
    for (Element v : a) in_a[v] = 1;
    std::vector<Element> rest;
    for (Element v = 0; v < n; ++v) {
      if (!in_a[v]) rest.push_back(v);
    }
    const double lower = n * convex_bipartite_entropy(chain_vs_rest_graph(p, a, rest)).first.entropy;
    report["exact"] = false;
    report["nH"] = nullptr;
    report["chain_vs_rest_nH"] = lower;
  }

  if (as_json) {
    std::cout << report.dump() << '\n';
    return kOk;
  }
  std::cout << "n            " << n << '\n';
  if (report["exact"].get<bool>()) {
    std::cout << "nH           " << report["nH"].get<double>() << "  (exact, width <= 2)\n";
  } else {
    std::cout << "nH           approximate only (width > 2)\n"
              << "lower bound  " << report["chain_vs_rest_nH"].get<double>() << "  (maximum chain vs rest)\n";
  }
  std::cout << "upper bound  " << greedy_nh << "  (greedy point)\n";
  return kOk;
}

int cmd_verify(const VerifyOptions& opts, bool as_json) {
  const VerifyReport report = verify_bounds(opts);
  if (as_json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"instances", c.instances},
                        {"violations", c.violations},
                        {"first_violation", c.first_violation}});
    }
    std::cout << json{{"max_n", opts.max_n}, {"ok", report.ok()}, {"checks", checks}}.dump() << '\n';
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.violations == 0 ? "ok    " : "FAIL  ") << c.name << "  instances=" << c.instances
                << " violations=" << c.violations << '\n';
      if (c.violations != 0) std::cout << "      first: " << c.first_violation << '\n';
    }
    std::cout << (report.ok() ? "all checks passed" : "violations found") << '\n';
  }
  return report.ok() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sorting under partial information"};
  app.require_subcommand(1);

  int gen_n = 10;
  double density = 0.3;
  std::uint64_t gen_seed = 1;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write a random poset");
  gen->add_option("--n", gen_n, "Number of elements")->check(CLI::NonNegativeNumber);
  gen->add_option("--density", density, "Probability of each forward relation")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("-o,--out", out_path, "Output file (stdout when omitted)");

  std::string sort_path;
  std::string algo = "cautious";
  std::string oracle = "hidden:1";
  bool sort_json = false;
  bool sort_verify = false;
  auto* sort = app.add_subcommand("sort", "Sort a poset against an oracle");
  sort->add_option("poset", sort_path, "Poset file")->required();
  sort->add_option("--algo", algo, "insertion, merge, cautious or preprocessed");
  sort->add_option("--oracle", oracle, "hidden:<seed> or adversary");
  sort->add_flag("--json", sort_json, "Print one JSON object");
  sort->add_flag("--verify", sort_verify, "Check the comparison bound against log2 e(P)");

  std::string entropy_path;
  bool entropy_json = false;
  auto* entropy = app.add_subcommand("entropy", "Entropy of the incomparability graph");
  entropy->add_option("poset", entropy_path, "Poset file")->required();
  entropy->add_flag("--json", entropy_json, "Print one JSON object");

  VerifyOptions vopts;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Sweep the comparison and entropy bounds over small posets");
  verify->add_option("--max-n", vopts.max_n, "Largest poset size (at most 10)");
  verify->add_option("--seed", vopts.seed, "Seed for sampled instances");
  verify->add_option("--extensions", vopts.extensions_per_poset, "Sampled extensions per poset");
  verify->add_flag("--json", verify_json, "Print one JSON object");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(gen_n, density, gen_seed, out_path);
    if (*sort) return cmd_sort(sort_path, algo, oracle, sort_json, sort_verify);
    if (*entropy) return cmd_entropy(entropy_path, entropy_json);
    if (*verify) {
      if (vopts.max_n > kMaxVerifySize) {
        std::cerr << "error: --max-n is limited to " << kMaxVerifySize << '\n';
        return kBadInput;
      }
      return cmd_verify(vopts, verify_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
