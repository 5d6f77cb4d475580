// Command-line front end: loads graphs / frameworks / pairs from JSON,
// runs the analyses, and emits deterministic JSON reports. Exit codes:
// 0 rigid / verified, 1 negative verdict or domain error, 2 parse error,
// 3 internal error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rigiditylab/json_io.hpp"
#include "rigiditylab/version.hpp"

namespace rl = rigiditylab;
using rl::Json;

namespace {

struct CommonOpts {
  std::string input;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_explicit = false;
  std::int64_t bound = 1000000;
  int retries = 3;
};

std::uint64_t effective_seed(const CommonOpts& c) {
  if (c.seed_explicit) return c.seed;
  if (const char* env = std::getenv("RIGIDITYLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      rl::fail(rl::Errc::ParseError, "RIGIDITYLAB_SEED is not an integer");
    }
  }
  return c.seed;
}

Json tool_block() {
  return Json{{"name", rl::kToolName}, {"version", rl::kToolVersion}};
}

void emit(const Json& report, const std::string& out_path) {
  if (out_path.empty())
    std::cout << rl::dump_canonical(report);
  else
    rl::save_json_file(out_path, report);
}

rl::Graph load_graph(const std::string& path) {
  return rl::graph_from_json(rl::load_json_file(path));
}

int run_analyze(const CommonOpts& common, int d, const std::string& space_name,
                std::optional<int> s_flag, const std::string& field_name, bool witness,
                const std::string& witness_out) {
  const std::uint64_t seed = effective_seed(common);
  const rl::GenericityPolicy policy{common.retries, common.bound};
  const rl::Graph g = load_graph(common.input);
  const rl::SpaceKind kind = rl::space_kind_from_name(space_name);

  Json config{{"command", "analyze"},
              {"input", common.input},
              {"d", d},
              {"space", space_name},
              {"s", s_flag.has_value() ? Json(*s_flag) : Json(nullptr)},
              {"field", field_name},
              {"seed", seed},
              {"bound", common.bound},
              {"retries", common.retries},
              {"witness", witness},
              {"mode", "exact"},
              {"out", common.out}};
  Json report{{"tool", tool_block()}, {"config", config}};

  rl::GGRVerdict verdict;
  switch (kind) {
    case rl::SpaceKind::Euclidean:
    case rl::SpaceKind::Complex: {
      rl::Field field = kind == rl::SpaceKind::Complex || field_name == "complex"
                            ? rl::Field::Complex
                            : rl::Field::Real;
      verdict = rl::ggr_test(g, d, field, seed, policy);
      break;
    }
    case rl::SpaceKind::Pseudo:
    case rl::SpaceKind::Minkowski: {
      int s = kind == rl::SpaceKind::Minkowski ? 1 : s_flag.value_or(0);
      rl::PseudoVerdict pv = rl::pseudo_ggr_verdict(g, d, s, seed, policy, witness);
      verdict = pv.verdict;
      if (pv.witness.has_value()) {
        std::string path = witness_out.empty()
                               ? (common.out.empty() ? "ggf_witness.json" : common.out + ".witness.json")
                               : witness_out;
        rl::save_json_file(path, rl::pair_to_json(*pv.witness));
        report["witness_file"] = path;
      }
      break;
    }
    case rl::SpaceKind::Hyperbolic: {
      rl::HyperbolicVerdict hv = rl::hyperbolic_ggr_verdict(g, d, seed, policy, witness);
      verdict = hv.verdict;
      if (hv.witness.has_value()) {
        std::string path = witness_out.empty()
                               ? (common.out.empty() ? "ggf_witness.json" : common.out + ".witness.json")
                               : witness_out;
        rl::save_json_file(path, rl::hyperbolic_pair_to_json(*hv.witness));
        report["witness_file"] = path;
      }
      break;
    }
  }
  report["result"] = rl::verdict_to_json(verdict);
  emit(report, common.out);
  return verdict.rigid() ? 0 : 1;
}

int run_pogorelov(const CommonOpts& common, int s) {
  rl::FrameworkPair pair = rl::pair_from_json(rl::load_json_file(common.input));
  if (!rl::is_equivalent(pair.first, pair.second))
    rl::fail(rl::Errc::NotEquivalent, "input pair is not equivalent");

  rl::FrameworkPair mapped = rl::pogorelov(pair, s);
  rl::FrameworkPair swapped = rl::coordinate_swap(pair, s);

  const bool inputs_congruent =
      rl::is_congruent(pair.first.config, pair.second.config, pair.first.space);
  const bool outputs_congruent =
      rl::is_congruent(mapped.first.config, mapped.second.config, mapped.first.space);

  Json config{{"command", "pogorelov"}, {"input", common.input}, {"s", s},
              {"seed", effective_seed(common)}, {"bound", common.bound},
              {"retries", common.retries}, {"mode", "exact"}, {"out", common.out}};
  Json report{{"tool", tool_block()},
              {"config", config},
              {"pair", rl::pair_to_json(mapped)},
              {"verification",
               Json{{"inputs_equivalent", true},
                    {"outputs_equivalent", rl::is_equivalent(mapped.first, mapped.second)},
                    {"inputs_congruent", inputs_congruent},
                    {"outputs_congruent", outputs_congruent},
                    {"congruence_biconditional", inputs_congruent == outputs_congruent},
                    {"matches_coordinate_swap", mapped == swapped}}}};
  emit(report, common.out);
  return 0;
}

int run_gram(const CommonOpts& common) {
  rl::Framework f = rl::framework_from_json(rl::load_json_file(common.input));
  rl::GMatrix m = rl::gram(f);
  Json config{{"command", "gram"}, {"input", common.input},
              {"seed", effective_seed(common)}, {"bound", common.bound},
              {"retries", common.retries}, {"mode", "exact"}, {"out", common.out}};
  Json result{{"gmatrix", rl::gmatrix_to_json(m)},
              {"rank", rl::rank(m.entries)}};
  if (m.is_real()) {
    rl::InertiaSignature sig = rl::gmatrix_signature(m);
    result["signature"] = Json{{"neg", sig.neg}, {"pos", sig.pos}, {"zero", sig.zero}};
  } else {
    result["signature"] = nullptr;
  }
  Json report{{"tool", tool_block()}, {"config", config}, {"result", result}};
  emit(report, common.out);
  return 0;
}

int run_transfer(const CommonOpts& common, const std::string& target, bool round_trip) {
  const std::uint64_t seed = effective_seed(common);
  Json config{{"command", "transfer"}, {"input", common.input}, {"to", target},
              {"round_trip", round_trip}, {"seed", seed}, {"bound", common.bound},
              {"retries", common.retries}, {"mode", "exact"}, {"out", common.out}};
  Json report{{"tool", tool_block()}, {"config", config}};
  Json input = rl::load_json_file(common.input);

  if (target == "minkowski") {
    rl::HyperbolicFramework h = rl::hyperbolic_framework_from_json(input);
    rl::Framework coned = rl::cone_to_minkowski(h, seed, common.bound);
    Json result{{"framework", rl::framework_to_json(coned)},
                {"upper_coned", rl::is_upper_coned(coned)},
                {"upper_cylindrical", rl::is_upper_cylindrical(coned)}};
    if (round_trip) {
      rl::HyperbolicFramework back = rl::minkowski_to_hyperbolic(coned);
      result["round_trip_congruent"] = rl::hyperbolic_congruent(h, back);
    }
    report["result"] = result;
    emit(report, common.out);
    return 0;
  }
  if (target == "hyperbolic") {
    rl::Framework coned = rl::framework_from_json(input);
    rl::HyperbolicFramework h = rl::minkowski_to_hyperbolic(coned);
    Json result{{"framework", rl::hyperbolic_framework_to_json(h)},
                {"locus_points", h.graph.v}};
    report["result"] = result;
    emit(report, common.out);
    return 0;
  }
  rl::fail(rl::Errc::ParseError, "unknown transfer target '" + target + "'");
}

int run_enumerate(const CommonOpts& common, int d, const std::string& mode, int starts,
                  double dedup_tol) {
  const std::uint64_t seed = effective_seed(common);
  const rl::GenericityPolicy policy{common.retries, common.bound};
  const rl::Graph g = load_graph(common.input);
  require(d == 1 || d == 2, rl::Errc::ParseError, "enumeration supports d in {1, 2}");

  Json config{{"command", "enumerate"}, {"input", common.input}, {"d", d},
              {"mode", mode}, {"starts", starts}, {"dedup_tol", dedup_tol},
              {"seed", seed}, {"bound", common.bound}, {"retries", common.retries},
              {"out", common.out}};

  rl::RealizationSet rs;
  if (d == 1) {
    rs = rl::enumerate_1d(
        g, rl::random_configuration(g.v, rl::SpaceDescriptor::euclidean(1), common.bound,
                                    rl::mix_seed(seed, 0x1D)));
  } else {
    rl::Framework base = rl::random_framework(g, rl::SpaceDescriptor::euclidean(2), common.bound,
                                              rl::mix_seed(seed, 0x2D));
    std::vector<double> targets;
    for (const auto& m : rl::edge_measurements(base)) targets.push_back(rl::to_double(m.re));
    rl::Enum2DOptions options;
    options.n_starts = starts;
    options.seed = seed;
    options.dedup_tol = dedup_tol;
    options.rigidity_policy = policy;
    rs = rl::enumerate_2d_heuristic(g, targets, options);
  }
  rl::GGRVerdict verdict = rl::ggr_test(g, d, rl::Field::Real, seed, policy);
  rl::ParityReport parity = rl::parity_report(rs, verdict);

  Json report{{"tool", tool_block()},
              {"config", config},
              {"verdict", rl::verdict_to_json(verdict)},
              {"realizations", rl::realization_set_to_json(rs)},
              {"parity", rl::parity_to_json(parity)}};
  emit(report, common.out);
  return 0;
}

bool is_domain_error(rl::Errc c) {
  switch (c) {
    case rl::Errc::NotEquivalent:
    case rl::Errc::NotCongruent:
    case rl::Errc::NotLocallyRigid:
    case rl::Errc::NotUpperConed:
    case rl::Errc::NotSpiky:
    case rl::Errc::NotCylindrical:
    case rl::Errc::Disconnected:
    case rl::Errc::DegenerateSpan:
    case rl::Errc::NoReflectableVertex:
    case rl::Errc::OutsideBall:
    case rl::Errc::NonpositiveScale:
    case rl::Errc::SheetAmbiguous:
    case rl::Errc::NonGenericSample:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rigidity analysis over euclidean, complex, pseudo-euclidean and "
               "hyperbolic spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rl::kToolName) + " " + rl::kToolVersion);

  CommonOpts common;
  int d = 2;
  std::optional<int> s_flag;
  std::string space_name = "euclidean";
  std::string field = "real";
  bool witness = false;
  std::string witness_out;
  bool round_trip = false;
  std::string target = "minkowski";
  std::string mode = "exact";
  int starts = 2000;
  double dedup_tol = 1e-4;
  int pog_s = 1;

  auto add_common = [&](CLI::App* cmd, const char* input_name) {
    cmd->add_option(input_name, common.input)->required();
    cmd->add_option("--out", common.out, "write the report to this file instead of stdout");
    cmd->add_option("--seed", common.seed)->each([&](const std::string&) { common.seed_explicit = true; });
    cmd->add_option("--bound", common.bound, "coordinate sampling bound");
    cmd->add_option("--retries", common.retries, "re-sample attempts for generic decisions");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "decide generic global rigidity");
  add_common(analyze, "--graph");
  analyze->add_option("--d", d)->required();
  analyze->add_option("--s", [&s_flag](const std::vector<std::string>& vals) {
    s_flag = std::stoi(vals.front());
    return true;
  }, "negated-coordinate count for pseudo space");
  analyze->add_option("--space", space_name)
      ->check(CLI::IsMember({"euclidean", "complex", "pseudo", "minkowski", "hyperbolic"}));
  analyze->add_option("--field", field)->check(CLI::IsMember({"real", "complex"}));
  analyze->add_flag("--witness", witness, "attach an exact GGF witness pair when available");
  analyze->add_option("--witness-out", witness_out);

  CLI::App* pog = app.add_subcommand("pogorelov", "map an equivalent euclidean pair to pseudo space");
  add_common(pog, "--pair");
  pog->add_option("--s", pog_s)->required();

  CLI::App* gram_cmd = app.add_subcommand("gram", "g-matrix, signature and rank of a framework");
  add_common(gram_cmd, "--framework");

  CLI::App* transfer = app.add_subcommand("transfer", "cone / hyperbolic transfer constructions");
  add_common(transfer, "--input");
  transfer->add_option("--to", target)->check(CLI::IsMember({"minkowski", "hyperbolic"}));
  transfer->add_flag("--round-trip", round_trip, "verify the back-transfer is congruent");

  CLI::App* enumerate = app.add_subcommand("enumerate", "sample realization classes (d = 1 exact, d = 2 heuristic)");
  add_common(enumerate, "--graph");
  enumerate->add_option("--d", d)->required();
  enumerate->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  enumerate->add_option("--starts", starts);
  enumerate->add_option("--dedup-tol", dedup_tol);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze))
      return run_analyze(common, d, space_name, s_flag, field, witness, witness_out);
    if (app.got_subcommand(pog)) return run_pogorelov(common, pog_s);
    if (app.got_subcommand(gram_cmd)) return run_gram(common);
    if (app.got_subcommand(transfer)) return run_transfer(common, target, round_trip);
    if (app.got_subcommand(enumerate)) return run_enumerate(common, d, mode, starts, dedup_tol);
  } catch (const rl::Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == rl::Errc::ParseError) return 2;
    return is_domain_error(e.code()) ? 1 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
