// Command-line driver: every experiment reads a JSON config and writes a
// machine-readable artifact (JSON, CSV, DOT, or SVG).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "freewalk/boundary_chain.hpp"
#include "freewalk/config.hpp"
#include "freewalk/dimension.hpp"
#include "freewalk/experiments.hpp"
#include "freewalk/prefix_graph.hpp"
#include "freewalk/rng.hpp"

namespace {

using freewalk::BoundaryChain;
using freewalk::ChainKernel;
using freewalk::Letter;
using freewalk::ReducedWord;
using freewalk::RunConfig;
using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// Fixed 12-significant-digit serialization keeps outputs byte-identical
// across runs.
double jnum(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw freewalk::ValidationError("ParseError",
                                    "cannot open config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw freewalk::ValidationError("ParseError",
                                    "cannot write to '" + out_path + "'");
  }
  out << text;
}

BoundaryChain make_boundary_chain(const RunConfig& config,
                                  const freewalk::StepDistribution& mu) {
  ChainKernel P = kernel(freewalk::build_prefix_graph(mu));
  freewalk::FirstPassageFamily F = freewalk::solve_first_passage(
      P, config.solver_tol, config.solver_max_iter);
  return freewalk::build_boundary_chain(F, P);
}

std::vector<ReducedWord> gibbs_word_sample(const RunConfig& config) {
  std::vector<ReducedWord> words;
  for (int length = 1; length <= config.gibbs_max_length; ++length) {
    auto all = freewalk::admissible_words(length);
    if (static_cast<int>(all.size()) <= config.gibbs_per_length) {
      words.insert(words.end(), all.begin(), all.end());
      continue;
    }
    freewalk::Rng rng(freewalk::child_seed(config.seed, length));
    for (int k = 0; k < config.gibbs_per_length; ++k) {
      words.push_back(all[static_cast<std::size_t>(rng.uniform01() * all.size())]);
    }
  }
  return words;
}

json harmonic_json(const freewalk::HarmonicDimensionEstimate& est) {
  return {{"dim", jnum(est.dim)},
          {"dim_stderr", jnum(est.dim_stderr)},
          {"entropy", jnum(est.entropy)},
          {"entropy_stderr", jnum(est.entropy_stderr)},
          {"drift", jnum(est.drift)},
          {"drift_stderr", jnum(est.drift_stderr)},
          {"ray_length", est.ray_length},
          {"trials", est.trials},
          {"seed", est.seed},
          {"degenerate", est.degenerate}};
}

json dimension_json(const freewalk::DimensionEstimate& est) {
  json conv = json::array();
  for (const auto& [depth, value] : est.convergence) {
    conv.push_back({{"depth", depth}, {"delta", jnum(value)}});
  }
  return {{"depth", est.depth},
          {"delta", jnum(est.value)},
          {"bracket", {jnum(est.lo), jnum(est.hi)}},
          {"convergence_table", conv}};
}

json additivity_json(const freewalk::AdditivityResult& result,
                     const std::string& w1, const std::string& w2) {
  return {{"w1", w1},
          {"w2", w2},
          {"len_product", jnum(result.len_product)},
          {"len_sum", jnum(result.len_sum)},
          {"gap", jnum(result.gap)},
          {"axes_intersect", result.axes_intersect},
          {"sign_consistent", result.sign_consistent},
          {"axis1", {jnum(result.axis1.repelling), jnum(result.axis1.attracting)}},
          {"axis2", {jnum(result.axis2.repelling), jnum(result.axis2.attracting)}}};
}

json powerword_json(const freewalk::PowerWordRate& rate,
                    const std::string& word) {
  json roots = json::array(), ratios = json::array();
  for (double x : rate.root_values) roots.push_back(jnum(x));
  for (double x : rate.ratios) ratios.push_back(jnum(x));
  return {{"word", word},
          {"root_values", roots},
          {"ratios", ratios},
          {"translation_length", jnum(rate.translation_len)},
          {"reference", jnum(rate.reference)},
          {"deviation", jnum(rate.deviation)}};
}

json gibbs_json(const std::vector<freewalk::GibbsRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back({{"length", row.length},
                   {"count", row.count},
                   {"min_log_ratio", jnum(row.min_log_ratio)},
                   {"max_log_ratio", jnum(row.max_log_ratio)},
                   {"log_spread", jnum(row.log_spread)}});
  }
  return out;
}

std::string gibbs_csv(const std::vector<freewalk::GibbsRow>& rows) {
  std::string out = "length,count,min_log_ratio,max_log_ratio,log_spread\n";
  char line[160];
  for (const auto& row : rows) {
    std::snprintf(line, sizeof(line), "%zu,%d,%.12g,%.12g,%.12g\n", row.length,
                  row.count, row.min_log_ratio, row.max_log_ratio,
                  row.log_spread);
    out += line;
  }
  return out;
}

json wrap(json payload) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out.update(payload);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random walks on the free group: harmonic measure, hidden "
               "Markov boundary data, and Schottky dimension experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed_override = 0;
  bool has_seed_override = false;
  int threads = 1;
  app.add_option("--config", config_path, "JSON config file")->required();
  app.add_option("--out", out_path, "output path (default: stdout)");
  app.add_option("--format", format, "json or csv (tables only)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed_override, "override the config seed")
      ->each([&](const std::string&) { has_seed_override = true; });
  app.add_option("--threads", threads, "worker cap (results are unaffected)")
      ->check(CLI::PositiveNumber);

  auto* cmd_validate = app.add_subcommand(
      "validate", "check mu: normalization, semigroup generation, and the "
                  "unique-last-letter hypothesis");
  auto* cmd_graph =
      app.add_subcommand("graph", "export the weighted prefix graph as DOT");
  auto* cmd_measure = app.add_subcommand(
      "measure", "exact cylinder probabilities vs the Monte Carlo oracle "
                 "for the configured words");
  auto* cmd_sample =
      app.add_subcommand("sample", "draw boundary words from the hidden chain");
  auto* cmd_hdim = app.add_subcommand(
      "hdim", "limit-set Hausdorff dimension via the Bowen equation");
  auto* cmd_hmdim = app.add_subcommand(
      "hmdim", "harmonic-measure dimension estimate along sampled rays");
  auto* cmd_report = app.add_subcommand(
      "report", "full dimension-drop report with certificates");
  auto* cmd_additivity = app.add_subcommand(
      "additivity", "translation-length additivity obstruction");
  auto* cmd_powerword =
      app.add_subcommand("powerword", "cylinder decay rate along powers");
  auto* cmd_gibbs = app.add_subcommand(
      "gibbs", "Gibbs comparison ratio table over word length");
  auto* cmd_figures =
      app.add_subcommand("figures", "limit set figure as SVG");

  // Let global flags appear after the subcommand name.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough(true);

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig config = freewalk::parse_config(read_file(config_path));
    if (has_seed_override) config.seed = seed_override;

    if (cmd_validate->parsed()) {
      auto mu = make_mu(config);
      int radius = config.validate_radius.value_or(
          freewalk::default_validation_radius(mu));
      auto report = freewalk::validate(mu, radius);
      json letters = json::object();
      for (Letter x : freewalk::kAlphabet) {
        auto multiplicity = freewalk::last_letter_multiplicity(mu, x);
        json witnesses = json::array();
        for (const auto& w : multiplicity.witnesses) {
          witnesses.push_back(freewalk::to_string(w));
        }
        letters[std::string(1, freewalk::to_char(x))] = {
            {"count", multiplicity.count}, {"witnesses", witnesses}};
      }
      bool hypothesis =
          freewalk::last_letter_multiplicity(mu, Letter::a).count == 1;
      write_output(
          wrap({{"normalization_residual", jnum(report.normalization_residual)},
                {"support_size", report.support_size},
                {"radius", report.radius},
                {"generation_verified", report.generation_verified},
                {"last_letter_multiplicity", letters},
                {"hypothesis_unique_last_letter_a", hypothesis}})
              .dump(2) +
              "\n",
          out_path);
      return report.generation_verified ? 0 : 1;
    }

    if (cmd_graph->parsed()) {
      write_output(freewalk::export_dot(freewalk::build_prefix_graph(
                       make_mu(config))),
                   out_path);
      return 0;
    }

    if (cmd_measure->parsed()) {
      auto mu = make_mu(config);
      BoundaryChain B = make_boundary_chain(config, mu);
      if (format == "csv") {
        std::string out = "word,exact,mc_estimate,mc_stderr\n";
        char line[160];
        for (const std::string& text : config.words) {
          ReducedWord w = freewalk::parse_reduced(text);
          auto exact = cylinder_probability(B, w);
          auto mc = mc_cylinder_oracle(mu, w, config.mc_steps,
                                       config.mc_trials, config.seed);
          std::snprintf(line, sizeof(line), "%s,%.12g,%.12g,%.12g\n",
                        text.c_str(), exact.value, mc.estimate, mc.stderr_);
          out += line;
        }
        write_output(out, out_path);
      } else {
        json rows = json::array();
        for (const std::string& text : config.words) {
          ReducedWord w = freewalk::parse_reduced(text);
          auto exact = cylinder_probability(B, w);
          auto mc = mc_cylinder_oracle(mu, w, config.mc_steps,
                                       config.mc_trials, config.seed);
          rows.push_back({{"word", text},
                          {"exact", jnum(exact.value)},
                          {"path_count", exact.path_count},
                          {"mc_estimate", jnum(mc.estimate)},
                          {"mc_stderr", jnum(mc.stderr_)},
                          {"mc_trials", mc.trials},
                          {"mc_steps", mc.steps}});
        }
        write_output(wrap({{"measurements", rows}}).dump(2) + "\n", out_path);
      }
      return 0;
    }

    if (cmd_sample->parsed()) {
      auto mu = make_mu(config);
      BoundaryChain B = make_boundary_chain(config, mu);
      json samples = json::array();
      for (long i = 0; i < config.trials; ++i) {
        samples.push_back(freewalk::to_string(freewalk::sample_boundary(
            B, config.ray_length,
            freewalk::child_seed(config.seed, static_cast<std::uint64_t>(i)))));
      }
      write_output(wrap({{"ray_length", config.ray_length},
                         {"seed", config.seed},
                         {"samples", samples}})
                       .dump(2) +
                       "\n",
                   out_path);
      return 0;
    }

    if (cmd_hdim->parsed()) {
      auto rep = make_rep(config);
      auto est = freewalk::hausdorff_dimension(rep, config.dimension_depth,
                                               config.dimension_tol);
      double oracle = freewalk::box_counting_oracle(
          rep, std::clamp(config.dimension_depth, 2, 8));
      json out = dimension_json(est);
      out["oracle_value"] = jnum(oracle);
      write_output(wrap(out).dump(2) + "\n", out_path);
      return 0;
    }

    if (cmd_hmdim->parsed()) {
      auto mu = make_mu(config);
      auto rep = make_rep(config);
      BoundaryChain B = make_boundary_chain(config, mu);
      auto est = freewalk::harmonic_dimension_estimate(
          B, rep, config.ray_length, config.trials, config.seed);
      write_output(wrap(harmonic_json(est)).dump(2) + "\n", out_path);
      return 0;
    }

    if (cmd_report->parsed()) {
      auto mu = make_mu(config);
      auto rep = make_rep(config);
      freewalk::ReportParams params;
      params.depth = config.dimension_depth;
      params.dim_tol = config.dimension_tol;
      params.ray_length = config.ray_length;
      params.trials = config.trials;
      params.seed = config.seed;
      params.solver_tol = config.solver_tol;
      params.solver_max_iter = config.solver_max_iter;
      auto report = freewalk::dimension_drop_report(mu, rep, params);

      BoundaryChain B = make_boundary_chain(config, mu);
      auto additivity =
          freewalk::additivity_test(rep, freewalk::parse_reduced("aa"),
                                    freewalk::parse_reduced("ab"));
      auto rate = freewalk::power_word_rate(
          B, rep, freewalk::parse_reduced(config.powerword_word),
          config.powerword_nmax, report.delta.value);
      auto gibbs = freewalk::gibbs_comparison_diagnostic(
          B, rep, report.delta.value, gibbs_word_sample(config));

      write_output(
          wrap({{"delta", dimension_json(report.delta)},
                {"delta_uncertainty", jnum(report.delta_uncertainty)},
                {"harmonic", harmonic_json(report.harmonic)},
                {"combined_uncertainty", jnum(report.combined_uncertainty)},
                {"margin", jnum(report.margin)},
                {"hypothesis_unique_last_letter_a", report.hypothesis_holds},
                {"drop_detected", report.drop_detected},
                {"degenerate", report.degenerate},
                {"verdict",
                 report.drop_detected
                     ? "drop detected (evidence, not proof)"
                     : "no drop detected at this confidence"},
                {"additivity", additivity_json(additivity, "aa", "ab")},
                {"powerword", powerword_json(rate, config.powerword_word)},
                {"gibbs", gibbs_json(gibbs)}})
              .dump(2) +
              "\n",
          out_path);
      return 0;
    }

    if (cmd_additivity->parsed()) {
      auto rep = make_rep(config);
      auto result = freewalk::additivity_test(
          rep, freewalk::parse_reduced(config.additivity_w1),
          freewalk::parse_reduced(config.additivity_w2));
      write_output(wrap(additivity_json(result, config.additivity_w1,
                                        config.additivity_w2))
                       .dump(2) +
                       "\n",
                   out_path);
      return 0;
    }

    if (cmd_powerword->parsed()) {
      auto mu = make_mu(config);
      auto rep = make_rep(config);
      BoundaryChain B = make_boundary_chain(config, mu);
      auto delta = freewalk::hausdorff_dimension(rep, config.dimension_depth,
                                                 config.dimension_tol);
      auto rate = freewalk::power_word_rate(
          B, rep, freewalk::parse_reduced(config.powerword_word),
          config.powerword_nmax, delta.value);
      json out = powerword_json(rate, config.powerword_word);
      out["delta"] = jnum(delta.value);
      write_output(wrap(out).dump(2) + "\n", out_path);
      return 0;
    }

    if (cmd_gibbs->parsed()) {
      auto mu = make_mu(config);
      auto rep = make_rep(config);
      BoundaryChain B = make_boundary_chain(config, mu);
      auto delta = freewalk::hausdorff_dimension(rep, config.dimension_depth,
                                                 config.dimension_tol);
      auto rows = freewalk::gibbs_comparison_diagnostic(
          B, rep, delta.value, gibbs_word_sample(config));
      if (format == "csv") {
        write_output(gibbs_csv(rows), out_path);
      } else {
        write_output(wrap({{"delta", jnum(delta.value)},
                           {"rows", gibbs_json(rows)}})
                         .dump(2) +
                         "\n",
                     out_path);
      }
      return 0;
    }

    if (cmd_figures->parsed()) {
      write_output(
          freewalk::limit_set_svg(make_rep(config), config.figures_depth),
          out_path);
      return 0;
    }
  } catch (const freewalk::Error& err) {
    std::cerr << err.what() << "\n";
    return err.exit_code();
  } catch (const std::exception& err) {
    std::cerr << "Error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
