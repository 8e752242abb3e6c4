#include "freewalk/config.hpp"

#include <json.hpp>

namespace freewalk {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* name : allowed) known = known || key == name;
    if (!known) {
      throw ValidationError("SchemaError",
                            "unknown field '" + key + "' in " + where);
    }
  }
}

double parse_probability(const json& value, const std::string& where) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    auto slash = text.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        double x = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return x;
      }
      double num = std::stod(text.substr(0, slash), &used);
      double den = std::stod(text.substr(slash + 1), &used);
      if (den == 0.0) {
        throw ValidationError("SchemaError",
                              "zero denominator in '" + text + "'");
      }
      return num / den;
    } catch (const std::logic_error&) {
      throw ValidationError("SchemaError",
                            "cannot parse probability '" + text + "' in " +
                                where);
    }
  }
  throw ValidationError("SchemaError",
                        "probability must be a number or \"p/q\" in " + where);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ValidationError("ParseError", err.what());
  }
  if (!root.is_object()) {
    throw ValidationError("SchemaError", "config must be a JSON object");
  }
  reject_unknown(root, "config",
                 {"mu", "rep", "solver", "sampling", "dimension", "validate",
                  "words", "mc", "powerword", "additivity", "gibbs",
                  "figures"});

  RunConfig config;

  if (root.contains("mu")) {
    const json& mu = root["mu"];
    if (mu.is_string()) {
      if (mu.get<std::string>() != "uniform4") {
        throw ValidationError("SchemaError",
                              "unknown mu shorthand '" +
                                  mu.get<std::string>() + "'");
      }
      for (Letter x : kAlphabet) {
        config.mu_atoms.push_back({ReducedWord(Word{x}), 0.25});
      }
    } else if (mu.is_array()) {
      for (const json& entry : mu) {
        reject_unknown(entry, "mu atom", {"word", "prob"});
        if (!entry.contains("word") || !entry.contains("prob")) {
          throw ValidationError("SchemaError",
                                "mu atoms need 'word' and 'prob'");
        }
        config.mu_atoms.push_back(
            {parse_reduced(entry["word"].get<std::string>()),
             parse_probability(entry["prob"], "mu")});
      }
    } else {
      throw ValidationError("SchemaError",
                            "mu must be \"uniform4\" or an atom list");
    }
  }

  if (root.contains("rep")) {
    const json& rep = root["rep"];
    reject_unknown(rep, "rep", {"type", "L", "a", "b", "arcs"});
    config.rep.type = rep.value("type", "standard");
    if (config.rep.type == "standard") {
      config.rep.L = rep.value("L", 4.0);
    } else if (config.rep.type == "explicit") {
      for (const char* key : {"a", "b"}) {
        if (!rep.contains(key) || !rep[key].is_array() ||
            rep[key].size() != 4) {
          throw ValidationError("SchemaError",
                                std::string("explicit rep needs '") + key +
                                    "' as [a_re, a_im, b_re, b_im]");
        }
      }
      config.rep.gen_a = rep["a"].get<std::vector<double>>();
      config.rep.gen_b = rep["b"].get<std::vector<double>>();
      if (!rep.contains("arcs") || !rep["arcs"].is_array() ||
          rep["arcs"].size() != 4) {
        throw ValidationError("SchemaError",
                              "explicit rep needs 4 arcs (order a, A, b, B)");
      }
      for (const json& arc : rep["arcs"]) {
        reject_unknown(arc, "arc", {"center", "half_width"});
        config.rep.arcs.push_back(
            {arc.at("center").get<double>(),
             arc.at("half_width").get<double>()});
      }
    } else {
      throw ValidationError("SchemaError",
                            "rep type must be 'standard' or 'explicit'");
    }
  }

  if (root.contains("solver")) {
    reject_unknown(root["solver"], "solver", {"tol", "max_iter"});
    config.solver_tol = root["solver"].value("tol", config.solver_tol);
    config.solver_max_iter =
        root["solver"].value("max_iter", config.solver_max_iter);
  }
  if (root.contains("sampling")) {
    reject_unknown(root["sampling"], "sampling",
                   {"seed", "trials", "ray_length"});
    config.seed = root["sampling"].value("seed", config.seed);
    config.trials = root["sampling"].value("trials", config.trials);
    config.ray_length =
        root["sampling"].value("ray_length", config.ray_length);
  }
  if (root.contains("dimension")) {
    reject_unknown(root["dimension"], "dimension", {"depth", "tol"});
    config.dimension_depth =
        root["dimension"].value("depth", config.dimension_depth);
    config.dimension_tol = root["dimension"].value("tol", config.dimension_tol);
  }
  if (root.contains("validate")) {
    reject_unknown(root["validate"], "validate", {"radius"});
    if (root["validate"].contains("radius")) {
      config.validate_radius = root["validate"]["radius"].get<int>();
    }
  }
  if (root.contains("words")) {
    for (const json& w : root["words"]) {
      config.words.push_back(w.get<std::string>());
    }
  }
  if (root.contains("mc")) {
    reject_unknown(root["mc"], "mc", {"steps", "trials"});
    config.mc_steps = root["mc"].value("steps", config.mc_steps);
    config.mc_trials = root["mc"].value("trials", config.mc_trials);
  }
  if (root.contains("powerword")) {
    reject_unknown(root["powerword"], "powerword", {"word", "n_max"});
    config.powerword_word =
        root["powerword"].value("word", config.powerword_word);
    config.powerword_nmax =
        root["powerword"].value("n_max", config.powerword_nmax);
  }
  if (root.contains("additivity")) {
    reject_unknown(root["additivity"], "additivity", {"w1", "w2"});
    config.additivity_w1 = root["additivity"].value("w1", config.additivity_w1);
    config.additivity_w2 = root["additivity"].value("w2", config.additivity_w2);
  }
  if (root.contains("gibbs")) {
    reject_unknown(root["gibbs"], "gibbs", {"max_length", "per_length"});
    config.gibbs_max_length =
        root["gibbs"].value("max_length", config.gibbs_max_length);
    config.gibbs_per_length =
        root["gibbs"].value("per_length", config.gibbs_per_length);
  }
  if (root.contains("figures")) {
    reject_unknown(root["figures"], "figures", {"depth"});
    config.figures_depth = root["figures"].value("depth", config.figures_depth);
  }
  return config;
}

StepDistribution make_mu(const RunConfig& config) {
  if (config.mu_atoms.empty()) {
    throw ValidationError("SchemaError", "config has no 'mu' section");
  }
  return StepDistribution(config.mu_atoms);
}

SchottkyRep make_rep(const RunConfig& config) {
  if (config.rep.type == "standard") {
    return standard_schottky(config.rep.L);
  }
  auto gen = [](const std::vector<double>& entries) {
    MobiusMap g{Complex(entries[0], entries[1]),
                Complex(entries[2], entries[3])};
    g.normalize();
    return g;
  };
  MobiusMap ga = gen(config.rep.gen_a);
  MobiusMap gb = gen(config.rep.gen_b);
  std::array<MobiusMap, 4> gens;
  gens[letter_index(Letter::a)] = ga;
  gens[letter_index(Letter::A)] = ga.inverse();
  gens[letter_index(Letter::b)] = gb;
  gens[letter_index(Letter::B)] = gb.inverse();
  std::array<HalfPlane, 4> planes;
  for (int i = 0; i < 4; ++i) planes[i] = {config.rep.arcs[i]};
  return SchottkyRep(gens, planes);
}

}  // namespace freewalk
