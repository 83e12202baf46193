#include "xcohom/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "xcohom/json_io.hpp"

namespace xcohom {

namespace {

json census_to_json(const std::map<int, int>& census) {
  json j = json::object();
  for (auto [order, count] : census) j[std::to_string(order)] = count;
  return j;
}

json run_fixtures() {
  json list = json::array();
  for (const auto& name : fixture_names()) {
    auto exm = builtin_fixture(name);
    list.push_back(json{{"name", name},
                        {"M_order", exm.M().order},
                        {"L_order", exm.L().order},
                        {"G_order", exm.G.order},
                        {"digest", exm_digest(exm)}});
  }
  return json{{"fixtures", std::move(list)}};
}

json run_validate(const ModelFile& model) {
  const auto& exm = model.exm;
  auto parts = crossed_extension_parts(exm);
  return json{{"valid", true},
              {"M_order", exm.M().order},
              {"L_order", exm.L().order},
              {"G_order", exm.G.order},
              {"A_order", parts.A.order},
              {"Q_order", parts.Q.order},
              {"faithful", parts.faithful}};
}

json run_h0(const ModelFile& model) {
  auto fixed = h0(model.exm);
  auto parts = crossed_extension_parts(model.exm);
  auto qfix = fixed_points(parts.g_on_Q);
  return json{{"h0", json{{"count", fixed.size()}, {"elements", fixed}}},
              {"h0_Q", json{{"count", qfix.size()}, {"elements", qfix}}}};
}

json run_h1(const ModelFile& model, Budget& budget) {
  auto h1 = h1_classes(model.exm, budget);
  json reps = json::array();
  for (int rep : h1.classes.representatives) reps.push_back(cocycle1_to_json(h1.cocycles[rep]));
  return json{{"count", h1.classes.count()},
              {"z1_count", h1.cocycles.size()},
              {"representatives", std::move(reps)}};
}

json run_h2(const ModelFile& model, const FiniteGroup& pi, H2Mode mode, Budget& budget) {
  auto h2 = h2_classes(pi, model.exm, mode, budget);
  json reps = json::array();
  for (int rep : h2.classes.representatives) reps.push_back(cocycle2_to_json(h2.cocycles[rep]));
  return json{{"mode", mode == H2Mode::thick ? "thick" : "weak"},
              {"count", h2.classes.count()},
              {"thick_count", h2.thick_count},
              {"weak_count", h2.weak_count},
              {"z2_count", h2.cocycles.size()},
              {"representatives", std::move(reps)}};
}

json run_classify_ext(const ModelFile& model, const FiniteGroup& pi, H2Mode mode, Budget& budget) {
  auto cls = classify_extensions(pi, model.exm, mode, budget);
  json classes = json::array();
  for (int i = 0; i < (int)cls.representatives.size(); ++i) {
    const Extension& e = cls.representatives[i];
    classes.push_back(json{{"cocycle",
                            cocycle2_to_json(cls.h2.cocycles[cls.h2.classes.representatives[i]])},
                           {"B", group_to_json(e.B)},
                           {"order_census", census_to_json(e.B.order_census())}});
  }
  return json{{"mode", mode == H2Mode::thick ? "thick" : "weak"},
              {"count", cls.h2.classes.count()},
              {"classes", std::move(classes)}};
}

json run_bitorsors(const ModelFile& model, Budget& budget) {
  auto cls = classify_bitorsors(model.exm, budget);
  auto parts = crossed_extension_parts(model.exm);
  json classes = json::array();
  for (int rep : cls.representative_ids) {
    classes.push_back(json{{"cocycle", cocycle1_to_json(cls.h1.cocycles[rep])},
                           {"alpha", cls.bitorsors[rep].alpha},
                           {"pi_star", pi_star(cls.bitorsors[rep], parts)}});
  }
  return json{{"count", cls.classes.count()},
              {"h1_count", cls.h1.classes.count()},
              {"classes", std::move(classes)}};
}

json obstruction_row(int a, const EquivariantCrossedModule& exm, Budget& budget) {
  auto report = obstruction(a, exm, budget);
  json row{{"a", report.a},
           {"L_a", report.l_a},
           {"chosen_x", report.chosen_x},
           {"o_class", report.o_class},
           {"o_trivial", report.o_trivial},
           {"vanishes", report.vanishes},
           {"B_order_census", census_to_json(report.b_ext.B.order_census())}};
  row["witness"] = report.bitorsor_witness ? cocycle1_to_json(*report.bitorsor_witness) : json();
  return row;
}

json run_obstruction(const ModelFile& model, bool all, int element, Budget& budget) {
  json rows = json::array();
  if (all) {
    auto parts = crossed_extension_parts(model.exm);
    for (int a : fixed_points(parts.g_on_Q)) rows.push_back(obstruction_row(a, model.exm, budget));
  } else {
    rows.push_back(obstruction_row(element, model.exm, budget));
  }
  return json{{"rows", std::move(rows)}};
}

json run_bouquet_roundtrip(const ModelFile& model, const FiniteGroup& pi, Budget& budget) {
  const auto& exm = model.exm;
  auto h2 = h2_classes(pi, exm, H2Mode::thick, budget);
  json rounds = json::array();
  for (int i = 0; i < h2.classes.count(); ++i) {
    const Cocycle2& c = h2.cocycles[h2.classes.representatives[i]];
    auto bq = bouquet_of_cocycle(c, pi, exm);
    Cocycle2 extracted = bouquet_to_cocycle(bq, canonical_lambda_family(bq));
    int ch = characteristic_class(bq, h2, budget);
    BGamma bg = b_gamma(bq.gamma, bq.base_obj);
    GGroupoid gb = gamma_of_extension(bg.B, make_hom(bg.B, pi, bg.p));
    psi_functor(bq.gamma, bq.base_obj, bg, gb);
    rounds.push_back(json{{"class", i},
                          {"cocycle", cocycle2_to_json(c)},
                          {"identical_extraction", extracted == c},
                          {"characteristic_class", ch},
                          {"b_gamma_order", bg.B.order},
                          {"psi_weak_equivalence", true},
                          {"groupoid", groupoid_to_json(bq.gamma)}});
  }
  return json{{"count", h2.classes.count()}, {"rounds", std::move(rounds)}};
}

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, path.empty() ? key : path + "." + key, rows);
  } else if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const json& v) { return !v.is_structured(); });
    if (scalars) {
      rows.emplace_back(path, j.dump());
    } else {
      for (size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
    }
  } else {
    rows.emplace_back(path, j.dump());
  }
}

void render(const json& report, const std::string& format, std::ostream& out) {
  if (format == "table") {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    size_t width = 0;
    for (const auto& [key, value] : rows) width = std::max(width, key.size());
    for (const auto& [key, value] : rows)
      out << key << std::string(width - key.size(), ' ') << "  " << value << "\n";
  } else {
    out << report.dump(2) << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nonabelian cohomology of finite groups with crossed-module coefficients"};
  app.require_subcommand(1);

  std::string fixture, model_path, pi_name, mode_name = "thick", format = "json";
  long long max_search = Budget::default_cap;
  if (const char* env = std::getenv("XCOHOM_MAX_SEARCH")) max_search = std::atoll(env);
  int element = -1;
  bool all = false;

  auto add_model_opts = [&](CLI::App* cmd) {
    cmd->add_option("--fixture", fixture, "builtin fixture name");
    cmd->add_option("--model", model_path, "path to a JSON model file");
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--max-search", max_search, "candidate cap for all searches");
  };
  auto add_pi_mode = [&](CLI::App* cmd, bool with_mode) {
    cmd->add_option("--pi", pi_name, "group acting as Pi (builtin name or JSON path)");
    if (with_mode)
      cmd->add_option("--mode", mode_name, "thick or weak")
          ->check(CLI::IsMember({"thick", "weak"}));
  };

  CLI::App* cmd_fixtures = app.add_subcommand("fixtures", "list the builtin fixtures");
  add_common(cmd_fixtures);
  CLI::App* cmd_validate = app.add_subcommand("validate", "validate a model");
  add_model_opts(cmd_validate);
  add_common(cmd_validate);
  CLI::App* cmd_h0 = app.add_subcommand("h0", "degree-0 cohomology");
  add_model_opts(cmd_h0);
  add_common(cmd_h0);
  CLI::App* cmd_h1 = app.add_subcommand("h1", "degree-1 cohomology classes");
  add_model_opts(cmd_h1);
  add_common(cmd_h1);
  CLI::App* cmd_h2 = app.add_subcommand("h2", "degree-2 cohomology classes");
  add_model_opts(cmd_h2);
  add_common(cmd_h2);
  add_pi_mode(cmd_h2, true);
  CLI::App* cmd_ext = app.add_subcommand("classify-ext", "classify extensions");
  add_model_opts(cmd_ext);
  add_common(cmd_ext);
  add_pi_mode(cmd_ext, true);
  CLI::App* cmd_bit = app.add_subcommand("bitorsors", "classify bitorsors");
  add_model_opts(cmd_bit);
  add_common(cmd_bit);
  CLI::App* cmd_obs = app.add_subcommand("obstruction", "obstruction classes over H0(G,Q)");
  add_model_opts(cmd_obs);
  add_common(cmd_obs);
  cmd_obs->add_option("--element", element, "Q element index");
  cmd_obs->add_flag("--all", all, "all G-fixed elements of Q");
  CLI::App* cmd_bqt = app.add_subcommand("bouquet-roundtrip", "bouquet round-trip report");
  add_model_opts(cmd_bqt);
  add_common(cmd_bqt);
  add_pi_mode(cmd_bqt, false);

  std::vector<const char*> argv = {"xcohom"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    json error{{"error", {{"kind", "ParseError"}, {"witness", json::array()}, {"message", e.what()}}}};
    out << error.dump(2) << "\n";
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  Budget budget(max_search);
  json report;
  std::string command;

  try {
    auto need_model = [&]() -> ModelFile {
      if (fixture.empty() == model_path.empty())
        throw ValidationError("ParseError", {},
                              "exactly one of --fixture or --model is required");
      return load_model(fixture.empty() ? model_path : fixture);
    };
    H2Mode mode = mode_name == "weak" ? H2Mode::weak : H2Mode::thick;

    if (cmd_fixtures->parsed()) {
      command = "fixtures";
      report = run_fixtures();
    } else {
      ModelFile model = need_model();
      FiniteGroup pi = pi_name.empty() ? model.exm.G : load_group(pi_name);
      json inputs{{"model", model.source}, {"digest", model.digest}};
      if (!pi_name.empty()) inputs["pi"] = pi_name;

      if (cmd_validate->parsed()) {
        command = "validate";
        report = run_validate(model);
      } else if (cmd_h0->parsed()) {
        command = "h0";
        report = run_h0(model);
      } else if (cmd_h1->parsed()) {
        command = "h1";
        report = run_h1(model, budget);
      } else if (cmd_h2->parsed()) {
        command = "h2";
        report = run_h2(model, pi, mode, budget);
      } else if (cmd_ext->parsed()) {
        command = "classify-ext";
        report = run_classify_ext(model, pi, mode, budget);
      } else if (cmd_bit->parsed()) {
        command = "bitorsors";
        report = run_bitorsors(model, budget);
      } else if (cmd_obs->parsed()) {
        command = "obstruction";
        if (!all && element < 0)
          throw ValidationError("ParseError", {}, "obstruction needs --element or --all");
        report = run_obstruction(model, all, element, budget);
      } else if (cmd_bqt->parsed()) {
        command = "bouquet-roundtrip";
        report = run_bouquet_roundtrip(model, pi, budget);
      }
      report = json{{"command", command},
                    {"inputs", std::move(inputs)},
                    {"budget", json{{"cap", budget.cap()}, {"used", budget.used()}}},
                    {"report", std::move(report)}};
      render(report, format, out);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - started)
                    .count();
      err << "# " << command << " finished in " << ms << " ms\n";
      return 0;
    }
    report = json{{"command", command},
                  {"budget", json{{"cap", budget.cap()}, {"used", budget.used()}}},
                  {"report", std::move(report)}};
    render(report, format, out);
    return 0;
  } catch (const BudgetExceeded& e) {
    json error{{"error",
                {{"kind", "BudgetExceeded"}, {"witness", json::array({e.cap()})},
                 {"message", e.what()}}}};
    out << error.dump(2) << "\n";
    return 4;
  } catch (const ValidationError& e) {
    int code = e.kind() == "ParseError" ? 2 : 3;
    json error{{"error",
                {{"kind", e.kind()}, {"witness", e.witness()}, {"message", e.what()}}}};
    out << error.dump(2) << "\n";
    return code;
  } catch (const CheckFailed& e) {
    json error{{"error",
                {{"kind", "CheckFailed"}, {"witness", json::array()}, {"message", e.what()}}}};
    out << error.dump(2) << "\n";
    return 1;
  }
}

}  // namespace xcohom
