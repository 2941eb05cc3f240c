// Command-line front door: validate and verify affine-symplectic data,
// export the double algebra, trace geodesics, and evaluate the invariant
// coframe and metric in chart coordinates.
//
// Exit codes: 0 every requested check passed; 1 the input is unusable or
// fails validation; 2 an internally guaranteed identity failed (a bug,
// never a data problem).

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hsymp/curvature.hpp"
#include "hsymp/errors.hpp"
#include "hsymp/families.hpp"
#include "hsymp/geodesics.hpp"
#include "hsymp/group.hpp"
#include "hsymp/json_io.hpp"
#include "hsymp/report.hpp"

namespace {

using hsymp::ordered_json;

struct InputSpec {
  std::string file;
  std::string example;
  std::string base_file;  // for the derived-family generator
  std::size_t n = 1;
  std::string a = "0", b = "0", c = "0";

  void attach(CLI::App* cmd, bool positional_file = true) {
    if (positional_file) cmd->add_option("file", file, "data file (JSON)");
    cmd->add_option("--example", example, "built-in family: kodaira | threestep | affa");
    cmd->add_option("--n", n, "kodaira size parameter");
    cmd->add_option("--a", a, "threestep parameter a (exact rational)");
    cmd->add_option("--b", b, "threestep parameter b (exact rational)");
    cmd->add_option("--c", c, "threestep parameter c (exact rational)");
    cmd->add_option("--input", base_file, "base data file for the affa generator");
  }

  hsymp::DataTriple resolve() const {
    if (!example.empty()) {
      if (example == "kodaira") {
        const auto data = hsymp::kodaira_data({n});
        return {data.nabla(), data.nabla_prime(), data.omega()};
      }
      if (example == "threestep") {
        const auto data = hsymp::threestep_data(
            {hsymp::parse_rational(a), hsymp::parse_rational(b), hsymp::parse_rational(c)});
        return {data.nabla(), data.nabla_prime(), data.omega()};
      }
      if (example == "affa") {
        if (base_file.empty())
          throw hsymp::input_error("the affa generator needs --input <file>");
        const auto base = hsymp::read_data_file(base_file);
        const auto data = hsymp::affA_data(base.nabla, base.omega);
        return {data.nabla(), data.nabla_prime(), data.omega()};
      }
      throw hsymp::input_error("unknown example family '" + example + "'");
    }
    if (file.empty()) throw hsymp::input_error("no input: give a data file or --example");
    return hsymp::read_data_file(file);
  }
};

void emit(const ordered_json& doc, const std::string& out_path) {
  if (out_path.empty())
    std::cout << doc.dump(2) << '\n';
  else
    hsymp::write_json_file(out_path, doc);
}

hsymp::RatVec parse_rational_vector(const std::string& text, std::size_t expect) {
  hsymp::RatVec v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(hsymp::parse_rational(tok));
  if (v.size() != expect) {
    std::ostringstream msg;
    msg << "expected " << expect << " comma-separated rationals, got " << v.size();
    throw hsymp::input_error(msg.str());
  }
  return v;
}

int run(int argc, char** argv) {
  CLI::App app{"exact verification engine for hypersymplectic structures on double Lie groups"};
  app.require_subcommand(1);

  std::string out_path;

  auto* validate = app.add_subcommand("validate", "check the defining identities of a data file");
  InputSpec validate_in;
  validate_in.attach(validate);
  validate->add_option("-o,--output", out_path, "write the report here instead of stdout");

  auto* build = app.add_subcommand("build", "construct the double algebra and export its brackets");
  InputSpec build_in;
  build_in.attach(build);
  build->add_option("-o,--output", out_path, "write the bracket table here instead of stdout");

  auto* verify = app.add_subcommand("verify-all", "run every verification and emit the report");
  InputSpec verify_in;
  verify_in.attach(verify);
  verify->add_option("-o,--output", out_path, "write the report here instead of stdout");

  auto* curv = app.add_subcommand("curvature", "curvature and flatness summary");
  InputSpec curv_in;
  curv_in.attach(curv);
  curv->add_option("-o,--output", out_path, "write the summary here instead of stdout");

  auto* geo = app.add_subcommand("geodesic", "integrate a geodesic and compare to the closed form");
  InputSpec geo_in;
  geo_in.attach(geo);
  std::string a0_text, b0_text, t_end_text = "10", step_text = "1/1000";
  std::string csv_path = "geodesic.csv";
  geo->add_option("--a0", a0_text, "initial value, first half (comma-separated rationals)")
      ->required();
  geo->add_option("--b0", b0_text, "initial value, second half")->required();
  geo->add_option("--t-end", t_end_text, "integration end time (exact rational)");
  geo->add_option("--step", step_text, "integration step (exact rational)");
  geo->add_option("-o,--output", csv_path, "trajectory CSV path");

  auto* cof = app.add_subcommand("coframe", "invariant coframe and metric at a chart point");
  InputSpec cof_in;
  cof_in.attach(cof);
  std::string point_text;
  cof->add_option("--point", point_text, "chart point (2m comma-separated rationals)")->required();
  cof->add_option("-o,--output", out_path, "write the result here instead of stdout");

  auto* example = app.add_subcommand("example", "emit a built-in family as a data file");
  InputSpec example_in;
  example_in.attach(example, /*positional_file=*/false);
  example->add_option("-o,--output", out_path, "write the data file here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (validate->parsed()) {
      const auto t = validate_in.resolve();
      const auto outcome = hsymp::validate_data(t.nabla, t.nabla_prime, t.omega);
      ordered_json doc;
      doc["dim"] = t.omega.dim();
      doc["validation"] = hsymp::validation_to_json(outcome.report);
      emit(doc, out_path);
      return outcome.data ? 0 : 1;
    }
    if (build->parsed()) {
      const auto t = build_in.resolve();
      const auto data = hsymp::require_valid(t.nabla, t.nabla_prime, t.omega);
      emit(hsymp::brackets_to_json(hsymp::build_bracket(data)), out_path);
      return 0;
    }
    if (verify->parsed()) {
      const auto t = verify_in.resolve();
      const auto result = hsymp::run_verification(t.nabla, t.nabla_prime, t.omega);
      emit(result.report, out_path);
      return result.input_valid ? 0 : 1;
    }
    if (curv->parsed()) {
      const auto t = curv_in.resolve();
      const auto data = hsymp::require_valid(t.nabla, t.nabla_prime, t.omega);
      const auto fr = hsymp::flatness_report(data);
      hsymp::ricci(data);
      ordered_json doc;
      doc["dim"] = data.dim();
      doc["flatness"] = {{"step", fr.step},
                         {"two_step", fr.step <= 2},
                         {"nabla_product_zero", fr.nabla_product_zero},
                         {"flat", fr.flat},
                         {"consistent", fr.consistent()}};
      doc["ricci_zero"] = true;
      emit(doc, out_path);
      return 0;
    }
    if (geo->parsed()) {
      const auto t = geo_in.resolve();
      const auto data = hsymp::require_valid(t.nabla, t.nabla_prime, t.omega);
      const std::size_t m = data.dim();
      const auto a0 = parse_rational_vector(a0_text, m);
      const auto b0 = parse_rational_vector(b0_text, m);
      const double t_end = hsymp::parse_rational(t_end_text).get_d();
      const double step = hsymp::parse_rational(step_text).get_d();
      if (!(step > 0)) throw hsymp::input_error("step must be positive");
      const auto curve = hsymp::geodesic_closed_form(data, a0, b0);
      const auto samples = hsymp::geodesic_numeric(data, a0, b0, t_end, step);
      hsymp::write_geodesic_csv(csv_path, samples);
      ordered_json doc;
      doc["samples"] = samples.size();
      doc["csv"] = csv_path;
      doc["closed_form_residual_zero"] = true;
      doc["max_deviation_from_closed_form"] = hsymp::max_deviation(samples, curve);
      std::cout << doc.dump(2) << '\n';
      return 0;
    }
    if (cof->parsed()) {
      const auto t = cof_in.resolve();
      const auto data = hsymp::require_valid(t.nabla, t.nabla_prime, t.omega);
      const std::size_t m = data.dim();
      const auto coords = parse_rational_vector(point_text, 2 * m);
      hsymp::GroupElement p{{coords.begin(), coords.begin() + static_cast<long>(m)},
                            {coords.begin() + static_cast<long>(m), coords.end()}};
      const auto theta = hsymp::coframe_at_point(data, p);
      const auto g = hsymp::metric_at_point(data, p);
      auto matrix_json = [](const hsymp::RatMatrix& mx) {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < mx.rows(); ++i) {
          ordered_json row = ordered_json::array();
          for (std::size_t j = 0; j < mx.cols(); ++j) row.push_back(hsymp::to_string(mx.at(i, j)));
          rows.push_back(std::move(row));
        }
        return rows;
      };
      ordered_json doc;
      doc["dim"] = 2 * m;
      doc["coframe"] = matrix_json(theta);
      doc["metric"] = matrix_json(g);
      emit(doc, out_path);
      return 0;
    }
    if (example->parsed()) {
      const auto t = example_in.resolve();
      emit(hsymp::data_to_json(t.nabla, t.nabla_prime, t.omega), out_path);
      return 0;
    }
  } catch (const hsymp::internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const hsymp::input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
