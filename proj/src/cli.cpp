#include "wildauto/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wildauto/classify.hpp"
#include "wildauto/error.hpp"
#include "wildauto/json_io.hpp"
#include "wildauto/normal_forms.hpp"
#include "wildauto/selfcheck.hpp"
#include "wildauto/unipotency.hpp"

namespace wildauto {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void emit(const Json& doc, const std::string& output_path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path);
  if (!file) throw ParseError("cannot open output file: " + output_path);
  file << text;
}

void emit_text(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path);
  if (!file) throw ParseError("cannot open output file: " + output_path);
  file << text;
}

IntMatrix matrix_from_options(const std::string& inline_json, const std::string& input_path) {
  if (inline_json.empty() == input_path.empty())
    throw ParseError("provide exactly one of --matrix or --input");
  const std::string text = inline_json.empty() ? read_input(input_path) : inline_json;
  return json_to_matrix(parse_json_text(text));
}

std::string render_report_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "model: dim " << r.model.dim() << ", " << r.model.blocks.size() << " block(s)";
  for (const auto& b : r.model.blocks)
    os << " [" << b.factor_id << "^" << b.multiplicity << ", factor dim " << b.factor_dim << "]";
  os << "\n";
  os << "alpha unipotent: " << (r.alpha_unipotent ? "yes" : "no") << "\n";
  os << "wild: " << (r.wild.wild ? "yes" : "no") << "\n";
  switch (r.num_action.kind) {
    case NumAction::Kind::IdentityOnNum:
      os << "num action: identity on Num(X)\n";
      break;
    case NumAction::Kind::ExplicitMatrix:
      os << "num action: " << r.num_action.matrix.to_string() << "\n";
      break;
    case NumAction::Kind::Unavailable:
      os << "num action: unavailable (" << r.num_action.reason << ")\n";
      break;
  }
  if (r.j)
    os << "j = " << *r.j << "\n";
  else
    os << "j = (unknown)\n";
  if (r.gk.exact) {
    os << "GK dimension: exactly " << *r.gk.exact << "\n";
  } else if (r.gk.lower) {
    os << "GK dimension: in [" << *r.gk.lower << ", " << *r.gk.upper << "]\n";
  } else {
    os << "GK dimension: unknown (" << r.gk.unavailable_reason.value_or("") << ")\n";
  }
  os << "sigma-ample verdict: " << to_string(r.sigma_ample_verdict) << "\n";
  switch (r.projectively_simple.status) {
    case ProjectiveSimplicity::Status::Yes:
      os << "projectively simple: yes\n";
      break;
    case ProjectiveSimplicity::Status::No:
      os << "projectively simple: no\n";
      break;
    case ProjectiveSimplicity::Status::NotApplicable:
      os << "projectively simple: not applicable (" << r.projectively_simple.reason << ")\n";
      break;
  }
  if (r.classification_label) os << "classification: " << *r.classification_label << "\n";
  return os.str();
}

int run_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_dispatch(args, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return 1;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

int run_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"wildauto: wildness, Num-action, and GK-dimension analysis of modeled\n"
               "abelian-variety automorphisms, in exact integer arithmetic"};
  app.require_subcommand(1);

  std::string input_path, output_path, inline_matrix, format = "json";
  std::uint64_t seed = 42;
  unsigned long trials = 1000;
  bool json_results = false;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full analysis of a model+automorphism document");
  analyze_cmd->add_option("--input", input_path, "input JSON file (\"-\" for stdin)")->required();
  analyze_cmd->add_option("--output", output_path, "write the report here instead of stdout");
  analyze_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  CLI::App* snf_cmd = app.add_subcommand("snf", "Smith normal form D = U M V with transforms");
  snf_cmd->add_option("--matrix", inline_matrix, "matrix as inline JSON");
  snf_cmd->add_option("--input", input_path, "matrix JSON file");
  snf_cmd->add_option("--output", output_path, "output file");

  CLI::App* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial det(xI - M)");
  charpoly_cmd->add_option("--matrix", inline_matrix, "matrix as inline JSON");
  charpoly_cmd->add_option("--input", input_path, "matrix JSON file");
  charpoly_cmd->add_option("--output", output_path, "output file");

  CLI::App* qu_cmd = app.add_subcommand("quasiunipotent", "cyclotomic quasi-unipotency verdict");
  qu_cmd->add_option("--matrix", inline_matrix, "matrix as inline JSON");
  qu_cmd->add_option("--input", input_path, "matrix JSON file");
  qu_cmd->add_option("--output", output_path, "output file");

  CLI::App* num_cmd = app.add_subcommand(
      "num-action", "Num(E x E) action: 2x2 input gives P_M; 3x3 input is taken as P itself");
  num_cmd->add_option("--matrix", inline_matrix, "matrix as inline JSON");
  num_cmd->add_option("--input", input_path, "matrix JSON file");
  num_cmd->add_option("--output", output_path, "output file");

  CLI::App* gk_cmd = app.add_subcommand("gk", "GK-dimension bounds for a model+automorphism document");
  gk_cmd->add_option("--input", input_path, "input JSON file (\"-\" for stdin)")->required();
  gk_cmd->add_option("--output", output_path, "output file");

  CLI::App* gen_cmd = app.add_subcommand("generates", "point / point-set generation verdict");
  gen_cmd->add_option("--input", input_path, "input JSON file (\"-\" for stdin)")->required();
  gen_cmd->add_option("--output", output_path, "output file");

  CLI::App* self_cmd = app.add_subcommand("selfcheck", "run the full invariant suite");
  self_cmd->add_option("--seed", seed, "RNG seed (default 42)");
  self_cmd->add_option("--trials", trials, "sample-size scale, 1000 = base sizes")
      ->check(CLI::PositiveNumber);
  self_cmd->add_flag("--json", json_results, "machine-readable results");
  self_cmd->add_option("--output", output_path, "output file");

  std::vector<std::string> argv_copy(args);
  std::vector<char*> argv;
  argv.reserve(argv_copy.size() + 1);
  std::string program = "wildauto";
  argv.push_back(program.data());
  for (auto& a : argv_copy) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  if (analyze_cmd->parsed()) {
    AnalysisInput input = parse_analysis_input(parse_json_text(read_input(input_path)));
    AnalysisReport report = analyze(input.model, input.sigma);
    if (format == "text")
      emit_text(render_report_text(report), output_path, out);
    else
      emit(report_to_json(report), output_path, out);
    return 0;
  }

  if (snf_cmd->parsed()) {
    SmithDecomposition s = snf(matrix_from_options(inline_matrix, input_path));
    Json doc = smith_to_json(s);
    doc["schema_version"] = kSchemaVersion;
    emit(doc, output_path, out);
    return 0;
  }

  if (charpoly_cmd->parsed()) {
    IntPoly p = charpoly(matrix_from_options(inline_matrix, input_path));
    Json doc{{"schema_version", kSchemaVersion}, {"charpoly", poly_to_json(p)}};
    emit(doc, output_path, out);
    return 0;
  }

  if (qu_cmd->parsed()) {
    QuasiUnipotencyVerdict v = quasi_unipotency(matrix_from_options(inline_matrix, input_path));
    Json doc = quasi_unipotency_to_json(v);
    doc["schema_version"] = kSchemaVersion;
    emit(doc, output_path, out);
    return 0;
  }

  if (num_cmd->parsed()) {
    IntMatrix m = matrix_from_options(inline_matrix, input_path);
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    IntMatrix p;
    if (m.rows() == 2 && m.cols() == 2) {
      p = p_matrix(m);
      doc["matrix"] = matrix_to_json(m);
      doc["p_matrix"] = matrix_to_json(p);
    } else if (m.rows() == 3 && m.cols() == 3) {
      p = m;
      doc["matrix"] = matrix_to_json(m);
      doc["p_matrix"] = matrix_to_json(p);
    } else {
      throw DomainError("num-action expects a 2x2 automorphism matrix or a 3x3 Num action");
    }
    NumAction action = NumAction::explicit_matrix(p);
    AmplenessVerdict ample = ampleness_verdict(action);
    doc["sigma_ample_verdict"] = to_string(ample);
    if (ample == AmplenessVerdict::AllAmpleAreSigmaAmple) {
      long j = static_cast<long>(largest_jordan_block_quasi(p)) - 1;
      doc["j"] = std::to_string(j);
      doc["gk"] = Json{{"exact", std::to_string(j + 3)},
                       {"lower", std::to_string(j + 3)},
                       {"upper", std::to_string(j + 3)},
                       {"j", std::to_string(j)}};
      doc["note"] = "GK numbers read P as the Num action of an automorphism of a "
                    "dimension-2 product of one CM-free elliptic factor";
    } else {
      doc["j"] = nullptr;
      doc["gk"] = nullptr;
      doc["note"] = "P is not quasi-unipotent: no sigma-ample invertible sheaf exists";
    }
    emit(doc, output_path, out);
    return 0;
  }

  if (gk_cmd->parsed()) {
    AnalysisInput input = parse_analysis_input(parse_json_text(read_input(input_path)));
    GkResult gk = gk_dimension(input.model, input.sigma);
    Json doc = gk_to_json(gk);
    doc["schema_version"] = kSchemaVersion;
    emit(doc, output_path, out);
    return 0;
  }

  if (gen_cmd->parsed()) {
    GeneratesInput input = parse_generates_input(parse_json_text(read_input(input_path)));
    GenerationResult result = input.set_mode ? generates_set(input.model, input.points)
                                             : generates_point(input.model, input.points.front());
    Json doc = generation_to_json(result);
    doc["schema_version"] = kSchemaVersion;
    emit(doc, output_path, out);
    return 0;
  }

  if (self_cmd->parsed()) {
    std::vector<CheckResult> results = run_selfcheck(seed, trials);
    bool all_passed = true;
    for (const auto& r : results) all_passed = all_passed && r.passed;
    if (json_results) {
      Json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["seed"] = seed;
      doc["trials"] = trials;
      Json arr = Json::array();
      for (const auto& r : results)
        arr.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      doc["results"] = std::move(arr);
      doc["all_passed"] = all_passed;
      emit(doc, output_path, out);
    } else {
      std::ostringstream table;
      for (const auto& r : results) {
        table << "[" << (r.id < 10 ? " " : "") << r.id << "] " << (r.passed ? "PASS" : "FAIL")
              << "  " << r.name << " -- " << r.detail << "\n";
      }
      table << "selfcheck: " << (all_passed ? "all " : "FAILURES; ")
            << results.size() << " checks, seed " << seed << ", trials " << trials << "\n";
      emit_text(table.str(), output_path, out);
    }
    return all_passed ? 0 : 1;
  }

  err << "error: no subcommand\n" << app.help();
  return 2;
}

}  // namespace

}  // namespace wildauto
