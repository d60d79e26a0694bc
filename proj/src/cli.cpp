#include "hkz/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "hkz/serialize.hpp"

namespace hkz {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage:
    case ErrorKind::ParseError:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::UnknownCatalogName:
    case ErrorKind::TooManyPrimes:
      return 1;
    case ErrorKind::InternalConsistencyFailure:
    case ErrorKind::MultipleDistinctDecompositions:
      return 3;
    default:
      return 2;
  }
}

namespace {

struct Options {
  std::string command;
  std::string model_path;
  std::string catalog;
  std::string cls;
  std::string cls2;
  std::string generators_path;
  std::string decomposition_path;
  std::string output_path;
  std::string batch_input;
  std::string batch_op = "decompose";
  bool check_oracle = false;
  bool pretty = false;
};

struct Outcome {
  Json report;
  int code = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
  }
}

Outcome error_outcome(const Error& e) {
  Json doc = error_json(to_string(e.kind()), e.what());
  if (const auto* mv = dynamic_cast<const ModelValidationError*>(&e)) doc["violations"] = to_json(mv->violations());
  return {std::move(doc), exit_code(e.kind())};
}

HKModel resolve_model(const Options& opt) {
  if (!opt.model_path.empty() && !opt.catalog.empty())
    throw Error(ErrorKind::Usage, "give either --model or --catalog, not both");
  if (!opt.model_path.empty()) return load_model_file(opt.model_path);
  if (!opt.catalog.empty()) return catalog_model(opt.catalog);
  throw Error(ErrorKind::Usage, "a model is required (--model <path> or --catalog <name>)");
}

DivisorClass require_class(const std::string& csv, const HKModel* model, const char* flag) {
  if (csv.empty()) throw Error(ErrorKind::Usage, std::string(flag) + " is required");
  DivisorClass c(parse_rational_list(csv));
  if (model) model->space().check_class(c);
  return c;
}

Outcome decompose_report(const HKModel& model, const DivisorClass& d, bool check_oracle) {
  const Decomposition dec = decompose(model, d);
  Outcome o{to_json(dec), 0};
  if (check_oracle) {
    bool agrees = false;
    try {
      agrees = decompose_bruteforce(model, d).same_parts(dec);
    } catch (const Error& e) {
      o.report["oracle_error"] = error_json(to_string(e.kind()), e.what());
    }
    o.report["oracle_agrees"] = agrees;
    if (!agrees) o.code = 3;
  }
  return o;
}

Outcome classify_report(const HKModel& model, const DivisorClass& d, bool check_oracle) {
  const ClassReport rep = d_dimension_class(model, d);
  Outcome o{to_json(rep), 0};
  if (check_oracle) {
    bool agrees = false;
    try {
      agrees = decompose_bruteforce(model, d).same_parts(rep.decomposition);
    } catch (const Error& e) {
      o.report["oracle_error"] = error_json(to_string(e.kind()), e.what());
    }
    o.report["oracle_agrees"] = agrees;
    if (!agrees) o.code = 3;
  }
  return o;
}

Outcome run_validate(const Options& opt) {
  HKModel model;
  if (!opt.model_path.empty()) {
    model = parse_model(read_file(opt.model_path));
  } else {
    model = resolve_model(opt);
  }
  const auto violations = validate_model(model);
  Json doc;
  doc["valid"] = violations.empty();
  doc["violations"] = to_json(violations);
  return {std::move(doc), violations.empty() ? 0 : 2};
}

Outcome run_catalog(const Options& opt) {
  if (opt.catalog.empty()) {
    Json names = Json::array();
    for (const auto& n : catalog_names()) names.push_back(n);
    return {Json{{"catalog", std::move(names)}}, 0};
  }
  return {Json::parse(serialize_model(catalog_model(opt.catalog))), 0};
}

Outcome run_verify(const Options& opt) {
  const HKModel model = resolve_model(opt);
  const DivisorClass d = require_class(opt.cls, &model, "--class");
  const Decomposition dec = opt.decomposition_path.empty()
                                ? decompose(model, d)
                                : decomposition_from_json(parse_json_file(opt.decomposition_path));
  const VerifyReport report = verify(model, d, dec);
  Json doc = to_json(report);
  doc["decomposition"] = to_json(dec);
  return {std::move(doc), report.passed() ? 0 : 2};
}

Outcome run_cone(const Options& opt) {
  const HKModel model = resolve_model(opt);
  const DivisorClass l = require_class(opt.cls, &model, "--class");
  Json doc;
  doc["positive_cone"] = to_json(in_positive_cone(model, l));
  doc["closed_positive_cone"] = to_json(in_closed_positive_cone(model, l));
  doc["dual_bk_cone"] = to_json(in_dual_bk_cone(model, l));
  if (!opt.cls2.empty()) {
    const DivisorClass d = require_class(opt.cls2, &model, "--class2");
    doc["null_pair"] = to_json(null_pair_classify(model, l, d));
  }
  return {std::move(doc), 0};
}

Outcome run_extremal(const Options& opt) {
  std::vector<DivisorClass> generators;
  if (!opt.generators_path.empty()) {
    generators = generators_from_json(parse_json_file(opt.generators_path));
  } else {
    const HKModel model = resolve_model(opt);
    for (const auto& p : model.primes()) generators.push_back(p.cls);
  }
  const DivisorClass l = require_class(opt.cls, nullptr, "--class");
  return {to_json(extremal_ray_test(generators, l)), 0};
}

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return error_outcome(e);
  }
}

std::string render(const Json& doc, bool pretty) { return pretty ? doc.dump(2) : doc.dump(); }

int run_batch(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.batch_op != "decompose" && opt.batch_op != "classify")
    throw Error(ErrorKind::Usage, "--op must be decompose or classify");
  const HKModel model = resolve_model(opt);
  std::istringstream in(read_file(opt.batch_input));

  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }

  std::vector<Outcome> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      results[i] = guarded([&] {
        const DivisorClass d = require_class(lines[i], &model, "class");
        return opt.batch_op == "classify" ? classify_report(model, d, opt.check_oracle)
                                          : decompose_report(model, d, opt.check_oracle);
      });
    }
  };
  const std::size_t n_threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(lines.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::size_t failed = 0;
  for (const auto& r : results) {
    out << render(r.report, opt.pretty) << '\n';
    if (r.code != 0) ++failed;
  }
  err << lines.size() << " processed, " << lines.size() - failed << " ok, " << failed << " failed\n";
  return 0;
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("--model", opt.model_path, "model JSON file");
  sub->add_option("--catalog", opt.catalog, "built-in model name");
  sub->add_flag("--pretty", opt.pretty, "indented JSON");
  sub->add_option("--output", opt.output_path, "write the report to a file");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Zariski q-decomposition of divisor classes on lattice models of HyperKaehler manifolds", "hkz"};
  app.require_subcommand(1);

  auto* dec = app.add_subcommand("decompose", "Zariski q-decomposition D = P + N");
  add_common(dec, opt);
  dec->add_option("--class", opt.cls, "class D as comma-separated rationals");
  dec->add_flag("--check-oracle", opt.check_oracle, "cross-check against the brute-force oracle");

  auto* ver = app.add_subcommand("verify", "check the defining conditions of a decomposition");
  add_common(ver, opt);
  ver->add_option("--class", opt.cls, "class D");
  ver->add_option("--decomposition", opt.decomposition_path, "decomposition JSON to verify (default: computed)");

  auto* cone = app.add_subcommand("cone", "cone membership and null-pair classification");
  add_common(cone, opt);
  cone->add_option("--class", opt.cls, "class L");
  cone->add_option("--class2", opt.cls2, "class D with q(L, D) = 0");

  auto* cls = app.add_subcommand("classify", "D-dimension regime");
  add_common(cls, opt);
  cls->add_option("--class", opt.cls, "class D");
  cls->add_flag("--check-oracle", opt.check_oracle, "cross-check against the brute-force oracle");

  auto* ext = app.add_subcommand("extremal", "extremal ray test");
  add_common(ext, opt);
  ext->add_option("--class", opt.cls, "class L");
  ext->add_option("--generators", opt.generators_path, "JSON list of generator classes (default: model primes)");

  auto* val = app.add_subcommand("validate", "validate a model");
  add_common(val, opt);

  auto* cat = app.add_subcommand("catalog", "list built-in models, or print one with --catalog");
  add_common(cat, opt);

  auto* bat = app.add_subcommand("batch", "decompose every class in a file");
  add_common(bat, opt);
  bat->add_option("input", opt.batch_input, "file with one comma-separated class per line")->required();
  bat->add_option("--op", opt.batch_op, "decompose (default) or classify");
  bat->add_flag("--check-oracle", opt.check_oracle, "cross-check against the brute-force oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("Usage", e.what()).dump() << '\n';
    return 1;
  }
  opt.command = app.get_subcommands().front()->get_name();

  if (opt.command == "batch") {
    try {
      return run_batch(opt, out, err);
    } catch (const Error& e) {
      out << error_outcome(e).report.dump() << '\n';
      return exit_code(e.kind());
    }
  }

  const Outcome o = guarded([&]() -> Outcome {
    if (opt.command == "decompose") {
      const HKModel model = resolve_model(opt);
      return decompose_report(model, require_class(opt.cls, &model, "--class"), opt.check_oracle);
    }
    if (opt.command == "classify") {
      const HKModel model = resolve_model(opt);
      return classify_report(model, require_class(opt.cls, &model, "--class"), opt.check_oracle);
    }
    if (opt.command == "verify") return run_verify(opt);
    if (opt.command == "cone") return run_cone(opt);
    if (opt.command == "extremal") return run_extremal(opt);
    if (opt.command == "validate") return run_validate(opt);
    return run_catalog(opt);
  });

  const std::string text = render(o.report, opt.pretty) + "\n";
  if (!opt.output_path.empty() && o.report.find("error") == o.report.end()) {
    std::ofstream file(opt.output_path, std::ios::binary);
    if (!file) {
      out << error_json("ParseError", "cannot write '" + opt.output_path + "'").dump() << '\n';
      return 1;
    }
    file << text;
  } else {
    out << text;
  }
  return o.code;
}

}  // namespace hkz
