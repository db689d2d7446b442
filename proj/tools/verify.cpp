// verify <suite> [--prime 3,5] [--trunc-deg N] [--trunc-z M] [--input name|file] [--out path] [--jobs J]
// exit status: 0 every check passed, 1 a check failed, 2 bad input

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mhikita/errors.hpp"
#include "mhikita/suites.hpp"

namespace {

bool write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks of Frobenius-constant quantizations, trace modules and quantum connections"};
  mh::RunConfig cfg;
  std::string out;
  bool list = false;
  app.add_option("suite", cfg.suite, "weyl-center | restricted-axioms | springer-sl2 | hypertoric-match | pcurvature-lin | hikita-classical");
  app.add_option("--prime", cfg.primes, "odd primes")->delimiter(',');
  app.add_option("--trunc-deg", cfg.N, "conical degree window N (>= 2)");
  app.add_option("--trunc-z", cfg.M, "Novikov z-degree window M (>= 1)");
  app.add_option("--input", cfg.inputs, "built-in name or gauge file; repeat or separate by commas")->delimiter(',');
  app.add_option("--out", out, "report path (default stdout)");
  app.add_option("--jobs", cfg.jobs, "worker threads over (input, prime) cells");
  app.add_option("--fixture", cfg.fixture, "restricted-axioms: weyl | weyl-corrupted");
  app.add_option("--structure", cfg.structure, "pcurvature-lin: structure data file for the Gale dual");
  app.add_flag("--timings", cfg.timings, "add per-cell wall times (breaks byte-identical reruns)");
  app.add_flag("--list", list, "list suites and built-in inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list) {
    for (auto& s : mh::suite_names()) std::cout << "suite " << s << "\n";
    for (auto& s : mh::builtin_input_names()) std::cout << "input " << s << "\n";
    return 0;
  }

  nlohmann::json doc;
  int code = 0;
  try {
    auto rep = mh::run_suite(cfg);
    doc = mh::report_json(rep);
    code = rep.passed() ? 0 : 1;
  } catch (const mh::InputError& e) {
    doc = mh::error_json(cfg, "input", e.what());
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  }
  auto bad = mh::validate_report(doc);
  if (!bad.empty()) {
    std::cerr << "internal error: report does not match its layout: " << bad << "\n";
    return 1;
  }
  if (!write_out(out, mh::dump_report(doc))) {
    std::cerr << "error: cannot write " << out << "\n";
    return 2;
  }
  if (!out.empty() && out != "-" && doc.contains("summary"))
    std::cout << cfg.suite << ": " << doc["summary"]["passed"] << " passed, " << doc["summary"]["failed"] << " failed, "
              << doc["summary"]["skipped"] << " skipped\n";
  return code;
}
