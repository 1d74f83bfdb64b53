// Command-line front end: loads JSON descriptions of setoids, families,
// categories and functors, runs the checkers and constructions, and emits
// human-readable text plus an optional JSON report.
//
// Exit codes: 0 all checks pass, 1 a checked law fails (witness printed),
// 2 malformed or incomplete input.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "setcat/commands.hpp"

namespace {

setcat::io::json read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw setcat::malformed_input("cannot read input file: " + path);
  return setcat::io::json::parse(in);
}

void write_report(const std::string& path, const setcat::io::json& report) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw setcat::malformed_input("cannot write report file: " + path);
  out << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite setoid/category kernel"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string input_path, report_path;
  setcat::cmd::Options opts;
  app.add_option("--input", input_path, "Input JSON file");
  app.add_option("--report", report_path, "Write a JSON report here");
  app.add_flag("--strict-closure", opts.strict_closure,
               "Require eq relations to be given already closed");
  app.add_flag("--autocomplete-transports", opts.autocomplete,
               "Fill in identity and composite transports");
  app.add_option("--seed", opts.seed, "Base random seed");
  app.add_option("--max-index", opts.max_index,
                 "Largest generated index setoid");
  app.add_option("--max-fiber", opts.max_fiber, "Largest generated fiber");
  app.add_option("--samples", opts.samples, "Number of seeds for the suite");

  auto* validate = app.add_subcommand("validate", "Check the laws of a "
                                                  "described structure");
  auto* sum = app.add_subcommand("sum", "Build the setoid sum of a family");
  auto* build_c = app.add_subcommand("build-c", "Build the category of "
                                                "fiber maps");
  auto* build_s = app.add_subcommand("build-s", "Build the category of "
                                                "functional relations");
  auto* check_iso = app.add_subcommand("check-iso", "Verify the two built "
                                                    "categories are "
                                                    "isomorphic");
  auto* full_image = app.add_subcommand("full-image",
                                        "Build and verify the full image of "
                                        "the family's functor");
  auto* roundtrip = app.add_subcommand("roundtrip",
                                       "Translate between the two category "
                                       "presentations and back");
  auto* suite = app.add_subcommand("suite", "Run the randomized law suite");

  CLI11_PARSE(app, argc, argv);

  try {
    setcat::cmd::CmdResult res;
    if (app.got_subcommand(suite)) {
      res = setcat::cmd::cmd_suite(opts);
    } else {
      if (input_path.empty()) {
        std::cerr << "error: --input is required\n";
        return 2;
      }
      setcat::io::json input = read_input(input_path);
      if (app.got_subcommand(validate))
        res = setcat::cmd::cmd_validate(input, opts);
      else if (app.got_subcommand(sum))
        res = setcat::cmd::cmd_sum(input, opts);
      else if (app.got_subcommand(build_c))
        res = setcat::cmd::cmd_build_c(input, opts);
      else if (app.got_subcommand(build_s))
        res = setcat::cmd::cmd_build_s(input, opts);
      else if (app.got_subcommand(check_iso))
        res = setcat::cmd::cmd_check_iso(input, opts);
      else if (app.got_subcommand(full_image))
        res = setcat::cmd::cmd_full_image(input, opts);
      else if (app.got_subcommand(roundtrip))
        res = setcat::cmd::cmd_roundtrip(input, opts);
    }
    std::cout << res.text << "\n";
    write_report(report_path, res.report);
    return res.code;
  } catch (const setcat::malformed_input& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const setcat::incomplete_input& e) {
    std::cerr << "incomplete input: " << e.what() << "\n";
    return 2;
  } catch (const setcat::domain_mismatch& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const setcat::precondition_failed& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const setcat::io::json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  }
}
