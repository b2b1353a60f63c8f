// omegalab: command-line entry point.
//
// Exit status: 0 pass, 1 failures (a suite or an audit failed), 2 usage
// error (bad arguments, malformed input, unknown suite, write failure).

#include "common.hpp"
#include "verbs.hpp"

#include "omega/checks/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

using namespace omegalab;
namespace checks = omega::checks;

std::vector<std::string> expand_suites(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& s : checks::suite_list()) out.push_back(s.name);
    } else {
      out.push_back(n);
    }
  }
  return out;
}

std::vector<checks::SuiteReport> run_all(const std::vector<std::string>& names, const Options& o) {
  std::vector<checks::SuiteReport> reports;
  for (const auto& n : expand_suites(names)) {
    try {
      reports.push_back(checks::run_suite(n, o.seed, o.scale));
    } catch (const checks::UnknownSuite& e) {
      throw UsageError(e.what());
    }
  }
  return reports;
}

int failures_code(const std::vector<checks::SuiteReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return kFailures;
  return kPass;
}

int suite_command(const Options& o, bool list) {
  if (list) {
    for (const auto& s : checks::suite_list()) std::cout << s.name << "  " << s.summary << "\n";
    return kPass;
  }
  if (o.args.empty()) throw UsageError("name at least one suite (or all); known suites: " + checks::suite_names());
  const auto reports = run_all(o.args, o);
  const std::string json = checks::reports_json(reports, o.timing);
  std::cout << (o.json ? json : checks::reports_markdown(reports, o.timing));
  if (!o.out.empty()) write_file(o.out, json);
  return failures_code(reports);
}

int report_command(const Options& o, const std::string& markdown_path) {
  const auto reports = run_all(o.args.empty() ? std::vector<std::string>{"all"} : o.args, o);
  const std::string json = checks::reports_json(reports, o.timing);
  const std::string md = checks::reports_markdown(reports, o.timing);
  write_file(o.out.empty() ? "omegalab-report.json" : o.out, json);
  if (!markdown_path.empty()) write_file(markdown_path, md);
  std::cout << (o.json ? json : md);
  return failures_code(reports);
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact desk-scale checks for omega^omega-bases, infinitesimal fields and free group topologies.", "omegalab"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--scale", opt.scale, "multiplies suite sample counts")->check(CLI::Range(1u, 1000u))->capture_default_str();
  app.add_flag("--json", opt.json, "print JSON instead of text");
  app.add_option("--out", opt.out, "also write the JSON result to this file");
  app.add_option("--in", opt.in, "read input from this file instead of stdin");
  app.add_flag("--timing", opt.timing, "include wall time in suite reports (breaks byte equality)");

  int code = kPass;
  std::map<std::string, CLI::App*> groups;
  std::vector<Verb> verbs;
  for (auto part : {algebra_verbs(), group_verbs(), order_verbs(), uniformity_verbs()})
    verbs.insert(verbs.end(), part.begin(), part.end());
  for (const auto& v : verbs) {
    CLI::App*& g = groups[v.group];
    if (!g) {
      g = app.add_subcommand(v.group, v.group + " verbs");
      g->require_subcommand(1);
      g->fallthrough();
    }
    CLI::App* sub = g->add_subcommand(v.name, v.summary);
    sub->fallthrough();
    sub->add_option("args", opt.args, "arguments");
    sub->callback([&, run = v.run] {
      code = guarded([&] {
        const Outcome r = run(opt);
        emit(r, opt);
        return r.code;
      });
    });
  }

  bool list = false;
  CLI::App* suite = app.add_subcommand("suite", "run named property suites (or all)");
  suite->fallthrough();
  suite->add_option("names", opt.args, "suite names");
  suite->add_flag("--list", list, "list the known suites");
  suite->callback([&] { code = guarded([&] { return suite_command(opt, list); }); });

  std::string markdown;
  CLI::App* report = app.add_subcommand("report", "run suites, write the JSON report and print the markdown table");
  report->fallthrough();
  report->add_option("names", opt.args, "suite names (default all)");
  report->add_option("--markdown", markdown, "also write the markdown table to this file");
  report->callback([&] { code = guarded([&] { return report_command(opt, markdown); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  return code;
}
