#include <chrono>
#include <ostream>

#include "prlab/error.hpp"
#include "report.hpp"

namespace prlab::cli {

namespace {

json envelope(const Report& r, double seconds) {
  json e;
  e["verb"] = r.verb;
  e["verdict"] = r.verdict;
  e["exit_code"] = r.exit;
  e["result"] = r.result;
  e["certificate"] = r.certificate;
  e["provenance"] = r.provenance;
  e["timing"] = {{"seconds", seconds}};
  e["bounds"] = r.bounds;
  return e;
}

void render_text(const Report& r, std::ostream& out) {
  out << "verdict: " << r.verdict << "\n";
  for (const auto& l : r.lines) out << l << "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals globals;
  CLI::App app{"Partition regularity toolkit", "prlab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", globals.json, "Emit one JSON envelope on standard output");
  app.add_option("--threads", globals.threads, "Worker threads for coloring search")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", globals.seed, "Seed for randomized verbs");
  app.add_option("--max-nodes", globals.max_nodes, "Node cap for coloring search")->check(CLI::PositiveNumber);

  std::vector<Command> commands;
  register_commands(app, globals, commands);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const Command* chosen = nullptr;
  for (const auto& c : commands) {
    if (c.app->parsed()) chosen = &c;
  }
  if (!chosen) {
    err << "no command given; run with --help\n";
    return kUsage;
  }

  Report report;
  report.verb = chosen->verb;
  const auto start = std::chrono::steady_clock::now();
  try {
    chosen->run(report);
  } catch (const BoundExceeded& e) {
    report.verdict = "bound_exceeded";
    report.exit = kUnknown;
    report.result = json::object();
    report.result["message"] = e.what();
    report.lines = {std::string("bound exceeded: ") + e.what()};
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (globals.json) {
    out << envelope(report, seconds).dump(2) << "\n";
  } else {
    render_text(report, out);
  }
  return report.exit;
}

}  // namespace prlab::cli
