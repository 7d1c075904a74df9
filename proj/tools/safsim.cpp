#include "safsim/saf/golden-examples.hpp"
#include "safsim/scenario/report.hpp"
#include "safsim/topology/generator.hpp"
#include "safsim/topology/topology-io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

using namespace safsim;

namespace {

enum ExitCode {
  kSuccess = 0,
  kValidationError = 1,
  kRuntimeError = 2,
};

struct RunOptions
{
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> runs;
  std::string out;
  std::string format = "csv";
  std::size_t parallel = 0;
};

int
runCommand(const RunOptions& opt)
{
  auto config = scenario::loadConfig(opt.config);
  if (opt.seed) {
    config.seed = *opt.seed;
  }
  if (opt.runs) {
    config.runs = *opt.runs;
  }
  config.validate();
  auto format = scenario::parseReportFormat(opt.format);
  auto report = scenario::runScenario(config, opt.parallel);

  if (opt.out.empty()) {
    scenario::writeReport(std::cout, report, format);
    return kSuccess;
  }
  scenario::saveReport(opt.out, report, format);
  const auto& names = scenario::metricNames();
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& s = report.summaries[i];
    std::printf("%-20s %.6f +- %.6f (%zu runs)\n", names[i].c_str(), s.mean, s.halfWidth, s.count);
  }
  return kSuccess;
}

int
topoGenCommand(const std::string& configPath, std::optional<std::uint64_t> seed, const std::string& out)
{
  auto config = scenario::loadConfig(configPath);
  if (seed) {
    config.seed = *seed;
  }
  auto topology = topo::generate(config.topologySpec(config.seed));
  if (out.empty()) {
    topo::writeTopology(std::cout, topology);
  }
  else {
    topo::saveTopology(out, topology);
  }
  return kSuccess;
}

int
topoCheckCommand(const std::string& path)
{
  auto topology = topo::loadTopology(path);
  auto problems = topo::checkTopology(topology);
  std::printf("nodes %zu, edges %zu, routers %zu, clients %zu, servers %zu\n", topology.size(),
              topology.edges().size(), topology.nodesOfKind(topo::NodeKind::Router).size(),
              topology.nodesOfKind(topo::NodeKind::Client).size(),
              topology.nodesOfKind(topo::NodeKind::Server).size());
  if (topology.nodesOfKind(topo::NodeKind::Router).size() >= 2) {
    std::printf("connectivity %.6f\n", topo::connectivity(topology));
  }
  for (const auto& p : problems) {
    std::printf("problem: %s\n", p.c_str());
  }
  std::printf("%s\n", problems.empty() ? "ok" : "invalid");
  return problems.empty() ? kSuccess : kValidationError;
}

int
goldenCommand()
{
  bool all = true;
  for (const auto& c : saf::checkGoldenExamples()) {
    std::printf("%s %s: %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    all = all && c.passed;
  }
  return all ? kSuccess : kRuntimeError;
}

} // namespace

int
main(int argc, char** argv)
{
  CLI::App app{"Forwarding strategy simulator for named data networks"};
  app.require_subcommand(1);

  RunOptions runOpt;
  auto* run = app.add_subcommand("run", "run a scenario and report its metrics");
  run->add_option("config", runOpt.config, "scenario file")->required()->check(CLI::ExistingFile);
  run->add_option("--seed", runOpt.seed, "base seed, overrides the scenario");
  run->add_option("--runs", runOpt.runs, "number of runs, overrides the scenario");
  run->add_option("--out", runOpt.out, "output file; stdout if omitted");
  run->add_option("--format", runOpt.format, "csv or report")->check(CLI::IsMember({"csv", "report"}));
  run->add_option("--parallel", runOpt.parallel, "worker threads; default from SAFSIM_PARALLEL or all cores");

  auto* topoCmd = app.add_subcommand("topo", "generate or check topologies");
  topoCmd->require_subcommand(1);
  std::string genConfig;
  std::optional<std::uint64_t> genSeed;
  std::string genOut;
  auto* gen = topoCmd->add_subcommand("gen", "generate the topology of a scenario");
  gen->add_option("spec", genConfig, "scenario file with a [topology] section")->required()->check(CLI::ExistingFile);
  gen->add_option("--seed", genSeed, "generator seed; the scenario seed if omitted");
  gen->add_option("--out", genOut, "output file; stdout if omitted");
  std::string checkPath;
  auto* check = topoCmd->add_subcommand("check", "validate a topology file");
  check->add_option("file", checkPath, "topology file")->required()->check(CLI::ExistingFile);

  auto* golden = app.add_subcommand("golden-examples", "replay the worked forwarding table examples");

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kSuccess : kValidationError;
  }

  try {
    if (*run) {
      return runCommand(runOpt);
    }
    if (*gen) {
      return topoGenCommand(genConfig, genSeed, genOut);
    }
    if (*check) {
      return topoCheckCommand(checkPath);
    }
    if (*golden) {
      return goldenCommand();
    }
  }
  catch (const scenario::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationError;
  }
  catch (const topo::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationError;
  }
  catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationError;
  }
  catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kSuccess;
}
