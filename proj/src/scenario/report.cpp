#include "safsim/scenario/report.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace safsim::scenario {

namespace {

std::string
formatNumber(double value)
{
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

nlohmann::ordered_json
summaryJson(const Summary& s)
{
  return {{"mean", s.mean}, {"half_width", s.halfWidth}, {"runs", s.count}};
}

nlohmann::ordered_json
runJson(const RunRecord& r)
{
  const auto& m = r.metrics;
  nlohmann::ordered_json j;
  j["run"] = r.run;
  j["seed"] = r.seed;
  for (const auto& name : metricNames()) {
    j[name] = metricValue(m, name);
  }
  j["interests_issued"] = m.interestsIssued;
  j["satisfied"] = m.satisfied;
  j["timed_out"] = m.timedOut;
  j["mean_delay"] = m.meanDelay;
  j["packet_drops"] = {
    {"loop", m.packetDrops.loop},
    {"queue", m.packetDrops.queue},
    {"drop_face", m.packetDrops.dropFace},
    {"link", m.packetDrops.link},
    {"unsolicited_data", m.packetDrops.unsolicitedData},
  };

  auto links = nlohmann::ordered_json::array();
  const auto& edges = r.topology.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    links.push_back({
      {"edge", i},
      {"a", e.a},
      {"b", e.b},
      {"level", topo::toString(e.level)},
      {"bandwidth", e.bandwidth},
      {"interests", m.links.at(i).interests},
      {"data", m.links.at(i).data},
    });
  }
  j["links"] = std::move(links);

  auto nodes = nlohmann::ordered_json::array();
  for (const auto& n : r.topology.nodes()) {
    const auto& c = m.nodes.at(n.id);
    nodes.push_back({
      {"node", n.id},
      {"kind", topo::toString(n.kind)},
      {"as", n.as},
      {"cache_hits", c.cacheHits},
      {"cache_misses", c.cacheMisses},
      {"interests_received", c.interestsReceived},
      {"data_received", c.dataReceived},
    });
  }
  j["nodes"] = std::move(nodes);
  return j;
}

} // namespace

ReportFormat
parseReportFormat(std::string_view name)
{
  if (name == "csv") {
    return ReportFormat::Csv;
  }
  if (name == "report") {
    return ReportFormat::Report;
  }
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

void
writeCsv(std::ostream& out, const ScenarioReport& report)
{
  out << "run,seed";
  for (const auto& name : metricNames()) {
    out << ',' << name;
  }
  out << '\n';
  for (const auto& r : report.runs) {
    out << r.run << ',' << r.seed;
    for (const auto& name : metricNames()) {
      out << ',' << formatNumber(metricValue(r.metrics, name));
    }
    out << '\n';
  }
  out << "mean,";
  for (const auto& s : report.summaries) {
    out << ',' << formatNumber(s.mean);
  }
  out << '\n';
}

void
writeJsonReport(std::ostream& out, const ScenarioReport& report)
{
  nlohmann::ordered_json j;
  auto summary = nlohmann::ordered_json::object();
  const auto& names = metricNames();
  for (std::size_t i = 0; i < names.size(); ++i) {
    summary[names[i]] = summaryJson(report.summaries.at(i));
  }
  j["summary"] = std::move(summary);
  auto runs = nlohmann::ordered_json::array();
  for (const auto& r : report.runs) {
    runs.push_back(runJson(r));
  }
  j["runs"] = std::move(runs);
  out << j.dump(2) << '\n';
}

void
writeReport(std::ostream& out, const ScenarioReport& report, ReportFormat format)
{
  if (format == ReportFormat::Csv) {
    writeCsv(out, report);
  }
  else {
    writeJsonReport(out, report);
  }
}

void
saveReport(const std::filesystem::path& path, const ScenarioReport& report, ReportFormat format)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  writeReport(out, report, format);
  if (!out) {
    throw std::runtime_error("error while writing " + path.string());
  }
}

} // namespace safsim::scenario
