// Copyright 2026 The reactsec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reactsec/io.h"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "reactsec/fixtures.h"

namespace reactsec::io {
namespace {

using nlohmann::json;

// ----------------------------------------------------------------------------
// YAML reading.

std::string LineOf(const YAML::Node& node) {
  const YAML::Mark mark = node.Mark();
  if (mark.is_null() || mark.line < 0) return "";
  return "line " + std::to_string(mark.line + 1);
}

// Collects violations while walking a parsed document, and remembers where
// each element came from so that model-level violations can be mapped back
// to source lines.
class Reader {
 public:
  void Add(std::string code, std::string message, const YAML::Node& node) {
    violations_.push_back({std::move(code), std::move(message), LineOf(node)});
  }

  void Remember(const std::string& where, const YAML::Node& node) {
    lines_[where] = LineOf(node);
  }

  void CheckKeys(const YAML::Node& map, const std::set<std::string>& allowed,
                 const std::string& context) {
    for (const auto& kv : map) {
      const std::string key = kv.first.Scalar();
      if (!allowed.contains(key)) {
        Add("E-UNKNOWN-KEY",
            "unknown key '" + key + "'" +
                (context.empty() ? "" : " in " + context),
            kv.first);
      }
    }
  }

  bool RequireMap(const YAML::Node& node, const std::string& what) {
    if (node.IsMap()) return true;
    Add("E-TYPE", what + " must be a mapping", node);
    return false;
  }

  bool RequireSequence(const YAML::Node& node, const std::string& what) {
    if (node.IsSequence()) return true;
    Add("E-TYPE", what + " must be a list", node);
    return false;
  }

  std::optional<double> Number(const YAML::Node& parent, const char* key,
                               const std::string& what, bool required) {
    const YAML::Node node = parent[key];
    if (!node) {
      if (required) Add("E-MISSING", what + " is missing '" + key + "'", parent);
      return std::nullopt;
    }
    if (node.IsScalar()) {
      try {
        const double value = node.as<double>();
        if (std::isfinite(value)) return value;
      } catch (const YAML::BadConversion&) {
      }
    }
    Add("E-TYPE", std::string(key) + " of " + what + " must be a finite number",
        node);
    return std::nullopt;
  }

  std::optional<std::string> String(const YAML::Node& parent, const char* key,
                                    const std::string& what, bool required) {
    const YAML::Node node = parent[key];
    if (!node) {
      if (required) Add("E-MISSING", what + " is missing '" + key + "'", parent);
      return std::nullopt;
    }
    if (!node.IsScalar()) {
      Add("E-TYPE", std::string(key) + " of " + what + " must be a string", node);
      return std::nullopt;
    }
    return node.Scalar();
  }

  std::optional<bool> Bool(const YAML::Node& parent, const char* key,
                           const std::string& what) {
    const YAML::Node node = parent[key];
    if (!node) return std::nullopt;
    if (node.IsScalar()) {
      try {
        return node.as<bool>();
      } catch (const YAML::BadConversion&) {
      }
    }
    Add("E-TYPE", std::string(key) + " of " + what + " must be true or false",
        node);
    return std::nullopt;
  }

  std::optional<std::uint64_t> Count(const YAML::Node& parent, const char* key,
                                     const std::string& what) {
    const YAML::Node node = parent[key];
    if (!node) return std::nullopt;
    if (node.IsScalar()) {
      try {
        return node.as<std::uint64_t>();
      } catch (const YAML::BadConversion&) {
      }
    }
    Add("E-TYPE",
        std::string(key) + " of " + what + " must be a nonnegative integer",
        node);
    return std::nullopt;
  }

  // Appends model-level violations, replacing symbolic locations with the
  // remembered source lines.
  void AddModel(const std::vector<Violation>& model) {
    for (Violation v : model) {
      auto it = lines_.find(v.where);
      if (it != lines_.end() && !it->second.empty()) {
        v.where = it->second + " (" + v.where + ")";
      }
      violations_.push_back(std::move(v));
    }
  }

  void ThrowIfAny(std::string_view source) {
    if (violations_.empty()) return;
    for (Violation& v : violations_) {
      v.where = std::string(source) + (v.where.empty() ? "" : ": " + v.where);
    }
    throw ValidationError(std::move(violations_));
  }

 private:
  std::vector<Violation> violations_;
  std::map<std::string, std::string> lines_;
};

YAML::Node ParseYaml(std::string_view text, std::string_view source) {
  try {
    return YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw SyntaxError(std::string(source) + ": line " +
                      std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
}

void CheckFormatVersion(const YAML::Node& root, std::string_view source,
                        bool required) {
  const YAML::Node version = root["format_version"];
  if (!version) {
    if (!required) return;
    throw SchemaVersionError(std::string(source) +
                             ": missing format_version (expected " +
                             std::to_string(kSystemFormatVersion) + ")");
  }
  int value = -1;
  try {
    value = version.as<int>();
  } catch (const YAML::BadConversion&) {
  }
  if (value != kSystemFormatVersion) {
    throw SchemaVersionError(std::string(source) + ": " + LineOf(version) +
                             ": unsupported format_version '" +
                             version.Scalar() + "' (expected " +
                             std::to_string(kSystemFormatVersion) + ")");
  }
}

SystemSpec ReadGraph(const YAML::Node& root, Reader& reader) {
  SystemSpec spec;
  if (auto start = reader.String(root, "start", "system", true)) {
    spec.start = *start;
  }
  reader.Remember("start", root["start"]);
  const YAML::Node vertices = root["vertices"];
  if (!vertices) {
    reader.Add("E-MISSING", "system is missing 'vertices'", root);
  } else if (reader.RequireSequence(vertices, "vertices")) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const YAML::Node v = vertices[i];
      const std::string where = "vertices[" + std::to_string(i) + "]";
      reader.Remember(where, v);
      if (!reader.RequireMap(v, where)) continue;
      reader.CheckKeys(v, {"id", "reward"}, where);
      VertexSpec vs;
      vs.id = reader.String(v, "id", where, true).value_or("");
      vs.reward = reader.Number(v, "reward", where, false).value_or(0.0);
      spec.vertices.push_back(std::move(vs));
    }
  }
  const YAML::Node edges = root["edges"];
  if (!edges) {
    reader.Add("E-MISSING", "system is missing 'edges'", root);
  } else if (reader.RequireSequence(edges, "edges")) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const YAML::Node e = edges[i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      reader.Remember(where, e);
      if (!reader.RequireMap(e, where)) continue;
      reader.CheckKeys(e, {"id", "from", "to", "surface"}, where);
      EdgeSpec es;
      es.id = reader.String(e, "id", where, true).value_or("");
      es.from = reader.String(e, "from", where, true).value_or("");
      es.to = reader.String(e, "to", where, true).value_or("");
      es.surface = reader.Number(e, "surface", where, true).value_or(1.0);
      spec.edges.push_back(std::move(es));
    }
  }
  return spec;
}

HornSpec ReadHorn(const YAML::Node& horn, Reader& reader) {
  HornSpec spec;
  if (!reader.RequireMap(horn, "horn")) return spec;
  reader.CheckKeys(horn, {"propositions", "clauses"}, "horn");
  const YAML::Node props = horn["propositions"];
  if (!props) {
    reader.Add("E-MISSING", "horn is missing 'propositions'", horn);
  } else if (reader.RequireSequence(props, "propositions")) {
    for (std::size_t i = 0; i < props.size(); ++i) {
      const YAML::Node p = props[i];
      const std::string where = "propositions[" + std::to_string(i) + "]";
      reader.Remember(where, p);
      if (!reader.RequireMap(p, where)) continue;
      reader.CheckKeys(p, {"id", "reward"}, where);
      PropositionSpec ps;
      ps.id = reader.String(p, "id", where, true).value_or("");
      ps.reward = reader.Number(p, "reward", where, false).value_or(0.0);
      spec.propositions.push_back(std::move(ps));
    }
  }
  const YAML::Node clauses = horn["clauses"];
  if (!clauses) {
    reader.Add("E-MISSING", "horn is missing 'clauses'", horn);
  } else if (reader.RequireSequence(clauses, "clauses")) {
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      const YAML::Node c = clauses[i];
      const std::string where = "clauses[" + std::to_string(i) + "]";
      reader.Remember(where, c);
      if (!reader.RequireMap(c, where)) continue;
      reader.CheckKeys(c, {"id", "antecedents", "consequent", "surface"},
                       where);
      ClauseSpec cs;
      cs.id = reader.String(c, "id", where, true).value_or("");
      cs.consequent = reader.String(c, "consequent", where, true).value_or("");
      cs.surface = reader.Number(c, "surface", where, true).value_or(1.0);
      const YAML::Node ante = c["antecedents"];
      if (ante && reader.RequireSequence(ante, where + ".antecedents")) {
        for (const YAML::Node& a : ante) {
          if (a.IsScalar()) {
            cs.antecedents.push_back(a.Scalar());
          } else {
            reader.Add("E-TYPE", "antecedents must be proposition ids", a);
          }
        }
      }
      spec.clauses.push_back(std::move(cs));
    }
  }
  return spec;
}

// ----------------------------------------------------------------------------
// YAML writing.

std::string WithComments(std::span<const std::string> comments,
                         const YAML::Emitter& out) {
  std::string text;
  for (const std::string& line : comments) {
    text += line.empty() ? "#\n" : "# " + line + "\n";
  }
  text += out.c_str();
  text += "\n";
  return text;
}

void BeginDocument(YAML::Emitter& out, double budget) {
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "format_version" << YAML::Value << kSystemFormatVersion;
  out << YAML::Key << "budget" << YAML::Value << budget;
}

// ----------------------------------------------------------------------------
// Traces.

void CheckName(const std::string& name) {
  if (name.find_first_of(",;|\"\n\r") != std::string::npos) {
    throw InvalidArgument("edge id '" + name +
                          "' cannot be written to a trace (contains one of "
                          ", ; | \" or a line break)");
  }
}

std::string JoinEdges(const System& system, std::span<const UnitId> ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ';';
    const std::string& name = system.edge(ids[i]).name;
    CheckName(name);
    out += name;
  }
  return out;
}

std::vector<std::string> Split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(sep, begin);
    out.emplace_back(text.substr(begin, end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return out;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

double ParseDouble(const std::string& text, const std::string& where) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw SyntaxError(where + ": '" + text + "' is not a number");
  }
  return value;
}

std::size_t ParseIndex(const std::string& text, const std::string& where) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (text.empty() || pos != text.size()) {
    throw SyntaxError(where + ": '" + text + "' is not a round number");
  }
  return static_cast<std::size_t>(value);
}

UnitId EdgeByName(const System& system, const std::string& name,
                  const std::string& where) {
  auto id = system.FindEdge(name);
  if (!id) throw InvalidAttack(where + ": unknown edge '" + name + "'");
  return *id;
}

std::vector<UnitId> ParseEdges(const System& system, const std::string& text,
                               const std::string& where) {
  std::vector<UnitId> out;
  if (text.empty()) return out;
  for (const std::string& name : Split(text, ';')) {
    out.push_back(EdgeByName(system, name, where));
  }
  return out;
}

std::vector<Attack> ParseAttacks(const System& system, const std::string& text,
                                 const std::string& where) {
  std::vector<Attack> out;
  for (const std::string& part : Split(text, '|')) {
    out.push_back(Attack{ParseEdges(system, part, where)});
  }
  return out;
}

constexpr std::string_view kTraceHeader = "t,attack,cost,payoff,revealed,beta";
constexpr std::string_view kAllocationsHeader = "t,edge,amount";

json ExtendedToJson(const ExtendedReal& x) {
  if (x.is_finite()) return x.value();
  return x.ToString();
}

json SpecToJson(const SystemSpec& spec) {
  json vertices = json::array();
  for (const VertexSpec& v : spec.vertices) {
    vertices.push_back({{"id", v.id}, {"reward", v.reward}});
  }
  json edges = json::array();
  for (const EdgeSpec& e : spec.edges) {
    edges.push_back(
        {{"id", e.id}, {"from", e.from}, {"to", e.to}, {"surface", e.surface}});
  }
  return {{"budget", spec.budget},
          {"start", spec.start},
          {"vertices", vertices},
          {"edges", edges}};
}

SystemSpec SpecFromJson(const json& j) {
  SystemSpec spec;
  spec.budget = j.at("budget").get<double>();
  spec.start = j.at("start").get<std::string>();
  for (const json& v : j.at("vertices")) {
    spec.vertices.push_back(
        {v.at("id").get<std::string>(), v.at("reward").get<double>()});
  }
  for (const json& e : j.at("edges")) {
    spec.edges.push_back({e.at("id").get<std::string>(),
                          e.at("from").get<std::string>(),
                          e.at("to").get<std::string>(),
                          e.at("surface").get<double>()});
  }
  return spec;
}

bool IsFixtureName(std::string_view name) {
  return fixtures::FixtureByName(name).has_value();
}

}  // namespace

std::string FormatNumber(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw IoError("cannot write '" + path.string() + "'");
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path DefaultOutputDir() {
  const char* env = std::getenv(kOutputDirEnv);
  if (env != nullptr && *env != '\0') return env;
  return "reactsec-out";
}

// ----------------------------------------------------------------------------
// System files.

LoadedSystem ParseSystem(std::string_view text, std::string_view source) {
  const YAML::Node root = ParseYaml(text, source);
  if (!root.IsMap()) {
    throw SyntaxError(std::string(source) +
                      ": a system file must be a mapping at the top level");
  }
  CheckFormatVersion(root, source, true);
  Reader reader;
  const bool horn = static_cast<bool>(root["horn"]);
  if (horn) {
    reader.CheckKeys(root, {"format_version", "notes", "budget", "horn"}, "");
  } else {
    reader.CheckKeys(root,
                     {"format_version", "notes", "budget", "start", "vertices",
                      "edges"},
                     "");
  }
  const double budget =
      reader.Number(root, "budget", "system", true).value_or(1.0);
  reader.Remember("budget", root["budget"]);
  if (horn) {
    HornSpec spec = ReadHorn(root["horn"], reader);
    spec.budget = budget;
    reader.ThrowIfAny(source);
    reader.AddModel(ValidateHorn(spec));
    reader.ThrowIfAny(source);
    return HornSystem::Build(std::move(spec));
  }
  SystemSpec spec = ReadGraph(root, reader);
  spec.budget = budget;
  reader.ThrowIfAny(source);
  reader.AddModel(ValidateSystem(spec));
  reader.ThrowIfAny(source);
  return System::Build(std::move(spec));
}

LoadedSystem LoadSystem(const std::filesystem::path& path) {
  return ParseSystem(ReadTextFile(path), path.string());
}

System LoadGraphSystem(const std::filesystem::path& path) {
  LoadedSystem loaded = LoadSystem(path);
  if (auto* graph = std::get_if<System>(&loaded)) return std::move(*graph);
  throw InvalidArgument("'" + path.string() +
                        "' holds a Horn system; an attack graph is required");
}

LoadedSystem ResolveSystem(std::string_view path_or_fixture) {
  const std::filesystem::path path{std::string(path_or_fixture)};
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) return LoadSystem(path);
  if (auto spec = fixtures::FixtureByName(path_or_fixture)) {
    return System::Build(std::move(*spec));
  }
  throw IoError("no system file or fixture named '" +
                std::string(path_or_fixture) + "'");
}

System ResolveGraphSystem(std::string_view path_or_fixture) {
  LoadedSystem loaded = ResolveSystem(path_or_fixture);
  if (auto* graph = std::get_if<System>(&loaded)) return std::move(*graph);
  throw InvalidArgument("'" + std::string(path_or_fixture) +
                        "' holds a Horn system; an attack graph is required");
}

std::string EmitSystem(const SystemSpec& spec,
                       std::span<const std::string> comments) {
  YAML::Emitter out;
  BeginDocument(out, spec.budget);
  out << YAML::Key << "start" << YAML::Value << spec.start;
  out << YAML::Key << "vertices" << YAML::Value << YAML::BeginSeq;
  for (const VertexSpec& v : spec.vertices) {
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << v.id;
    out << YAML::Key << "reward" << YAML::Value << v.reward;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "edges" << YAML::Value << YAML::BeginSeq;
  for (const EdgeSpec& e : spec.edges) {
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << e.id;
    out << YAML::Key << "from" << YAML::Value << e.from;
    out << YAML::Key << "to" << YAML::Value << e.to;
    out << YAML::Key << "surface" << YAML::Value << e.surface;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
  return WithComments(comments, out);
}

std::string EmitHorn(const HornSpec& spec,
                     std::span<const std::string> comments) {
  YAML::Emitter out;
  BeginDocument(out, spec.budget);
  out << YAML::Key << "horn" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "propositions" << YAML::Value << YAML::BeginSeq;
  for (const PropositionSpec& p : spec.propositions) {
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << p.id;
    out << YAML::Key << "reward" << YAML::Value << p.reward;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "clauses" << YAML::Value << YAML::BeginSeq;
  for (const ClauseSpec& c : spec.clauses) {
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << c.id;
    out << YAML::Key << "antecedents" << YAML::Value << YAML::Flow
        << c.antecedents;
    out << YAML::Key << "consequent" << YAML::Value << c.consequent;
    out << YAML::Key << "surface" << YAML::Value << c.surface;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap << YAML::EndMap;
  return WithComments(comments, out);
}

void SaveSystem(const LoadedSystem& system, const std::filesystem::path& path,
                std::span<const std::string> comments) {
  const std::string text = std::visit(
      [&](const auto& s) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, System>) {
          return EmitSystem(s.spec(), comments);
        } else {
          return EmitHorn(s.spec(), comments);
        }
      },
      system);
  WriteTextFile(path, text);
}

std::vector<std::filesystem::path> EmitFixtures(
    const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const fixtures::NamedFixture& f : fixtures::AllFixtures()) {
    const std::filesystem::path path = dir / f.file_name;
    WriteTextFile(path, EmitSystem(f.spec, f.notes));
    out.push_back(path);
  }
  return out;
}

// ----------------------------------------------------------------------------
// Traces.

std::string TraceCsv(const GameTrace& trace) {
  const System& system = trace.system;
  std::string out(kTraceHeader);
  out += '\n';
  for (const RoundRecord& r : trace.rounds) {
    out += std::to_string(r.t);
    out += ',';
    for (std::size_t i = 0; i < r.attacks.size(); ++i) {
      if (i > 0) out += '|';
      out += JoinEdges(system, r.attacks[i].path);
    }
    out += ',' + FormatNumber(r.cost);
    out += ',' + FormatNumber(r.payoff);
    out += ',' + JoinEdges(system, r.revealed);
    out += ',';
    if (r.beta) out += FormatNumber(*r.beta);
    out += '\n';
  }
  return out;
}

std::string AllocationsCsv(const GameTrace& trace) {
  std::string out(kAllocationsHeader);
  out += '\n';
  for (const RoundRecord& r : trace.rounds) {
    for (const auto& [id, amount] : r.allocation.amounts()) {
      const std::string& name = trace.system.edge(id).name;
      CheckName(name);
      out += std::to_string(r.t) + ',' + name + ',' + FormatNumber(amount) +
             '\n';
    }
  }
  return out;
}

std::string TraceSummaryJson(const GameTrace& trace) {
  const double payoff = trace.total_payoff();
  const double cost = trace.total_cost();
  json j;
  j["schema_version"] = kTraceSchemaVersion;
  j["T"] = trace.horizon();
  j["seed"] = trace.seed;
  j["defender"] = trace.defender;
  j["attacker"] = trace.attacker;
  j["totals"] = {{"payoff", payoff}, {"cost", cost}, {"profit", payoff - cost}};
  j["cumulative_roa"] = ExtendedToJson(trace.cumulative_roa());
  j["system"] = SpecToJson(trace.system.spec());
  return j.dump(2) + "\n";
}

void WriteTrace(const GameTrace& trace, const std::filesystem::path& dir) {
  if (trace.rounds.empty()) throw InvalidArgument("cannot write an empty trace");
  // Render everything first so that a bad edge id leaves no partial output.
  const std::string csv = TraceCsv(trace);
  const std::string allocations = AllocationsCsv(trace);
  const std::string summary = TraceSummaryJson(trace);
  WriteTextFile(dir / "trace.csv", csv);
  WriteTextFile(dir / "allocations.csv", allocations);
  WriteTextFile(dir / "summary.json", summary);
}

namespace {

std::vector<std::vector<std::string>> ReadRows(const std::filesystem::path& path,
                                               std::string_view header,
                                               std::size_t columns) {
  const std::vector<std::string> lines = Lines(ReadTextFile(path));
  if (lines.empty() || lines.front() != header) {
    throw SyntaxError(path.string() + ": expected header '" +
                      std::string(header) + "'");
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> cells = Split(lines[i], ',');
    if (cells.size() != columns) {
      throw SyntaxError(path.string() + ": line " + std::to_string(i + 1) +
                        ": expected " + std::to_string(columns) + " columns");
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

std::vector<std::vector<Attack>> ReadAttackRounds(
    const std::filesystem::path& trace_csv, const System& system) {
  std::vector<std::vector<Attack>> out;
  std::size_t line = 1;
  for (const auto& row : ReadRows(trace_csv, kTraceHeader, 6)) {
    ++line;
    const std::string where = trace_csv.string() + ": line " +
                              std::to_string(line);
    std::vector<Attack> attacks = ParseAttacks(system, row[1], where);
    for (const Attack& a : attacks) ValidateAttack(system, a);
    out.push_back(std::move(attacks));
  }
  if (out.empty()) throw InvalidArgument(trace_csv.string() + ": no rounds");
  return out;
}

GameTrace ReadTrace(const std::filesystem::path& dir) {
  const std::filesystem::path summary_path = dir / "summary.json";
  json summary;
  try {
    summary = json::parse(ReadTextFile(summary_path));
  } catch (const json::parse_error& e) {
    throw SyntaxError(summary_path.string() + ": " + e.what());
  }
  try {
    const int version = summary.at("schema_version").get<int>();
    if (version != kTraceSchemaVersion) {
      throw SchemaVersionError(summary_path.string() +
                               ": unsupported schema_version " +
                               std::to_string(version) + " (expected " +
                               std::to_string(kTraceSchemaVersion) + ")");
    }
    GameTrace trace{System::Build(SpecFromJson(summary.at("system"))),
                    {},
                    summary.at("defender").get<std::string>(),
                    summary.at("attacker").get<std::string>(),
                    summary.at("seed").get<std::uint64_t>()};
    const System& system = trace.system;
    const std::size_t horizon = summary.at("T").get<std::size_t>();
    if (horizon == 0) throw InvalidArgument("trace has T = 0");

    std::map<std::size_t, std::map<UnitId, double>> amounts;
    std::size_t line = 1;
    for (const auto& row : ReadRows(dir / "allocations.csv",
                                    kAllocationsHeader, 3)) {
      const std::string where =
          (dir / "allocations.csv").string() + ": line " +
          std::to_string(++line);
      const std::size_t t = ParseIndex(row[0], where);
      amounts[t][EdgeByName(system, row[1], where)] =
          ParseDouble(row[2], where);
    }

    line = 1;
    for (const auto& row : ReadRows(dir / "trace.csv", kTraceHeader, 6)) {
      const std::string where =
          (dir / "trace.csv").string() + ": line " + std::to_string(++line);
      RoundRecord r;
      r.t = ParseIndex(row[0], where);
      if (r.t != trace.rounds.size() + 1) {
        throw SyntaxError(where + ": rounds must be numbered 1, 2, ...");
      }
      r.attacks = ParseAttacks(system, row[1], where);
      for (const Attack& a : r.attacks) ValidateAttack(system, a);
      if (r.attacks.size() > 1) {
        r.distribution = AggregateMultiAttack(r.attacks);
      }
      r.cost = ParseDouble(row[2], where);
      r.payoff = ParseDouble(row[3], where);
      r.revealed = ParseEdges(system, row[4], where);
      if (!row[5].empty()) r.beta = ParseDouble(row[5], where);
      auto it = amounts.find(r.t);
      r.allocation = it == amounts.end()
                         ? DefenseAllocation(system.budget())
                         : DefenseAllocation(system.budget(), it->second);
      trace.rounds.push_back(std::move(r));
    }
    if (trace.rounds.size() != horizon) {
      throw SyntaxError((dir / "trace.csv").string() + ": expected " +
                        std::to_string(horizon) + " rounds, found " +
                        std::to_string(trace.rounds.size()));
    }
    return trace;
  } catch (const json::exception& e) {
    throw SyntaxError(summary_path.string() + ": " + e.what());
  }
}

// ----------------------------------------------------------------------------
// Analysis outputs.

namespace {

json BoundReportToJson(const BoundReport& report) {
  json inputs = {{"budget", report.inputs.budget},
                 {"num_edges", report.inputs.num_edges},
                 {"T", report.inputs.horizon},
                 {"mean_inverse_surface", report.inputs.mean_inverse_surface},
                 {"start_surface_sum", report.inputs.start_surface_sum}};
  if (report.inputs.alpha) inputs["alpha"] = *report.inputs.alpha;
  json j = {{"name", report.name},
            {"measured", ExtendedToJson(report.measured)},
            {"bound_rhs", report.bound_rhs},
            {"satisfied", report.satisfied},
            {"inputs", inputs}};
  return j;
}

}  // namespace

std::string BoundReportJson(const BoundReport& report) {
  return BoundReportToJson(report).dump(2) + "\n";
}

std::string BoundReportsJson(std::span<const SeededReport> reports) {
  json out = json::array();
  for (const SeededReport& r : reports) {
    json j = BoundReportToJson(r.report);
    j["seed"] = r.seed;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string RegretCurveCsv(std::span<const RegretPoint> curve) {
  std::string out = "t,average_regret,bound_rhs\n";
  for (const RegretPoint& p : curve) {
    out += std::to_string(p.t) + ',' + FormatNumber(p.average_regret) + ',' +
           FormatNumber(p.bound_rhs) + '\n';
  }
  return out;
}

// ----------------------------------------------------------------------------
// Experiment configuration.

ExperimentConfig ParseExperimentConfig(std::string_view text,
                                       const std::filesystem::path& base_dir,
                                       std::string_view source) {
  const YAML::Node root = ParseYaml(text, source);
  if (!root.IsMap()) {
    throw SyntaxError(std::string(source) +
                      ": a config file must be a mapping at the top level");
  }
  CheckFormatVersion(root, source, false);
  Reader reader;
  reader.CheckKeys(root,
                   {"format_version", "notes", "system", "defender",
                    "attacker", "T", "replicas", "output", "analysis"},
                   "");
  ExperimentConfig config;
  if (auto system = reader.String(root, "system", "config", true)) {
    const std::filesystem::path path = base_dir / *system;
    std::error_code ec;
    if (std::filesystem::is_regular_file(path, ec)) {
      config.system = path.string();
    } else if (IsFixtureName(*system)) {
      config.system = *system;
    } else {
      throw IoError(std::string(source) + ": " + LineOf(root["system"]) +
                    ": no system file or fixture named '" + *system + "'");
    }
  }

  if (const YAML::Node d = root["defender"]) {
    if (reader.RequireMap(d, "defender")) {
      reader.CheckKeys(d, {"algorithm", "beta", "horizon"}, "defender");
      if (auto a = reader.String(d, "algorithm", "defender", false)) {
        config.defender.algorithm = *a;
      }
      config.defender.beta = reader.Number(d, "beta", "defender", false);
      if (auto h = reader.Count(d, "horizon", "defender")) {
        config.defender.horizon = *h;
      }
    }
  }

  if (const YAML::Node a = root["attacker"]) {
    if (reader.RequireMap(a, "attacker")) {
      reader.CheckKeys(a, {"policy", "seed", "visible_edges"}, "attacker");
      if (auto p = reader.String(a, "policy", "attacker", false)) {
        config.attacker.policy = *p;
      }
      if (auto s = reader.Count(a, "seed", "attacker")) config.attacker.seed = *s;
      if (const YAML::Node v = a["visible_edges"]) {
        if (reader.RequireSequence(v, "visible_edges")) {
          std::vector<std::string> names;
          for (const YAML::Node& n : v) names.push_back(n.Scalar());
          config.attacker.visible_edges = std::move(names);
        }
      }
    }
  }

  if (const YAML::Node t = root["T"]) {
    if (t.IsScalar() && t.Scalar() == "threshold") {
      config.rounds.reset();
    } else if (auto n = reader.Count(root, "T", "config")) {
      if (*n == 0) reader.Add("E-ARGUMENT", "T must be at least 1", t);
      config.rounds = *n;
    }
  } else {
    reader.Add("E-MISSING", "config is missing 'T'", root);
  }

  if (auto r = reader.Count(root, "replicas", "config")) {
    if (*r == 0) reader.Add("E-ARGUMENT", "replicas must be at least 1",
                            root["replicas"]);
    config.replicas = *r;
  }
  if (auto o = reader.String(root, "output", "config", false)) {
    config.output = *o;
  } else {
    config.output = DefaultOutputDir();
  }

  if (const YAML::Node an = root["analysis"]) {
    if (reader.RequireMap(an, "analysis")) {
      reader.CheckKeys(an, {"regret", "roa_ratio", "alpha"}, "analysis");
      if (auto b = reader.Bool(an, "regret", "analysis")) {
        config.analysis.regret = *b;
      }
      if (auto b = reader.Bool(an, "roa_ratio", "analysis")) {
        config.analysis.roa_ratio = *b;
      }
      config.analysis.alpha = reader.Number(an, "alpha", "analysis", false);
      if (config.analysis.alpha && *config.analysis.alpha <= 0.0) {
        reader.Add("E-ALPHA", "alpha must be positive", an["alpha"]);
      }
    }
  }
  if (config.analysis.roa_ratio && !config.analysis.alpha) {
    reader.Add("E-ALPHA", "roa_ratio needs analysis.alpha", root);
  }
  if (!config.rounds && root["T"] && !config.analysis.alpha) {
    reader.Add("E-ALPHA", "T: threshold needs analysis.alpha", root["T"]);
  }
  reader.ThrowIfAny(source);
  return config;
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  return ParseExperimentConfig(ReadTextFile(path), path.parent_path(),
                               path.string());
}

}  // namespace reactsec::io
