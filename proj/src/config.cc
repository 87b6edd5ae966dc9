// Copyright 2026 The mecoff Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mecoff/config.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <variant>

#include <fmt/format.h>

#include "mecoff/scenario_io.h"

namespace mecoff {

namespace {

using Value = std::variant<double, bool, std::string, std::vector<double>>;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> ToNumber(std::string_view s) {
  const std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || *end != '\0' || !std::isfinite(v)) return std::nullopt;
  return v;
}

struct Parser {
  std::string_view source;
  int line_no = 0;

  [[noreturn]] void Fail(const std::string& msg) const {
    throw InputError(fmt::format("{}:{}: {}", source, line_no, msg));
  }

  Value ParseValue(std::string_view raw) const {
    if (raw.empty()) Fail("missing value");
    if (raw.front() == '[') {
      if (raw.back() != ']') Fail("unterminated list");
      std::vector<double> out;
      const std::string_view body = Trim(raw.substr(1, raw.size() - 2));
      if (body.empty()) return out;
      std::size_t pos = 0;
      while (pos <= body.size()) {
        const std::size_t comma = body.find(',', pos);
        const std::string_view item = Trim(body.substr(
            pos, comma == std::string_view::npos ? body.npos : comma - pos));
        const auto v = ToNumber(item);
        if (!v) Fail(fmt::format("list item '{}' is not a number", item));
        out.push_back(*v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      return out;
    }
    if (raw.front() == '"') {
      if (raw.size() < 2 || raw.back() != '"') Fail("unterminated string");
      return std::string(raw.substr(1, raw.size() - 2));
    }
    if (raw == "true") return true;
    if (raw == "false") return false;
    if (const auto v = ToNumber(raw)) return *v;
    return std::string(raw);
  }
};

double AsNumber(const Value& v, const Parser& p, std::string_view key) {
  if (const double* d = std::get_if<double>(&v)) return *d;
  p.Fail(fmt::format("'{}' expects a number", key));
}

int AsInt(const Value& v, const Parser& p, std::string_view key) {
  const double d = AsNumber(v, p, key);
  if (d != std::floor(d) || std::abs(d) > 1e9) {
    p.Fail(fmt::format("'{}' expects an integer", key));
  }
  return static_cast<int>(d);
}

using Setter = std::function<void(CliConfig&, const Value&, const Parser&,
                                  std::string_view)>;

Setter Number(double CliConfig::*field) {
  return [field](CliConfig& c, const Value& v, const Parser& p,
                 std::string_view key) { c.*field = AsNumber(v, p, key); };
}

const std::map<std::string, Setter, std::less<>>& Setters() {
  static const auto* setters = new std::map<std::string, Setter, std::less<>>{
      {"system.W", Number(&CliConfig::bandwidth)},
      {"system.N0", Number(&CliConfig::noise_power)},
      {"system.gamma_BS", Number(&CliConfig::gamma_bs)},
      {"system.gamma_user", Number(&CliConfig::gamma_user)},
      {"system.epsilon", Number(&CliConfig::epsilon)},
      {"system.g0", Number(&CliConfig::g0)},
      {"system.tau", Number(&CliConfig::tau)},
      {"system.cpu_cap",
       [](CliConfig& c, const Value& v, const Parser& p, std::string_view key) {
         if (const std::string* s = std::get_if<std::string>(&v);
             s && *s == "none") {
           c.cpu_cap.reset();
         } else {
           c.cpu_cap = AsNumber(v, p, key);
         }
       }},
      {"scenario.K",
       [](CliConfig& c, const Value& v, const Parser& p, std::string_view key) {
         c.num_users = AsInt(v, p, key);
       }},
      {"scenario.mean_L", Number(&CliConfig::mean_L)},
      {"scenario.mean_B", Number(&CliConfig::mean_B)},
      {"scenario.mean_C", Number(&CliConfig::mean_C)},
      {"scenario.g_max", Number(&CliConfig::g_max)},
      {"scenario.c0", Number(&CliConfig::c0)},
      {"scenario.c1", Number(&CliConfig::c1)},
      {"sweep.param",
       [](CliConfig& c, const Value& v, const Parser& p, std::string_view key) {
         const std::string* s = std::get_if<std::string>(&v);
         if (!s) p.Fail(fmt::format("'{}' expects a parameter name", key));
         try {
           ParseSweptParam(*s);
         } catch (const std::invalid_argument& e) {
           p.Fail(e.what());
         }
         c.sweep_param = *s;
       }},
      {"sweep.values",
       [](CliConfig& c, const Value& v, const Parser& p, std::string_view key) {
         const auto* list = std::get_if<std::vector<double>>(&v);
         if (!list) p.Fail(fmt::format("'{}' expects a list of numbers", key));
         c.sweep_values = *list;
       }},
      {"sweep.trials",
       [](CliConfig& c, const Value& v, const Parser& p, std::string_view key) {
         c.trials = AsInt(v, p, key);
       }},
      {"sweep.seed",
       [](CliConfig& c, const Value& v, const Parser& p, std::string_view key) {
         const int s = AsInt(v, p, key);
         if (s < 0) p.Fail("'sweep.seed' must be non-negative");
         c.seed = static_cast<std::uint64_t>(s);
       }},
      {"solver.cap_with_mean_bound",
       [](CliConfig& c, const Value& v, const Parser& p, std::string_view key) {
         const bool* b = std::get_if<bool>(&v);
         if (!b) p.Fail(fmt::format("'{}' expects true or false", key));
         c.cap_with_mean_bound = *b;
       }},
  };
  return *setters;
}

// Drops a trailing comment that is not inside a quoted string.
std::string_view StripComment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

}  // namespace

CliConfig ParseConfig(std::string_view text, std::string_view source) {
  CliConfig config;
  Parser parser{source};
  std::string section;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw_line;
  while (std::getline(in, raw_line)) {
    ++parser.line_no;
    const std::string_view line = Trim(StripComment(raw_line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') parser.Fail("malformed section header");
      section = std::string(Trim(line.substr(1, line.size() - 2)));
      if (section.empty()) parser.Fail("empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parser.Fail("expected 'key = value'");
    const std::string_view key = Trim(line.substr(0, eq));
    if (key.empty()) parser.Fail("missing key");
    std::string full_key = std::string(key);
    if (!section.empty() && !Setters().contains(full_key)) {
      full_key = section + "." + full_key;
    }
    const auto it = Setters().find(full_key);
    if (it == Setters().end()) {
      parser.Fail(fmt::format("unknown key '{}'", full_key));
    }
    if (!seen.insert(full_key).second) {
      parser.Fail(fmt::format("duplicate key '{}'", full_key));
    }
    it->second(config, parser.ParseValue(Trim(line.substr(eq + 1))), parser,
               full_key);
  }

  // Surface invalid combinations now, with the file as context.
  try {
    config.ToSystemConfig().Validate();
    config.ToDistribution().Validate();
    if (config.sweep_param) config.ToSweepSpec().Validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(fmt::format("{}: {}", source, e.what()));
  }
  return config;
}

CliConfig ReadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open '{}'", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str(), path.string());
}

SystemConfig CliConfig::ToSystemConfig() const {
  SystemConfig c;
  c.radio = RadioParams::FromSnr(bandwidth, gamma_bs, gamma_user, noise_power);
  c.fading = FadingParams(epsilon);
  c.server_energy_per_cycle = g0;
  c.tau = tau;
  c.cpu_cap = cpu_cap;
  return c;
}

ScenarioDistribution CliConfig::ToDistribution() const {
  ScenarioDistribution d;
  d.num_users = num_users;
  d.mean_local_bits = mean_L;
  d.mean_server_bits = mean_B;
  d.mean_cycles = mean_C;
  d.max_energy_per_cycle = g_max;
  d.output_map = {c0, c1};
  d.fading = FadingParams(epsilon);
  return d;
}

MeanTimeParams CliConfig::ToMeanTimeParams() const {
  return {num_users, mean_L, mean_B, OutputSizeMap{c0, c1},
          RadioParams::FromSnr(bandwidth, gamma_bs, gamma_user, noise_power)};
}

SweepSpec CliConfig::ToSweepSpec() const {
  if (!sweep_param) throw InputError("config has no 'sweep.param'");
  if (sweep_values.empty()) throw InputError("config has no 'sweep.values'");
  SweepSpec spec;
  spec.distribution = ToDistribution();
  spec.config = ToSystemConfig();
  spec.param = ParseSweptParam(*sweep_param);
  spec.values = sweep_values;
  spec.trials = trials;
  spec.seed = seed;
  spec.cap_with_mean_bound = cap_with_mean_bound;
  return spec;
}

}  // namespace mecoff
