// Copyright 2026 The gssf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gssf/report_format.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gssf {
namespace {

using Json = nlohmann::ordered_json;

Json params_json(const ParamMode& mode) {
  struct Visitor {
    Json operator()(const FixedParams& p) const {
      return {{"mode", "fixed"}, {"f1", p.params.f1}, {"f2", p.params.f2}, {"f3", p.params.f3}};
    }
    Json operator()(const SasakianParams& p) const { return {{"mode", "sasakian"}, {"c", p.c}}; }
    Json operator()(const RandomParams& p) const {
      return {{"mode", "random"}, {"lo", p.lo}, {"hi", p.hi}};
    }
  };
  return std::visit(Visitor{}, mode);
}

Json config_json(const RunConfig& c) {
  Json out;
  out["suite"] = std::string(to_string(c.suite));
  out["n"] = c.n;
  out["m"] = c.m;
  out["connection"] = c.connection ? Json(std::string(to_string(*c.connection))) : Json(nullptr);
  out["seed"] = c.seed;
  out["trials"] = c.trials;
  out["tol"] = c.tol;
  out["params"] = params_json(c.params);
  out["format"] = std::string(to_string(c.format));
  out["ricci_convention"] = std::string(to_string(c.convention));
  return out;
}

std::string params_text(const ParamMode& mode) {
  std::ostringstream out;
  if (const auto* f = std::get_if<FixedParams>(&mode)) {
    out << "fixed (" << f->params.f1 << ", " << f->params.f2 << ", " << f->params.f3 << ")";
  } else if (const auto* s = std::get_if<SasakianParams>(&mode)) {
    out << "sasakian c=" << s->c;
  } else {
    const auto& r = std::get<RandomParams>(mode);
    out << "random [" << r.lo << ", " << r.hi << "]";
  }
  return out.str();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

}  // namespace

std::string to_json(const RunReport& report, bool include_duration) {
  Json out;
  out["config"] = config_json(report.config);
  Json checks = Json::array();
  for (const CheckRecord& r : report.checks) {
    Json item;
    item["name"] = r.name;
    item["citation"] = r.citation;
    item["variant"] = r.variant;
    item["trials"] = r.trials;
    item["max_residual"] = r.max_residual;
    item["verdict"] = std::string(to_string(r.verdict));
    if (r.witness) {
      item["witness"] = {{"trial", r.witness->trial},
                         {"configuration", r.witness->configuration},
                         {"residual", r.witness->residual}};
    } else {
      item["witness"] = nullptr;
    }
    checks.push_back(std::move(item));
  }
  out["checks"] = std::move(checks);
  Json errata = Json::array();
  for (const ErrataEntry& e : report.errata) {
    errata.push_back({{"location", e.location},
                      {"printed", e.printed_expression},
                      {"derived", e.derived_expression},
                      {"witness",
                       {{"configuration", e.witness.configuration},
                        {"printed_value", e.witness.printed_value},
                        {"derived_value", e.witness.derived_value}}}});
  }
  out["errata"] = std::move(errata);
  if (include_duration) out["duration_ms"] = report.duration_ms;
  return out.dump(2) + "\n";
}

std::string to_text(const RunReport& report) {
  const RunConfig& c = report.config;
  std::ostringstream out;
  out << "gssf-verify  suite=" << to_string(c.suite) << "  n=" << c.n << "  m=" << c.m
      << "  connection=" << (c.connection ? std::string(to_string(*c.connection)) : "all")
      << "  seed=" << c.seed << "  trials=" << c.trials << "  tol=" << c.tol
      << "  params=" << params_text(c.params)
      << "  ricci_convention=" << to_string(c.convention) << "\n\n";

  if (!report.checks.empty()) {
    out << "verdict   max_residual  trials  variant         check  [citation]\n";
    for (const CheckRecord& r : report.checks) {
      char line[64];
      std::snprintf(line, sizeof(line), "%-9s %-13s %-7d %-15s ",
                    std::string(to_string(r.verdict)).c_str(), sci(r.max_residual).c_str(),
                    r.trials, r.variant.c_str());
      out << line << r.name << "  [" << r.citation << "]\n";
      if (r.witness) {
        out << "          witness: trial " << r.witness->trial << ", "
            << r.witness->configuration << ", residual " << sci(r.witness->residual) << "\n";
      }
    }
    out << "\n";
  }

  if (!report.errata.empty()) {
    out << "errata (" << report.errata.size() << " entries; informational)\n";
    for (const ErrataEntry& e : report.errata) {
      out << "- " << e.location << "\n"
          << "    printed: " << e.printed_expression << "\n"
          << "    derived: " << e.derived_expression << "\n"
          << "    witness: " << e.witness.configuration << "\n"
          << "             printed value " << e.witness.printed_value << ", derived value "
          << e.witness.derived_value << "\n";
    }
    out << "\n";
  }

  int failed = 0;
  int violated = 0;
  for (const CheckRecord& r : report.checks) {
    failed += r.verdict == Verdict::kFail;
    violated += r.verdict == Verdict::kViolated;
  }
  out << (report.ok() ? "OK" : "FAILED") << ": " << report.checks.size() << " checks, " << failed
      << " failed, " << violated << " printed claims violated, " << report.errata.size()
      << " errata entries, " << sci(report.duration_ms) << " ms\n";
  return out.str();
}

std::string format_report(const RunReport& report) {
  return report.config.format == OutputFormat::kJson ? to_json(report) : to_text(report);
}

}  // namespace gssf
