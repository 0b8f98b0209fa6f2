#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpkit/common.hpp"

namespace qpkit {

// One verification check: a stable name, the instance it ran on, the verdict,
// and a short witness string (counts, values, or a failure explanation).
struct CheckRecord {
  std::string name;
  std::string instance;
  bool pass = false;
  std::string witness;
};

struct VerificationReport {
  std::string schema = "qpkit-report-v1";
  std::string campaign;
  std::uint64_t seed = 0;
  std::string config_echo;  // the configuration the campaign actually used
  std::vector<CheckRecord> checks;

  int passed() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(),
                      [](const CheckRecord& c) { return c.pass; }));
  }
  int failed() const { return static_cast<int>(checks.size()) - passed(); }
  bool all_green() const { return failed() == 0; }

  void add(const std::string& name, const std::string& instance, bool pass,
           const std::string& witness = "") {
    checks.push_back({name, instance, pass, witness});
  }
};

namespace detail {

inline std::string tsv_escape(std::string s) {
  for (char& c : s) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace detail

// Reports serialize byte-identically for identical inputs: JSON keeps
// insertion order with a fixed indent, TSV is a plain header + rows.
inline std::string emit_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = r.schema;
  j["campaign"] = r.campaign;
  j["seed"] = r.seed;
  j["config"] = r.config_echo;
  j["passed"] = r.passed();
  j["failed"] = r.failed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["instance"] = c.instance;
    jc["pass"] = c.pass;
    jc["witness"] = c.witness;
    j["checks"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

inline std::string emit_tsv(const VerificationReport& r) {
  std::string out = "schema\t" + r.schema + "\ncampaign\t" + r.campaign +
                    "\nseed\t" + std::to_string(r.seed) + "\npassed\t" +
                    std::to_string(r.passed()) + "\nfailed\t" +
                    std::to_string(r.failed()) + "\n";
  out += "name\tinstance\tpass\twitness\n";
  for (const CheckRecord& c : r.checks) {
    out += detail::tsv_escape(c.name) + '\t' + detail::tsv_escape(c.instance) +
           '\t' + (c.pass ? "1" : "0") + '\t' + detail::tsv_escape(c.witness) +
           '\n';
  }
  return out;
}

inline std::string emit_report(const VerificationReport& r,
                               const std::string& format) {
  if (format == "json") return emit_json(r);
  if (format == "tsv") return emit_tsv(r);
  throw error("emit_report: unknown format '" + format +
              "' (expected json or tsv)");
}

inline VerificationReport parse_report_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  VerificationReport r;
  r.schema = j.at("schema").get<std::string>();
  QPKIT_REQUIRE(r.schema == "qpkit-report-v1",
                "parse_report_json: unsupported schema " + r.schema);
  r.campaign = j.at("campaign").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.config_echo = j.at("config").get<std::string>();
  for (const auto& jc : j.at("checks")) {
    r.checks.push_back({jc.at("name").get<std::string>(),
                        jc.at("instance").get<std::string>(),
                        jc.at("pass").get<bool>(),
                        jc.at("witness").get<std::string>()});
  }
  return r;
}

}  // namespace qpkit
