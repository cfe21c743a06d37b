#pragma once

// Check reports: a deterministic list of named records, each pass / fail /
// vacuous, failures carrying printed witnesses. The machine format is stable
// key-ordered JSON suitable for golden-file comparison.

#include <string>
#include <vector>

#include <json.hpp>

namespace homcat {

enum class CheckStatus { pass, fail, vacuous };

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::string> witnesses;
  std::vector<std::string> caveats;
};

struct Report {
  std::string command;
  std::vector<CheckRecord> records;

  bool ok() const {
    for (const CheckRecord& r : records)
      if (r.status == CheckStatus::fail) return false;
    return true;
  }

  CheckRecord& add(std::string name, bool passed) {
    records.push_back(CheckRecord{std::move(name),
                                  passed ? CheckStatus::pass : CheckStatus::fail,
                                  {},
                                  {}});
    return records.back();
  }

  CheckRecord& vacuous(std::string name, std::string note = "") {
    records.push_back(CheckRecord{std::move(name), CheckStatus::vacuous, {}, {}});
    if (!note.empty()) records.back().caveats.push_back(std::move(note));
    return records.back();
  }

  void absorb(const Report& other, const std::string& prefix) {
    for (CheckRecord r : other.records) {
      r.name = prefix + r.name;
      records.push_back(std::move(r));
    }
  }

  const CheckRecord* first_failure() const {
    for (const CheckRecord& r : records)
      if (r.status == CheckStatus::fail) return &r;
    return nullptr;
  }
};

inline const char* status_text(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::vacuous: return "vacuous";
  }
  return "?";
}

inline std::string emit_text(const Report& r) {
  std::string out = "== " + r.command + " ==\n";
  for (const CheckRecord& c : r.records) {
    out += "  [" + std::string(status_text(c.status)) + "] " + c.name + "\n";
    for (const std::string& w : c.witnesses) out += "      witness: " + w + "\n";
    for (const std::string& v : c.caveats) out += "      note: " + v + "\n";
  }
  const CheckRecord* fail = r.first_failure();
  if (fail == nullptr)
    out += "result: ok (" + std::to_string(r.records.size()) + " checks)\n";
  else
    out += "result: FAILED at '" + fail->name + "'\n";
  return out;
}

inline std::string emit_machine(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["ok"] = r.ok();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : r.records) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.status == CheckStatus::pass ? "pass"
                   : c.status == CheckStatus::fail ? "fail"
                                                   : "vacuous";
    jc["witnesses"] = c.witnesses;
    jc["caveats"] = c.caveats;
    j["checks"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

}  // namespace homcat
