#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace bihamil {

// Ordered, deterministic check records; byte-identical across runs.
struct CheckRecord {
  std::string check;
  std::string target;
  enum Status { Pass, Fail, Info } status;
  std::string residual;  // canonical expression text when Fail; free text for Info
};

struct Report {
  std::vector<CheckRecord> records;

  void add(const std::string& check, const std::string& target, bool pass,
           const std::string& residual = "") {
    records.push_back({check, target, pass ? CheckRecord::Pass : CheckRecord::Fail, residual});
  }
  void info(const std::string& check, const std::string& target, const std::string& text) {
    records.push_back({check, target, CheckRecord::Info, text});
  }
  void merge(const Report& o) {
    records.insert(records.end(), o.records.begin(), o.records.end());
  }

  int failures() const {
    int n = 0;
    for (const auto& r : records) n += (r.status == CheckRecord::Fail);
    return n;
  }
  bool all_pass() const { return failures() == 0; }

  static const char* status_name(CheckRecord::Status s) {
    switch (s) {
      case CheckRecord::Pass: return "PASS";
      case CheckRecord::Fail: return "FAIL";
      default: return "INFO";
    }
  }

  void print(std::ostream& os, bool machine) const {
    if (machine) {
      for (const auto& r : records)
        os << r.check << '\t' << r.target << '\t' << status_name(r.status) << '\t' << r.residual
           << '\n';
      return;
    }
    for (const auto& r : records) {
      os << status_name(r.status) << "  " << r.check;
      if (!r.target.empty()) os << "  [" << r.target << "]";
      if (!r.residual.empty()) os << "  " << (r.status == CheckRecord::Fail ? "residual=" : "")
                                  << r.residual;
      os << '\n';
    }
    int f = failures();
    os << records.size() << " records, " << f << " failed\n";
  }
};

}  // namespace bihamil
