#ifndef SUPERLIE_REPORT_HPP
#define SUPERLIE_REPORT_HPP

#include <deque>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "superlie/certificate.hpp"

namespace superlie {

/// Result of one command: echo, input digests, tables and certificates.
/// Everything is kept in insertion order so identical inputs render
/// byte-identically.
struct Report {
  struct Section {
    std::string title;
    std::vector<std::pair<std::string, std::string>> rows;
    void add(std::string key, std::string value) { rows.push_back({std::move(key), std::move(value)}); }
  };
  struct Check {
    std::string name;
    Certificate cert;
  };

  std::vector<std::string> command;
  std::vector<std::pair<std::string, std::string>> inputs;  // (path, sha256)
  std::deque<Section> sections;  // stable references while filling
  std::vector<Check> checks;
  std::vector<std::string> notes;

  Section& section(const std::string& title) {
    sections.push_back({title, {}});
    return sections.back();
  }
  void check(std::string name, Certificate cert) { checks.push_back({std::move(name), std::move(cert)}); }
  bool ok() const;
  /// 0 when every check is certified, 1 otherwise.
  int status() const { return ok() ? 0 : 1; }
  std::string text() const;
  nlohmann::ordered_json json() const;
};

}  // namespace superlie

#endif
