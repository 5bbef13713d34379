#include "superlie/report.hpp"

#include <sstream>

namespace superlie {

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.cert.ok()) return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream out;
  out << "command:";
  for (const auto& a : command) out << ' ' << a;
  out << '\n';
  for (const auto& [path, digest] : inputs) out << "input: " << path << " sha256:" << digest << '\n';
  for (const auto& s : sections) {
    out << '[' << s.title << "]\n";
    for (const auto& [k, v] : s.rows) out << "  " << k << ": " << v << '\n';
  }
  for (const auto& c : checks) {
    out << "check " << c.name << ": " << (c.cert.ok() ? "certified" : "FAILED") << '\n';
    for (const auto& w : c.cert.violations) out << "  witness: " << w << '\n';
    if (c.cert.suppressed) out << "  (" << c.cert.suppressed << " more)\n";
  }
  for (const auto& n : notes) out << "note: " << n << '\n';
  out << "status: " << status() << '\n';
  return out.str();
}

nlohmann::ordered_json Report::json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& [path, digest] : inputs) j["inputs"].push_back({{"path", path}, {"sha256", digest}});
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& s : sections) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::object();
    for (const auto& [k, v] : s.rows) rows[k] = v;
    j["results"].push_back({{"section", s.title}, {"values", rows}});
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"certified", c.cert.ok()},
                           {"witnesses", c.cert.violations},
                           {"suppressed", c.cert.suppressed}});
  j["notes"] = notes;
  j["status"] = status();
  return j;
}

}  // namespace superlie
