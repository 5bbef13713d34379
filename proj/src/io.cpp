#include "superlie/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace superlie::io {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

Document read_document(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  Document doc;
  doc.path = path;
  doc.sha256 = sha256_hex(buf.str());
  try {
    doc.json = Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  if (!doc.json.is_object()) throw ParseError(path.string() + ": top level must be an object");
  return doc;
}

void check_keys(const Json& j, const std::vector<std::string>& required, const std::vector<std::string>& optional,
                const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object, got " + j.dump());
  for (const auto& k : required)
    if (!j.contains(k)) throw ParseError(where + ": missing field '" + k + "'");
  for (const auto& [k, v] : j.items()) {
    bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                 std::find(optional.begin(), optional.end(), k) != optional.end();
    if (!known) throw ParseError(where + ": unknown field '" + k + "'");
  }
}

std::string get_string(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_string()) throw ParseError(where + ": field '" + key + "' must be a string");
  return j.at(key).get<std::string>();
}

FileKind file_kind(const Json& j, const std::string& where) {
  auto k = get_string(j, "kind", where);
  if (k == "lie") return FileKind::Lie;
  if (k == "assoc") return FileKind::Assoc;
  if (k == "action") return FileKind::Action;
  if (k == "crossed") return FileKind::Crossed;
  if (k == "presentation") return FileKind::Presentation;
  throw ParseError(where + ": unknown kind '" + k + "'");
}

Parity parse_parity(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v == 0) return Parity::Even;
    if (v == 1) return Parity::Odd;
  }
  throw ParseError(where + ": parity must be 0 or 1, got " + j.dump());
}

FieldSpec parse_field(const Json& j, const std::string& where) {
  try {
    return FieldSpec::parse(get_string(j, "field", where));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

fs::path resolve(const fs::path& base_file, const std::string& ref) {
  fs::path r(ref);
  return r.is_absolute() ? r : (base_file.parent_path() / r).lexically_normal();
}

FieldSpec peek_field(const fs::path& path) {
  auto doc = read_document(path);
  switch (file_kind(doc.json, path.string())) {
    case FileKind::Action:
      return peek_field(resolve(path, get_string(doc.json, "actor", path.string())));
    case FileKind::Crossed:
      return peek_field(resolve(path, get_string(doc.json, "target", path.string())));
    default:
      return parse_field(doc.json, path.string());
  }
}

std::vector<BasisElement> parse_basis(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": basis must be a list");
  std::vector<BasisElement> out;
  std::set<std::string> seen;
  for (const auto& b : j) {
    check_keys(b, {"label", "parity"}, {}, where + ": basis element");
    auto label = get_string(b, "label", where);
    if (label.empty()) throw ParseError(where + ": empty basis label");
    if (!seen.insert(label).second) throw ParseError(where + ": duplicate basis label '" + label + "'");
    out.push_back({label, parse_parity(b.at("parity"), where)});
  }
  return out;
}

Json emit_basis(const SuperSpace& sp) {
  Json out = Json::array();
  for (const auto& b : sp.basis()) out.push_back({{"label", b.label}, {"parity", bit(b.parity)}});
  return out;
}

BracketWord parse_word(const Json& j, const std::string& where) {
  if (j.is_string()) return BracketWord::gen(j.get<std::string>());
  if (j.is_array() && j.size() == 2) return BracketWord::bracket(parse_word(j[0], where), parse_word(j[1], where));
  throw ParseError(where + ": a word is a generator label or [word, word], got " + j.dump());
}

Json emit_word(const BracketWord& w) {
  if (w.is_generator()) return w.generator;
  return Json::array({emit_word(w.children[0]), emit_word(w.children[1])});
}

}  // namespace superlie::io
