#ifndef SUPERLIE_IO_HPP
#define SUPERLIE_IO_HPP

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "superlie/action.hpp"
#include "superlie/errors.hpp"
#include "superlie/field.hpp"
#include "superlie/freelie.hpp"
#include "superlie/lie.hpp"

namespace superlie::io {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

/// A parsed input file with the SHA-256 of its bytes.
struct Document {
  fs::path path;
  Json json;
  std::string sha256;
};

/// Kind tag carried by every file: lie, assoc, action, crossed, presentation.
enum class FileKind { Lie, Assoc, Action, Crossed, Presentation };

std::string sha256_hex(const std::string& bytes);
Document read_document(const fs::path& path);
FileKind file_kind(const Json& j, const std::string& where);
/// Throws ParseError on a missing required key or any key outside both lists.
void check_keys(const Json& j, const std::vector<std::string>& required, const std::vector<std::string>& optional,
                const std::string& where);
std::string get_string(const Json& j, const std::string& key, const std::string& where);
Parity parse_parity(const Json& j, const std::string& where);
FieldSpec parse_field(const Json& j, const std::string& where);
/// Field of a file, following references of action and crossed-module files.
FieldSpec peek_field(const fs::path& path);
fs::path resolve(const fs::path& base_file, const std::string& ref);
std::vector<BasisElement> parse_basis(const Json& j, const std::string& where);
Json emit_basis(const SuperSpace& sp);
/// A word is a generator label or a two-element array [left, right].
BracketWord parse_word(const Json& j, const std::string& where);
Json emit_word(const BracketWord& w);

template <class S>
S parse_scalar(const Json& j, const FieldSpec& f, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": coefficients must be strings");
  try {
    return ScalarTraits<S>::parse(j.get<std::string>(), f);
  } catch (const std::exception& e) {
    throw ParseError(where + ": bad coefficient '" + j.get<std::string>() + "' in " + f.str() + " (" + e.what() + ")");
  }
}

/// [[label, coeff], ...] over `sp`; labels may not repeat.
template <class S>
Vec<S> parse_vector(const Json& j, const SuperSpace& sp, const FieldSpec& f, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of [label, coefficient] pairs");
  Vec<S> v = Vec<S>::Zero(sp.dim());
  std::set<std::string> seen;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_string())
      throw ParseError(where + ": expected [label, coefficient], got " + term.dump());
    auto label = term[0].get<std::string>();
    auto idx = sp.index_of(label);
    if (!idx) throw ParseError(where + ": unknown basis label '" + label + "'");
    if (!seen.insert(label).second) throw ParseError(where + ": label '" + label + "' repeated");
    v(*idx) = parse_scalar<S>(term[1], f, where);
  }
  return v;
}

template <class S>
Json emit_vector(const SuperSpace& sp, const Vec<S>& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) out.push_back(Json::array({sp.label(i), ScalarTraits<S>::format(v(i))}));
  return out;
}

template <class S>
Mat<S> parse_matrix(const Json& j, Index rows, Index cols, const FieldSpec& f, const std::string& where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  Mat<S> m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError(where + ": row " + std::to_string(r) + " needs " + std::to_string(cols) + " entries");
    for (Index c = 0; c < cols; ++c) m(r, c) = parse_scalar<S>(row[static_cast<std::size_t>(c)], f, where);
  }
  return m;
}

template <class S>
Json emit_matrix(const Mat<S>& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(ScalarTraits<S>::format(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

inline void require_field_type(const FieldSpec& f, bool matches, const std::string& where) {
  if (!matches) throw ParseError(where + ": field " + f.str() + " does not match the other inputs");
}

/// Lie table entries are taken literally; an entry whose transpose is absent
/// also fixes the transpose by graded antisymmetry.
template <class S>
LieSuperAlgebra<S> parse_lie(const Json& j, const FieldSpec& f, const std::string& where) {
  check_keys(j, {"kind", "name", "field", "basis", "table"}, {}, where);
  SuperSpace sp(parse_basis(j.at("basis"), where));
  const Index d = sp.dim();
  std::vector<Vec<S>> table(static_cast<std::size_t>(d * d), Vec<S>::Zero(d));
  std::vector<bool> given(table.size(), false);
  if (!j.at("table").is_array()) throw ParseError(where + ": table must be a list");
  for (const auto& e : j.at("table")) {
    check_keys(e, {"left", "right", "value"}, {}, where + ": table entry");
    auto l = sp.index_of(get_string(e, "left", where)), r = sp.index_of(get_string(e, "right", where));
    if (!l || !r) throw ParseError(where + ": table entry " + e.dump() + " names an unknown label");
    auto k = static_cast<std::size_t>(*l * d + *r);
    if (given[k]) throw ParseError(where + ": entry (" + sp.label(*l) + ", " + sp.label(*r) + ") given twice");
    given[k] = true;
    table[k] = parse_vector<S>(e.at("value"), sp, f, where + ": entry (" + sp.label(*l) + ", " + sp.label(*r) + ")");
  }
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      auto k = static_cast<std::size_t>(a * d + b), kt = static_cast<std::size_t>(b * d + a);
      if (given[k] && !given[kt]) table[kt] = (-sign_power<S>(sp.p(a) * sp.p(b))) * table[k];
    }
  return LieSuperAlgebra<S>(std::move(sp), std::move(table), get_string(j, "name", where));
}

/// Nonzero upper-triangle entries; a pair breaking antisymmetry is written
/// in both orders so that a tampered table survives a round trip.
template <class S>
Json emit_lie(const LieSuperAlgebra<S>& L, const FieldSpec& f) {
  Json j;
  j["kind"] = "lie";
  j["name"] = L.name();
  j["field"] = f.str();
  j["basis"] = emit_basis(L.space());
  Json table = Json::array();
  const auto& sp = L.space();
  auto entry = [&](Index a, Index b) {
    table.push_back({{"left", sp.label(a)}, {"right", sp.label(b)}, {"value", emit_vector(sp, L.bracket(a, b))}});
  };
  for (Index a = 0; a < L.dim(); ++a) {
    if (!is_zero_vector(L.bracket(a, a))) entry(a, a);
    for (Index b = a + 1; b < L.dim(); ++b) {
      bool implied = L.bracket(b, a) == Vec<S>((-sign_power<S>(sp.p(a) * sp.p(b))) * L.bracket(a, b));
      if (!implied) {
        entry(a, b);
        entry(b, a);
      } else if (!is_zero_vector(L.bracket(a, b))) {
        entry(a, b);
      }
    }
  }
  j["table"] = std::move(table);
  return j;
}

template <class S>
AssocSuperAlgebra<S> parse_assoc(const Json& j, const FieldSpec& f, const std::string& where) {
  check_keys(j, {"kind", "name", "field", "basis", "table"}, {"unit"}, where);
  SuperSpace sp(parse_basis(j.at("basis"), where));
  const Index d = sp.dim();
  std::vector<Vec<S>> table(static_cast<std::size_t>(d * d), Vec<S>::Zero(d));
  std::vector<bool> given(table.size(), false);
  if (!j.at("table").is_array()) throw ParseError(where + ": table must be a list");
  for (const auto& e : j.at("table")) {
    check_keys(e, {"left", "right", "value"}, {}, where + ": table entry");
    auto l = sp.index_of(get_string(e, "left", where)), r = sp.index_of(get_string(e, "right", where));
    if (!l || !r) throw ParseError(where + ": table entry " + e.dump() + " names an unknown label");
    auto k = static_cast<std::size_t>(*l * d + *r);
    if (given[k]) throw ParseError(where + ": entry (" + sp.label(*l) + ", " + sp.label(*r) + ") given twice");
    given[k] = true;
    table[k] = parse_vector<S>(e.at("value"), sp, f, where + ": entry (" + sp.label(*l) + ", " + sp.label(*r) + ")");
  }
  std::optional<Vec<S>> unit;
  if (j.contains("unit")) unit = parse_vector<S>(j.at("unit"), sp, f, where + ": unit");
  return AssocSuperAlgebra<S>(std::move(sp), std::move(table), std::move(unit), get_string(j, "name", where));
}

template <class S>
Json emit_assoc(const AssocSuperAlgebra<S>& A, const FieldSpec& f) {
  Json j;
  j["kind"] = "assoc";
  j["name"] = A.name();
  j["field"] = f.str();
  j["basis"] = emit_basis(A.space());
  Json table = Json::array();
  for (Index a = 0; a < A.dim(); ++a)
    for (Index b = 0; b < A.dim(); ++b)
      if (!is_zero_vector(A.product(a, b)))
        table.push_back({{"left", A.space().label(a)}, {"right", A.space().label(b)}, {"value", emit_vector(A.space(), A.product(a, b))}});
  j["table"] = std::move(table);
  if (A.unit()) j["unit"] = emit_vector(A.space(), *A.unit());
  return j;
}

/// Entries {p, m, value}: the action of actor basis element p on target basis element m.
template <class S>
std::vector<Vec<S>> parse_action_entries(const Json& j, const LieSuperAlgebra<S>& actor, const LieSuperAlgebra<S>& target,
                                         const FieldSpec& f, const std::string& where) {
  std::vector<Vec<S>> table(static_cast<std::size_t>(actor.dim() * target.dim()), Vec<S>::Zero(target.dim()));
  std::vector<bool> given(table.size(), false);
  if (!j.is_array()) throw ParseError(where + ": entries must be a list");
  for (const auto& e : j) {
    check_keys(e, {"p", "m", "value"}, {}, where + ": entry");
    auto p = actor.space().index_of(get_string(e, "p", where));
    auto m = target.space().index_of(get_string(e, "m", where));
    if (!p || !m) throw ParseError(where + ": entry " + e.dump() + " names an unknown label");
    auto k = static_cast<std::size_t>(*p * target.dim() + *m);
    if (given[k]) throw ParseError(where + ": entry (" + actor.space().label(*p) + ", " + target.space().label(*m) + ") given twice");
    given[k] = true;
    table[k] = parse_vector<S>(e.at("value"), target.space(), f, where);
  }
  return table;
}

template <class S>
Json emit_action_entries(const Action<S>& a) {
  Json entries = Json::array();
  for (Index p = 0; p < a.actor().dim(); ++p)
    for (Index m = 0; m < a.target().dim(); ++m)
      if (!is_zero_vector(a.act(p, m)))
        entries.push_back({{"p", a.actor().space().label(p)},
                           {"m", a.target().space().label(m)},
                           {"value", emit_vector(a.target().space(), a.act(p, m))}});
  return entries;
}

template <class S>
Presentation<S> parse_presentation(const Json& j, const FieldSpec& f, const std::string& where) {
  check_keys(j, {"kind", "name", "field", "generators", "relators"}, {}, where);
  Presentation<S> pres;
  pres.gens = GradedGenSet(parse_basis(j.at("generators"), where + ": generators"));
  if (!j.at("relators").is_array()) throw ParseError(where + ": relators must be a list");
  for (const auto& r : j.at("relators")) {
    if (!r.is_array() || r.empty()) throw ParseError(where + ": a relator is a nonempty list of [coefficient, word]");
    Relator<S> rel;
    for (const auto& term : r) {
      if (!term.is_array() || term.size() != 2) throw ParseError(where + ": expected [coefficient, word], got " + term.dump());
      auto w = parse_word(term[1], where);
      std::vector<BracketWord> stack{w};
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        if (x.is_generator() && !pres.gens.index_of(x.generator)) throw ParseError(where + ": unknown generator '" + x.generator + "'");
        for (const auto& c : x.children) stack.push_back(c);
      }
      rel.terms.push_back({parse_scalar<S>(term[0], f, where), std::move(w)});
    }
    pres.relators.push_back(std::move(rel));
  }
  return pres;
}

template <class S>
Json emit_presentation(const Presentation<S>& pres, const std::string& name, const FieldSpec& f) {
  Json j;
  j["kind"] = "presentation";
  j["name"] = name;
  j["field"] = f.str();
  j["generators"] = emit_basis(pres.gens.space());
  Json rels = Json::array();
  for (const auto& r : pres.relators) {
    Json terms = Json::array();
    for (const auto& [c, w] : r.terms) terms.push_back(Json::array({ScalarTraits<S>::format(c), emit_word(w)}));
    rels.push_back(std::move(terms));
  }
  j["relators"] = std::move(rels);
  return j;
}

/// Loads files over one field, remembering every file read and its digest.
template <class S>
class Loader {
public:
  explicit Loader(FieldSpec field) : field_(field) {
    require_field_type(field_, ScalarTraits<S>::matches(field_), "loader");
  }

  const FieldSpec& field() const { return field_; }
  /// (path, sha256) for every file read, in first-read order.
  const std::vector<std::pair<std::string, std::string>>& digests() const { return digests_; }

  const Document& document(const fs::path& path) {
    auto key = path.lexically_normal().string();
    auto it = docs_.find(key);
    if (it != docs_.end()) return it->second;
    auto doc = read_document(path);
    digests_.push_back({path.string(), doc.sha256});
    return docs_.emplace(key, std::move(doc)).first->second;
  }

  FileKind kind(const fs::path& path) { return file_kind(document(path).json, path.string()); }

  LieSuperAlgebra<S> lie(const fs::path& path) {
    const auto& doc = document(path);
    if (file_kind(doc.json, path.string()) != FileKind::Lie) throw ParseError(path.string() + ": expected a Lie superalgebra file");
    check_field(doc.json, path.string());
    return parse_lie<S>(doc.json, field_, path.string());
  }

  AssocSuperAlgebra<S> assoc(const fs::path& path) {
    const auto& doc = document(path);
    if (file_kind(doc.json, path.string()) != FileKind::Assoc)
      throw ParseError(path.string() + ": expected an associative superalgebra file");
    check_field(doc.json, path.string());
    return parse_assoc<S>(doc.json, field_, path.string());
  }

  /// Action file {kind, actor, target, entries}; actor and target are paths
  /// relative to the action file.
  Action<S> action(const fs::path& path) {
    const auto& doc = document(path);
    const auto& j = doc.json;
    if (file_kind(j, path.string()) != FileKind::Action) throw ParseError(path.string() + ": expected an action file");
    check_keys(j, {"kind", "actor", "target", "entries"}, {"name"}, path.string());
    auto actor = lie(resolve(path, get_string(j, "actor", path.string())));
    auto target = lie(resolve(path, get_string(j, "target", path.string())));
    auto table = parse_action_entries<S>(j.at("entries"), actor, target, field_, path.string());
    return Action<S>(std::move(actor), std::move(target), std::move(table));
  }

  /// Crossed-module file {kind, source, target, boundary, action?}. Without
  /// an action the boundary must embed the source as a graded ideal, and the
  /// action is the bracket pulled back along it.
  CrossedModule<S> crossed(const fs::path& path) {
    const auto& doc = document(path);
    const auto& j = doc.json;
    const std::string where = path.string();
    if (file_kind(j, where) != FileKind::Crossed) throw ParseError(where + ": expected a crossed-module file");
    check_keys(j, {"kind", "source", "target", "boundary"}, {"name", "action"}, where);
    auto m = lie(resolve(path, get_string(j, "source", where)));
    auto p = lie(resolve(path, get_string(j, "target", where)));
    Mat<S> d = parse_matrix<S>(j.at("boundary"), p.dim(), m.dim(), field_, where + ": boundary");
    if (j.contains("action")) {
      auto a = action(resolve(path, get_string(j, "action", where)));
      if (!same_algebra(a.actor(), p) || !same_algebra(a.target(), m))
        throw ParseError(where + ": the action does not go from the target to the source");
      return CrossedModule<S>(std::move(m), std::move(p), std::move(d), std::move(a));
    }
    if (rank(d) != m.dim()) throw ParseError(where + ": without an action the boundary must be injective");
    std::vector<Vec<S>> table;
    for (Index i = 0; i < p.dim(); ++i)
      for (Index k = 0; k < m.dim(); ++k) {
        auto x = solve(d, p.bracket(unit_vector<S>(p.dim(), i), Vec<S>(d.col(k))));
        if (!x) throw NotAnIdeal(where + ": the image of the boundary is not an ideal");
        table.push_back(*x);
      }
    Action<S> a(p, m, std::move(table));
    return CrossedModule<S>(std::move(m), std::move(p), std::move(d), std::move(a));
  }

  Presentation<S> presentation(const fs::path& path) {
    const auto& doc = document(path);
    if (file_kind(doc.json, path.string()) != FileKind::Presentation) throw ParseError(path.string() + ": expected a presentation file");
    check_field(doc.json, path.string());
    return parse_presentation<S>(doc.json, field_, path.string());
  }

  static bool same_algebra(const LieSuperAlgebra<S>& a, const LieSuperAlgebra<S>& b) {
    if (!(a.space() == b.space())) return false;
    for (Index i = 0; i < a.dim(); ++i)
      for (Index k = 0; k < a.dim(); ++k)
        if (a.bracket(i, k) != b.bracket(i, k)) return false;
    return true;
  }

private:
  void check_field(const Json& j, const std::string& where) {
    auto f = parse_field(j, where);
    if (!(f == field_)) throw ParseError(where + ": field " + f.str() + " differs from " + field_.str() + " of the other inputs");
  }

  FieldSpec field_;
  std::map<std::string, Document> docs_;
  std::vector<std::pair<std::string, std::string>> digests_;
};

}  // namespace superlie::io

#endif
