#include "relspan/io/document.hpp"

#include "relspan/error.hpp"

#include <fstream>
#include <sstream>

namespace relspan::io {

namespace {

const char* const kKinds[] = {"set",    "function", "coalgebra",   "coalg_map",       "bialgebra", "finset_monoid",
                              "small_category", "cospan", "chain", "functor_map", "monoid_morphism"};

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) parse_error(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) parse_error(where + ": expected a name");
  return j.get<std::string>();
}

std::size_t count(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    parse_error(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> counts(const json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where + ": expected an array");
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(count(v, where));
  return out;
}

alg::Scalar scalar(const json& v, alg::Field field, const std::string& where) {
  if (v.is_number_integer()) return alg::Scalar::from_int(field, v.get<long long>());
  if (v.is_string()) {
    try {
      return alg::Scalar::parse(field, v.get<std::string>());
    } catch (const Error& e) {
      if (e.code() == Errc::ParseError) throw;
      parse_error(where + ": " + e.what());
    }
  }
  parse_error(where + ": matrix entries must be integers or \"a/b\" strings");
}

}  // namespace

alg::Field field_from_json(const json& j) {
  try {
    if (j.is_string()) return alg::Field::parse(j.get<std::string>());
    if (j.is_object() && j.contains("Fp")) return alg::Field::prime(count(j.at("Fp"), "field"));
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    parse_error(std::string("field: ") + e.what());
  }
  parse_error("field must be \"Q\" or {\"Fp\": p}");
}

json field_to_json(alg::Field f) {
  if (f.is_rational()) return "Q";
  return json{{"Fp", f.characteristic()}};
}

alg::Matrix matrix_from_json(const json& j, alg::Field field) {
  if (j.is_object() && j.contains("field") && field_from_json(j.at("field")) != field)
    parse_error("matrix field " + field_from_json(j.at("field")).name() + " differs from " + field.name());
  const std::size_t rows = count(member(j, "rows", "matrix"), "matrix rows");
  const std::size_t cols = count(member(j, "cols", "matrix"), "matrix cols");
  const json& e = member(j, "entries", "matrix");
  if (!e.is_array() || e.size() != rows) parse_error("matrix: expected " + std::to_string(rows) + " rows of entries");
  std::vector<alg::Matrix::Entry> entries;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!e[r].is_array() || e[r].size() != cols)
      parse_error("matrix: row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      auto v = scalar(e[r][c], field, "matrix");
      if (!v.is_zero()) entries.push_back({r, c, std::move(v)});
    }
  }
  return alg::Matrix::from_entries(field, rows, cols, std::move(entries));
}

json matrix_to_json(const alg::Matrix& m) {
  json rows = json::array();
  for (const auto& row : m.to_dense()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    rows.push_back(std::move(r));
  }
  return json{{"field", field_to_json(m.field())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json fun_to_json(const finset::FinFun& f) {
  return json{{"dom", f.dom().size}, {"cod", f.cod().size}, {"table", f.table()}};
}

Document Document::parse(const std::string& text, std::optional<alg::Field> field_override) {
  Document d;
  try {
    d.root_ = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!d.root_.is_object()) parse_error("top level must be an object");
  if (d.root_.contains("kind")) {
    json entities;
    entities["main"] = d.root_;
    json wrapped{{"entities", std::move(entities)}};
    if (d.root_.contains("field")) wrapped["field"] = d.root_.at("field");
    d.root_ = std::move(wrapped);
  }
  if (!d.root_.contains("entities") || !d.root_.at("entities").is_object())
    parse_error("expected \"entities\" object or a top-level \"kind\"");
  if (field_override)
    d.field_ = *field_override;
  else if (d.root_.contains("field"))
    d.field_ = field_from_json(d.root_.at("field"));
  return d;
}

Document Document::load(const std::string& path, std::optional<alg::Field> field_override) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), field_override);
}

std::vector<std::string> Document::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : root_.at("entities").items()) out.push_back(name);
  return out;
}

std::string Document::kind(const std::string& name) const {
  const json& ents = root_.at("entities");
  if (!ents.contains(name)) parse_error("no entity named \"" + name + "\"");
  const json& e = ents.at(name);
  if (!e.is_object() || !e.contains("kind") || !e.at("kind").is_string())
    parse_error("entity \"" + name + "\" has no kind");
  const std::string k = text(e.at("kind"), name);
  for (const char* known : kKinds)
    if (k == known) return k;
  throw Error(Errc::UnknownKind, "entity \"" + name + "\" has unknown kind \"" + k + "\"");
}

const json& Document::entity(const std::string& name, const char* expected_kind) const {
  const std::string k = kind(name);
  if (k != expected_kind) parse_error("entity \"" + name + "\" is a " + k + ", expected " + expected_kind);
  return root_.at("entities").at(name);
}

finset::FinSetObj Document::set(const std::string& name) const {
  const json& e = entity(name, "set");
  const json& n = e.contains("set") ? e.at("set") : member(e, "size", name);
  return {count(n, name)};
}

finset::FinFun Document::function(const std::string& name) const {
  const json& e = entity(name, "function");
  const json& f = e.contains("fun") ? e.at("fun") : e;
  const auto dom = count(member(f, "dom", name), name + ".dom");
  const auto cod = count(member(f, "cod", name), name + ".cod");
  try {
    return finset::FinFun({dom}, {cod}, counts(member(f, "table", name), name + ".table"));
  } catch (const Error& err) {
    if (err.code() == Errc::ParseError) throw;
    parse_error(name + ": " + err.what());
  }
}

coalg::Coalgebra Document::coalgebra(const std::string& name) const {
  const std::string k = kind(name);
  if (k != "coalgebra" && k != "bialgebra") parse_error("entity \"" + name + "\" is a " + k + ", expected coalgebra");
  const json& e = root_.at("entities").at(name);
  try {
    coalg::Coalgebra c(matrix_from_json(member(e, "delta", name), field_), matrix_from_json(member(e, "epsilon", name), field_));
    if (e.contains("dim") && count(e.at("dim"), name + ".dim") != c.dim()) parse_error(name + ": dim disagrees with epsilon");
    return c;
  } catch (const Error& err) {
    if (err.code() == Errc::ParseError) throw;
    parse_error(name + ": " + err.what());
  }
}

coalg::CoalgMap Document::coalg_map(const std::string& name) const {
  const json& e = entity(name, "coalg_map");
  const auto src = coalgebra(text(member(e, "src", name), name));
  const auto tgt = coalgebra(text(member(e, "tgt", name), name));
  try {
    return coalg::CoalgMap(src, tgt, matrix_from_json(member(e, "matrix", name), field_));
  } catch (const Error& err) {
    if (err.code() == Errc::ParseError) throw;
    parse_error(name + ": " + err.what());
  }
}

mon::MonoidObj<coalg::CoalgCat> Document::bialgebra(const std::string& name) const {
  const json& e = entity(name, "bialgebra");
  const auto c = coalgebra(name);
  const coalg::CoalgCat base(field_);
  try {
    return {c, coalg::CoalgMap(base.tensor(c, c), c, matrix_from_json(member(e, "m", name), field_)),
            coalg::CoalgMap(base.unit(), c, matrix_from_json(member(e, "u", name), field_))};
  } catch (const Error& err) {
    if (err.code() == Errc::ParseError) throw;
    parse_error(name + ": " + err.what());
  }
}

mon::MonoidObj<finset::FinSetCat> Document::finset_monoid(const std::string& name) const {
  const json& e = entity(name, "finset_monoid");
  const std::size_t n = count(member(e, "size", name), name + ".size");
  const std::size_t unit = count(member(e, "unit", name), name + ".unit");
  try {
    return {finset::FinSetObj{n}, finset::FinFun({n * n}, {n}, counts(member(e, "table", name), name + ".table")),
            finset::element({n}, unit)};
  } catch (const Error& err) {
    if (err.code() == Errc::ParseError) throw;
    parse_error(name + ": " + err.what());
  }
}

relcat::SmallCategory Document::small_category(const std::string& name) const {
  const json& e = entity(name, "small_category");
  relcat::SmallCategory sc;
  sc.objects = count(member(e, "objects", name), name + ".objects");
  sc.arrows = count(member(e, "arrows", name), name + ".arrows");
  sc.src = counts(member(e, "src", name), name + ".src");
  sc.tgt = counts(member(e, "tgt", name), name + ".tgt");
  sc.id = counts(member(e, "id", name), name + ".id");
  const json& comp = member(e, "comp", name);
  if (!comp.is_array()) parse_error(name + ".comp: expected an array of rows");
  for (const auto& row : comp) {
    if (!row.is_array()) parse_error(name + ".comp: expected an array of rows");
    std::vector<long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) parse_error(name + ".comp: entries must be integers");
      r.push_back(v.get<long>());
    }
    sc.comp.push_back(std::move(r));
  }
  return sc;
}

std::pair<std::string, std::string> Document::cospan(const std::string& name) const {
  const json& e = entity(name, "cospan");
  return {text(member(e, "left", name), name), text(member(e, "right", name), name)};
}

std::vector<std::string> Document::chain(const std::string& name) const {
  const json& e = entity(name, "chain");
  const json& maps = member(e, "maps", name);
  if (!maps.is_array()) parse_error(name + ".maps: expected an array of names");
  std::vector<std::string> out;
  for (const auto& m : maps) {
    if (!m.is_string()) parse_error(name + ".maps: expected an array of names");
    out.push_back(m.get<std::string>());
  }
  return out;
}

Document::FunctorMapRef Document::functor_map(const std::string& name) const {
  const json& e = entity(name, "functor_map");
  FunctorMapRef r;
  if (e.contains("src")) r.src = text(e.at("src"), name);
  if (e.contains("tgt")) r.tgt = text(e.at("tgt"), name);
  r.objects = counts(member(e, "objects", name), name + ".objects");
  r.arrows = counts(member(e, "arrows", name), name + ".arrows");
  return r;
}

Document::MonoidMorphismRef Document::monoid_morphism(const std::string& name) const {
  const json& e = entity(name, "monoid_morphism");
  return {text(member(e, "src", name), name), text(member(e, "tgt", name), name),
          text(member(e, "map", name), name)};
}

}  // namespace relspan::io
