#include "homalg/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace homalg {

using nlohmann::json;

HomAlgebra AlgebraFile::hom_algebra() const {
  if (!alpha) throw Error(ErrorKind::InvalidArgument, "file has no twisting map (alpha)");
  return HomAlgebra(algebra, *alpha);
}

AlgebraFile to_file(const HomAlgebra& h, std::optional<Element> unit) {
  return {h.algebra(), h.alpha(), std::move(unit), "{}"};
}

AlgebraFile to_file(const Algebra& a) { return {a, std::nullopt, std::nullopt, "{}"}; }

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(key, "missing");
  return *it;
}

std::size_t index_value(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return v.get<std::size_t>();
}

FieldSpec parse_field(const json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "Q") return FieldSpec::rationals();
    fail("field", "expected \"Q\" or {\"GF\": p}, got \"" + v.get<std::string>() + "\"");
  }
  if (v.is_object() && v.size() == 1 && v.contains("GF")) {
    const json& p = v.at("GF");
    if (!p.is_number_integer() || p.get<long long>() < 2) fail("field.GF", "expected an integer >= 2");
    try {
      return FieldSpec::prime(p.get<std::uint64_t>());
    } catch (const Error& e) {
      fail("field.GF", e.what());
    }
  }
  fail("field", "expected \"Q\" or {\"GF\": p}");
}

json field_json(const FieldSpec& f) {
  if (f.is_rationals()) return "Q";
  return json{{"GF", f.characteristic()}};
}

Scalar parse_scalar(const FieldSpec& field, const json& v, const std::string& where) {
  try {
    if (v.is_string()) return Scalar::parse(field, v.get<std::string>());
    if (v.is_number_integer()) return Scalar::parse(field, v.dump());
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected a scalar string such as \"3\" or \"-2/7\"");
}

Vector parse_vector(const FieldSpec& field, std::size_t n, const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != n) fail(where, "expected an array of " + std::to_string(n) + " scalars");
  Vector out(field, n);
  for (std::size_t i = 0; i < n; ++i) out[i] = parse_scalar(field, v[i], where + "[" + std::to_string(i) + "]");
  return out;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const Scalar& s : v.entries()) out.push_back(s.to_string());
  return out;
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");
  static const char* const kKnown[] = {"field", "dim", "basis", "products", "alpha", "unit", "metadata"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) fail(key, "unknown field");
  }

  const FieldSpec field = parse_field(require(doc, "field"));
  const std::size_t n = index_value(require(doc, "dim"), "dim");
  if (n == 0) fail("dim", "must be >= 1");

  std::vector<std::string> names;
  if (auto it = doc.find("basis"); it != doc.end()) {
    if (!it->is_array() || it->size() != n) fail("basis", "expected " + std::to_string(n) + " names");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*it)[i].is_string()) fail("basis[" + std::to_string(i) + "]", "expected a string");
      names.push_back((*it)[i].get<std::string>());
    }
  }
  AlgebraFile file{Algebra(field, n, std::move(names)), std::nullopt, std::nullopt, "{}"};

  if (auto it = doc.find("products"); it != doc.end()) {
    if (!it->is_array()) fail("products", "expected an array of [i, j, k, value]");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t r = 0; r < it->size(); ++r) {
      const std::string where = "products[" + std::to_string(r) + "]";
      const json& entry = (*it)[r];
      if (!entry.is_array() || entry.size() != 4) fail(where, "expected [i, j, k, value]");
      const std::size_t i = index_value(entry[0], where + "[0]");
      const std::size_t j = index_value(entry[1], where + "[1]");
      const std::size_t k = index_value(entry[2], where + "[2]");
      if (i >= n || j >= n || k >= n) fail(where, "index out of range for dim " + std::to_string(n));
      if (!seen.insert({i, j, k}).second) fail(where, "duplicate entry for (" + std::to_string(i) + ", " +
                                                     std::to_string(j) + ", " + std::to_string(k) + ")");
      file.algebra.set_sc(i, j, k, parse_scalar(field, entry[3], where + "[3]"));
    }
  }

  if (auto it = doc.find("alpha"); it != doc.end()) {
    if (!it->is_array() || it->size() != n) fail("alpha", "expected " + std::to_string(n) + " rows");
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      const std::string where = "alpha[" + std::to_string(r) + "]";
      m.set_row(r, parse_vector(field, n, (*it)[r], where));
    }
    file.alpha = LinearMap(std::move(m));
  }

  if (auto it = doc.find("unit"); it != doc.end()) file.unit = parse_vector(field, n, *it, "unit");

  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) fail("metadata", "expected an object");
    file.metadata = it->dump();
  }
  return file;
}

std::string dump_algebra_file(const AlgebraFile& file) {
  const Algebra& a = file.algebra;
  const std::size_t n = a.dim();
  std::ostringstream out;
  out << "{\n  \"field\": " << field_json(a.field()).dump() << ",\n  \"dim\": " << n;
  if (!a.basis_names().empty()) out << ",\n  \"basis\": " << json(a.basis_names()).dump();
  out << ",\n  \"products\": [";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& s = a.sc(i, j, k);
        if (s.is_zero()) continue;
        out << (first ? "\n    " : ",\n    ") << json::array({i, j, k, s.to_string()}).dump();
        first = false;
      }
  out << (first ? "]" : "\n  ]");
  if (file.alpha) {
    out << ",\n  \"alpha\": [";
    for (std::size_t r = 0; r < n; ++r) out << (r ? ",\n    " : "\n    ") << vector_json(file.alpha->matrix().row(r)).dump();
    out << "\n  ]";
  }
  if (file.unit) out << ",\n  \"unit\": " << vector_json(*file.unit).dump();
  out << ",\n  \"metadata\": " << json::parse(file.metadata).dump() << "\n}\n";
  return out.str();
}

namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

AlgebraFile load_algebra_file(const std::filesystem::path& path) {
  try {
    return parse_algebra_file(read_text(path));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Parse) throw;
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

void save_algebra_file(const AlgebraFile& file, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << dump_algebra_file(file);
}

SearchSpec parse_search_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");
  SearchSpec spec;
  spec.field = parse_field(require(doc, "field"));
  if (!spec.field.is_prime_field()) fail("field", "search needs a prime field {\"GF\": p}");
  spec.dim = index_value(require(doc, "dim"), "dim");
  if (auto it = doc.find("constraints"); it != doc.end()) {
    if (!it->is_array()) fail("constraints", "expected an array of strings");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) fail("constraints[" + std::to_string(i) + "]", "expected a string");
      spec.constraints.push_back(parse_constraint((*it)[i].get<std::string>()));
    }
  }
  if (auto it = doc.find("goal"); it != doc.end()) {
    if (it->is_string() && *it == "find-model") {
      spec.goal = SearchGoal::find_model();
    } else if (it->is_string() && *it == "count-models") {
      spec.goal = SearchGoal::count_models();
    } else if (it->is_object() && it->contains("countermodel") && it->at("countermodel").is_string()) {
      spec.goal = SearchGoal::countermodel(it->at("countermodel").get<std::string>());
    } else {
      fail("goal", "expected \"find-model\", \"count-models\" or {\"countermodel\": id}");
    }
  }
  if (auto it = doc.find("budget"); it != doc.end()) spec.budget = index_value(*it, "budget");
  if (auto it = doc.find("fixed"); it != doc.end()) {
    if (!it->is_object()) fail("fixed", "expected an object");
    const std::uint32_t p = spec.field.characteristic();
    auto residue = [&](const json& v, const std::string& where) {
      return parse_scalar(spec.field, v, where).residue() % p;
    };
    if (auto a = it->find("alpha"); a != it->end()) {
      if (!a->is_array() || a->size() != spec.dim) fail("fixed.alpha", "expected dim rows");
      std::vector<std::uint32_t> flat;
      for (std::size_t r = 0; r < spec.dim; ++r) {
        const json& row = (*a)[r];
        const std::string where = "fixed.alpha[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != spec.dim) fail(where, "expected dim entries");
        for (std::size_t c = 0; c < spec.dim; ++c) flat.push_back(residue(row[c], where));
      }
      spec.fixed_alpha = std::move(flat);
    }
    if (auto pr = it->find("products"); pr != it->end()) {
      if (!pr->is_array()) fail("fixed.products", "expected an array of [i, j, k, value]");
      for (std::size_t r = 0; r < pr->size(); ++r) {
        const std::string where = "fixed.products[" + std::to_string(r) + "]";
        const json& e = (*pr)[r];
        if (!e.is_array() || e.size() != 4) fail(where, "expected [i, j, k, value]");
        spec.fixed_products.push_back({index_value(e[0], where), index_value(e[1], where), index_value(e[2], where),
                                       residue(e[3], where)});
      }
    }
  }
  try {
    validate(spec);
  } catch (const Error& e) {
    fail("spec", e.what());
  }
  return spec;
}

SearchSpec load_search_spec(const std::filesystem::path& path) {
  try {
    return parse_search_spec(read_text(path));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Parse) throw;
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

}  // namespace homalg
