#include "commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "homalg/analysis.hpp"
#include "homalg/fixtures.hpp"
#include "homalg/io.hpp"
#include "homalg/search.hpp"
#include "homalg/twisting.hpp"
#include "json.hpp"

namespace homalg::cli {

namespace {

using ojson = nlohmann::ordered_json;

const std::atomic<bool>* g_interrupt = nullptr;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;
  std::size_t degree_bound = 6;
};

// A loaded target: a file or a built-in fixture.
struct Target {
  std::string name;
  AlgebraFile file;
  std::optional<Fixture> fixture;
};

Target resolve(const std::string& name, const Globals& g) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(name, ec)) return {name, load_algebra_file(name), std::nullopt};
  if (is_fixture_id(name)) {
    Fixture f = load_fixture(name, g.degree_bound);
    AlgebraFile file = f.file;
    return {name, std::move(file), std::move(f)};
  }
  throw Error(ErrorKind::InvalidArgument, "\"" + name + "\" is neither a readable file nor a fixture id");
}

HomAlgebra need_hom(const Target& t) {
  if (!t.file.alpha) throw Error(ErrorKind::InvalidArgument, t.name + " has no twisting map (alpha)");
  return t.file.hom_algebra();
}

// The file's unit if it is one, else the solved two-sided unit.
std::optional<Element> unit_of(const Target& t) {
  if (t.file.unit && is_unit(t.file.algebra, *t.file.unit)) return t.file.unit;
  if (t.file.unit) return std::nullopt;
  return find_two_sided_unit(t.file.algebra);
}

ojson vec_json(const Vector& v) {
  ojson out = ojson::array();
  for (const Scalar& s : v.entries()) out.push_back(s.to_string());
  return out;
}

ojson matrix_json(const Matrix& m) {
  ojson out = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r)));
  return out;
}

ojson subspace_json(const Subspace& s) {
  ojson basis = ojson::array();
  for (const Vector& v : s.basis_vectors()) basis.push_back(vec_json(v));
  return {{"dim", s.dim()}, {"basis", basis}};
}

ojson witness_json(const Algebra& a, const Witness& w) {
  ojson labels = ojson::array();
  for (std::size_t i : w.indices) labels.push_back(a.basis_name(i));
  return {{"indices", w.indices}, {"labels", labels}, {"lhs", vec_json(w.lhs)}, {"rhs", vec_json(w.rhs)},
          {"description", w.description}};
}

ojson check_json(const Algebra& a, const std::string& name, const CheckResult& r) {
  ojson out = {{"check", name}, {"passed", r.passed}};
  if (r.witness) out["witness"] = witness_json(a, *r.witness);
  return out;
}

ojson affine_json(const std::optional<AffineSolution>& s) {
  if (!s) return nullptr;
  return {{"particular", vec_json(s->particular)}, {"homogeneous", subspace_json(s->homogeneous)}};
}

ojson identity_json(const Algebra& a, const IdentityReport& r) {
  ojson out = {{"id", r.id}, {"statement", r.statement}, {"status", std::string(to_string(r.status))}};
  if (r.witness) out["witness"] = witness_json(a, *r.witness);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

std::string witness_text(const Algebra& a, const Witness& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.indices.size(); ++i) s += (i ? ", " : "") + a.basis_name(w.indices[i]);
  return s + "): lhs = " + w.lhs.to_string() + ", rhs = " + w.rhs.to_string();
}

void print_check(std::ostream& out, const Algebra& a, const std::string& name, const CheckResult& r) {
  out << name << ": " << (r.passed ? "pass" : "FAIL");
  if (r.witness) out << "  witness " << witness_text(a, *r.witness);
  out << '\n';
}

void print_identities(std::ostream& out, const Algebra& a, const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    out << "  " << r.id << " [" << r.statement << "]: " << to_string(r.status);
    if (r.witness) out << "  witness " << witness_text(a, *r.witness);
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << '\n';
  }
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    if (r.status != IdentityStatus::Pass) return false;
  return true;
}

void emit(std::ostream& out, const ojson& doc) { out << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------- check

struct CheckFlags {
  bool hom = false, assoc = false, comm = false, units = false, unital_ids = false, weak_ids = false,
       obstruction = false, diagnostic = false;
};

int cmd_check(const std::string& name, CheckFlags f, const Globals& g, std::ostream& out) {
  const Target t = resolve(name, g);
  const Algebra& a = t.file.algebra;
  if (!(f.hom || f.assoc || f.comm || f.units || f.unital_ids || f.weak_ids || f.obstruction)) f.hom = true;
  const TripleFilter in_bound = t.fixture ? t.fixture->in_bound : TripleFilter{};
  bool passed = true;
  ojson checks = ojson::array();
  std::ostringstream text;

  if (f.hom) {
    const CheckResult r = check_hom_associative(need_hom(t), in_bound);
    passed &= r.passed;
    checks.push_back(check_json(a, "hom-associative", r));
    print_check(text, a, in_bound ? "hom-associative (in-bound triples)" : "hom-associative", r);
  }
  if (f.assoc) {
    const CheckResult r = check_associative(a, in_bound);
    passed &= r.passed;
    checks.push_back(check_json(a, "associative", r));
    print_check(text, a, "associative", r);
  }
  if (f.comm) {
    const CheckResult r = check_commutative(a);
    passed &= r.passed;
    checks.push_back(check_json(a, "commutative", r));
    print_check(text, a, "commutative", r);
  }
  if (f.units) {
    const UnitReport u = find_units(need_hom(t));
    ojson j = {{"check", "units"},
               {"passed", true},
               {"two_sided_unit", u.two_sided_unit ? vec_json(*u.two_sided_unit) : ojson(nullptr)},
               {"left_units", affine_json(u.left_units)},
               {"right_units", affine_json(u.right_units)},
               {"weak_left_units", affine_json(u.weak_left_units)},
               {"weak_right_units", affine_json(u.weak_right_units)}};
    checks.push_back(j);
    auto line = [&](const char* label, const std::optional<AffineSolution>& s) {
      text << "  " << label << ": ";
      if (!s) {
        text << "none\n";
      } else {
        text << s->particular.to_string() << " + span of " << s->homogeneous.dim() << " vector(s)\n";
      }
    };
    text << "units:\n  two-sided unit: " << (u.two_sided_unit ? u.two_sided_unit->to_string() : "none") << '\n';
    line("left units", u.left_units);
    line("right units", u.right_units);
    line("weak left units (c*x = alpha(x))", u.weak_left_units);
    line("weak right units (x*c = alpha(x))", u.weak_right_units);
  }
  if (f.unital_ids) {
    const HomAlgebra h = need_hom(t);
    const std::optional<Element> unit = unit_of(t);
    std::vector<std::string> missing;
    if (!unit) missing.push_back("no two-sided unit");
    if (auto r = check_hom_associative(h, in_bound); !r) missing.push_back("not hom-associative");
    const auto reports = verify_unital_identities(h, unit, CheckMode::Diagnostic);
    const bool ok = missing.empty() && all_pass(reports);
    passed &= ok;
    ojson list = ojson::array();
    for (const auto& r : reports) list.push_back(identity_json(a, r));
    checks.push_back({{"check", "unital-identities"}, {"passed", ok}, {"preconditions_failed", missing},
                      {"diagnostic", !missing.empty()}, {"identities", list}});
    text << "unital identities" << (missing.empty() ? "" : " (diagnostic: preconditions failed)") << ": "
         << (ok ? "pass" : "FAIL") << '\n';
    for (const auto& m : missing) text << "  precondition: " << m << '\n';
    print_identities(text, a, reports);
  }
  if (f.weak_ids) {
    const HomAlgebra h = need_hom(t);
    std::vector<std::string> missing;
    if (auto r = check_hom_associative(h); !r) missing.push_back("not hom-associative");
    if (!h.alpha().is_injective()) missing.push_back("alpha not bijective");
    if (!find_weak_left_units(h)) missing.push_back("no weak left unit");
    const auto reports = verify_weak_unit_identities(h, CheckMode::Diagnostic);
    const bool ok = missing.empty() && all_pass(reports);
    passed &= ok;
    ojson list = ojson::array();
    for (const auto& r : reports) list.push_back(identity_json(a, r));
    checks.push_back({{"check", "weak-unit-identities"}, {"passed", ok}, {"preconditions_failed", missing},
                      {"diagnostic", !missing.empty()}, {"identities", list}});
    text << "weak-unit identities" << (missing.empty() ? "" : " (diagnostic: preconditions failed)") << ": "
         << (ok ? "pass" : "FAIL") << '\n';
    for (const auto& m : missing) text << "  precondition: " << m << '\n';
    print_identities(text, a, reports);
  }
  if (f.obstruction) {
    const auto w = weak_embedding_obstruction(need_hom(t));
    passed &= !w.has_value();
    ojson j = {{"check", "no-embedding-obstruction"}, {"passed", !w.has_value()}};
    if (w) j["witness"] = {{"x", vec_json(w->x)}, {"y", vec_json(w->y)}, {"twisted_product", vec_json(w->twisted_product)}};
    checks.push_back(j);
    if (w) {
      text << "embedding obstruction: FOUND  x = " << w->x.to_string() << ", y = " << w->y.to_string()
           << ", x*y = 0, alpha(x)*alpha(y) = " << w->twisted_product.to_string() << '\n';
    } else {
      text << "embedding obstruction: none found\n";
    }
  }

  if (g.json) {
    emit(out, {{"command", "check"}, {"target", t.name}, {"passed", passed}, {"checks", checks}});
  } else {
    out << t.name << '\n' << text.str();
  }
  return passed ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- analyze

int analyze_truncated(const Target& t, const Globals& g, std::ostream& out) {
  const Fixture& f = *t.fixture;
  const HomAlgebra h = need_hom(t);
  const Subspace kernel = kernel_basis(*f.graded_alpha);
  const CheckResult hom = check_hom_associative(h, f.in_bound);
  const CheckResult assoc = check_associative(h.algebra(), f.in_bound);
  const bool ok = hom.passed;
  if (g.json) {
    emit(out, {{"command", "analyze"},
               {"target", t.name},
               {"bounded_verification", true},
               {"degree_bound", g.degree_bound},
               {"kernel", subspace_json(kernel)},
               {"hom_associative_in_bound", check_json(h.algebra(), "hom-associative", hom)},
               {"associative_in_bound", check_json(h.algebra(), "associative", assoc)},
               {"passed", ok}});
  } else {
    out << t.name << " (degree bound " << g.degree_bound << ", checks restricted to in-bound triples)\n"
        << "dim Ke(alpha): " << kernel.dim() << '\n';
    print_check(out, h.algebra(), "hom-associative", hom);
    print_check(out, h.algebra(), "associative", assoc);
  }
  return ok ? kPass : kCheckFailed;
}

int cmd_analyze(const std::string& name, const Globals& g, std::ostream& out) {
  const Target t = resolve(name, g);
  if (t.fixture && t.fixture->in_bound) return analyze_truncated(t, g, out);
  const HomAlgebra h = need_hom(t);
  const Algebra& a = h.algebra();
  const std::optional<Element> unit = unit_of(t);
  const CheckResult hom = check_hom_associative(h);

  const Subspace image = alpha_image(h), kernel = alpha_kernel(h), nuc = nucleus(a), cen = centralizer(a);
  ojson doc = {{"command", "analyze"},
               {"target", t.name},
               {"dim", a.dim()},
               {"image", subspace_json(image)},
               {"kernel", subspace_json(kernel)},
               {"nucleus", subspace_json(nuc)},
               {"centralizer", subspace_json(cen)},
               {"hom_associative", check_json(a, "hom-associative", hom)},
               {"unit", unit ? vec_json(*unit) : ojson(nullptr)}};
  std::ostringstream text;
  text << t.name << "\ndim " << a.dim() << ", rank alpha " << image.dim() << ", dim Ke(alpha) " << kernel.dim()
       << ", dim nucleus " << nuc.dim() << ", dim centralizer " << cen.dim() << '\n';
  print_check(text, a, "hom-associative", hom);

  bool ok = true;
  if (!hom || !unit) {
    ok = false;
    doc["codim"] = nullptr;
    doc["preconditions_failed"] = ojson::array();
    if (!hom) doc["preconditions_failed"].push_back("not hom-associative");
    if (!unit) doc["preconditions_failed"].push_back("no two-sided unit");
    text << "codim analysis skipped: needs a unital hom-associative algebra\n";
  } else {
    const CodimReport r = codim_analysis(h, *unit);
    ojson c = {{"codim_im_alpha", r.codim_im_alpha},
               {"rank_alpha", r.rank_alpha},
               {"kernel_dim", r.kernel_dim},
               {"alpha_injective", r.alpha_injective},
               {"alpha_surjective", r.alpha_surjective},
               {"alpha_injective_on_image", r.alpha_injective_on_image},
               {"unit_in_image", r.unit_in_image},
               {"commutative", r.commutative},
               {"decomposition",
                {{"unit_line", subspace_json(r.decomposition.unit_line)},
                 {"image", subspace_json(r.decomposition.image)},
                 {"complement", subspace_json(r.decomposition.complement)},
                 {"direct", r.decomposition.direct}}},
               {"clause", std::string(to_string(r.clause))},
               {"predicted_associative", r.predicted_associative},
               {"actual_associative", r.actual_associative},
               {"violations", r.violations}};
    if (r.associativity_witness) c["associativity_witness"] = witness_json(a, *r.associativity_witness);
    if (r.complement_cube_associates) c["complement_cube_associates"] = *r.complement_cube_associates;
    doc["codim"] = c;
    ok = r.violations.empty();
    text << "codim Im(alpha) " << r.codim_im_alpha << ", alpha injective " << r.alpha_injective << ", surjective "
         << r.alpha_surjective << ", injective on image " << r.alpha_injective_on_image << '\n'
         << "decomposition: unit line + image (" << r.decomposition.image.dim() << ") + complement ("
         << r.decomposition.complement.dim() << "), direct " << r.decomposition.direct << '\n'
         << "clause fired: " << to_string(r.clause) << ", predicted associative " << r.predicted_associative
         << ", actually associative " << r.actual_associative << '\n';
    if (r.associativity_witness) text << "associativity witness " << witness_text(a, *r.associativity_witness) << '\n';
    for (const auto& v : r.violations) text << "VIOLATION: " << v << '\n';

    try {
      const AssociativeFactor fct = associative_factor(h);
      const bool fassoc = check_associative(fct.quotient).passed;
      doc["associative_factor"] = {{"dim", fct.quotient.dim()},
                                   {"associative", fassoc},
                                   {"induced_alpha_injective", fct.induced_alpha_injective}};
      text << "associative factor: dim " << fct.quotient.dim() << ", associative " << fassoc
           << ", induced alpha injective " << fct.induced_alpha_injective << '\n';
      ok &= fassoc;
    } catch (const Error& e) {
      doc["associative_factor"] = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
      text << "associative factor: " << to_string(e.kind()) << " (" << e.what() << ")\n";
      if (e.kind() != ErrorKind::Degenerate) ok = false;
    }
  }
  doc["passed"] = ok;
  if (g.json) {
    emit(out, doc);
  } else {
    out << text.str();
  }
  return ok ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- twist / detwist

LinearMap read_alpha(const std::string& path, const FieldSpec& field, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": malformed JSON: " + e.what());
  }
  const nlohmann::json rows = doc.is_object() && doc.contains("alpha") ? doc.at("alpha") : doc;
  if (!rows.is_array() || rows.size() != n) throw Error(ErrorKind::Parse, path + ": alpha must have " + std::to_string(n) + " rows");
  Matrix m(field, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) {
      throw Error(ErrorKind::Parse, path + ": alpha row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const auto& v = rows[r][c];
      m(r, c) = Scalar::parse(field, v.is_string() ? v.get<std::string>() : v.dump());
    }
  }
  return LinearMap(std::move(m));
}

int cmd_twist(const std::string& name, const std::string& mode, const std::string& alpha_path, const std::string& out_path,
              const Globals& g, std::ostream& out) {
  const Target t = resolve(name, g);
  const Algebra& a = t.file.algebra;
  const LinearMap alpha = alpha_path.empty() ? need_hom(t).alpha() : read_alpha(alpha_path, a.field(), a.dim());
  HomAlgebra h;
  try {
    h = mode == "yau" ? yau_twist(a, alpha) : generalized_twist(a, alpha);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DimensionMismatch || e.kind() == ErrorKind::FieldMismatch) throw;
    if (g.json) {
      emit(out, {{"command", "twist"}, {"mode", mode}, {"passed", false},
                 {"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
    } else {
      out << "twist failed: " << to_string(e.kind()) << ": " << e.what() << '\n';
    }
    return kCheckFailed;
  }
  AlgebraFile result = to_file(h);
  if (!a.basis_names().empty()) result.algebra.set_basis_names(a.basis_names());
  if (!out_path.empty()) save_algebra_file(result, out_path);
  const auto weak_left = find_weak_left_units(h);
  const auto weak_right = find_weak_right_units(h);
  if (g.json) {
    emit(out, {{"command", "twist"},
               {"mode", mode},
               {"passed", true},
               {"hom_associative", true},
               {"weak_left_units", affine_json(weak_left)},
               {"weak_right_units", affine_json(weak_right)},
               {"result", ojson::parse(dump_algebra_file(result))}});
  } else {
    out << mode << " twist of " << t.name << ": hom-associative\n"
        << "weak left unit: " << (weak_left ? weak_left->particular.to_string() : "none") << '\n'
        << "weak right unit: " << (weak_right ? weak_right->particular.to_string() : "none") << '\n'
        << dump_algebra_file(result);
  }
  return kPass;
}

int cmd_detwist(const std::string& name, const Globals& g, std::ostream& out) {
  const Target t = resolve(name, g);
  const HomAlgebra h = need_hom(t);
  DetwistResult r;
  try {
    r = detwist(h);
  } catch (const Error& e) {
    if (g.json) {
      emit(out, {{"command", "detwist"}, {"passed", false}, {"error", std::string(to_string(e.kind()))},
                 {"message", e.what()}});
    } else {
      out << "detwist failed: " << to_string(e.kind()) << ": " << e.what() << '\n';
    }
    return kCheckFailed;
  }
  // detwist already enforces the round trip; recomputed here for the report.
  const bool round_trip = generalized_twist(r.detwisted, h.alpha()).algebra() == h.algebra();
  const auto reports = verify_weak_unit_identities(h);
  const bool ids_ok = all_pass(reports);
  AlgebraFile detwisted = to_file(r.detwisted);
  if (g.json) {
    ojson list = ojson::array();
    for (const auto& rep : reports) list.push_back(identity_json(h.algebra(), rep));
    emit(out, {{"command", "detwist"},
               {"passed", round_trip && ids_ok},
               {"left_unit", vec_json(r.left_unit)},
               {"beta", matrix_json(r.beta.matrix())},
               {"detwisted", ojson::parse(dump_algebra_file(detwisted))},
               {"associative", true},
               {"round_trip", round_trip},
               {"weak_unit_identities", list}});
  } else {
    out << "detwist of " << t.name << "\nleft unit c = " << r.left_unit.to_string() << "\ndetwisted product x.y = beta(x*y):\n"
        << dump_algebra_file(detwisted) << "associative: yes\nround-trip: " << (round_trip ? "OK" : "MISMATCH") << '\n'
        << "weak-unit identities:\n";
    print_identities(out, h.algebra(), reports);
  }
  return round_trip && ids_ok ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- enumerate-twists

int cmd_enumerate(const std::string& name, const std::string& candidates_path, const Globals& g, std::ostream& out) {
  const Target t = resolve(name, g);
  const Algebra& a = t.file.algebra;
  const std::optional<Element> unit = unit_of(t);
  if (!unit) {
    if (g.json) {
      emit(out, {{"command", "enumerate-twists"}, {"passed", false}, {"error", "NotUnital"}});
    } else {
      out << "enumerate-twists: " << t.name << " has no two-sided unit\n";
    }
    return kCheckFailed;
  }
  EnumerateOptions options;
  if (g.budget) options.budget = *g.budget;
  if (a.field().is_rationals()) {
    if (candidates_path.empty()) {
      throw Error(ErrorKind::InvalidArgument, "over Q enumeration needs --candidates <file>");
    }
    std::ifstream in(candidates_path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + candidates_path);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::Parse, candidates_path + ": " + e.what());
    }
    const nlohmann::json list = doc.is_object() && doc.contains("candidates") ? doc.at("candidates") : doc;
    if (!list.is_array()) throw Error(ErrorKind::Parse, candidates_path + ": expected a list of coordinate vectors");
    for (const auto& c : list) {
      if (!c.is_array() || c.size() != a.dim()) throw Error(ErrorKind::Parse, candidates_path + ": candidate of wrong length");
      Vector v(a.field(), a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i) v[i] = Scalar::parse(a.field(), c[i].is_string() ? c[i].get<std::string>() : c[i].dump());
      options.candidates.push_back(std::move(v));
    }
  }
  TwistCorrespondence tc;
  try {
    tc = enumerate_twists(a, *unit, options);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    if (g.json) {
      emit(out, {{"command", "enumerate-twists"}, {"passed", false}, {"error", "BudgetExceeded"}, {"message", e.what()}});
    } else {
      out << "enumerate-twists: " << e.what() << '\n';
    }
    return kCheckFailed;
  }
  if (g.json) {
    ojson pairs = ojson::array();
    for (std::size_t i = 0; i < tc.ac_elements.size(); ++i) {
      pairs.push_back({{"element", vec_json(tc.ac_elements[i])}, {"alpha", matrix_json(tc.twist_maps[i].matrix())}});
    }
    emit(out, {{"command", "enumerate-twists"},
               {"passed", true},
               {"unit", vec_json(tc.unit)},
               {"count", tc.ac_elements.size()},
               {"pairs", pairs}});
  } else {
    out << t.name << ": " << tc.ac_elements.size() << " twisting map(s), unit " << tc.unit.to_string() << '\n';
    for (std::size_t i = 0; i < tc.ac_elements.size(); ++i) {
      out << "  a = " << tc.ac_elements[i].to_string() << "  alpha = " << tc.twist_maps[i].matrix().to_string() << '\n';
    }
  }
  return kPass;
}

// ---------------------------------------------------------------- search

int cmd_search(const std::string& spec_path, bool naive, bool progress, const Globals& g, std::ostream& out,
               std::ostream& err) {
  SearchSpec spec = load_search_spec(spec_path);
  if (g.budget) spec.budget = *g.budget;
  SearchControl control;
  control.stop = g_interrupt;
  if (progress) control.progress = [&err](std::uint64_t nodes) { err << "nodes explored: " << nodes << '\n'; };
  const SearchOutcome r = naive ? naive_enumerate(spec) : search(spec, control);
  if (g.json) {
    ojson doc = {{"command", "search"},
                 {"engine", naive ? "naive" : "pruned"},
                 {"status", std::string(to_string(r.status))},
                 {"count", r.count},
                 {"nodes_explored", r.nodes_explored},
                 {"interrupted", r.interrupted}};
    if (r.model) doc["model"] = ojson::parse(dump_algebra_file(to_file(*r.model)));
    emit(out, doc);
  } else {
    out << "status: " << to_string(r.status) << "\nnodes explored: " << r.nodes_explored << '\n';
    if (r.status == SearchStatus::Count || r.status == SearchStatus::BudgetExceeded) out << "models counted: " << r.count << '\n';
    if (r.interrupted) out << "interrupted\n";
    if (r.model) out << "model:\n" << dump_algebra_file(to_file(*r.model));
  }
  return r.interrupted ? kCheckFailed : kPass;
}

// ---------------------------------------------------------------- fixture

int cmd_fixture(const std::string& id, bool list, const std::string& recipe, std::size_t dim, const std::string& field,
                const std::string& out_path, const Globals& g, std::ostream& out) {
  if (list || id.empty()) {
    for (const auto& f : fixture_ids()) out << f << "  " << load_fixture(f, g.degree_bound).summary << '\n';
    out << "random  seeded generator: fixture random --recipe R --dim N --field Q|GF:p --seed S\n";
    return kPass;
  }
  AlgebraFile file;
  if (id == "random") {
    FieldSpec fs = FieldSpec::rationals();
    if (field.rfind("GF:", 0) == 0) {
      fs = FieldSpec::prime(std::stoull(field.substr(3)));
    } else if (field != "Q") {
      throw Error(ErrorKind::InvalidArgument, "--field must be Q or GF:p");
    }
    const HomAlgebra h = random_hom_algebra(fs, dim, parse_recipe(recipe), g.seed);
    file = to_file(h, find_two_sided_unit(h.algebra()));
  } else {
    file = load_fixture(id, g.degree_bound).file;
  }
  if (!out_path.empty()) save_algebra_file(file, out_path);
  if (g.json) {
    emit(out, ojson::parse(dump_algebra_file(file)));
  } else {
    out << dump_algebra_file(file);
  }
  return kPass;
}

bool is_usage_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::FieldMismatch:
    case ErrorKind::Degenerate:
    case ErrorKind::CapExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace

void set_interrupt_flag(const std::atomic<bool>* flag) { g_interrupt = flag; }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hom-associative algebra toolkit", "homalg"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::uint64_t budget = 0;
  app.add_flag("--json", g.json, "Machine-readable report");
  app.add_option("--seed", g.seed, "Seed for random generation");
  auto* budget_opt = app.add_option("--budget", budget, "Search node budget / enumeration budget");
  app.add_option("--degree-bound", g.degree_bound, "Degree bound of truncated fixtures")->check(CLI::Range(2, 64));

  std::string target, mode = "yau", alpha_path, out_path, candidates, recipe = "central-multiplication", field = "Q";
  CheckFlags flags;
  bool naive = false, progress = false, list = false;
  std::size_t dim = 3;

  auto* check = app.add_subcommand("check", "Run axiom and identity checks on a file or fixture");
  check->add_option("target", target, "Algebra file or fixture id")->required();
  check->add_flag("--hom-associative", flags.hom, "alpha(x)*(y*z) = (x*y)*alpha(z) (default)");
  check->add_flag("--associative", flags.assoc);
  check->add_flag("--commutative", flags.comm);
  check->add_flag("--units", flags.units, "Solve the unit and weak-unit systems");
  check->add_flag("--unital-identities", flags.unital_ids);
  check->add_flag("--weak-unit-identities", flags.weak_ids);
  check->add_flag("--obstruction", flags.obstruction, "Fail when a weak-embedding obstruction exists");
  check->add_flag("--diagnostic", flags.diagnostic, "Accepted for compatibility; identity suites always report");

  auto* analyze = app.add_subcommand("analyze", "Subspaces, codimension analysis and associative factor");
  analyze->add_option("target", target)->required();

  auto* twist = app.add_subcommand("twist", "Yau or generalized twist");
  twist->add_option("target", target)->required();
  twist->add_option("--mode", mode)->check(CLI::IsMember({"yau", "generalized"}));
  twist->add_option("--alpha", alpha_path, "JSON file with the twisting matrix (defaults to the file's alpha)");
  twist->add_option("--out", out_path, "Write the twisted algebra here");

  auto* detw = app.add_subcommand("detwist", "Recover the associative product behind a weakly unital hom-algebra");
  detw->add_option("target", target)->required();

  auto* enumerate = app.add_subcommand("enumerate-twists", "All compatible twisting maps of a unital algebra");
  enumerate->add_option("target", target)->required();
  enumerate->add_option("--candidates", candidates, "JSON list of candidate elements (required over Q)");

  auto* srch = app.add_subcommand("search", "Finite model search");
  srch->add_option("spec", target, "Search spec file")->required();
  srch->add_flag("--naive", naive, "Use the unpruned enumerator");
  srch->add_flag("--progress", progress, "Stream node counts to stderr");

  auto* fixture = app.add_subcommand("fixture", "Print a built-in fixture or a seeded random hom-algebra");
  fixture->add_option("id", target);
  fixture->add_flag("--list", list);
  fixture->add_option("--recipe", recipe);
  fixture->add_option("--dim", dim)->check(CLI::Range(1, 16));
  fixture->add_option("--field", field, "Q or GF:p");
  fixture->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  if (budget_opt->count()) g.budget = budget;

  try {
    if (*check) return cmd_check(target, flags, g, out);
    if (*analyze) return cmd_analyze(target, g, out);
    if (*twist) return cmd_twist(target, mode, alpha_path, out_path, g, out);
    if (*detw) return cmd_detwist(target, g, out);
    if (*enumerate) return cmd_enumerate(target, candidates, g, out);
    if (*srch) return cmd_search(target, naive, progress, g, out, err);
    if (*fixture) return cmd_fixture(target, list, recipe, dim, field, out_path, g, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return is_usage_error(e.kind()) ? kUsage : kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace homalg::cli
