// Command-line front end: load algebras (catalog name or JSON file), compute
// operator spaces, run the check suites, emit text or JSON.
//
// Exit codes: 0 success/verified, 1 refuted check, 2 input error.

#include "leibalg/catalog.hpp"
#include "leibalg/pointwise.hpp"
#include "leibalg/tensor.hpp"
#include "leibalg/theorems.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace leibalg;

struct Options {
  std::string format = "text";
  std::string field = "rational";
  std::uint64_t seed = 0;
};

std::uint64_t seed_from_env() {
  const char* s = std::getenv("LEIBALG_SEED");
  if (!s || !*s) return 0;
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (errno != 0 || end == s || *end != '\0')
    throw DocumentError(std::string("LEIBALG_SEED: expected a decimal integer, got '") + s + "'");
  return v;
}

AlgebraDocument load_document(const std::string& src) {
  for (const auto& n : catalog::names())
    if (n == src) return catalog::document(src);
  std::ifstream in(src);
  if (!in) throw DocumentError("'" + src + "' is neither a catalog algebra nor a readable file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

template <class S>
std::string entry_str(const S& x) {
  return to_string(x);
}

template <class S>
void print_matrix_text(std::ostream& os, const DenseMatrix<S>& m, const std::string& indent) {
  std::vector<std::size_t> width(m.cols(), 0);
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) width[j] = std::max(width[j], entry_str(m(i, j)).size());
  for (int i = 0; i < m.rows(); ++i) {
    os << indent << "[";
    for (int j = 0; j < m.cols(); ++j) {
      std::string s = entry_str(m(i, j));
      os << std::string(width[j] - s.size(), ' ') << s << (j + 1 < m.cols() ? "  " : "");
    }
    os << "]\n";
  }
}

template <class S>
nlohmann::ordered_json matrix_strings(const DenseMatrix<S>& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(entry_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S>
nlohmann::ordered_json subspace_json(const Subspace<S>& s) {
  nlohmann::ordered_json j;
  j["dim"] = s.dim();
  j["basis"] = matrix_strings(s.basis());
  return j;
}

nlohmann::ordered_json certificate_json(const PointwiseCertificate& c) {
  nlohmann::ordered_json j;
  j["seed"] = c.seed;
  j["samples"] = c.sample_count;
  j["refinement_rounds"] = c.refinement_rounds;
  j["exhaustive"] = c.exhaustive;
  nlohmann::ordered_json primes = nlohmann::ordered_json::array();
  for (const auto& [p, ok] : c.prime_results)
    primes.push_back({{"p", p}, {"pass", ok}});
  j["primes"] = std::move(primes);
  return j;
}

std::string certificate_line(const PointwiseCertificate& c) {
  if (!c.exhaustive) return "sampled only (dimension too large for exhaustive verification)";
  std::string primes;
  bool all = !c.prime_results.empty();
  for (const auto& [p, ok] : c.prime_results) {
    primes += (primes.empty() ? "" : ",") + std::to_string(p);
    all = all && ok;
  }
  return "exhaustive mod " + primes + ": " + (all ? "pass" : "FAIL");
}

void emit(const Options& opt, const nlohmann::ordered_json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

template <class S>
int print_space(const Options& opt, const std::string& alg, const std::string& which,
                const OperatorSpace<S>& sp, const PointwiseCertificate* cert) {
  nlohmann::ordered_json j;
  j["algebra"] = alg;
  j["which"] = which;
  j["field"] = opt.field;
  j["dim"] = sp.dim();
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  std::ostringstream os;
  os << which << "(" << alg << ")  dim " << sp.dim() << "\n";
  for (int i = 0; i < sp.dim(); ++i) {
    basis.push_back(matrix_strings(sp.basis_matrix(i)));
    os << "basis " << i << ":\n";
    print_matrix_text(os, sp.basis_matrix(i), "  ");
  }
  j["basis"] = std::move(basis);
  if (cert) {
    j["certificate"] = certificate_json(*cert);
    os << "certificate: " << certificate_line(*cert) << "\n";
  }
  emit(opt, j, os.str());
  return 0;
}

int cmd_info(const Options& opt, const std::string& src) {
  AlgebraDocument doc = load_document(src);
  LeibnizAlgebra<Rational> g = document_leibniz(doc);
  auto c = centres(g);
  auto series = lower_central_series(g, full_ideal(g));
  auto cls = nilpotency_class(g, full_ideal(g));
  Subspace<Rational> ann = ann_subspace(g);
  LeibnizAlgebra<Rational> lies = liesation(g);
  AlgebraDocument lies_doc =
      document_from_table(doc.name + "/ann", "leibniz", lies.table());

  nlohmann::ordered_json j;
  j["name"] = doc.name;
  j["dim"] = g.dim();
  j["basis"] = g.table().basis_names();
  j["z_lie"] = subspace_json(c.z_lie);
  j["z_left"] = subspace_json(c.z_left);
  j["z_right"] = subspace_json(c.z_right);
  j["z"] = subspace_json(c.z);
  nlohmann::ordered_json dims = nlohmann::ordered_json::array();
  for (const auto& s : series) dims.push_back(s.dim());
  j["lower_central_series"] = std::move(dims);
  if (cls)
    j["nilpotency_class"] = *cls;
  else
    j["nilpotency_class"] = nullptr;
  j["ann"] = subspace_json(ann);
  j["liesation"] = to_json(lies_doc);

  std::ostringstream os;
  os << doc.name << "  dim " << g.dim() << "\n";
  os << "Z_Lie dim " << c.z_lie.dim() << ", Z^l dim " << c.z_left.dim() << ", Z^r dim "
     << c.z_right.dim() << ", Z dim " << c.z.dim() << "\n";
  os << "lower Lie-central series dims:";
  for (const auto& s : series) os << " " << s.dim();
  os << "\n";
  if (cls)
    os << "Lie-nilpotency class " << *cls << "\n";
  else
    os << "not Lie-nilpotent\n";
  os << "ann dim " << ann.dim() << "\n";
  os << "liesation (dim " << lies.dim() << "):\n" << serialize_document(lies_doc);
  emit(opt, j, os.str());
  return 0;
}

int cmd_space(const Options& opt, const std::string& src, const std::string& which) {
  AlgebraDocument doc = load_document(src);
  LeibnizAlgebra<Rational> g = document_leibniz(doc);
  FieldSpec field = parse_field(opt.field);

  if (field.kind == FieldSpec::Kind::prime) {
    if (which == "der-c")
      throw DocumentError("der-c needs characteristic 0 (rational sampling); drop --field");
    auto gp = reduce_mod_p(g, field.p);
    if (!gp)
      throw DocumentError("structure constants of '" + doc.name + "' do not reduce mod " +
                          std::to_string(field.p));
    OperatorSpace<Fp> sp = OperatorSpace<Fp>::zero(g.dim());
    if (which == "der")
      sp = der_lie(*gp);
    else if (which == "der-z")
      sp = der_z_lie(*gp);
    else if (which == "centroid")
      sp = centroid_lie(*gp);
    else if (which == "qcentroid")
      sp = qcentroid_lie(*gp);
    else if (which == "qder")
      sp = qder_lie(*gp);
    else if (which == "gender")
      sp = gender_lie(*gp);
    else if (which == "forms")
      sp = invariant_bilinear_forms(*gp);
    else if (which == "ider") {
      auto [ider, fail] = ider_lie(*gp);
      if (!ider)
        throw DocumentError("ider is not defined on '" + doc.name + "': " + fail->identity +
                            " fails");
      sp = *ider;
    } else
      throw DocumentError("unknown space '" + which + "'");
    return print_space(opt, doc.name, which, sp, nullptr);
  }

  if (which == "der-c") {
    auto r = der_c_lie(g, opt.seed);
    return print_space(opt, doc.name, which, r.space, &r.certificate);
  }
  OperatorSpace<Rational> sp = OperatorSpace<Rational>::zero(g.dim());
  if (which == "der")
    sp = der_lie(g);
  else if (which == "der-z")
    sp = der_z_lie(g);
  else if (which == "centroid")
    sp = centroid_lie(g);
  else if (which == "qcentroid")
    sp = qcentroid_lie(g);
  else if (which == "qder")
    sp = qder_lie(g);
  else if (which == "gender")
    sp = gender_lie(g);
  else if (which == "forms")
    sp = invariant_bilinear_forms(g);
  else if (which == "ider") {
    auto [ider, fail] = ider_lie(g);
    if (!ider)
      throw DocumentError("ider is not defined on '" + doc.name + "': " + fail->identity +
                          " fails");
    sp = *ider;
  } else
    throw DocumentError("unknown space '" + which + "'");
  return print_space(opt, doc.name, which, sp, nullptr);
}

int cmd_decompose(const Options& opt, const std::string& src) {
  AlgebraDocument doc = load_document(src);
  LeibnizAlgebra<Rational> g = document_leibniz(doc);
  auto dec = centroid_decomposition(g);
  nlohmann::ordered_json j;
  j["algebra"] = doc.name;
  j["gamma_dim"] = static_cast<int>(dec.der_z_basis.size() + dec.psi_basis.size());
  j["der_z_dim"] = static_cast<int>(dec.der_z_basis.size());
  j["psi_dim"] = static_cast<int>(dec.psi_basis.size());
  nlohmann::ordered_json dz = nlohmann::ordered_json::array();
  for (const auto& m : dec.der_z_basis) dz.push_back(matrix_strings(m));
  nlohmann::ordered_json ps = nlohmann::ordered_json::array();
  for (const auto& m : dec.psi_basis) ps.push_back(matrix_strings(m));
  j["der_z_basis"] = std::move(dz);
  j["psi_basis"] = std::move(ps);

  std::ostringstream os;
  os << "Gamma(" << doc.name << ") = Der_z (+) Psi: " << dec.der_z_basis.size() << " + "
     << dec.psi_basis.size() << "\n";
  os << "Der_z basis:\n";
  for (const auto& m : dec.der_z_basis) print_matrix_text(os, m, "  "), os << "\n";
  os << "Psi basis:\n";
  for (const auto& m : dec.psi_basis) print_matrix_text(os, m, "  "), os << "\n";
  emit(opt, j, os.str());
  return 0;
}

int emit_reports(const Options& opt, const std::vector<TheoremReport>& reports) {
  nlohmann::ordered_json arr = reports_json(reports);
  std::ostringstream os;
  std::vector<TheoremReport> sorted = reports;
  std::sort(sorted.begin(), sorted.end(),
            [](const TheoremReport& a, const TheoremReport& b) { return a.id < b.id; });
  for (const auto& r : sorted) {
    os << r.id << ": " << r.verdict;
    if (!r.applicable) os << " (not applicable)";
    if (!r.reason.empty()) os << " -- " << r.reason;
    for (const auto& [k, v] : r.dims) os << " [" << k << "=" << v << "]";
    os << "\n";
  }
  emit(opt, arr, os.str());
  return any_refuted(reports) ? 1 : 0;
}

std::vector<TheoremReport> filter_suite(std::vector<TheoremReport> reports,
                                        const std::string& suite) {
  if (suite == "all") return reports;
  std::vector<TheoremReport> out;
  for (auto& r : reports)
    if (report_section(r.id) == suite) out.push_back(std::move(r));
  return out;
}

int cmd_check(const Options& opt, const std::string& src, const std::string& pair,
              const std::string& suite) {
  AlgebraDocument doc = load_document(src);
  LeibnizAlgebra<Rational> g = document_leibniz(doc);
  std::vector<TheoremReport> reports;
  if (!pair.empty()) {
    LeibnizAlgebra<Rational> g2 = document_leibniz(load_document(pair));
    reports = run_pair_suite(g, g2);
  } else {
    reports = run_suite(g, opt.seed);
  }
  return emit_reports(opt, filter_suite(std::move(reports), suite));
}

int cmd_tensor(const Options& opt, const std::string& assoc_src, const std::string& leib_src,
               bool compare) {
  AlgebraDocument da = load_document(assoc_src);
  AlgebraDocument dg = load_document(leib_src);
  AssocCommAlgebra<Rational> a = document_assoc(da);
  LeibnizAlgebra<Rational> g = document_leibniz(dg);
  auto t = tensor_algebra(a, g);
  if (compare) {
    auto reports = run_tensor_suite(a, g);
    auto rep = tensor_centroid_compare(t);
    nlohmann::ordered_json j;
    j["assoc"] = da.name;
    j["leibniz"] = dg.name;
    j["dim"] = t.product.dim();
    j["gamma_dim"] = rep.gamma.dim();
    j["embedded_dim"] = rep.embedded.dim();
    j["equality"] = rep.equality;
    if (rep.strict_witness) j["strict_witness"] = matrix_strings(*rep.strict_witness);
    j["reports"] = reports_json(reports);
    std::ostringstream os;
    os << da.name << " (x) " << dg.name << "  dim " << t.product.dim() << "\n";
    os << "Gamma dim " << rep.gamma.dim() << ", embedded dim " << rep.embedded.dim()
       << ", equality " << (rep.equality ? "yes" : "no") << "\n";
    if (rep.strict_witness) {
      os << "witness outside the embedded span:\n";
      print_matrix_text(os, *rep.strict_witness, "  ");
    }
    if (opt.format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << os.str();
      Options text_opt = opt;
      emit_reports(text_opt, reports);
    }
    return any_refuted(reports) ? 1 : 0;
  }
  AlgebraDocument out = document_from_table(da.name + "(x)" + dg.name, "leibniz",
                                            t.product.table());
  nlohmann::ordered_json j = to_json(out);
  emit(opt, j, serialize_document(out));
  return 0;
}

int cmd_catalog(const Options& opt, const std::string& action, const std::string& name,
                const std::string& path) {
  if (action == "list") {
    nlohmann::ordered_json j = catalog::names();
    std::ostringstream os;
    for (const auto& n : catalog::names()) os << n << "\n";
    emit(opt, j, os.str());
    return 0;
  }
  AlgebraDocument doc = catalog::document(name);
  if (action == "show") {
    emit(opt, to_json(doc), serialize_document(doc));
    return 0;
  }
  // export
  std::ofstream out(path);
  if (!out) throw DocumentError("cannot open '" + path + "' for writing");
  out << serialize_document(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lie-invariants of finite-dimensional Leibniz algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string src, which, pair, suite = "all", assoc_src, leib_src, name, path;
  bool compare = false;

  auto* info = app.add_subcommand("info", "centres, series, nilpotency class, liesation");
  info->add_option("alg", src, "catalog name or JSON file")->required();

  auto* space = app.add_subcommand("space", "compute an operator space");
  space->add_option("alg", src, "catalog name or JSON file")->required();
  space->add_option("--which", which, "space selector")
      ->required()
      ->check(CLI::IsMember({"der", "der-z", "der-c", "ider", "centroid", "qcentroid", "qder",
                             "gender", "forms"}));
  space->add_option("--field", opt.field, "rational or fp:<p>, p an odd prime")
      ->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Gamma = Der_z (+) Psi");
  decompose->add_option("alg", src, "catalog name or JSON file")->required();

  auto* tensor = app.add_subcommand("tensor", "tensor product with an associative algebra");
  tensor->add_option("--assoc", assoc_src, "associative factor")->required();
  tensor->add_option("--leibniz", leib_src, "Leibniz factor")->required();
  tensor->add_flag("--compare", compare, "compare the centroid with the embedded span");

  auto* check = app.add_subcommand("check", "run the theorem suite");
  check->add_option("alg", src, "catalog name or JSON file")->required();
  check->add_option("--pair", pair, "second algebra: run the direct-sum suite");
  check->add_option("--suite", suite, "report filter")
      ->check(CLI::IsMember({"all", "s3", "s4", "s5", "s6"}))
      ->capture_default_str();

  auto* cat = app.add_subcommand("catalog", "list, show or export built-in algebras");
  std::string action;
  cat->add_option("action", action, "list | show | export")
      ->required()
      ->check(CLI::IsMember({"list", "show", "export"}));
  cat->add_option("name", name, "catalog algebra name");
  cat->add_option("path", path, "output path (export)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    opt.seed = seed_from_env();
    if (info->parsed()) return cmd_info(opt, src);
    if (space->parsed()) return cmd_space(opt, src, which);
    if (decompose->parsed()) return cmd_decompose(opt, src);
    if (tensor->parsed()) return cmd_tensor(opt, assoc_src, leib_src, compare);
    if (check->parsed()) return cmd_check(opt, src, pair, suite);
    if (cat->parsed()) {
      if (action != "list" && name.empty())
        throw DocumentError("catalog " + action + " needs an algebra name");
      if (action == "export" && path.empty())
        throw DocumentError("catalog export needs an output path");
      return cmd_catalog(opt, action, name, path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
