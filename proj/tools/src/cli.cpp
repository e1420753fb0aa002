#include "lefschetz_cli/cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"
#include "lefschetz/constructions/auroux.hpp"
#include "lefschetz/constructions/blowup.hpp"
#include "lefschetz/constructions/determinant.hpp"
#include "lefschetz/constructions/donaldson.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/symplectic/analysis.hpp"
#include "lefschetz_cli/paper_checks.hpp"
#include "lefschetz_cli/registry.hpp"
#include "lefschetz_cli/space.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace lefschetz::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Row of right-aligned integers under a left-aligned label.
void print_row(std::ostream& out, const std::string& label, const BettiVector& v) {
  out << std::left << std::setw(10) << label << std::right;
  for (auto x : v) out << std::setw(4) << x;
  out << '\n';
}

BettiVector degrees(std::size_t count) {
  BettiVector d;
  for (std::size_t i = 0; i < count; ++i) d.push_back(static_cast<std::int64_t>(i));
  return d;
}

std::string pass_fail(bool b) { return b ? "pass" : "FAIL"; }

// --- analyze ---------------------------------------------------------------

struct Analysis {
  std::string name;
  int dim = 0;
  HarmonicProfile profile;
  int parity_bound = 0;
  std::map<std::string, bool> checks;
  std::vector<Prop26Row> equivalences;
  std::string classification;
};

Analysis analyze_ring(const CohomologyRing& ring, const std::string& name) {
  Analysis a;
  a.name = name;
  a.dim = ring.top_degree();
  a.profile = harmonic_dims(ring);
  const auto parity = parity_report(ring);
  a.parity_bound = parity.parity_bound;
  a.checks["parity"] = parity.holds();
  a.checks["level_within_parity_bound"] = a.profile.lefschetz_level <= parity.parity_bound;
  try {
    a.equivalences = check_prop26(ring).rows;
    a.checks["lefschetz_equivalences"] = true;
  } catch (const EquivalenceViolated&) {
    a.checks["lefschetz_equivalences"] = false;
  }
  bool decomposition = true;
  for (int k = 0; k <= a.profile.lefschetz_level; ++k) {
    try {
      std::size_t total = 0;
      for (auto d : primitive_decomposition(ring, k)) total += d;
      if (total != ring.betti(k)) decomposition = false;
    } catch (const Error&) {
      decomposition = false;
    }
  }
  a.checks["primitive_decomposition"] = decomposition;
  return a;
}

Analysis analyze_model(const SymplecticModel& model) {
  auto a = analyze_ring(model.ring(), model.name());
  const auto cls = model.structure().classify();
  a.classification = std::string(to_string(cls));
  a.checks["de_rham_identified"] = identifies_de_rham(cls);
  try {
    for (const auto& [k, v] : verify_operator_identities(model).checks) a.checks[k] = v;
  } catch (const IdentityViolated&) {
    a.checks["operator_identities"] = false;
  }
  bool form_level = true;
  for (int k = 0; k <= model.dim(); ++k)
    if (static_cast<std::int64_t>(form_level_hr(model, k)) != a.profile.betti_hr[static_cast<std::size_t>(k)])
      form_level = false;
  a.checks["form_level_matches_yamada"] = form_level;
  return a;
}

json analysis_json(const Analysis& a) {
  json j;
  j["manifold"] = a.name;
  j["dim"] = a.dim;
  j["betti"] = a.profile.betti;
  j["betti_hr"] = a.profile.betti_hr;
  j["lefschetz_level"] = a.profile.lefschetz_level;
  j["parity_bound"] = a.parity_bound;
  j["checks"] = a.checks;
  return j;
}

void print_analysis(std::ostream& out, const Analysis& a) {
  out << "manifold " << a.name << " (dim " << a.dim;
  if (!a.classification.empty()) out << ", " << a.classification;
  out << ")\n";
  print_row(out, "degree", degrees(a.profile.betti.size()));
  print_row(out, "betti", a.profile.betti);
  print_row(out, "betti_hr", a.profile.betti_hr);
  out << "lefschetz level: " << a.profile.lefschetz_level << '\n';
  out << "parity bound:    " << a.parity_bound << '\n';
  if (!a.equivalences.empty()) {
    out << "s   (i) s-Lefschetz  (ii) low+high  (iii) high\n";
    for (const auto& r : a.equivalences)
      out << std::left << std::setw(4) << r.s << std::setw(17) << (r.lefschetz ? "yes" : "no") << std::setw(15)
          << (r.low_and_high ? "yes" : "no") << (r.high ? "yes" : "no") << std::right << '\n';
  }
  out << "checks:\n";
  for (const auto& [k, v] : a.checks) out << "  " << std::left << std::setw(28) << k << std::right << pass_fail(v) << '\n';
}

// --- shared parsing ----------------------------------------------------------

BettiVector sub_betti(const std::string& name) {
  if (name.size() > 1 && (name[0] == 'M' || name[0] == 'm') && std::isdigit(static_cast<unsigned char>(name[1]))) {
    const int s = std::stoi(name.substr(1));
    if (s == 0) return kodaira_thurston_betti();
    return tower(s).stages.back().betti;
  }
  return parse_space(name).ring.betti();
}

Matrix<Scalar> parse_matrix(const std::string& text) {
  std::vector<std::vector<Scalar>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Scalar> r;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) r.push_back(Scalar::parse(cell));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw UsageError("--a: empty matrix");
  Matrix<Scalar> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw UsageError("--a: rows of different lengths");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

json bounds_json(const DegreeBounds& d) {
  json j;
  j["betti"] = d.betti ? json(*d.betti) : json(nullptr);
  j["hr_lo"] = d.hr_lo;
  j["hr_hi"] = d.hr_hi ? json(*d.hr_hi) : json(nullptr);
  j["hr_parity"] = d.hr_parity ? json(*d.hr_parity) : json(nullptr);
  const auto g = d.gap_parity();
  j["gap_parity"] = g ? json(*g) : json(nullptr);
  return j;
}

std::string bounds_text(const DegreeBounds& d) {
  std::ostringstream s;
  if (d.exact()) {
    s << d.hr_lo;
  } else {
    s << '[' << d.hr_lo << ", ";
    if (d.hr_hi) s << *d.hr_hi;
    else s << "inf";
    s << ']';
    if (d.hr_parity) s << (*d.hr_parity ? " odd" : " even");
  }
  return s.str();
}

// --- commands ----------------------------------------------------------------

struct Options {
  bool json = false;
  std::string name;
  std::string file;
  std::vector<std::string> product_args;
  int ambient_m = 0;
  std::string sub;
  int s = 0;
  std::string space;
  int r = 1;
  std::vector<std::string> chern;
  std::string ambient;
  int codim = 0;
  int m = 0, n = 0, k = 0, mu = 0;
  std::string a;
};

int cmd_cohomology(const Options& o, std::ostream& out) {
  if (o.name.empty() == o.file.empty()) throw UsageError("cohomology: give a manifold name or --file");
  std::optional<LieStructure> ls;
  CohomologyRing ring;
  if (!o.file.empty()) {
    ls = load_lie(o.file).structure;
    ring = cohomology(*ls);
  } else if (auto text = registry_text(o.name)) {
    ls = load_lie_text(*text).structure;
    ring = cohomology(*ls);
  } else {
    ring = parse_space(o.name).ring;
  }
  const std::string name = ls ? ls->name() : ring.name();
  if (o.json) {
    json j;
    j["manifold"] = name;
    j["dim"] = ring.top_degree();
    j["betti"] = ring.betti();
    json basis = json::object();
    for (int k = 0; k <= ring.top_degree(); ++k) basis[std::to_string(k)] = ring.labels(k);
    j["basis"] = basis;
    if (ls) {
      const auto cls = ls->classify();
      j["classification"] = std::string(to_string(cls));
      j["checks"] = json{{"de_rham_identified", identifies_de_rham(cls)}};
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "manifold " << name << " (dim " << ring.top_degree();
  if (ls) out << ", " << to_string(ls->classify());
  out << ")\n";
  print_row(out, "degree", degrees(ring.betti().size()));
  print_row(out, "betti", ring.betti());
  for (int k = 0; k <= ring.top_degree(); ++k) {
    out << "H^" << k << ':';
    for (const auto& l : ring.labels(k)) out << ' ' << l;
    out << '\n';
  }
  if (ls && !identifies_de_rham(ls->classify()))
    out << "note: Chevalley-Eilenberg cohomology; not known to equal de Rham cohomology of a quotient\n";
  return 0;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  Analysis a;
  if (!o.file.empty()) {
    auto loaded = load_lie(o.file);
    if (!loaded.model) throw UsageError("analyze: " + o.file + " has no symplectic line");
    a = analyze_model(*loaded.model);
  } else if (o.name.empty()) {
    throw UsageError("analyze: give a manifold name or --file");
  } else if (registry_text(o.name)) {
    a = analyze_model(registry_model(o.name));
  } else {
    const auto sp = parse_space(o.name);
    a = analyze_ring(sp.ring, sp.name);
  }
  if (o.json) out << analysis_json(a).dump(2) << '\n';
  else print_analysis(out, a);
  return 0;
}

int cmd_product(const Options& o, std::ostream& out) {
  const auto& p = o.product_args;
  if (p.size() != 3 || p[1] != "cp") throw UsageError("product: expected '<name> cp <r>'");
  int r = 0;
  try {
    r = std::stoi(p[2]);
  } catch (const std::exception&) {
    throw UsageError("product: r must be an integer");
  }
  if (r < 1) throw UsageError("product: r must be at least 1");
  const auto sp = parse_space(p[0] + "xcp" + std::to_string(r));
  auto a = analyze_ring(sp.ring, sp.name);
  const bool lemma = half_dimension(sp.ring) >= 3;
  const auto b3hr = lemma ? ambient_b3hr(sp.ring) : 0;
  if (lemma) a.checks["b3hr_kernel_formula_matches"] = b3hr == a.profile.betti_hr[3];
  if (o.json) {
    auto j = analysis_json(a);
    if (lemma) j["b3hr_kernel_formula"] = b3hr;
    out << j.dump(2) << '\n';
    return 0;
  }
  print_analysis(out, a);
  if (lemma) out << "b3^hr from ker L^{n-2} and ker L^{n-1} on H^1: " << b3hr << '\n';
  return 0;
}

int cmd_blowup(const Options& o, std::ostream& out) {
  const auto res = blowup_betti(o.ambient_m, sub_betti(o.sub));
  if (o.json) {
    json j;
    j["ambient_m"] = res.m;
    j["sub_betti"] = res.sub_betti;
    j["betti"] = res.result_betti;
    j["dim"] = 2 * res.m;
    j["thom_generators"] = res.thom_generators;
    j["warnings"] = res.warnings;
    j["checks"] = json{{"odd_degree_formula", res.odd_formula_holds}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "blow-up of CP^" << res.m << " along " << o.sub << " (dim " << 2 * res.m << ")\n";
  print_row(out, "degree", degrees(res.result_betti.size()));
  print_row(out, "betti", res.result_betti);
  out << "extension generators:";
  for (const auto& g : res.thom_generators) out << ' ' << g;
  out << "\nodd-degree formula: " << pass_fail(res.odd_formula_holds) << '\n';
  for (const auto& w : res.warnings) out << "warning: " << w << '\n';
  return 0;
}

int cmd_tower(const Options& o, std::ostream& out) {
  const auto t = tower(o.s);
  if (o.json) {
    json stages = json::array();
    for (const auto& st : t.stages)
      stages.push_back({{"s", st.s}, {"dim", st.dim}, {"embedding_m", st.embedding_m}, {"betti", st.betti}});
    json j;
    j["s"] = t.s;
    j["r"] = t.r;
    j["m"] = t.m;
    j["m_closed_form"] = t.m_closed_form;
    j["stages"] = stages;
    j["l_s"] = t.l_s;
    j["l_s_closed_form"] = t.l_s_closed_form;
    j["dim_w"] = t.dim_w;
    j["b_s_plus_1"] = t.b_s_plus_1;
    j["parity_bound"] = t.parity_bound;
    j["annotation"] = t.annotation;
    j["checks"] = json{{"low_odd_betti_vanish", t.low_odd_vanish},
                       {"m_closed_form", t.m == t.m_closed_form},
                       {"l_s_closed_form", t.l_s == t.l_s_closed_form}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "tower up to M_" << t.s << " (r = " << t.r << ")\n";
  out << "m_j: ";
  for (auto v : t.m) out << v << ' ';
  out << (t.m == t.m_closed_form ? "(matches 6*2^{j/2} - 1)" : "(CLOSED FORM MISMATCH)") << '\n';
  for (const auto& st : t.stages) {
    out << "M_" << st.s << " dim " << st.dim << ":";
    for (auto b : st.betti) out << ' ' << b;
    out << '\n';
  }
  out << "b_" << t.s + 1 << "(M_" << t.s << ") = " << t.b_s_plus_1 << ", parity bound " << t.parity_bound << '\n';
  out << "l_s = " << t.l_s << ", dim W_s = " << t.dim_w << '\n';
  out << t.annotation << '\n';
  return 0;
}

int cmd_auroux(const Options& o, std::ostream& out) {
  const auto sp = parse_space(o.space);
  AurouxQuery q{sp.ring, o.r, {}};
  for (std::size_t i = 0; i < o.chern.size(); ++i) q.chern.push_back(sp.base_class(o.chern[i], 2 * static_cast<int>(i + 1)));
  const auto res = auroux_b3hr(q);
  const auto ambient = ambient_b3hr(sp.ring);
  auto kernel_json = [](const AurouxKernel& k) {
    return json{{"target_degree", k.target_degree}, {"kernel", k.kernel},    {"kernel_ratfunc", k.kernel_ratfunc},
                {"kernel_at_1000", k.kernel_at_1000}, {"kernel_at_1001", k.kernel_at_1001}};
  };
  if (o.json) {
    json j;
    j["space"] = sp.name;
    j["n"] = res.n;
    j["r"] = res.r;
    j["b3"] = res.b3;
    j["first"] = kernel_json(res.first);
    j["second"] = kernel_json(res.second);
    j["b3hr"] = res.b3hr;
    j["ambient_b3hr"] = ambient;
    j["checks"] = json{{"generic_rank_consistent", res.first.consistent() && res.second.consistent()}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "Auroux submanifold of " << sp.name << " (n = " << res.n << ", r = " << res.r << ")\n";
  out << "PD = ";
  const auto pd = poincare_dual(q);
  for (std::size_t i = 0; i < pd.size(); ++i) out << (i ? ", " : "") << pd[i].to_string("k");
  out << "  (coordinates in H^" << 2 * res.r << ")\n";
  out << "dim ker on H^1 -> H^" << res.first.target_degree << ": " << res.first.kernel << '\n';
  out << "dim ker on H^1 -> H^" << res.second.target_degree << ": " << res.second.kernel << '\n';
  out << "b3^hr(Z) = " << res.b3 << " + " << res.first.kernel << " - " << res.second.kernel << " = " << res.b3hr << '\n';
  out << "b3^hr(X) = " << ambient << '\n';
  out << "generic rank cross-check: "
      << pass_fail(res.first.consistent() && res.second.consistent()) << '\n';
  return 0;
}

int cmd_donaldson(const Options& o, std::ostream& out) {
  if (o.codim <= 0 || o.codim % 2 != 0) throw UsageError("donaldson: --codim must be a positive even number");
  const int l = o.codim / 2;
  BoundedProfile ambient;
  const auto& a = o.ambient;
  if (a.size() > 1 && (a[0] == 'M' || a[0] == 'm') && std::isdigit(static_cast<unsigned char>(a[1]))) {
    ambient = tower_profile(std::stoi(a.substr(1)));
  } else {
    const auto sp = parse_space(a);
    ambient = bounded(harmonic_dims(sp.ring));
    ambient.n = half_dimension(sp.ring);
  }
  const auto z = donaldson_transfer(ambient, l);
  if (o.json) {
    json degs = json::array();
    for (const auto& d : z.degrees) degs.push_back(bounds_json(d));
    json j;
    j["ambient"] = a;
    j["codim"] = o.codim;
    j["dim"] = 2 * z.n;
    j["degrees"] = degs;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "Donaldson submanifold of codimension " << o.codim << " in " << a << " (dim " << 2 * z.n << ")\n";
  out << std::left << std::setw(8) << "degree" << std::setw(8) << "betti" << std::setw(18) << "betti_hr"
      << "gap mod 2" << std::right << '\n';
  for (std::size_t i = 0; i < z.degrees.size(); ++i) {
    const auto& d = z.degrees[i];
    const auto g = d.gap_parity();
    out << std::left << std::setw(8) << i << std::setw(8) << (d.betti ? std::to_string(*d.betti) : "?") << std::setw(18)
        << bounds_text(d) << (g ? std::to_string(*g) : "-") << std::right << '\n';
  }
  return 0;
}

int cmd_detcheck(const Options& o, std::ostream& out) {
  DeterminantQuery q{o.m, o.n, o.k, o.mu};
  if (!o.a.empty()) q.a = parse_matrix(o.a);
  const auto c = pairing_determinant_check(q);
  if (o.json) {
    json j;
    j["m"] = q.m;
    j["n"] = q.n;
    j["k"] = q.k;
    j["mu"] = q.mu;
    j["d"] = q.a.rows();
    j["brute"] = c.brute.to_string("eps");
    j["closed"] = c.closed.to_string("eps");
    j["exponent"] = c.exponent;
    j["lambda"] = c.lambda.to_string();
    j["ratio"] = c.ratio ? json(c.ratio->to_string()) : json(nullptr);
    j["checks"] = json{{"identity_holds", c.holds}, {"magnitude_agrees", c.magnitude_agrees}, {"lambda_nonzero", c.lambda_nonzero}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "det B_mu (expanded): " << c.brute.to_string("eps") << '\n';
  out << "closed form:         " << c.closed.to_string("eps") << '\n';
  if (c.holds) {
    out << "identity holds\n";
  } else {
    out << "identity fails";
    if (c.ratio) out << ": expanded = " << *c.ratio << " * closed form";
    out << '\n';
  }
  out << "leading coefficient lambda = " << c.lambda << (c.lambda_nonzero ? " (nonzero)" : " (zero)") << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto checks = paper_checks();
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.pass ? 1 : 0;
  if (o.json) {
    json list = json::array();
    for (const auto& c : checks)
      list.push_back({{"id", c.id}, {"description", c.description}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    out << json{{"checks", list}, {"passed", passed}, {"total", checks.size()}}.dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      out << (c.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(22) << c.id << std::right << c.description
          << ": expected " << c.expected << ", got " << c.actual << '\n';
    }
    out << passed << '/' << checks.size() << " checks passed\n";
  }
  return passed == checks.size() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology, harmonic cohomology and Lefschetz levels of symplectic nilmanifolds and solvmanifolds"};
  app.name("lefschetz");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print JSON instead of tables");

  auto* coh = app.add_subcommand("cohomology", "Betti numbers and class representatives");
  coh->add_option("name", o.name, "Registry name or product such as nil6xcp2");
  coh->add_option("--file", o.file, "A .lie file")->check(CLI::ExistingFile);

  auto* ana = app.add_subcommand("analyze", "Harmonic profile, parity bound and Lefschetz equivalences");
  ana->add_option("name", o.name, "Registry name or product such as nil6xcp2");
  ana->add_option("--file", o.file, "A .lie file with a symplectic line")->check(CLI::ExistingFile);

  auto* prod = app.add_subcommand("product", "Product with a complex projective space: <name> cp <r>");
  prod->add_option("args", o.product_args)->expected(3)->required();

  auto* blow = app.add_subcommand("blowup", "Betti numbers of a blow-up of CP^m along a submanifold");
  blow->add_option("--ambient", o.ambient_m, "m in CP^m")->required();
  blow->add_option("--sub", o.sub, "Registry name, product, or tower stage M<s>")->required();

  auto* tow = app.add_subcommand("tower", "The iterated blow-up tower M_0 = KT, M_2, ..., M_s");
  tow->add_option("--s", o.s, "Even s >= 2")->required();

  auto* aur = app.add_subcommand("auroux", "b3^hr of an Auroux submanifold for generic large k");
  aur->add_option("--space", o.space, "Ambient, e.g. nil6xcp2")->required();
  aur->add_option("--r", o.r, "Rank of the bundle")->required();
  aur->add_option("--chern", o.chern, "c_1, c_2, ... as closed forms on the first factor, e.g. 26-45 (0 for zero)")
      ->delimiter(';');

  auto* don = app.add_subcommand("donaldson", "Harmonic profile of an iterated Donaldson submanifold");
  don->add_option("--ambient", o.ambient, "Registry name, product, or tower stage M<s>")->required();
  don->add_option("--codim", o.codim, "Real codimension 2l")->required();

  auto* det = app.add_subcommand("detcheck", "Compare the block pairing determinant with its closed form");
  det->add_option("--m", o.m)->required();
  det->add_option("--n", o.n)->required();
  det->add_option("--k", o.k)->required();
  det->add_option("--mu", o.mu)->required();
  det->add_option("--a", o.a, "Block matrix A as rows, e.g. '1,0;0,1' (default [1])");

  auto* ver = app.add_subcommand("verify-paper", "Recompute every published value and print a scoreboard");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (coh->parsed()) return cmd_cohomology(o, out);
    if (ana->parsed()) return cmd_analyze(o, out);
    if (prod->parsed()) return cmd_product(o, out);
    if (blow->parsed()) return cmd_blowup(o, out);
    if (tow->parsed()) return cmd_tower(o, out);
    if (aur->parsed()) return cmd_auroux(o, out);
    if (don->parsed()) return cmd_donaldson(o, out);
    if (det->parsed()) return cmd_detcheck(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace lefschetz::cli
