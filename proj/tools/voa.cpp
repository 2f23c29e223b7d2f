// voa: command-line front end for the lattice VOA engine.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 context error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "voa/checks.hpp"
#include "voa/serialize.hpp"

namespace {

using namespace voa;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kContext = 3;
constexpr int kMaxCutoff = 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int lattice_n = 0;  // 0: subcommand default
  int cutoff = 6;
  int conductor = 4;
  std::string output;
  std::string format = "json";
};

int default_conductor() {
  if (const char* env = std::getenv("VOA_CONDUCTOR")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("VOA_CONDUCTOR is not an integer: ") + env);
    }
  }
  return 4;
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw UsageError("not a rational number: " + s);
  q.canonicalize();
  return q;
}

json read_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in " + origin + ": " + e.what());
  }
}

/// name | @file.json | inline JSON
Vector resolve_vector(const std::string& ref, const Field& f) {
  if (ref.empty()) throw UsageError("empty vector reference");
  json j;
  if (ref[0] == '@') {
    std::ifstream in(ref.substr(1));
    if (!in) throw UsageError("cannot open " + ref.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    j = read_json_text(ss.str(), ref.substr(1));
  } else if (ref[0] == '{') {
    j = read_json_text(ref, "inline vector");
  } else {
    if (auto v = states::by_name(f, ref)) return *v;
    throw UsageError("unknown vector '" + ref + "'");
  }
  return vector_from_json(j, &f);
}

void emit(const Config& cfg, const json& payload, const std::string& text) {
  std::ostringstream os;
  if (cfg.format == "text") os << text;
  else os << payload.dump(2) << "\n";
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << os.str();
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw UsageError("cannot write " + cfg.output);
    out << os.str();
  }
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << r.check;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << "\n";
  for (const auto& c : r.items) os << (c.ok ? "  ok    " : "  FAIL  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
  for (const auto& w : r.per_weight)
    os << (w.ok ? "  ok    " : "  FAIL  ") << "w=" << w.weight << " lhs=" << w.lhs << " rhs=" << w.rhs << "\n";
  os << "verdict: " << (r.verdict ? "pass" : "fail") << "\n";
  return os.str();
}

json metadata() { return json{{"tool", "voa"}, {"format", 1}}; }

void check_cutoff(int cutoff) {
  if (cutoff < 0 || cutoff > kMaxCutoff) throw UsageError("--cutoff must lie in [0, " + std::to_string(kMaxCutoff) + "]");
}

// ---------------------------------------------------------------------------
// verify suites

void merge(Report& into, const Report& part) {
  for (const auto& c : part.items) into.add(part.check + ": " + c.name, c.ok, c.detail);
  for (const auto& w : part.per_weight) {
    into.add(part.check + ": w=" + std::to_string(w.weight) + " lhs=" + std::to_string(w.lhs) + " rhs=" + std::to_string(w.rhs), w.ok);
  }
}

std::vector<int> ns_or(const Config& cfg, std::vector<int> dflt) {
  return cfg.lattice_n > 0 ? std::vector<int>{cfg.lattice_n} : dflt;
}

struct VerifyArgs {
  std::string suite;
  std::string omega = "nu";
  std::string c = "1";
  bool cutoff_given = false;
};

Report run_suite(const std::string& suite, const Config& cfg, const VerifyArgs& va, json& extra) {
  Report r;
  r.check = suite;
  r.params["cutoff"] = std::to_string(cfg.cutoff);
  if (suite == "axioms") {
    for (int n : ns_or(cfg, {1, 2, 3})) {
      const Field& f = Field::get(cfg.conductor, n);
      merge(r, check_creation(f, cfg.cutoff));
      merge(r, check_translation(f, cfg.cutoff, cfg.cutoff));
      merge(r, check_heisenberg(f, cfg.cutoff, cfg.cutoff + 1));
      merge(r, check_virasoro(f, cfg.cutoff, 4));
      merge(r, check_mixed(f, cfg.cutoff, 4));
    }
  } else if (suite == "virasoro") {
    const int n = cfg.lattice_n > 0 ? cfg.lattice_n : 2;
    const Field& f = Field::get(cfg.conductor, n);
    const Vector omega = resolve_vector(va.omega, f);
    const auto cert = certify_virasoro_vector(omega, parse_rational(va.c), cfg.cutoff);
    extra["certificate"] = to_json(cert);
    r.params["N"] = std::to_string(n);
    r.params["c"] = va.c;
    std::string detail;
    if (cert.counterexample)
      detail = "m=" + std::to_string(cert.counterexample->m) + " n=" + std::to_string(cert.counterexample->n) +
               " v=" + cert.counterexample->v.to_string();
    r.add("Virasoro vector certificate", cert.certified, detail);
  } else if (suite == "lemma-weight4") {
    const Field& f = Field::get(cfg.conductor, cfg.lattice_n > 0 ? cfg.lattice_n : 3);
    merge(r, check_weight4_primary(f));
    const auto prim = primary_basis(f, 4);
    EchelonBasis e(f);
    e.insert(states::u4(f));
    bool u_only = true;
    for (const auto& v : prim) u_only = u_only && (v.terms().begin()->first.charge != 0 || e.contains(v));
    r.add("u spans the charge-0 primary vectors of weight 4", u_only);
    for (int n : ns_or(cfg, {2, 3})) merge(r, check_linear_combination(n));
  } else if (suite == "mode-prop") {
    for (int n : ns_or(cfg, {2, 3})) merge(r, check_lattice_products(n));
  } else if (suite == "omega") {
    const Field& f = Field::get(cfg.conductor, 2);
    const auto res = solve_omega_constraint(f);
    merge(r, res.report);
    json sols = json::array();
    for (const auto& s : res.samples)
      if (s.residual_zero && s.direct_zero) sols.push_back({{"a", to_json(s.a)}, {"b", to_json(s.b)}, {"b_text", s.b.to_string()}});
    extra["solutions"] = sols;
    json eqs = json::array();
    for (const auto& p : res.equations) eqs.push_back(p.to_string() + " = 0");
    extra["equations"] = eqs;
  } else if (suite == "decomposition") {
    const int cutoff = va.cutoff_given ? cfg.cutoff : 10;
    r.params["cutoff"] = std::to_string(cutoff);
    for (int n : ns_or(cfg, {3, 5}))
      for (auto kind : {SpaceKind::V, SpaceKind::M1, SpaceKind::VPlus, SpaceKind::M1Plus}) {
        Report part = verify_decomposition(kind, n, cutoff);
        part.check = "decomposition " + to_string(kind) + " N=" + std::to_string(n);
        merge(r, part);
      }
  } else if (suite == "fixed-points") {
    const int cutoff = va.cutoff_given ? cfg.cutoff : 8;
    r.params["cutoff"] = std::to_string(cutoff);
    for (auto [n, k] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 2}}) {
      Report part = check_fixed_points(n, k, cutoff);
      part.check = "Z" + std::to_string(k) + " N=" + std::to_string(n);
      merge(r, part);
    }
    for (int n : {1, 2, 3}) {
      const auto t = fixed_point_subspace(GroupSpec{GroupSpec::Kind::Torus}, Field::get(4, n), cutoff);
      for (int w = 0; w <= cutoff; ++w)
        r.add("T N=" + std::to_string(n) + ": w=" + std::to_string(w), t.dim(w) == partition_count(w));
    }
  } else if (suite == "tensor-split") {
    merge(r, verify_w_tensor_split(cfg.cutoff));
  } else if (suite == "sl2") {
    merge(r, sl2_zero_mode_check(Field::get(cfg.conductor, 1), std::min(cfg.cutoff, 4)));
  } else if (suite == "all") {
    for (const char* s : {"axioms", "lemma-weight4", "mode-prop", "omega", "decomposition", "fixed-points", "tensor-split", "sl2"}) {
      json ignored;
      merge(r, run_suite(s, cfg, va, ignored));
    }
    merge(r, check_half_virasoro(cfg.cutoff));
    for (int n : {1, 2, 3, 5}) merge(r, check_quasi_primary_weight2(n));
    merge(r, check_plus_generators(3, std::max(cfg.cutoff, 8)));
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  return r;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations in rank-one lattice vertex operator algebras"};
  app.require_subcommand(1);
  Config cfg;
  cfg.conductor = default_conductor();
  auto common = [&](CLI::App* sub, bool need_n) {
    auto* o = sub->add_option("--N", cfg.lattice_n, "lattice parameter N (lattice sqrt(2N) Z)");
    if (need_n) o->required();
    sub->add_option("--conductor", cfg.conductor, "cyclotomic conductor, a multiple of 4 (env VOA_CONDUCTOR)");
    sub->add_option("--output,-o", cfg.output, "output path (default stdout)");
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  // mode
  int mode_n = 0;
  std::string mode_a, mode_b;
  auto* mode = app.add_subcommand("mode", "compute a single product a_(n) b");
  common(mode, true);
  mode->add_option("--n", mode_n, "mode index n of a_(n)")->required();
  mode->add_option("--a", mode_a, "vector: built-in name, @file.json or inline JSON")->required();
  mode->add_option("--b", mode_b, "vector: built-in name, @file.json or inline JSON")->required();

  // verify
  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify, false);
  verify->add_option("suite", va.suite,
                     "axioms, virasoro, lemma-weight4, mode-prop, omega, decomposition, fixed-points, tensor-split, sl2, all")
      ->required();
  auto* cut_opt = verify->add_option("--cutoff", cfg.cutoff, "weight cutoff (<= 16)");
  verify->add_option("--omega", va.omega, "candidate Virasoro vector for the virasoro suite");
  verify->add_option("--c", va.c, "central charge for the virasoro suite");

  // basis
  int basis_weight = 0;
  auto* basis = app.add_subcommand("basis", "list the monomial basis of a weight space");
  common(basis, true);
  basis->add_option("--weight", basis_weight, "conformal weight")->required();

  // character
  std::string char_c, char_h;
  int char_max = 0;
  auto* character = app.add_subcommand("character", "graded dimensions of L(c, h)");
  character->set_help_flag("--help", "print this help message and exit");
  character->add_option("--c", char_c, "central charge")->required();
  character->add_option("--h", char_h, "lowest weight")->required();
  character->add_option("--max", char_max, "largest weight")->required();
  character->add_option("--output,-o", cfg.output, "output path (default stdout)");
  character->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // fixed
  std::string group;
  long angle_p = 0, angle_q = 1;
  bool with_basis = false;
  auto* fixed = app.add_subcommand("fixed", "fixed-point subspace of a subgroup of D_infinity");
  common(fixed, true);
  fixed->add_option("--group", group, "Z<k>, D<k>, D<k>^t, T or Dinf")->required();
  fixed->add_option("--p", angle_p, "twist angle t = 2 pi p / q for D<k>^t");
  fixed->add_option("--q", angle_q, "twist angle denominator");
  fixed->add_option("--cutoff", cfg.cutoff, "weight cutoff (<= 16)");
  fixed->add_flag("--basis", with_basis, "include basis vectors");

  // close
  std::vector<std::string> gens;
  auto* close = app.add_subcommand("close", "truncated unitary subalgebra generated by vectors");
  common(close, true);
  close->add_option("--gen", gens, "generator (repeatable)");
  close->add_option("--cutoff", cfg.cutoff, "weight cutoff (<= 16)");
  close->add_flag("--basis", with_basis, "include basis vectors");

  // vector
  std::string vec_name;
  auto* vec = app.add_subcommand("vector", "print a built-in vector as JSON");
  common(vec, true);
  vec->add_option("name", vec_name, "built-in name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  va.cutoff_given = cut_opt->count() > 0;
  check_cutoff(cfg.cutoff);

  if (*mode) {
    const Field& f = Field::get(cfg.conductor, cfg.lattice_n);
    const Vector a = resolve_vector(mode_a, f);
    const Vector b = resolve_vector(mode_b, f);
    const Vector res = vertex_mode(a, mode_n, b);
    bool weight_ok = true;
    const auto wa = a.weight_components();
    const auto wb = b.weight_components();
    for (const auto& [w, part] : res.weight_components()) {
      bool found = false;
      for (const auto& [x, pa] : wa)
        for (const auto& [y, pb] : wb) found = found || w == x + y - mode_n - 1;
      weight_ok = weight_ok && found;
    }
    emit(cfg, json{{"result", to_json(res)}, {"weight_check", weight_ok}}, res.to_string() + "\n");
    return weight_ok ? kOk : kFailed;
  }
  if (*verify) {
    json extra = json::object();
    const Report r = run_suite(va.suite, cfg, va, extra);
    json out = to_json(r);
    for (auto& [k, v] : extra.items()) out[k] = v;
    out["metadata"] = metadata();
    emit(cfg, out, report_text(r));
    return r.verdict ? kOk : kFailed;
  }
  if (*basis) {
    if (cfg.lattice_n <= 0) throw UsageError("--N must be positive");
    json list = json::array();
    std::string text;
    for (const auto& m : enumerate_basis(cfg.lattice_n, basis_weight)) {
      list.push_back(to_json(m));
      text += m.to_string() + "\n";
    }
    emit(cfg, json{{"N", cfg.lattice_n}, {"weight", basis_weight}, {"count", list.size()}, {"monomials", list}}, text);
    return kOk;
  }
  if (*character) {
    const auto dims = virasoro_character(parse_rational(char_c), parse_rational(char_h), char_max);
    std::string text;
    for (long d : dims) text += std::to_string(d) + " ";
    emit(cfg, json(dims), text + "\n");
    return kOk;
  }
  if (*fixed) {
    const GroupSpec g = GroupSpec::parse(group, angle_p, angle_q);
    const auto s = fixed_point_subspace(g, Field::get(cfg.conductor, cfg.lattice_n), cfg.cutoff);
    json out = to_json(s, with_basis);
    out["group"] = g.to_string();
    std::string text;
    for (int d : s.dims()) text += std::to_string(d) + " ";
    emit(cfg, out, text + "\n");
    return kOk;
  }
  if (*close) {
    const Field& f = Field::get(cfg.conductor, cfg.lattice_n);
    std::vector<Vector> vs;
    for (const auto& ref : gens) vs.push_back(resolve_vector(ref, f));
    const auto s = close_subalgebra(vs, f, cfg.cutoff);
    std::string text;
    for (int d : s.dims()) text += std::to_string(d) + " ";
    emit(cfg, to_json(s, with_basis), text + "\n");
    return kOk;
  }
  if (*vec) {
    const Field& f = Field::get(cfg.conductor, cfg.lattice_n);
    const Vector v = resolve_vector(vec_name, f);
    emit(cfg, to_json(v), v.to_string() + "\n");
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const voa::ContextError& e) {
    std::cerr << "context error: " << e.what() << "\n";
    return kContext;
  } catch (const voa::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kUsage;
  }
}
