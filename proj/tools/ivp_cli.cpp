// Command-line front end: membership checks, member generation, null-ideal
// spans, the integral-closure step, and the density experiments, with stable
// text or single-object JSON output.
//
// Exit codes: 0 computed and member/success, 1 computed and non-member (or a
// falsified property), 2 usage or parse error, 3 resource limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ivp/ivp.hpp"

namespace {

using nlohmann::json;

struct GlobalOptions {
  bool json_output = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  ivp::Caps caps;
  std::string config_path;
};

void apply_config_file(GlobalOptions& opts, const CLI::App& app) {
  if (opts.config_path.empty()) return;
  std::ifstream in(opts.config_path);
  if (!in) throw ivp::DomainError("config file not readable: " + opts.config_path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) continue;
    // explicit flags win over the config file
    if (key == "caps.enumeration" && app.count("--cap-enumeration") == 0)
      opts.caps.enumeration = std::stoull(value);
    else if (key == "caps.matrix_enumeration" && app.count("--cap-matrix-enumeration") == 0)
      opts.caps.matrix_enumeration = std::stoull(value);
    else if (key == "caps.degree" && app.count("--cap-degree") == 0)
      opts.caps.degree = std::stoull(value);
    else if (key == "seed" && app.count("--seed") == 0)
      opts.seed = std::stoull(value);
    else if (key == "jobs" && app.count("--jobs") == 0)
      opts.jobs = static_cast<unsigned>(std::stoul(value));
  }
}

std::string read_stdin() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

ivp::IvpCandidate candidate_from(const std::string& arg) {
  return ivp::parse_candidate(arg.empty() ? read_stdin() : arg);
}

void emit(const GlobalOptions& opts, const json& j, const std::string& text) {
  if (opts.json_output)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

int verdict_exit(const ivp::MembershipVerdict& v) { return v.member ? 0 : 1; }

std::string verdict_text(const ivp::MembershipVerdict& v) {
  std::ostringstream out;
  out << "member: " << (v.member ? "true" : "false") << "\n";
  if (v.witness)
    out << "witness " << ivp::witness_kind(*v.witness) << ": " << ivp::to_string(*v.witness)
        << "\n";
  return out.str();
}

int run_check(const GlobalOptions& opts, const std::string& ring, const std::string& poly_arg,
              int n, const std::string& charpoly_arg, const std::string& minpoly_arg,
              long long disc) {
  const ivp::IvpCandidate f = candidate_from(poly_arg);
  ivp::MembershipVerdict v;
  std::ostringstream ring_desc;
  if (ring == "z") {
    v = ivp::is_int_valued_on_Z(f);
    ring_desc << "z";
  } else if (ring == "matrices") {
    v = ivp::is_int_valued_on_MnZ(f, n, opts.caps, opts.jobs);
    ring_desc << "matrices n=" << n;
  } else if (ring == "matrix-class") {
    v = ivp::is_int_valued_on_Mnp(f, ivp::parse_zpoly(charpoly_arg));
    ring_desc << "matrix-class charpoly=" << charpoly_arg;
  } else if (ring == "r-alpha") {
    const auto alpha = ivp::mk_algebraic_integer(ivp::parse_zpoly(minpoly_arg), opts.caps);
    v = ivp::in_R_alpha(f, alpha);
    ring_desc << "r-alpha minpoly=" << ivp::to_string(alpha.minpoly());
  } else if (ring == "s-alpha") {
    const auto alpha = ivp::mk_algebraic_integer(ivp::parse_zpoly(minpoly_arg), opts.caps);
    v = ivp::in_S_alpha(f, alpha);
    ring_desc << "s-alpha minpoly=" << ivp::to_string(alpha.minpoly());
  } else if (ring == "ok") {
    v = ivp::in_IntQ_OK(f, ivp::QuadraticField::make(ivp::Int(disc)), opts.caps, opts.jobs);
    ring_desc << "ok disc=" << disc;
  } else if (ring == "subalgebra") {
    v = ivp::is_int_valued_on_subalgebra(f, ivp::parse_zpoly(minpoly_arg), opts.caps, opts.jobs);
    ring_desc << "subalgebra minpoly=" << minpoly_arg;
  } else {
    throw ivp::DomainError("unknown ring selector: " + ring);
  }
  std::ostringstream text;
  text << "candidate: " << ivp::to_string(f) << "\n"
       << "ring: " << ring_desc.str() << "\n"
       << verdict_text(v);
  emit(opts, ivp::to_json(v), text.str());
  return verdict_exit(v);
}

int run_oracle(const GlobalOptions& opts, const std::string& poly_arg, int n) {
  const ivp::IvpCandidate f = candidate_from(poly_arg);
  const ivp::MembershipVerdict v = ivp::oracle_int_MnZ(f, n, opts.caps, opts.jobs);
  std::ostringstream text;
  text << "candidate: " << ivp::to_string(f) << "\n"
       << "ring: matrices n=" << n << " (exhaustive oracle)\n"
       << verdict_text(v);
  emit(opts, ivp::to_json(v), text.str());
  return verdict_exit(v);
}

int run_generate(const GlobalOptions& opts, int n, long long den) {
  const ivp::IvpCandidate f = ivp::generate_int_MnZ(n, ivp::Int(den), opts.caps);
  emit(opts, json{{"candidate", ivp::to_string(f)}}, ivp::to_string(f) + "\n");
  return 0;
}

int run_nullideal(const GlobalOptions& opts, const std::string& matrix_arg,
                  const std::string& charpoly_arg, long long modulus, int degree_bound) {
  ivp::NullIdealSpan span{ivp::Int(modulus), degree_bound, {}};
  if (!matrix_arg.empty()) {
    const ivp::ModMat m = ivp::ModMat::reduce(ivp::parse_zmat(matrix_arg), ivp::Int(modulus));
    span = ivp::null_ideal_span(m, degree_bound);
  } else if (!charpoly_arg.empty()) {
    span = ivp::intersect_null_ideals(ivp::parse_zpoly(charpoly_arg), ivp::Int(modulus),
                                      degree_bound, opts.caps);
  } else {
    throw ivp::DomainError("nullideal requires --matrix or --charpoly");
  }
  std::ostringstream text;
  text << "modulus: " << ivp::to_string(span.modulus) << "\n"
       << "degree bound: " << span.degree_bound << "\n"
       << "generators:\n";
  for (const auto& g : span.generators) text << "  " << ivp::to_string(g) << "\n";
  emit(opts, ivp::to_json(span), text.str());
  return 0;
}

int run_integralize(const GlobalOptions& opts, const std::string& poly_arg,
                    const std::string& minpoly_arg) {
  const ivp::IvpCandidate f = candidate_from(poly_arg);
  const auto alpha = ivp::mk_algebraic_integer(ivp::parse_zpoly(minpoly_arg), opts.caps);
  const ivp::ZPoly phi = ivp::integralizer(f, alpha, opts.caps);
  const ivp::IvpCandidate composed = ivp::compose(phi, f);
  const bool lands = ivp::in_R_alpha(composed, alpha).member;
  std::ostringstream text;
  text << "phi: " << ivp::to_string(phi) << "\n"
       << "phi degree: " << phi.degree() << "\n"
       << "composition in r-alpha: " << (lands ? "true" : "false") << "\n";
  emit(opts,
       json{{"phi", ivp::to_string(phi)},
            {"phi_degree", phi.degree()},
            {"composition_in_r_alpha", lands}},
       text.str());
  return lands ? 0 : 1;
}

int run_coverage(const GlobalOptions& opts, const std::string& order_arg, long long modulus,
                 int k_bound, bool exclude) {
  const ivp::ZPoly p = ivp::parse_zpoly(order_arg);
  const ivp::CoverageReport report =
      exclude ? ivp::coverage_excluding_generators(p, ivp::Int(modulus), k_bound, opts.caps)
              : ivp::coverage_by_degree_n(p, ivp::Int(modulus), k_bound, opts.caps);
  std::ostringstream text;
  text << "order: " << ivp::to_string(report.order_minpoly) << "\n"
       << "modulus: " << ivp::to_string(report.modulus) << "\n"
       << "exclude generators: " << (report.exclude_generators ? "true" : "false") << "\n"
       << "classes: " << report.classes.size() << "\n"
       << "not found: " << report.not_found_count() << "\n";
  for (const auto& cls : report.classes) {
    text << "  class [";
    for (std::size_t i = 0; i < cls.residue_class.size(); ++i)
      text << (i ? "," : "") << ivp::to_string(cls.residue_class[i]);
    text << "] -> ";
    if (cls.representative) {
      text << "[";
      for (std::size_t i = 0; i < cls.representative->size(); ++i)
        text << (i ? "," : "") << ivp::to_string((*cls.representative)[i]);
      text << "] k=" << *cls.k << "\n";
    } else {
      text << "NOT_FOUND\n";
    }
  }
  emit(opts, ivp::to_json(report), text.str());
  return report.not_found_count() == 0 ? 0 : 1;
}

int run_sandwich(const GlobalOptions& opts, const std::string& poly_arg, int n,
                 long long max_disc, const std::string& fields_arg) {
  const ivp::IvpCandidate f = candidate_from(poly_arg);
  std::vector<ivp::Int> fields;
  if (!fields_arg.empty()) {
    std::istringstream in(fields_arg);
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!tok.empty()) fields.emplace_back(tok);
  } else {
    for (long long v = -max_disc; v <= max_disc; ++v) {
      if (v == 0 || v == 1) continue;
      if (ivp::squarefree_split(ivp::Int(v)).square_root == 1) fields.emplace_back(v);
    }
  }
  const ivp::SandwichReport report = ivp::sandwich_check(f, n, fields, opts.caps, opts.jobs);
  std::ostringstream text;
  text << "candidate: " << ivp::to_string(report.candidate) << "\n"
       << "lower (matrices n=" << n << "): " << (report.lower.member ? "member" : "non-member")
       << "\n";
  for (const auto& [D, verdict] : report.upper)
    text << "  ok disc=" << ivp::to_string(D) << ": "
         << (verdict.member ? "member" : "non-member") << "\n";
  text << "consistent: " << (report.consistent ? "true" : "false") << "\n";
  emit(opts, ivp::to_json(report), text.str());
  return report.consistent ? 0 : 1;
}

int run_falsifier(const GlobalOptions& opts, std::uint64_t samples, int max_degree,
                  long long coeff_bound, long long alpha_bound, const std::string& dens_arg) {
  ivp::FalsifierSpace space;
  space.samples_per_denominator = samples;
  space.max_degree = max_degree;
  space.coeff_bound = coeff_bound;
  space.alpha_coeff_bound = alpha_bound;
  if (!dens_arg.empty()) {
    space.denominators.clear();
    std::istringstream in(dens_arg);
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!tok.empty()) space.denominators.emplace_back(tok);
  }
  const ivp::FalsifierReport report = ivp::theorem2_falsifier(space, opts.seed);
  std::ostringstream text;
  text << "candidates tested: " << report.candidates_tested << "\n"
       << "alpha sample size: " << report.alpha_sample_size << "\n"
       << "survivors: " << report.survivors.size() << "\n";
  for (const auto& s : report.survivors) text << "  " << ivp::to_string(s) << "\n";
  emit(opts, ivp::to_json(report), text.str());
  return report.survivors.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for integer-valued polynomials over matrix algebras and "
               "algebraic integers"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_flag("--json", opts.json_output, "emit one JSON object instead of text");
  app.add_option("--jobs", opts.jobs, "worker count for enumeration sweeps")->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for randomized sampling")->capture_default_str();
  app.add_option("--cap-enumeration", opts.caps.enumeration, "element enumeration cap")
      ->capture_default_str();
  app.add_option("--cap-matrix-enumeration", opts.caps.matrix_enumeration,
                 "matrix enumeration cap")
      ->capture_default_str();
  app.add_option("--cap-degree", opts.caps.degree, "generated degree cap")->capture_default_str();
  app.add_option("--config", opts.config_path, "key=value config file (caps.*, seed, jobs)");

  // check
  auto* check = app.add_subcommand("check", "decide membership of a candidate polynomial");
  std::string ring = "z", check_poly, check_charpoly, check_minpoly;
  int check_n = 2;
  long long check_disc = 0;
  check->add_option("--ring", ring,
                    "ring selector: z | matrices | matrix-class | r-alpha | s-alpha | ok | "
                    "subalgebra")
      ->capture_default_str();
  check->add_option("--n", check_n, "matrix dimension (matrices)");
  check->add_option("--charpoly", check_charpoly, "target characteristic polynomial (matrix-class)");
  check->add_option("--minpoly", check_minpoly, "minimal polynomial (r-alpha, s-alpha, subalgebra)");
  check->add_option("--disc", check_disc, "squarefree D of Q(sqrt(D)) (ok)");
  check->add_option("poly", check_poly, "candidate polynomial (stdin when omitted)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive matrix oracle for Int(M_n(Z))");
  std::string oracle_poly;
  int oracle_n = 2;
  oracle->add_option("--n", oracle_n, "matrix dimension")->capture_default_str();
  oracle->add_option("poly", oracle_poly, "candidate polynomial (stdin when omitted)");

  // generate
  auto* generate = app.add_subcommand("generate", "construct a member of Int(M_n(Z))");
  int gen_n = 1;
  long long gen_den = 2;
  generate->add_option("--n", gen_n, "matrix dimension")->required();
  generate->add_option("--den", gen_den, "denominator d >= 2")->required();

  // nullideal
  auto* nullideal = app.add_subcommand("nullideal", "degree-bounded null ideal spans over Z/dZ");
  std::string ni_matrix, ni_charpoly;
  long long ni_modulus = 2;
  int ni_bound = -1;
  nullideal->add_option("--matrix", ni_matrix, "integer matrix, e.g. [[0,8],[1,0]]");
  nullideal->add_option("--charpoly", ni_charpoly,
                        "monic polynomial: intersect the spans over its whole matrix class");
  nullideal->add_option("--modulus", ni_modulus, "modulus d >= 2")->required();
  nullideal->add_option("--degree-bound", ni_bound, "degree bound (default 3n)");

  // integralize
  auto* integralize = app.add_subcommand(
      "integralize", "monic phi with phi(f) integer-valued on M_n^{p_alpha}(Z)");
  std::string int_poly, int_minpoly;
  integralize->add_option("--minpoly", int_minpoly, "minimal polynomial of alpha")->required();
  integralize->add_option("poly", int_poly, "candidate polynomial (stdin when omitted)");

  // density
  auto* density = app.add_subcommand("density", "desk-scale density experiments");
  density->require_subcommand(1);

  auto* coverage = density->add_subcommand("coverage", "degree-n representatives per residue class");
  std::string cov_order;
  long long cov_modulus = 2;
  int cov_k_bound = -1;
  bool cov_exclude = false;
  coverage->add_option("--order", cov_order, "monic irreducible p defining O = Z[theta]")
      ->required();
  coverage->add_option("--modulus", cov_modulus, "modulus d >= 2")->required();
  coverage->add_option("--k-bound", cov_k_bound, "search bound (default n^2)");
  coverage->add_flag("--exclude-generators", cov_exclude,
                     "representatives must not generate the order (quadratic only)");

  auto* sandwich = density->add_subcommand("sandwich", "Int(M_n(Z)) against a family of Int_Q(O_K)");
  std::string sand_poly, sand_fields;
  int sand_n = 2;
  long long sand_max_disc = 20;
  sandwich->add_option("--n", sand_n, "matrix dimension")->capture_default_str();
  sandwich->add_option("--max-disc", sand_max_disc, "use all squarefree |D| <= bound")
      ->capture_default_str();
  sandwich->add_option("--fields", sand_fields, "comma-separated squarefree D values");
  sandwich->add_option("poly", sand_poly, "candidate polynomial (stdin when omitted)");

  auto* falsifier = density->add_subcommand(
      "falsifier", "search for members of every sampled S_alpha outside Int(Z)");
  std::uint64_t fal_samples = 2000;
  int fal_max_degree = 8;
  long long fal_coeff_bound = 6, fal_alpha_bound = 10;
  std::string fal_dens;
  falsifier->add_option("--samples", fal_samples, "candidates per denominator")
      ->capture_default_str();
  falsifier->add_option("--max-degree", fal_max_degree, "candidate degree bound")
      ->capture_default_str();
  falsifier->add_option("--coeff-bound", fal_coeff_bound, "candidate coefficient box")
      ->capture_default_str();
  falsifier->add_option("--alpha-bound", fal_alpha_bound, "alpha minpoly coefficient box")
      ->capture_default_str();
  falsifier->add_option("--den", fal_dens, "comma-separated denominators (default 2,3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    apply_config_file(opts, app);
    if (check->parsed())
      return run_check(opts, ring, check_poly, check_n, check_charpoly, check_minpoly, check_disc);
    if (oracle->parsed()) return run_oracle(opts, oracle_poly, oracle_n);
    if (generate->parsed()) return run_generate(opts, gen_n, gen_den);
    if (nullideal->parsed()) {
      if (ni_bound < 0) {
        int n = 0;
        if (!ni_matrix.empty()) n = ivp::parse_zmat(ni_matrix).dim();
        else if (!ni_charpoly.empty()) n = ivp::parse_zpoly(ni_charpoly).degree();
        ni_bound = 3 * n;
      }
      return run_nullideal(opts, ni_matrix, ni_charpoly, ni_modulus, ni_bound);
    }
    if (integralize->parsed()) return run_integralize(opts, int_poly, int_minpoly);
    if (density->parsed()) {
      if (coverage->parsed())
        return run_coverage(opts, cov_order, cov_modulus, cov_k_bound, cov_exclude);
      if (sandwich->parsed())
        return run_sandwich(opts, sand_poly, sand_n, sand_max_disc, sand_fields);
      if (falsifier->parsed())
        return run_falsifier(opts, fal_samples, fal_max_degree, fal_coeff_bound, fal_alpha_bound,
                             fal_dens);
    }
    throw ivp::DomainError("no subcommand selected");
  } catch (const ivp::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const ivp::NotInS& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 1;
  } catch (const ivp::IvpError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
