#include "pellsurf/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <ostream>
#include <random>

#include "pellsurf/error.hpp"
#include "pellsurf/json_io.hpp"
#include "pellsurf/oracle.hpp"
#include "pellsurf/poly_text.hpp"
#include "pellsurf/ramify.hpp"
#include "pellsurf/sweep.hpp"

namespace pellsurf {

namespace {

struct Options {
  std::string field = "Q";
  std::string g;
  std::string q;
  std::string b;
  std::string c;
  bool json = false;
  int steps = 8;
  int n = 3;
  int n_max = 2;
  long bound = 1000;
  int deg_bound = 8;
  long p = -1;
  std::optional<std::uint64_t> seed;
  int samples = 20;
  int degree = 2;
  int max_steps = kDefaultMaxSteps;
};

int max_steps_from_env() {
  const char* env = std::getenv("PELLSURF_MAX_STEPS");
  if (!env || !*env) return kDefaultMaxSteps;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 100000) {
    throw Error(ErrorCode::InvalidArgument, std::string("PELLSURF_MAX_STEPS: bad value '") + env + "'");
  }
  return static_cast<int>(v);
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  Field field() const {
    if (o_.p >= 0) return o_.p == 0 ? Field::rationals() : Field::prime(static_cast<std::uint64_t>(o_.p));
    return Field::parse(o_.field);
  }

  ParsedPoly poly(const std::string& text, const char* flag) const {
    if (text.empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing ") + flag);
    return parse_poly(text, field());
  }

  Scalar scalar(const std::string& text, const char* flag) const {
    ParsedPoly pp = poly(text, flag);
    if (pp.poly.degree() > 0) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " must be a constant");
    return pp.poly.coeff(0);
  }

  void emit(const Json& j, const std::string& text) {
    if (o_.json) {
      out_ << j.dump(2) << '\n';
    } else {
      out_ << text;
    }
  }

  static int verdict_exit(const SolvabilityVerdict& v) {
    return v.status == SolvabilityVerdict::Status::UnknownWithinBound ? kExitUnknown : kExitDefinitive;
  }

  static std::string verdict_text(const SolvabilityVerdict& v, char var) {
    std::string s = std::string("status: ") + verdict_status_name(v.status) + '\n';
    if (v.status == SolvabilityVerdict::Status::StructurallyUnsolvable) {
      s += std::string("reason: ") + reason_name(v.reason) + '\n';
    }
    if (v.solved()) {
      s += "x = " + v.fundamental->x().to_string(var) + '\n';
      s += "y = " + v.fundamental->y().to_string(var) + '\n';
      s += "torsion order: " + std::to_string(v.torsion_order()) + '\n';
    }
    s += "steps: " + std::to_string(v.steps_used) + '\n';
    return s;
  }

  int expand() {
    ParsedPoly g = poly(o_.g, "--g");
    CFExpansion e = cf_expand_sqrt(g.poly, o_.steps);
    std::string s;
    for (std::size_t i = 0; i < e.quotients.size(); ++i) {
      s += "a" + std::to_string(i) + " = " + e.quotients[i].to_string(g.var) + '\n';
    }
    for (std::size_t i = 0; i < e.convergents.size(); ++i) {
      s += "p" + std::to_string(i) + "/q" + std::to_string(i) + " = (" + e.convergents[i].p.to_string(g.var) +
           ") / (" + e.convergents[i].q.to_string(g.var) + ")\n";
    }
    if (e.terminated) s += "terminated\n";
    emit(expansion_to_json(e, g.var), s);
    return kExitDefinitive;
  }

  int solve() {
    ParsedPoly g = poly(o_.g, "--g");
    SolvabilityVerdict v = solve_pell(PellProblem(g.poly), o_.max_steps);
    emit(verdict_to_json(v, g.var), verdict_text(v, g.var));
    return verdict_exit(v);
  }

  int powers() {
    ParsedPoly g = poly(o_.g, "--g");
    if (o_.n < 1) throw Error(ErrorCode::InvalidArgument, "--n must be >= 1");
    PellProblem pb(g.poly);
    SolvabilityVerdict v = solve_pell(pb, o_.max_steps);
    if (!v.solved()) {
      emit(verdict_to_json(v, g.var), verdict_text(v, g.var));
      return verdict_exit(v) == kExitUnknown ? kExitUnknown : kExitDefinitive;
    }
    Json arr = Json::array();
    std::string s;
    for (int k = 1; k <= o_.n; ++k) {
      PellSolution pk = power(*v.fundamental, k, pb);
      arr.push_back({{"n", k}, {"x", pk.x().to_string(g.var)}, {"y", pk.y().to_string(g.var)}});
      s += "f^" + std::to_string(k) + ": x = " + pk.x().to_string(g.var) + ", y = " + pk.y().to_string(g.var) + '\n';
    }
    emit(Json{{"powers", arr}}, s);
    return kExitDefinitive;
  }

  int order() {
    ParsedPoly g = poly(o_.g, "--g");
    TorsionResult t = torsion_order(PellProblem(g.poly), o_.max_steps);
    Json j = verdict_to_json(t.verdict, g.var);
    std::string s = verdict_text(t.verdict, g.var);
    if (t.order) {
      j["order"] = *t.order;
      s = "order: " + std::to_string(*t.order) + '\n';
    } else {
      j["order"] = nullptr;
      s = std::string("order: none (") + verdict_status_name(t.verdict.status) + ")\n";
    }
    emit(j, s);
    return verdict_exit(t.verdict);
  }

  int classify() {
    ParsedPoly g = poly(o_.g, "--g");
    SurfaceClassification c = classify_surface(g.poly);
    Json j{{"special_case", special_case_name(c.special_case)},
           {"log_kodaira", log_kodaira_name(c.log_kodaira)},
           {"constant_times_square", c.constant_times_square}};
    std::string s = std::string("special case: ") + special_case_name(c.special_case) + "\nlog Kodaira dimension: " +
                    log_kodaira_name(c.log_kodaira) + "\nconstant times square: " +
                    (c.constant_times_square ? "yes" : "no") + '\n';
    emit(j, s);
    return kExitDefinitive;
  }

  int lines() {
    ParsedPoly g = poly(o_.g, "--g");
    LineEnumeration le = enumerate_lines(PellProblem(g.poly), o_.n_max, o_.max_steps);
    Json arr = Json::array();
    std::string s;
    for (const auto& l : le.lines) {
      Json lj = line_to_json(l);
      arr.push_back(lj);
      s += std::string(line_kind_name(l.kind)) + " n=" + std::to_string(l.n) + ": x = " + lj["x"].get<std::string>() +
           ", y = " + lj["y"].get<std::string>() + ", u = " + lj["u"].get<std::string>() + " [" +
           l.definition_field + "]\n";
    }
    if (!le.caveat.empty()) s += "note: " + le.caveat + '\n';
    emit(Json{{"lines", arr}, {"complete", le.complete}, {"caveat", le.caveat}}, s);
    return verdict_exit(le.verdict);
  }

  int subst() {
    ParsedPoly g = poly(o_.g, "--g");
    ParsedPoly q = poly(o_.q, "--q");
    BaseChangeReport r = verify_base_change(g.poly, q.poly, o_.max_steps);
    Json j{{"status", base_change_status_name(r.status)},
           {"base", verdict_to_json(r.base, g.var)},
           {"composed", verdict_to_json(r.composed, q.var)}};
    std::string s = std::string("base change: ") + base_change_status_name(r.status) + '\n';
    if (r.pulled_back) {
      j["pulled_back"] = {{"x", r.pulled_back->x().to_string(q.var)}, {"y", r.pulled_back->y().to_string(q.var)}};
      s += "composed fundamental: x = " + r.composed.fundamental->x().to_string(q.var) +
           ", y = " + r.composed.fundamental->y().to_string(q.var) + '\n';
      s += "pulled back:          x = " + r.pulled_back->x().to_string(q.var) +
           ", y = " + r.pulled_back->y().to_string(q.var) + '\n';
    }
    emit(j, s);
    switch (r.status) {
      case BaseChangeReport::Status::Inconclusive: return kExitUnknown;
      case BaseChangeReport::Status::Mismatch: return kExitError;
      default: return kExitDefinitive;
    }
  }

  int cyclotomic() {
    ParsedPoly g = poly(o_.g.empty() ? "u^2 - 1" : o_.g, "--g");
    Scalar b = scalar(o_.b, "--b");
    PellProblem pb(g.poly);
    SolvabilityVerdict v = solve_pell(pb, o_.max_steps);
    if (!v.solved()) {
      emit(verdict_to_json(v, g.var), verdict_text(v, g.var));
      return verdict_exit(v) == kExitUnknown ? kExitUnknown : kExitError;
    }
    auto ord = is_cyclotomic_fiber(pb, *v.fundamental, b, o_.bound);
    Json j{{"b", b.to_string()}, {"bound", o_.bound}};
    j["order"] = ord ? Json(*ord) : Json(nullptr);
    emit(j, ord ? "order: " + std::to_string(*ord) + '\n'
                : "order: none within " + std::to_string(o_.bound) + '\n');
    return kExitDefinitive;
  }

  int double_section() {
    ParsedPoly g = poly(o_.g, "--g");
    std::vector<Scalar> cs;
    if (!o_.c.empty()) cs.push_back(scalar(o_.c, "--c"));
    DoubleSectionScan scan = scan_double_sections(g.poly, cs, o_.max_steps);
    Json arr = Json::array();
    std::string s;
    for (std::size_t i = 0; i < scan.sections.size(); ++i) {
      const DoubleSection& d = scan.sections[i];
      arr.push_back({{"c", scan.solvable[i].to_string()},
                     {"x", d.x.to_string('t')},
                     {"y", d.y.to_string('t')},
                     {"u", d.u.to_string('t')},
                     {"trivial", d.trivial},
                     {"verified", d.verified}});
      s += "c = " + scan.solvable[i].to_string() + ": x = " + d.x.to_string('t') + ", y = " + d.y.to_string('t') +
           ", u = " + d.u.to_string('t') + (d.verified ? " (verified)" : "") + '\n';
    }
    if (scan.sections.empty()) s = "no solvable auxiliary equation within the step bound\n";
    emit(Json{{"double_sections", arr}}, s);
    return scan.sections.empty() ? kExitUnknown : kExitDefinitive;
  }

  int ramify() {
    ParsedPoly q = poly(o_.q, "--q");
    RamProfile r = ramification_profile(q.poly);
    std::string s;
    for (const auto& pt : r.finite) {
      s += "roots of " + pt.locus.to_string(q.var) + ": e = " + std::to_string(pt.e) + ", d = " +
           std::to_string(pt.d) + (pt.tame ? ", tame" : ", wild") + '\n';
    }
    s += "infinity: e = " + std::to_string(r.infinity.e) + ", d = " + std::to_string(r.infinity.d) +
         (r.infinity.tame ? ", tame" : ", wild") + '\n';
    s += "total: " + std::to_string(r.total) + " (expected " + std::to_string(r.hurwitz_expected()) + ")\n";
    emit(ram_profile_to_json(r, q.var), s);
    return r.hurwitz_holds() ? kExitDefinitive : kExitError;
  }

  int mild() {
    ParsedPoly q = poly(o_.q, "--q");
    MildReport m = mild_ramification_check(q.poly);
    Pi1Report pi = m.separable ? pi1_criterion(q.poly) : Pi1Report{};
    Json j{{"mild", m.mild},
           {"separable", m.separable},
           {"infinity_ok", m.infinity_ok},
           {"finite_ok", m.finite_ok},
           {"reasons", m.reasons}};
    if (m.separable) j["pi1_certified"] = pi.certified;
    std::string s = std::string("mild: ") + (m.mild ? "yes" : "no") + '\n';
    for (const auto& r : m.reasons) s += "  " + r + '\n';
    if (m.separable) s += std::string("pi1 criterion: ") + (pi.certified ? "passed" : "not passed") + '\n';
    emit(j, s);
    return kExitDefinitive;
  }

  int places() {
    ParsedPoly g = poly(o_.g, "--g");
    PlacesAtInfinity pl = places_at_infinity(g.poly);
    emit(Json{{"count", pl.count}, {"rational", pl.rational}},
         "places at infinity: " + std::to_string(pl.count) + (pl.rational ? " (rational)" : " (conjugate pair)") +
             '\n');
    return kExitDefinitive;
  }

  int oracle() {
    if (o_.seed) return oracle_sweep();
    ParsedPoly g = poly(o_.g, "--g");
    PellProblem pb(g.poly);
    auto brute = brute_force_solve(pb, o_.deg_bound);
    SolvabilityVerdict v = solve_pell(pb, o_.max_steps);
    bool agree = brute.has_value() == v.solved() && (!brute || *brute == *v.fundamental);
    Json j{{"oracle", brute ? Json{{"x", brute->x().to_string(g.var)}, {"y", brute->y().to_string(g.var)}}
                            : Json(nullptr)},
           {"solver", verdict_to_json(v, g.var)},
           {"agree", agree}};
    std::string s = brute ? "oracle: x = " + brute->x().to_string(g.var) + ", y = " + brute->y().to_string(g.var) + '\n'
                          : "oracle: no solution with deg y <= " + std::to_string(o_.deg_bound) + '\n';
    s += std::string("solver agrees: ") + (agree ? "yes" : "no") + '\n';
    emit(j, s);
    return agree ? kExitDefinitive : kExitError;
  }

  // Random monic squarefree g of the given even degree, solved both ways.
  int oracle_sweep() {
    Field f = field();
    if (f.is_rational()) throw Error(ErrorCode::InvalidArgument, "oracle sweep needs a prime field");
    if (o_.degree < 2 || o_.degree % 2) throw Error(ErrorCode::InvalidArgument, "--degree must be even and >= 2");
    std::mt19937_64 rng(*o_.seed);
    std::uniform_int_distribution<std::uint64_t> coef(0, f.characteristic() - 1);
    std::vector<Poly> gs;
    while (static_cast<int>(gs.size()) < o_.samples) {
      std::vector<Scalar> cs;
      for (int i = 0; i < o_.degree; ++i) {
        cs.push_back(Scalar::from_mpz(f, mpz_class(static_cast<unsigned long>(coef(rng)))));
      }
      cs.push_back(Scalar::one(f));
      Poly g(f, cs);
      if (multiplicity_profile(g).simple_root_count == o_.degree) gs.push_back(g);
    }
    const int steps = o_.max_steps;
    const int bound = o_.deg_bound;
    auto rows = map_parallel(gs, [&](const Poly& g) {
      PellProblem pb(g);
      auto brute = brute_force_solve_serial(pb, bound);
      SolvabilityVerdict v = solve_pell(pb, steps);
      bool agree = brute.has_value() == v.solved() && (!brute || *brute == *v.fundamental);
      return Json{{"g", g.to_string()}, {"solved", v.solved()}, {"oracle_hit", brute.has_value()}, {"agree", agree}};
    });
    int bad = 0;
    std::string s;
    for (const auto& r : rows) {
      if (!r["agree"].get<bool>()) ++bad;
      s += r["g"].get<std::string>() + (r["agree"].get<bool>() ? ": agree\n" : ": DISAGREE\n");
    }
    emit(Json{{"seed", *o_.seed}, {"rows", rows}, {"disagreements", bad}}, s);
    return bad ? kExitError : kExitDefinitive;
  }

  int cheb() {
    auto [tn, un] = chebyshev_pair(o_.n, field());
    emit(Json{{"n", o_.n}, {"T", tn.to_string('t')}, {"U", un.to_string('t')}},
         "T_" + std::to_string(o_.n) + " = " + tn.to_string('t') + "\nU_" + std::to_string(o_.n - 1) + " = " +
             un.to_string('t') + '\n');
    return kExitDefinitive;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial Pell equations, continued fractions and Pell surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "Q, F5, Fp:101")->capture_default_str();
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--seed", o.seed, "seed for randomized sweeps");

  auto with_g = [&](CLI::App* sub) { sub->add_option("--g", o.g, "polynomial g")->required(); };
  auto* expand = app.add_subcommand("expand", "continued fraction of sqrt(g)");
  with_g(expand);
  expand->add_option("--steps", o.steps)->capture_default_str();
  auto* solve = app.add_subcommand("solve", "fundamental solution of x^2 - g y^2 = 1");
  with_g(solve);
  auto* powers = app.add_subcommand("powers", "powers of the fundamental solution");
  with_g(powers);
  powers->add_option("--n", o.n)->capture_default_str();
  auto* order = app.add_subcommand("order", "torsion order of P1 - P2");
  with_g(order);
  auto* classify = app.add_subcommand("classify", "special case and log Kodaira dimension of S_g");
  with_g(classify);
  auto* lines = app.add_subcommand("lines", "affine lines on S_g");
  with_g(lines);
  lines->add_option("--n-max", o.n_max)->capture_default_str();
  auto* subst = app.add_subcommand("subst", "compare fundamentals of g and g(q)");
  with_g(subst);
  subst->add_option("--q", o.q)->required();
  auto* cyclo = app.add_subcommand("cyclotomic", "order of the fundamental section on the fiber over b");
  cyclo->add_option("--g", o.g, "defaults to u^2 - 1");
  cyclo->add_option("--b", o.b)->required();
  cyclo->add_option("--bound", o.bound)->capture_default_str();
  auto* dsec = app.add_subcommand("double-section", "double sections of S_g for cubic g");
  with_g(dsec);
  dsec->add_option("--c", o.c, "auxiliary constant; scans the field when omitted");
  auto* ramify = app.add_subcommand("ramify", "ramification profile of q");
  ramify->add_option("--q", o.q)->required();
  ramify->add_option("--p", o.p, "characteristic (0 for Q)");
  auto* mild = app.add_subcommand("mild", "mild ramification and pi1 criterion");
  mild->add_option("--q", o.q)->required();
  mild->add_option("--p", o.p, "characteristic (0 for Q)");
  auto* places = app.add_subcommand("places", "places at infinity of v^2 = g");
  with_g(places);
  auto* oracle = app.add_subcommand("oracle", "compare the solver with exhaustive search");
  oracle->add_option("--g", o.g);
  oracle->add_option("--deg-bound", o.deg_bound)->capture_default_str();
  oracle->add_option("--samples", o.samples)->capture_default_str();
  oracle->add_option("--degree", o.degree)->capture_default_str();
  auto* cheb = app.add_subcommand("cheb", "Chebyshev pair (T_n, U_{n-1})");
  cheb->add_option("--n", o.n)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitDefinitive;
    }
    err << "error[ParseError]: " << e.what() << '\n';
    return kExitError;
  }

  try {
    o.max_steps = max_steps_from_env();
    Runner r(o, out);
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "expand") return r.expand();
    if (name == "solve") return r.solve();
    if (name == "powers") return r.powers();
    if (name == "order") return r.order();
    if (name == "classify") return r.classify();
    if (name == "lines") return r.lines();
    if (name == "subst") return r.subst();
    if (name == "cyclotomic") return r.cyclotomic();
    if (name == "double-section") return r.double_section();
    if (name == "ramify") return r.ramify();
    if (name == "mild") return r.mild();
    if (name == "places") return r.places();
    if (name == "oracle") return r.oracle();
    if (name == "cheb") return r.cheb();
    err << "error: unknown subcommand " << name << '\n';
    return kExitError;
  } catch (const Error& e) {
    if (o.json) out << error_to_json(e).dump(2) << '\n';
    err << "error[" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace pellsurf
