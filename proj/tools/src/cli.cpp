#include "rocoh_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "rocoh/cellular_oracle.hpp"
#include "rocoh/errors.hpp"
#include "rocoh/free_space.hpp"
#include "rocoh/json_io.hpp"
#include "rocoh/obstruction.hpp"
#include "rocoh/point_ring.hpp"
#include "rocoh/rep_complex.hpp"

namespace rocoh::cli {

namespace {

struct Options {
  bool json = false;
  int window = -1;
  unsigned seed = 0;
  int p = 3;
  int m = 0;
  int n = 0;
  std::int64_t q = 0;
  int d = 1;
  int samples = 0;
  std::string input;
  std::string x;
  std::string y;
  std::string v;
  std::string vp;
  std::string level = "gg";
  std::string space;
  std::string element;
  std::string cls;
  int u_power = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load(const std::string& path) {
  try {
    return parse_json(read_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

/// Named generators ("1", "a", "u", "kappa") or a JSON element.
RingElement parse_element(Prime p, const std::string& text) {
  if (text == "1") return one(p);
  if (text == "a") return a_class(p);
  if (text == "u") return u_class(p);
  if (text == "kappa") return kappa_class(p);
  return element_from_json(p, parse_json(text));
}

/// "lens:P:K", "bg:P:N", "rp:K", or a path to an OrbitAlgebra document.
FreeSpaceCohomology load_space(const std::string& source) {
  std::vector<std::string> parts;
  std::stringstream ss(source);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  auto num = [&](std::size_t i) {
    try {
      return std::stoi(parts.at(i));
    } catch (const std::exception&) {
      throw ValidationError("bad builtin space '" + source + "'");
    }
  };
  if (parts[0] == "lens" && parts.size() == 3) return lens_space(Prime(num(1)), num(2));
  if (parts[0] == "bg" && parts.size() == 3) return bg_skeleton(Prime(num(1)), num(2));
  if (parts[0] == "rp" && parts.size() == 2) return real_projective(num(1));
  return orbit_algebra_from_json(load(source));
}

std::string degree_text(Prime p, RODegree a) {
  return "{" + to_string(a, p) + "} (m,n)=(" + std::to_string(a.m) + "," + std::to_string(a.n) + ")";
}

class Runner {
 public:
  Runner(std::ostream& out) : out_(out) {}

  void emit(const Json& report, const std::string& text) {
    if (opt.json) {
      out_ << report.dump(2) << "\n";
    } else {
      out_ << text;
      if (!text.empty() && text.back() != '\n') out_ << "\n";
    }
  }

  int window_or(int fallback) const { return opt.window >= 0 ? opt.window : fallback; }

  // point ------------------------------------------------------------------
  void point_basis() {
    const Prime p(opt.p);
    const RODegree a{opt.m, opt.n};
    const auto mono = basis(p, a);
    Json r{{"p", opt.p}, {"degree", to_json(a)}, {"rank", mono ? 1 : 0}};
    r["monomial"] = mono ? to_json(*mono) : Json(nullptr);
    emit(r, "H^" + degree_text(p, a) + ": " + (mono ? to_string(*mono) : std::string("0")));
  }

  void point_mult() {
    const Prime p(opt.p);
    const RingElement a = parse_element(p, opt.x);
    const RingElement b = parse_element(p, opt.y);
    const RingElement c = multiply(a, b);
    Json r{{"p", opt.p}, {"x", to_json(a)}, {"y", to_json(b)}, {"product", to_json(c)},
           {"degree", to_json(c.degree())}};
    emit(r, "(" + to_string(a) + ") * (" + to_string(b) + ") = " + to_string(c));
  }

  void point_bockstein() {
    const Prime p(opt.p);
    const RingElement a = parse_element(p, opt.x);
    const RingElement b = bockstein(a);
    Json r{{"p", opt.p}, {"x", to_json(a)}, {"beta", to_json(b)}, {"degree", to_json(b.degree())}};
    emit(r, "beta(" + to_string(a) + ") = " + to_string(b));
  }

  /// Random associativity, graded commutativity and Leibniz checks.
  int point_axioms() {
    const Prime p(opt.p);
    const auto monos = window_monomials(p, window_or(4));
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    const int samples = opt.samples > 0 ? opt.samples : 2000;
    int violations = 0;
    for (int s = 0; s < samples; ++s) {
      const RingElement x(p, monos[pick(rng)]);
      const RingElement y(p, monos[pick(rng)]);
      const RingElement z(p, monos[pick(rng)]);
      if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)))) ++violations;
      const int sign = (x.dim() * y.dim()) % 2 == 0 ? 1 : -1;
      if (!(multiply(x, y) == multiply(y, x).scaled(sign))) ++violations;
      const int sx = x.dim() % 2 == 0 ? 1 : -1;
      if (!(bockstein(multiply(x, y)) == add(multiply(bockstein(x), y), multiply(x, bockstein(y)).scaled(sx)))) {
        ++violations;
      }
    }
    Json r{{"p", opt.p}, {"samples", samples}, {"seed", opt.seed}, {"violations", violations}};
    emit(r, std::to_string(violations) + " violations in " + std::to_string(samples) + " sampled triples");
    return violations == 0 ? 0 : 1;
  }

  // free-space -------------------------------------------------------------
  void space_rank() {
    const auto x = load_space(opt.space);
    const RODegree a{opt.m, opt.n};
    const int r = rank(x, a);
    Json rep{{"input", to_json(x)}, {"degree", to_json(a)}, {"rank", r}};
    emit(rep, "rank H^" + degree_text(x.prime(), a) + " = " + std::to_string(r));
  }

  void space_act() {
    const auto x = load_space(opt.space);
    const RingElement r = parse_element(x.prime(), opt.element);
    const int idx = opt.cls.empty() ? x.unit_index() : x.index_of(opt.cls);
    const FreeClass c = make_class(x, x.basis_vector(idx), opt.u_power);
    const FreeClass result = act(x, r, c);
    Json rep{{"input", to_json(x)},
             {"element", to_json(r)},
             {"class", to_string(x, c)},
             {"result", to_string(x, result)},
             {"coeffs", result.coeffs},
             {"u_power", result.u_power},
             {"degree", to_json(degree_of(x, result))}};
    emit(rep, to_string(r) + " . " + to_string(x, c) + " = " + to_string(x, result));
  }

  void space_index(bool fh) {
    const auto x = load_space(opt.space);
    const int v = fh ? fh_first_index(x) : n_invariant(x);
    Json rep{{"input", to_json(x)}, {fh ? "fh_first_index" : "n_invariant", v}};
    emit(rep, std::string(fh ? "i(X) = " : "n(X) = ") + std::to_string(v));
  }

  // complex ----------------------------------------------------------------
  std::string basis_text(const FreeBasis& b, Prime p) {
    std::ostringstream s;
    s << "free on " << b.generators.size() << " generators" << (b.beta_closed ? "" : " (Bockstein not certified)")
      << "\n";
    for (const auto& g : b.generators) s << "  " << g.name << "  " << degree_text(p, g.degree) << "\n";
    for (const auto& note : b.notes) s << "  note: " << note << "\n";
    return s.str();
  }

  std::string cert_text(const NonFreeCertificate& c) {
    std::ostringstream s;
    s << "not free: " << to_string(c.reason) << " at " << c.stage << "\n  " << c.message << "\n";
    return s.str();
  }

  std::string result_text(const EngineResult& r, Prime p) {
    if (auto* b = std::get_if<FreeBasis>(&r)) return basis_text(*b, p);
    return cert_text(std::get<NonFreeCertificate>(r));
  }

  void complex_cohomology() {
    const RepComplex x = rep_complex_from_json(load(opt.input));
    const EngineResult r = cohomology(x);
    Json rep{{"input", to_json(x)}, {"result", to_json(r)}};
    emit(rep, result_text(r, x.p));
  }

  void complex_profile() {
    const RepComplex x = rep_complex_from_json(load(opt.input));
    const int w = window_or(default_window(x));
    const RankProfile pr = rank_profile(x, w);
    Json rep{{"input", to_json(x)}, {"window", w}, {"profile", to_json(pr)}};
    std::ostringstream s;
    s << "nonzero ranks of H^alpha(X_+) on |m|,|n| <= " << w << ":\n";
    for (const auto& [a, r] : pr) {
      if (r != 0) s << "  " << degree_text(x.p, a) << ": " << r << "\n";
    }
    emit(rep, s.str());
  }

  /// Engine, profile search and localization must tell the same story.
  int complex_check() {
    const RepComplex x = rep_complex_from_json(load(opt.input));
    const int w = window_or(default_window(x));
    const EngineResult r = cohomology(x);
    std::optional<std::vector<RODegree>> search;
    bool profile_ok = true;
    try {
      search = is_free_profile(x.p, rank_profile(x, w), w);
    } catch (const InconsistencyError&) {
      profile_ok = false;
    }
    Json rep{{"input", to_json(x)}, {"window", w}, {"result", to_json(r)}, {"sparse", is_sparse(x)}};
    std::ostringstream s;
    s << result_text(r, x.p);
    int code = 0;
    if (auto* b = std::get_if<FreeBasis>(&r)) {
      auto degs = b->degrees();
      std::sort(degs.begin(), degs.end());
      const bool agree = profile_ok && search && *search == degs;
      rep["profile_agrees"] = agree;
      s << "profile search " << (agree ? "agrees" : "DISAGREES") << " on the window\n";
      if (!agree) code = 1;
      if (x.fixed_betti) {
        const bool loc = localization_check(*b, *x.fixed_betti);
        rep["localization"] = loc;
        s << "localization " << (loc ? "passes" : "FAILS") << "\n";
        if (!loc) code = 1;
      }
      if (is_sparse(x) && !b->beta_closed) code = 1;
    } else {
      rep["profile_agrees"] = nullptr;
      s << "profile search " << (search ? "finds a free candidate" : "finds no free module") << "\n";
    }
    emit(rep, s.str());
    return code;
  }

  // obstruction ------------------------------------------------------------
  std::string verdict_text(const Verdict& v) {
    std::ostringstream s;
    s << to_string(v.outcome) << "\n";
    for (const auto& f : v.evidence) s << "  " << f.text << "\n";
    return s.str();
  }

  int finish_verdict(const Verdict& v, Json rep) {
    rep["verdict"] = to_json(v);
    emit(rep, verdict_text(v));
    return revalidate(v) ? 0 : 1;
  }

  int borsuk_ulam_cmd() {
    const Prime p(opt.p);
    const RealRep v = parse_rep(p, opt.v);
    const RealRep vp = parse_rep(p, opt.vp);
    return finish_verdict(borsuk_ulam(p, v, vp), Json{{"p", opt.p}, {"v", to_json(p, v)}, {"vp", to_json(p, vp)}});
  }

  int tverberg_cmd() {
    const Prime p(opt.p);
    return finish_verdict(tverberg(p, opt.d),
                          Json{{"p", opt.p}, {"d", opt.d}, {"N", (opt.p - 1) * (opt.d + 1)}});
  }

  int index_cmd() {
    const auto x = load_space(opt.x);
    const auto y = load_space(opt.y);
    return finish_verdict(index_obstruction(x, y), Json{{"x", to_json(x)}, {"y", to_json(y)}});
  }

  // oracle -----------------------------------------------------------------
  void oracle_point() {
    const Prime p(opt.p);
    const int r = point_ro(p, opt.m, opt.n);
    emit(Json{{"p", opt.p}, {"degree", to_json(RODegree{opt.m, opt.n})}, {"rank", r}},
         "oracle rank H^" + degree_text(p, RODegree{opt.m, opt.n}) + " = " + std::to_string(r));
  }

  void oracle_module(bool cohomology_side) {
    const GCWComplex x = gcw_from_json(load(opt.input));
    if (opt.level != "gg" && opt.level != "ge") throw ValidationError("--level must be gg or ge");
    const Level level = opt.level == "gg" ? Level::Fixed : Level::Underlying;
    const std::int64_t q = opt.q > 0 ? opt.q : x.prime().value();
    const ModuleData mdl = cohomology_side ? cohomology_int(x, q, opt.n, level) : homology_int(x, q, opt.n, level);
    std::ostringstream s;
    s << (cohomology_side ? "H^" : "H_") << opt.n << "(X; Z/" << q << ") at " << (level == Level::Fixed ? "G/G" : "G/e")
      << ": ";
    if (mdl.exponents.empty()) s << "0";
    for (std::size_t i = 0; i < mdl.exponents.size(); ++i) {
      std::int64_t order = 1;
      for (int e = 0; e < mdl.exponents[i]; ++e) order *= x.prime().value();
      s << (i ? " + " : "") << "Z/" << order;
    }
    emit(Json{{"input", to_json(x)}, {"level", opt.level}, {"n", opt.n}, {"module", to_json(mdl)}}, s.str());
  }

  int verify_ring() {
    const Prime p(opt.p);
    const int w = window_or(6);
    int agree = 0;
    Json mismatches = Json::array();
    for (int m = -w; m <= w; ++m) {
      for (int n = -w; n <= w; ++n) {
        const int ring = rank(p, RODegree{m, n});
        const int oracle = point_ro(p, m, n);
        if (ring == oracle) {
          ++agree;
        } else {
          mismatches.push_back(Json{{"m", m}, {"n", n}, {"ring", ring}, {"oracle", oracle}});
        }
      }
    }
    std::ostringstream s;
    if (mismatches.empty()) {
      s << "agree on " << agree << " degrees";
    } else {
      s << "DISAGREE on " << mismatches.size() << " degrees (agree on " << agree << ")";
    }
    emit(Json{{"p", opt.p}, {"window", w}, {"agree", agree}, {"mismatches", mismatches}}, s.str());
    return mismatches.empty() ? 0 : 1;
  }

  Options opt;

 private:
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out);
  Options& o = runner.opt;
  CLI::App app{"RO(C_p)-graded Bredon cohomology with constant Z/p coefficients", "rocoh"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--window", o.window, "Window radius")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  std::function<int()> action;
  auto set = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };
  auto unit = [](std::function<void()> f) {
    return [f] {
      f();
      return 0;
    };
  };

  auto* point = app.add_subcommand("point", "The point ring H^*(S^0)");
  point->require_subcommand(1);
  auto* pb = point->add_subcommand("basis", "Basis monomial in degree (m, n)");
  pb->add_option("-p", o.p)->required();
  pb->add_option("-m", o.m)->required();
  pb->add_option("-n", o.n)->required();
  set(pb, unit([&] { runner.point_basis(); }));
  auto* pm = point->add_subcommand("mult", "Product of two elements");
  pm->add_option("-p", o.p)->required();
  pm->add_option("--x", o.x, "1, a, u, kappa or a JSON element")->required();
  pm->add_option("--y", o.y)->required();
  set(pm, unit([&] { runner.point_mult(); }));
  auto* pbo = point->add_subcommand("bockstein", "Bockstein of an element");
  pbo->add_option("-p", o.p)->required();
  pbo->add_option("--x", o.x)->required();
  set(pbo, unit([&] { runner.point_bockstein(); }));
  auto* pa = point->add_subcommand("axioms", "Sampled ring and derivation axioms");
  pa->add_option("-p", o.p)->required();
  pa->add_option("--samples", o.samples);
  set(pa, [&] { return runner.point_axioms(); });

  auto* fs = app.add_subcommand("free-space", "Free C_p-spaces from orbit data");
  fs->require_subcommand(1);
  auto space_opt = [&](CLI::App* sub) {
    sub->add_option("--input,--space", o.space, "OrbitAlgebra JSON file or lens:P:K, bg:P:N, rp:K")->required();
  };
  auto* fr = fs->add_subcommand("rank", "Rank in degree (m, n)");
  space_opt(fr);
  fr->add_option("-m", o.m)->required();
  fr->add_option("-n", o.n)->required();
  set(fr, unit([&] { runner.space_rank(); }));
  auto* fa = fs->add_subcommand("act", "Action of a point-ring element on a class");
  space_opt(fa);
  fa->add_option("--element", o.element)->required();
  fa->add_option("--class", o.cls, "Basis element (default: unit)");
  fa->add_option("--u-power", o.u_power);
  set(fa, unit([&] { runner.space_act(); }));
  auto* fn = fs->add_subcommand("n-index", "n(X)");
  space_opt(fn);
  set(fn, unit([&] { runner.space_index(false); }));
  auto* ff = fs->add_subcommand("fh-index", "First Fadell-Husseini index degree");
  space_opt(ff);
  set(ff, unit([&] { runner.space_index(true); }));

  auto* cx = app.add_subcommand("complex", "Rep(C_p)-complexes");
  cx->require_subcommand(1);
  for (auto [name, help] : {std::pair{"cohomology", "Free basis or certificate"},
                            std::pair{"profile", "Rank table from the exact sequence"},
                            std::pair{"check", "Cross-check engine, profile and localization"}}) {
    auto* sub = cx->add_subcommand(name, help);
    sub->add_option("--input", o.input)->required();
    sub->add_option("--window", o.window)->check(CLI::NonNegativeNumber);
    const std::string which = name;
    set(sub, [&runner, which] {
      if (which == "cohomology") runner.complex_cohomology();
      if (which == "profile") runner.complex_profile();
      if (which == "check") return runner.complex_check();
      return 0;
    });
  }

  auto* ob = app.add_subcommand("obstruction", "Non-existence of equivariant maps");
  ob->require_subcommand(1);
  auto* bu = ob->add_subcommand("borsuk-ulam", "S(V) -> S(V')");
  bu->add_option("-p", o.p)->required();
  bu->add_option("--v", o.v)->required();
  bu->add_option("--vp", o.vp)->required();
  set(bu, [&] { return runner.borsuk_ulam_cmd(); });
  auto* tv = ob->add_subcommand("tverberg", "Topological Tverberg, prime case");
  tv->add_option("-p", o.p)->required();
  tv->add_option("-d", o.d)->required();
  set(tv, [&] { return runner.tverberg_cmd(); });
  auto* ix = ob->add_subcommand("index", "X -> Y via n(X), n(Y)");
  ix->add_option("--x", o.x)->required();
  ix->add_option("--y", o.y)->required();
  set(ix, [&] { return runner.index_cmd(); });

  auto* orc = app.add_subcommand("oracle", "Cellular Bredon (co)homology");
  orc->require_subcommand(1);
  auto* op = orc->add_subcommand("point", "RO-graded rank of the point");
  op->add_option("-p", o.p)->required();
  op->add_option("-m", o.m)->required();
  op->add_option("-n", o.n)->required();
  set(op, unit([&] { runner.oracle_point(); }));
  for (bool coh : {true, false}) {
    auto* sub = orc->add_subcommand(coh ? "cohomology" : "homology", "Integer-graded Bredon module");
    sub->add_option("--input", o.input)->required();
    sub->add_option("-q", o.q, "Coefficient modulus (default p)");
    sub->add_option("-n", o.n)->required();
    sub->add_option("--level", o.level, "gg or ge");
    set(sub, unit([&runner, coh] { runner.oracle_module(coh); }));
  }
  auto* vr = orc->add_subcommand("verify-ring", "Compare the point ring with the oracle");
  vr->add_option("-p", o.p)->required();
  vr->add_option("--window", o.window)->check(CLI::NonNegativeNumber);
  set(vr, [&] { return runner.verify_ring(); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  // Subcommand callbacks only record the action; run it here so errors map
  // onto exit codes uniformly.
  try {
    if (!action) return 2;
    return action();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rocoh::cli
