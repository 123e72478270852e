#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hermlie/io.hpp"
#include "hermlie/verifier.hpp"

using namespace hermlie;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kJacobi = 3, kInvalid = 4 };

struct Options {
  std::string notation;
  std::string input;
  std::vector<std::string> t_list{"-1", "0", "1", "2"};
  std::string mode = "exact";
  double eps = 1e-9;
  std::uint64_t seed = 1;
  int count = 100;
  int dim = 6;
  int step = 2;
  std::string out;
  std::string format = "text";
};

Mode parse_mode(const std::string& m) { return m == "float" ? Mode::floating : Mode::exact; }

void emit(const Options& o, const json& j, const std::string& text) {
  if (!o.out.empty()) save_report(o.out, j);
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

Problem load_input(const Options& o) {
  if (!o.input.empty()) return load_problem(o.input);
  if (o.notation.empty()) throw SchemaError("no input: give a notation string or --input FILE");
  auto L = parse_notation(o.notation);
  return problem_from_json(json{{"dim", L.dim()}, {"notation", o.notation}});
}

/// Runs `body`, mapping library exceptions to exit codes.
int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const JacobiError& e) {
    std::cerr << "Jacobi identity fails: " << e.what() << "\n";
    return kJacobi;
  } catch (const StructureError& e) {
    std::cerr << "invalid structure: " << e.what() << "\n";
    return kInvalid;
  } catch (const SchemaError& e) {
    std::cerr << "invalid problem: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}

int cmd_parse(const Options& o) {
  return guarded([&] {
    const auto L = parse_notation(o.notation);
    const auto step = nilpotency_step(L);
    const int center_dim = center(L).dim();
    json j{{"notation", serialize_notation(L)},
           {"dim", L.dim()},
           {"step", step ? json(*step) : json(nullptr)},
           {"nilpotent", step.has_value()},
           {"unimodular", is_unimodular(L)},
           {"center_dim", center_dim}};
    std::ostringstream s;
    s << "notation    " << serialize_notation(L) << "\n"
      << "dim         " << L.dim() << "\n"
      << "step        " << (step ? std::to_string(*step) : "not nilpotent") << "\n"
      << "unimodular  " << (is_unimodular(L) ? "yes" : "no") << "\n"
      << "center dim  " << center_dim << "\n";
    emit(o, j, s.str());
    return kOk;
  });
}

std::string analysis_text(const json& r) {
  std::ostringstream s;
  s << "algebra " << r["input"]["notation"].get<std::string>() << "  (mode " << r["mode"].get<std::string>() << ")\n";
  s << "classes:";
  for (const auto& [k, v] : r["classes"].items())
    if (v.get<bool>()) s << " " << k;
  s << "\n";
  s << std::left << std::setw(8) << "t" << std::setw(12) << "|rho^t|" << std::setw(10) << "T11" << std::setw(10) << "T20"
    << std::setw(10) << "T11_b" << "theta\n";
  auto str = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [t, rho] : r["ricci"].items()) {
    std::string m = "0";
    double best = 0;
    for (const auto& row : rho)
      for (const auto& x : row) {
        const double d = x.is_string() ? std::abs(parse_rational(x.get<std::string>()).get_d()) : std::abs(x.get<double>());
        if (d > best) best = d, m = x.is_string() ? x.get<std::string>() : x.dump();
      }
    const auto& tt = r["torsion_types"][t];
    std::string th;
    for (const auto& x : r["theta"][t]) th += (th.empty() ? "" : " ") + str(x);
    s << std::setw(8) << t << std::setw(12) << (best == 0 ? "0" : m.substr(m[0] == '-' ? 1 : 0)) << std::setw(10)
      << str(tt["T11"]) << std::setw(10) << str(tt["T20"]) << std::setw(10) << str(tt["T11_b"]) << "(" << th << ")\n";
  }
  return s.str();
}

int cmd_analyze(const Options& o) {
  return guarded([&] {
    const auto p = load_input(o);
    std::vector<Rational> ts;
    for (const auto& t : o.t_list) ts.push_back(parse_rational(t));
    const auto r = analysis_json(p, ts, parse_mode(o.mode));
    emit(o, r, analysis_text(r));
    return kOk;
  });
}

std::string suite_text(const SuiteReport& r) {
  std::ostringstream s;
  s << r.suite << ": " << r.passed << "/" << r.samples << " passed, max residual " << r.max_residual << ", "
    << std::fixed << std::setprecision(2) << r.seconds << " s\n";
  for (const auto& ob : r.observations) s << "  note: " << ob << "\n";
  if (r.witness) {
    s << "  witness: index " << r.witness->index << ", seed " << r.witness->seed << " (" << r.witness->kind << ")\n"
      << "    " << serialize_notation(r.witness->algebra) << "\n    " << r.witness->reason << "\n";
  }
  return s.str();
}

/// Checks a single problem with the battery belonging to `suite`.
SuiteReport verify_problem(const std::string& suite, const Problem& p, const SampleSpec& spec) {
  const Instance inst{"input", p.algebra, p.structure};
  auto run = [&](auto tag) {
    using F = decltype(tag);
    return detail::with_timer<F>(suite, spec, [&](SuiteReport& rep) {
      auto each = [&](const std::string& name, const detail::CheckFn<F>& check) {
        if (suite == name || suite == "all") detail::run_one<F>(rep, int(rep.samples), 0, inst, check);
      };
      each("theorem1", [](const auto& L, const auto& S, auto& ck, std::uint64_t) { theorem1_checks(L, S, ck); });
      each("corollary33", [](const auto& L, const auto& S, auto& ck, std::uint64_t) {
        ck.require("instance is cosymplectic", is_cosymplectic(L, S));
        t_independence_checks(L, S, ck);
      });
      each("prop42", [](const auto& L, const auto& S, auto& ck, std::uint64_t) {
        bool any = false;
        for (auto cls : {StructureClass::bi_invariant, StructureClass::anti_bi_invariant, StructureClass::abelian,
                         StructureClass::anti_abelian})
          if (has_class(L, S, cls)) any = true, class_checks(L, S, cls, ck);
        ck.require("instance belongs to one of the four classes", any);
      });
      each("consistency", [](const auto& L, const auto& S, auto& ck, std::uint64_t s) { consistency_checks(L, S, ck, s); });
    });
  };
  return spec.mode == Mode::exact ? run(Rational{}) : run(double{});
}

int cmd_verify(const std::string& suite, const Options& o) {
  if (!is_suite_name(suite)) {
    std::cerr << "unknown suite '" << suite << "' (expected theorem1, corollary33, prop42, consistency or all)\n";
    return kUsage;
  }
  return guarded([&] {
    const SampleSpec spec{o.dim, o.step, o.seed, o.count, parse_mode(o.mode)};
    std::vector<SuiteReport> reports;
    if (!o.input.empty() || !o.notation.empty()) {
      reports.push_back(verify_problem(suite, load_input(o), spec));
    } else {
      if (spec.dim % 2 != 0 || spec.dim < 4) throw SchemaError("--dim must be even and at least 4");
      if (spec.count < 1) throw SchemaError("--count must be positive");
      for (const char* name : {"theorem1", "corollary33", "prop42", "consistency"})
        if (suite == name || suite == "all") reports.push_back(run_suite(name, spec));
    }
    bool ok = true;
    std::string text;
    json j = json::array();
    for (const auto& r : reports) {
      ok = ok && r.ok();
      text += suite_text(r);
      j.push_back(suite_json(r));
    }
    emit(o, reports.size() == 1 ? j[0] : j, text);
    return ok ? kOk : kFail;
  });
}

int cmd_generate(const Options& o) {
  if (o.dim % 2 != 0 || o.dim < 4) {
    std::cerr << "generate: --dim must be even and at least 4\n";
    return kUsage;
  }
  if (o.step < 1 || o.step > 3) {
    std::cerr << "generate: --step must be 1, 2 or 3\n";
    return kUsage;
  }
  return guarded([&] {
    const auto inst = random_instance(o.dim, o.step, o.seed);
    const auto j = problem_to_json(inst.algebra, inst.structure);
    if (!o.out.empty()) save_problem(o.out, {inst.algebra, inst.structure});
    if (o.out.empty() || o.format == "json") std::cout << j.dump(2) << "\n";
    return kOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical Hermitian connections and Ricci forms on Lie algebras"};
  app.require_subcommand(1);
  Options o;
  std::string suite;

  auto common = [&](CLI::App* c) {
    c->add_option("--mode", o.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    c->add_option("--eps", o.eps, "zero threshold in float mode")->check(CLI::PositiveNumber);
    c->add_option("--out", o.out, "write the JSON report to this file");
    c->add_option("--format", o.format, "stdout format: text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* parse = app.add_subcommand("parse", "parse structure equations and summarise the algebra");
  parse->add_option("notation", o.notation, "e.g. \"(0,0,0,12)\"")->required();
  common(parse);

  auto* analyze = app.add_subcommand("analyze", "classes, theta^t, rho^t and torsion types of one structure");
  analyze->add_option("notation", o.notation, "structure equations (default metric and J)");
  analyze->add_option("--input", o.input, "problem document (JSON)");
  analyze->add_option("--t", o.t_list, "comma-separated t values, e.g. --t=-1,0,1,2")->delimiter(',')->allow_extra_args(false);
  common(analyze);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "theorem1, corollary33, prop42, consistency or all")->required();
  verify->add_option("notation", o.notation, "check one algebra (standard structure) instead of sampling");
  verify->add_option("--input", o.input, "check one problem document instead of sampling");
  verify->add_option("--dim", o.dim, "dimension of sampled instances");
  verify->add_option("--count", o.count, "number of samples per family");
  verify->add_option("--seed", o.seed, "base seed");
  common(verify);

  auto* generate = app.add_subcommand("generate", "write a random problem document");
  generate->add_option("--dim", o.dim, "even dimension");
  generate->add_option("--step", o.step, "1 (abelian), 2 or 3");
  generate->add_option("--seed", o.seed, "seed");
  common(generate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  epsilon() = o.eps;

  if (parse->parsed()) return cmd_parse(o);
  if (analyze->parsed()) return cmd_analyze(o);
  if (verify->parsed()) return cmd_verify(suite, o);
  return cmd_generate(o);
}
