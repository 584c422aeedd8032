#include "gradfrob/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gradfrob/constructions.hpp"
#include "gradfrob/frobenius.hpp"
#include "gradfrob/text_format.hpp"

namespace gradfrob {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  std::size_t trials = 64;
  bool json = false;
  std::string cert_out;
  std::string file;
  std::string cert_file;
  std::string method = "all";
  std::size_t sigma = 0;
  std::string side = "left";
  bool graded = false;
  bool ungraded = false;
  std::string gen_name;
  std::vector<std::string> gen_params;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].to_string();
  return s + ")";
}

Json certificate_json(const Certificate& c) {
  Json payload = Json::array();
  for (std::size_t r = 0; r < c.payload.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : c.payload.row(r)) row.push_back(x.to_string());
    payload.push_back(std::move(row));
  }
  return Json{{"kind", to_string(c.kind)},
              {"sigma", c.sigma},
              {"field", c.field.to_string()},
              {"scope", to_string(c.scope)},
              {"payload", std::move(payload)}};
}

Json verdict_json(GroupElement sigma, const Verdict& v) {
  Json j{{"sigma", sigma}, {"outcome", to_string(v.outcome)}, {"method", v.method}};
  if (v.error_bound) j["error_bound"] = v.error_bound->get_str();
  if (v.certificate) j["certificate"] = certificate_json(*v.certificate);
  if (v.refutation) {
    Json r{{"kind", to_string(v.refutation->kind)}, {"detail", v.refutation->detail}};
    if (v.refutation->witness) r["witness"] = vector_json(*v.refutation->witness);
    if (v.refutation->witness_degree) r["witness_degree"] = *v.refutation->witness_degree;
    j["refutation"] = std::move(r);
  }
  return j;
}

void verdict_text(std::ostream& out, GroupElement sigma, const Verdict& v, bool inline_cert) {
  out << "sigma " << sigma << ": " << to_string(v.outcome) << " [" << v.method << "]\n";
  if (v.refutation) {
    out << "  refutation: " << to_string(v.refutation->kind) << ": " << v.refutation->detail << '\n';
    if (v.refutation->witness)
      out << "  witness: " << vector_text(*v.refutation->witness) << " in degree " << *v.refutation->witness_degree
          << '\n';
  }
  if (v.error_bound) out << "  error bound: " << v.error_bound->get_str() << '\n';
  if (v.certificate && inline_cert) {
    std::istringstream lines(serialize_certificate(*v.certificate));
    for (std::string l; std::getline(lines, l);) out << "  " << l << '\n';
  }
}

int verdict_exit(Outcome o) {
  switch (o) {
    case Outcome::yes: return exit_code::yes;
    case Outcome::no: return exit_code::no;
    case Outcome::inconclusive: return exit_code::inconclusive;
  }
  return exit_code::inconclusive;
}

class Runner {
 public:
  Runner(const Options& o, std::string command, std::ostream& out)
      : o_(o), command_(std::move(command)), out_(out), rng_(o.seed) {
    budget_.trials = o.trials;
  }

  int validate() {
    const GradedAlgebra a = load_unvalidated();
    const auto violations = validate_algebra(a);
    if (o_.json) {
      Json j = header(a);
      j["valid"] = violations.empty();
      j["violations"] = violations;
      finish(j);
    } else if (violations.empty()) {
      out_ << "valid: dim " << a.dim() << ", group " << a.group().spec() << ", field " << a.field().to_string()
           << "\ncomponent dims:";
      for (auto n : a.component_dims()) out_ << ' ' << n;
      out_ << '\n';
    } else {
      out_ << "invalid (" << violations.size() << " violation" << (violations.size() == 1 ? "" : "s") << ")\n";
      for (const auto& v : violations) out_ << "  " << v << '\n';
    }
    return violations.empty() ? exit_code::yes : exit_code::no;
  }

  int check() {
    const GradedAlgebra a = load();
    require_sigma(a);
    const Verdict v = is_sigma_graded_frobenius(a, o_.sigma, method(), budget_, rng_);
    return single(a, o_.sigma, v);
  }

  int scan() {
    no_cert_out();
    const GradedAlgebra a = load();
    const ScanResult s = scan_sigma(a, method(), budget_, rng_);
    bool inconclusive = false;
    for (const auto& v : s.verdicts) inconclusive = inconclusive || v.outcome == Outcome::inconclusive;
    if (o_.json) {
      Json j = header(a);
      j["verdicts"] = Json::array();
      for (GroupElement g = 0; g < s.verdicts.size(); ++g) j["verdicts"].push_back(verdict_json(g, s.verdicts[g]));
      j["yes_set"] = s.yes_set;
      j["inertia"] = s.inertia.elements;
      j["coset_checked"] = s.coset_checked;
      finish(j);
    } else {
      for (GroupElement g = 0; g < s.verdicts.size(); ++g) verdict_text(out_, g, s.verdicts[g], true);
      out_ << "yes-set: " << set_text(s.yes_set) << '\n'
           << "inertia group: " << set_text(s.inertia.elements) << '\n';
      if (s.coset_checked) out_ << "yes-set is empty or a left coset of the inertia group\n";
    }
    if (!s.yes_set.empty()) return exit_code::yes;
    return inconclusive ? exit_code::inconclusive : exit_code::no;
  }

  int symmetric() {
    if (o_.graded && o_.ungraded) throw UsageError("--graded and --ungraded are exclusive");
    const GradedAlgebra a = load();
    const Verdict v = o_.ungraded ? is_symmetric(a, budget_, rng_) : is_graded_symmetric(a, budget_, rng_);
    return single(a, a.group().neutral(), v);
  }

  int frobenius() {
    const GradedAlgebra a = load();
    const Verdict v = is_frobenius(a, budget_, rng_, method());
    return single(a, a.group().neutral(), v);
  }

  int faithful() {
    no_cert_out();
    const GradedAlgebra a = load();
    require_sigma(a);
    if (o_.side != "left" && o_.side != "right") throw UsageError("--side must be left or right");
    const auto r = o_.side == "left" ? left_sigma_faithful(a, o_.sigma) : right_sigma_faithful(a, o_.sigma);
    if (o_.json) {
      Json j = header(a);
      Json f{{"side", o_.side}, {"sigma", o_.sigma}, {"outcome", r.faithful ? "yes" : "no"}};
      if (r.witness) {
        f["witness"] = vector_json(*r.witness);
        f["witness_degree"] = *r.witness_degree;
      }
      j["faithful"] = std::move(f);
      finish(j);
    } else {
      out_ << o_.side << " " << o_.sigma << "-faithful: " << (r.faithful ? "yes" : "no") << '\n';
      if (r.witness)
        out_ << "  witness: " << vector_text(*r.witness) << " in degree " << *r.witness_degree << '\n';
    }
    return r.faithful ? exit_code::yes : exit_code::no;
  }

  int inertia() {
    no_cert_out();
    const GradedAlgebra a = load();
    const InertiaResult r = inertia_group(a, budget_, rng_);
    if (o_.json) {
      Json j = header(a);
      j["inertia"] = r.elements;
      j["uncertain"] = r.uncertain;
      finish(j);
    } else {
      out_ << "inertia group: " << set_text(r.elements) << '\n';
      if (!r.uncertain.empty()) out_ << "undecided: " << set_text(r.uncertain) << '\n';
    }
    return r.uncertain.empty() ? exit_code::yes : exit_code::inconclusive;
  }

  int verify() {
    no_cert_out();
    const GradedAlgebra a = load();
    const Certificate c = parse_certificate(read_file(o_.cert_file));
    const VerificationResult r = verify_certificate(a, c);
    if (o_.json) {
      Json j = header(a);
      j["verification"] = Json{{"accepted", r.accepted}, {"reason", r.reason}};
      finish(j);
    } else {
      out_ << (r.accepted ? "accept" : "reject: " + r.reason) << '\n';
    }
    return r.accepted ? exit_code::yes : exit_code::no;
  }

  int gen() {
    no_cert_out();
    ConstructionSpec spec{o_.gen_name, {}};
    for (const auto& kv : o_.gen_params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + kv + "'");
      spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    GradedAlgebra a;
    try {
      a = build_construction(spec);
    } catch (const AlgebraError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (o_.json) {
      Json j = header(a);
      j["name"] = spec.name;
      j["text"] = render_algebra(a);
      finish(j);
    } else {
      out_ << render_algebra(a);
    }
    return exit_code::yes;
  }

 private:
  GradedAlgebra load() { return parse_algebra_file(read_file(o_.file)); }
  GradedAlgebra load_unvalidated() { return parse_algebra_unvalidated(read_file(o_.file)); }

  Method method() {
    try {
      return parse_method(o_.method);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  void require_sigma(const GradedAlgebra& a) const {
    if (o_.sigma >= a.group().order())
      throw UsageError("--sigma " + std::to_string(o_.sigma) + " is not an element of a group of order " +
                       std::to_string(a.group().order()));
  }

  void no_cert_out() const {
    if (!o_.cert_out.empty()) throw UsageError("--cert-out applies to check, symmetric and frobenius");
  }

  static std::string set_text(const std::vector<GroupElement>& s) {
    std::string t = "{";
    for (std::size_t k = 0; k < s.size(); ++k) t += (k ? ", " : "") + std::to_string(s[k]);
    return t + "}";
  }

  Json header(const GradedAlgebra& a) const {
    return Json{{"command", command_},
                {"algebra", Json{{"dim", a.dim()}, {"group", a.group().spec()}, {"field", a.field().to_string()}}}};
  }

  void finish(Json& j) const {
    j["seed"] = o_.seed;
    j["budget"] = Json{{"trials", budget_.trials}, {"exhaustive_limit", budget_.exhaustive_limit}};
    out_ << j.dump(2) << '\n';
  }

  int single(const GradedAlgebra& a, GroupElement sigma, const Verdict& v) {
    const bool to_file = !o_.cert_out.empty();
    if (to_file && v.certificate) {
      std::ofstream f(o_.cert_out, std::ios::binary);
      f << serialize_certificate(*v.certificate);
      if (!f) throw InputError("cannot write " + o_.cert_out);
    }
    if (o_.json) {
      Json j = header(a);
      j["verdicts"] = Json::array({verdict_json(sigma, v)});
      if (to_file && v.certificate) j["certificate_file"] = o_.cert_out;
      finish(j);
    } else {
      verdict_text(out_, sigma, v, !to_file);
      if (to_file && v.certificate) out_ << "  certificate written to " << o_.cert_out << '\n';
    }
    return verdict_exit(v.outcome);
  }

  const Options& o_;
  std::string command_;
  std::ostream& out_;
  Rng rng_;
  SearchBudget budget_;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide graded Frobenius and graded symmetric properties of group-graded algebras", "gradfrob"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--budget-trials", o.trials, "random trials per search")->capture_default_str();
  app.add_flag("--json", o.json, "structured report");
  app.add_option("--cert-out", o.cert_out, "write the certificate here instead of inline");

  auto file_arg = [&](CLI::App* sub) { sub->add_option("FILE", o.file, "algebra file")->required(); };
  auto method_opt = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "iso, form, component or all")
        ->check(CLI::IsMember({"iso", "form", "component", "all"}))
        ->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "check the algebra axioms");
  file_arg(validate);
  auto* check = app.add_subcommand("check", "is the algebra sigma-graded Frobenius");
  file_arg(check);
  check->add_option("--sigma", o.sigma, "group element")->required();
  method_opt(check);
  auto* scan = app.add_subcommand("scan", "check every sigma");
  file_arg(scan);
  method_opt(scan);
  auto* symmetric = app.add_subcommand("symmetric", "graded symmetric (default) or symmetric");
  file_arg(symmetric);
  symmetric->add_flag("--graded", o.graded, "graded symmetric");
  symmetric->add_flag("--ungraded", o.ungraded, "symmetric with the grading forgotten");
  auto* frobenius = app.add_subcommand("frobenius", "Frobenius with the grading forgotten");
  file_arg(frobenius);
  method_opt(frobenius);
  auto* faithful = app.add_subcommand("faithful", "sigma-faithfulness");
  file_arg(faithful);
  faithful->add_option("--sigma", o.sigma, "group element")->required();
  faithful->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}))->capture_default_str();
  auto* inertia = app.add_subcommand("inertia", "inertia group");
  file_arg(inertia);
  auto* gen = app.add_subcommand("gen", "print a named construction");
  gen->add_option("NAME", o.gen_name, "construction name")->required();
  gen->add_option("PARAMS", o.gen_params, "key=value parameters");
  gen->footer([] {
    std::string s = "Constructions:";
    for (const auto& n : construction_names()) s += " " + n;
    return s;
  }());
  auto* verify = app.add_subcommand("verify", "re-check a certificate");
  file_arg(verify);
  verify->add_option("CERT", o.cert_file, "certificate file")->required();

  std::vector<const char*> argv{"gradfrob"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code::usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Runner run(o, command, out);
  try {
    if (command == "validate") return run.validate();
    if (command == "check") return run.check();
    if (command == "scan") return run.scan();
    if (command == "symmetric") return run.symmetric();
    if (command == "frobenius") return run.frobenius();
    if (command == "faithful") return run.faithful();
    if (command == "inertia") return run.inertia();
    if (command == "verify") return run.verify();
    if (command == "gen") return run.gen();
  } catch (const UsageError& e) {
    err << "gradfrob: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const InconsistencyError& e) {
    err << "gradfrob: internal inconsistency: " << e.what() << '\n';
    return exit_code::internal;
  } catch (const ParseError& e) {
    err << "gradfrob: " << o.file << ": " << e.what() << '\n';
    return exit_code::data;
  } catch (const CertificateParseError& e) {
    err << "gradfrob: " << o.cert_file << ": " << e.what() << '\n';
    return exit_code::data;
  } catch (const InputError& e) {
    err << "gradfrob: " << e.what() << '\n';
    return exit_code::data;
  } catch (const AlgebraError& e) {
    err << "gradfrob: invalid algebra: " << e.what() << '\n';
    return exit_code::data;
  }
  err << "gradfrob: unknown command\n";
  return exit_code::usage;
}

}  // namespace gradfrob
