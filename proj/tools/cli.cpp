#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "selftest.hpp"

#include "invform/construction.hpp"
#include "invform/decision.hpp"
#include "invform/isometry.hpp"
#include "invform/oracle.hpp"

namespace invform::cli {

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::VerificationFailed:
    case ErrorKind::UnverifiedForm:
    case ErrorKind::Internal:
      return kVerificationFailure;
    case ErrorKind::DegreeLimit:
    case ErrorKind::RationalsUnsupported:
    case ErrorKind::SmallCharacteristic:
    case ErrorKind::GroupTooLarge:
      return kCapabilityError;
    default:
      return kInputError;
  }
}

namespace {

struct Flags {
  std::string path;
  std::string symmetry;
  std::string setting;
  std::uint64_t seed = 0;
  unsigned trials = OracleOptions{}.trials;
  unsigned degree_limit = FactorOptions{}.degree_limit;
  unsigned jobs = 1;
  std::size_t count = SelftestOptions{}.count;
  bool construct = false;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int emit_error(std::ostream& out, const std::string& kind, const std::string& detail, int code) {
  emit(out, json{{"error", {{"kind", kind}, {"detail", detail}}}});
  return code;
}

Instance load(const Flags& f, std::istream& in) {
  std::string text;
  if (f.path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream file(f.path);
    if (!file) throw Error(ErrorKind::InvalidInput, "cannot open " + f.path);
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  return parse_instance(text);
}

FactorOptions factor_options(const Flags& f) {
  FactorOptions o;
  o.degree_limit = f.degree_limit;
  return o;
}

Symmetry symmetry_of(const Flags& f, const Instance& inst) {
  if (!f.symmetry.empty()) return parse_symmetry(f.symmetry);
  if (inst.symmetry) return *inst.symmetry;
  if (inst.gram && *inst.gram == inst.gram->transpose()) return Symmetry::Symmetric;
  if (inst.gram && *inst.gram == -inst.gram->transpose()) return Symmetry::SkewSymmetric;
  return Symmetry::Symmetric;
}

Setting setting_of(const Flags& f, const Instance& inst) {
  if (!f.setting.empty()) return parse_setting(f.setting);
  return inst.setting.value_or(Setting::Invariant);
}

const Matrix& require_gram(const Instance& inst) {
  if (!inst.gram) throw Error(ErrorKind::InvalidInput, "missing gram");
  return *inst.gram;
}

int cmd_decide(const Flags& f, std::istream& in, std::ostream& out, Setting setting) {
  const Instance inst = load(f, in);
  DecisionOptions o{factor_options(f), f.construct};
  const Symmetry sym = symmetry_of(f, inst);
  emit(out, decision_json(setting == Setting::Invariant ? decide_invariant_form(inst.matrix, sym, o)
                                                        : decide_infinitesimal_form(inst.matrix, sym, o)));
  return kComputed;
}

int cmd_construct(const Flags& f, std::istream& in, std::ostream& out) {
  const Instance inst = load(f, in);
  const Setting setting = setting_of(f, inst);
  const Symmetry sym = symmetry_of(f, inst);
  const DecisionOptions o{factor_options(f), true};
  const DecisionReport report = setting == Setting::Invariant ? decide_invariant_form(inst.matrix, sym, o)
                                                              : decide_infinitesimal_form(inst.matrix, sym, o);
  if (report.witness) {
    emit(out, certificate_json(*report.witness));
  } else {
    emit(out, decision_json(report));
  }
  return kComputed;
}

int cmd_verify(const Flags& f, std::istream& in, std::ostream& out) {
  const Instance inst = load(f, in);
  const Matrix& gram = require_gram(inst);
  const Symmetry sym = symmetry_of(f, inst);
  const Setting setting = setting_of(f, inst);
  const FormChecks c = verify_form(inst.matrix, gram, sym, setting);
  emit(out, json{{"symmetry", to_string(sym)},
                 {"setting", to_string(setting)},
                 {"valid", c.all()},
                 {"checks", {{"invariance", c.invariance}, {"symmetry", c.symmetry_ok}, {"nondegenerate", c.nondegenerate}}}});
  return c.all() ? kComputed : kVerificationFailure;
}

int cmd_real(const Flags& f, std::istream& in, std::ostream& out) {
  const Instance inst = load(f, in);
  emit(out, reality_json(decide_real(inst.matrix, factor_options(f))));
  return kComputed;
}

FormCertificate given_form(const Flags& f, const Instance& inst) {
  const Matrix& gram = require_gram(inst);
  return FormCertificate::create(inst.matrix, gram, symmetry_of(f, inst), Setting::Invariant);
}

int cmd_decompose(const Flags& f, std::istream& in, std::ostream& out) {
  const Instance inst = load(f, in);
  emit(out, decomposition_json(orthogonal_decomposition(inst.matrix, given_form(f, inst))));
  return kComputed;
}

int cmd_level(const Flags& f, std::istream& in, std::ostream& out) {
  const Instance inst = load(f, in);
  emit(out, level_json(level_analysis(inst.matrix, given_form(f, inst))));
  return kComputed;
}

int cmd_oracle(const Flags& f, std::istream& in, std::ostream& out) {
  const Instance inst = load(f, in);
  const InvariantFormSpace space = solve_form_space(inst.matrix, symmetry_of(f, inst), setting_of(f, inst));
  OracleOptions o;
  o.seed = f.seed;
  o.trials = f.trials;
  const auto found = find_nondegenerate(space, o);
  json j = form_space_json(space);
  j["exists"] = found.has_value();
  j["witness"] = found ? matrix_json(*found) : json(nullptr);
  emit(out, j);
  return kComputed;
}

int cmd_selftest(const Flags& f, std::ostream& out) {
  SelftestOptions o;
  o.seed = f.seed;
  o.count = f.count;
  o.jobs = f.jobs;
  o.trials = f.trials;
  const SelftestReport report = run_selftest(o);
  emit(out, selftest_json(report, o));
  return report.passed() ? kComputed : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in) {
  CLI::App app{"Invariant bilinear forms over Q and F_p", "invform"};
  app.require_subcommand(1);
  Flags f;
  f.seed = SelftestOptions{}.seed;

  auto instance = [&](CLI::App* sub) { sub->add_option("instance", f.path, "instance JSON file, - for stdin")->required(); };
  auto symmetry = [&](CLI::App* sub) {
    sub->add_option("--symmetry", f.symmetry, "symmetric or skew")->check(CLI::IsMember({"symmetric", "skew"}));
  };
  auto setting = [&](CLI::App* sub) {
    sub->add_option("--setting", f.setting, "invariant or infinitesimal")->check(CLI::IsMember({"invariant", "infinitesimal"}));
  };
  auto degree = [&](CLI::App* sub) { sub->add_option("--degree-limit", f.degree_limit, "largest factorable degree over Q"); };

  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int()> fn) { sub->callback([&action, fn] { action = fn; }); };

  auto* decide = app.add_subcommand("decide", "decide existence of an invariant form");
  instance(decide);
  symmetry(decide);
  degree(decide);
  decide->add_flag("--construct", f.construct, "attach a witness when one exists");
  bind(decide, [&] { return cmd_decide(f, in, out, Setting::Invariant); });

  auto* infinitesimal = app.add_subcommand("infinitesimal", "decide existence of an infinitesimally invariant form");
  instance(infinitesimal);
  symmetry(infinitesimal);
  degree(infinitesimal);
  infinitesimal->add_flag("--construct", f.construct, "attach a witness when one exists");
  bind(infinitesimal, [&] { return cmd_decide(f, in, out, Setting::Infinitesimal); });

  auto* construct = app.add_subcommand("construct", "construct a verified witness form");
  instance(construct);
  symmetry(construct);
  setting(construct);
  degree(construct);
  bind(construct, [&] { return cmd_construct(f, in, out); });

  auto* verify = app.add_subcommand("verify", "check a given gram matrix");
  instance(verify);
  symmetry(verify);
  setting(verify);
  bind(verify, [&] { return cmd_verify(f, in, out); });

  auto* real = app.add_subcommand("real", "decide whether T is conjugate to its inverse");
  instance(real);
  degree(real);
  bind(real, [&] { return cmd_real(f, in, out); });

  auto* decompose = app.add_subcommand("decompose", "orthogonal decomposition under a unipotent isometry");
  instance(decompose);
  symmetry(decompose);
  bind(decompose, [&] { return cmd_decompose(f, in, out); });

  auto* level = app.add_subcommand("level", "level and Witt index of a unipotent isometry");
  instance(level);
  symmetry(level);
  bind(level, [&] { return cmd_level(f, in, out); });

  auto* oracle = app.add_subcommand("oracle", "solve for the form space and search it");
  instance(oracle);
  symmetry(oracle);
  setting(oracle);
  oracle->add_option("--seed", f.seed, "search seed")->required();
  oracle->add_option("--trials", f.trials, "random combinations to try");
  bind(oracle, [&] { return cmd_oracle(f, in, out); });

  auto* selftest = app.add_subcommand("selftest", "run the acceptance corpus");
  selftest->add_option("--seed", f.seed, "corpus seed");
  selftest->add_option("--count", f.count, "instances per setting")->check(CLI::PositiveNumber);
  selftest->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
  selftest->add_option("--trials", f.trials, "oracle random combinations");
  bind(selftest, [&] { return cmd_selftest(f, out); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kComputed;
  } catch (const CLI::ParseError& e) {
    return emit_error(out, "ParseError", e.what(), kInputError);
  }

  try {
    return action ? action() : emit_error(out, "InvalidInput", "no subcommand", kInputError);
  } catch (const Error& e) {
    return emit_error(out, std::string(to_string(e.kind())), e.detail(), exit_code_for(e.kind()));
  } catch (const std::exception& e) {
    return emit_error(out, "Internal", e.what(), kVerificationFailure);
  }
}

}  // namespace invform::cli
