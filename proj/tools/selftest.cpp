#include "selftest.hpp"

#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "invform/construction.hpp"
#include "invform/decision.hpp"
#include "invform/error.hpp"
#include "invform/isometry.hpp"

namespace invform::cli {

namespace {

constexpr Symmetry kSymmetries[2] = {Symmetry::Symmetric, Symmetry::SkewSymmetric};
constexpr std::size_t kMaxListed = 10;

std::string field_label(const Field& f) { return f.is_rationals() ? "Q" : "F" + std::to_string(f.modulus()); }

bool converter_eligible(const Matrix& m, Setting setting) {
  if (setting == Setting::Infinitesimal) return !det(m).is_zero();
  return !det(m - inverse(m)).is_zero();
}

InstanceRecord evaluate(const CorpusInstance& inst, const SelftestOptions& options) {
  InstanceRecord r;
  r.index = inst.index;
  r.setting = inst.setting;
  r.field = field_label(inst.matrix.field());
  r.recipe = inst.recipe;
  r.n = inst.matrix.rows();
  const Matrix& m = inst.matrix;
  try {
    for (std::size_t s = 0; s < 2; ++s) {
      const Symmetry sym = kSymmetries[s];
      const DecisionReport report =
          inst.setting == Setting::Invariant ? decide_invariant_form(m, sym) : decide_infinitesimal_form(m, sym);
      r.decision[s] = report.exists;

      const InvariantFormSpace space = solve_form_space(m, sym, inst.setting);
      r.space_dim[s] = space.dimension();
      OracleOptions oo;
      oo.seed = options.seed ^ (0x9e3779b97f4a7c15ULL * (2 * inst.index + s + 1));
      oo.trials = options.trials;
      const auto found = find_nondegenerate(space, oo);
      r.oracle[s] = found.has_value();
      if (found) (void)FormCertificate::create(m, *found, sym, inst.setting);

      if (!report.exists) continue;
      try {
        const FormCertificate cert = inst.setting == Setting::Invariant ? construct_invariant_form(m, sym)
                                                                        : construct_infinitesimal_form(m, sym);
        r.witness[s] = verify_form(m, cert.gram(), sym, inst.setting).all() ? 1 : 0;
        std::set<std::string> routes;
        for (const auto& b : cert.provenance()) routes.insert(b.route);
        for (const auto& route : routes) r.routes[s] += (r.routes[s].empty() ? "" : ",") + route;
        if (converter_eligible(m, inst.setting)) {
          r.converter[s] = 0;
          const auto dir = sym == Symmetry::Symmetric ? ConverterDirection::SymmetricToSkew
                                                      : ConverterDirection::SkewToSymmetric;
          const FormCertificate out = skew_symmetric_converter(cert, dir);
          if (out.symmetry() == opposite(sym) && verify_form(m, out.gram(), out.symmetry(), inst.setting).all()) {
            r.converter[s] = 1;
          }
        }
      } catch (const Error& e) {
        if (r.witness[s] < 0) r.witness[s] = 0;
        r.error = e.what();
      }
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

json record_brief(const InstanceRecord& r) {
  return json{{"index", r.index}, {"setting", to_string(r.setting)}, {"field", r.field}, {"recipe", r.recipe}};
}

CriterionResult make(int id, std::string name) {
  CriterionResult c;
  c.id = id;
  c.name = std::move(name);
  return c;
}

Matrix upper_jordan(const Field& f, std::size_t k, long lambda) {
  Matrix j = Matrix::identity(f, k) * Scalar(f, lambda);
  for (std::size_t i = 0; i + 1 < k; ++i) j(i, i + 1) = Scalar::one(f);
  return j;
}

// x^m q(x + 1/x) expanded as sum q_i (x^2 + 1)^i x^(m - i).
Poly expand_substitution(const Poly& q, int m) {
  const Field& f = q.field();
  const Poly x2p1 = Poly::from_ints(f, {1, 0, 1});
  Poly total = Poly::constant(Scalar::zero(f));
  for (int i = 0; i <= q.degree(); ++i) {
    total = total + x2p1.pow(static_cast<unsigned>(i)) * Poly::monomial(q.coeff(static_cast<std::size_t>(i)), static_cast<std::size_t>(m - i));
  }
  return total;
}

}  // namespace

std::vector<InstanceRecord> run_corpus(const SelftestOptions& options) {
  CorpusOptions co;
  co.seed = options.seed;
  co.count = options.count;
  const std::vector<CorpusInstance> corpus = generate_corpus(co);
  std::vector<InstanceRecord> records(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      records[i] = evaluate(corpus[i], options);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return records;
}

CriterionResult criterion_oracle_agreement(const std::vector<InstanceRecord>& records) {
  CriterionResult c = make(1, "oracle agreement");
  std::size_t checks = 0;
  std::size_t yes = 0;
  std::size_t agree = 0;
  json disagreements = json::array();
  for (const auto& r : records) {
    for (std::size_t s = 0; s < 2; ++s) {
      ++checks;
      yes += r.decision[s] ? 1 : 0;
      const bool ok = r.error.empty() && r.decision[s] == r.oracle[s];
      agree += ok ? 1 : 0;
      if (!ok && disagreements.size() < kMaxListed) {
        json d = record_brief(r);
        d["symmetry"] = to_string(kSymmetries[s]);
        d["decision"] = r.decision[s];
        d["oracle"] = r.oracle[s];
        d["error"] = r.error;
        disagreements.push_back(std::move(d));
      }
    }
  }
  c.passed = !records.empty() && agree == checks;
  c.summary = std::to_string(agree) + "/" + std::to_string(checks) + " verdicts agree (" + std::to_string(records.size()) +
              " instances, " + std::to_string(yes) + " yes)";
  c.details = {{"instances", records.size()}, {"checks", checks}, {"yes", yes}, {"agree", agree},
               {"disagreements", disagreements}};
  return c;
}

CriterionResult criterion_witness_completeness(const std::vector<InstanceRecord>& records) {
  CriterionResult c = make(2, "witness completeness");
  std::size_t yes = 0;
  std::size_t verified = 0;
  std::map<std::string, std::size_t> routes;
  json failures = json::array();
  for (const auto& r : records) {
    for (std::size_t s = 0; s < 2; ++s) {
      if (!r.decision[s]) continue;
      ++yes;
      if (r.witness[s] == 1) {
        ++verified;
        ++routes[r.routes[s]];
      } else if (failures.size() < kMaxListed) {
        json d = record_brief(r);
        d["symmetry"] = to_string(kSymmetries[s]);
        d["error"] = r.error;
        failures.push_back(std::move(d));
      }
    }
  }
  json route_counts = json::object();
  for (const auto& [k, v] : routes) route_counts[k.empty() ? "(none)" : k] = v;
  c.passed = yes > 0 && verified == yes;
  c.summary = std::to_string(verified) + "/" + std::to_string(yes) + " yes instances carry a verified certificate";
  c.details = {{"yes", yes}, {"verified", verified}, {"routes", route_counts}, {"failures", failures}};
  return c;
}

CriterionResult criterion_converter(const std::vector<InstanceRecord>& records) {
  CriterionResult c = make(8, "symmetric/skew converter");
  std::size_t eligible = 0;
  std::size_t verified = 0;
  std::size_t per_direction[2] = {0, 0};
  json failures = json::array();
  for (const auto& r : records) {
    for (std::size_t s = 0; s < 2; ++s) {
      if (r.converter[s] < 0) continue;
      ++eligible;
      if (r.converter[s] == 1) {
        ++verified;
        ++per_direction[s];
      } else if (failures.size() < kMaxListed) {
        failures.push_back(record_brief(r));
      }
    }
  }
  c.passed = per_direction[0] > 0 && per_direction[1] > 0 && verified == eligible;
  c.summary = std::to_string(verified) + "/" + std::to_string(eligible) + " eligible conversions verify";
  c.details = {{"eligible", eligible},
               {"verified", verified},
               {"symmetric_to_skew", per_direction[0]},
               {"skew_to_symmetric", per_direction[1]},
               {"failures", failures}};
  return c;
}

CriterionResult criterion_parity_cases() {
  CriterionResult c = make(3, "parity cases");
  json cases = json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok) {
    cases.push_back({{"case", name}, {"ok", ok}});
    all = all && ok;
  };
  for (const Field& f : {Field::rationals(), Field::prime(101)}) {
    const std::string tag = " over " + field_label(f);
    try {
      const Matrix j2 = upper_jordan(f, 2, 1);
      record("J2(1) symmetric no" + tag, !decide_invariant_form(j2, Symmetry::Symmetric).exists);
      record("J2(1) skew yes" + tag, decide_invariant_form(j2, Symmetry::SkewSymmetric).exists);

      const Matrix j3 = upper_jordan(f, 3, 1);
      const auto r3 = decide_invariant_form(j3, Symmetry::Symmetric, {.construct = true});
      record("J3(1) symmetric yes with verified Gram" + tag,
             r3.exists && r3.witness && verify_form(j3, r3.witness->gram(), Symmetry::Symmetric, Setting::Invariant).all());

      const Matrix pair = block_diagonal(f, {j2, j2});
      const auto rp = decide_invariant_form(pair, Symmetry::Symmetric, {.construct = true});
      bool standard = rp.exists && rp.witness;
      if (standard) {
        const auto& prov = rp.witness->provenance();
        standard = prov.size() == 1 && prov[0].route == "hyperbolic-pairing" &&
                   verify_form(pair, rp.witness->gram(), Symmetry::Symmetric, Setting::Invariant).all();
      }
      record("J2(1)+J2(1) symmetric yes via standard pair" + tag, standard);

      const Matrix jm2 = upper_jordan(f, 2, -1);
      record("J2(-1) symmetric no" + tag, !decide_invariant_form(jm2, Symmetry::Symmetric).exists);
      const auto rm = decide_invariant_form(jm2, Symmetry::SkewSymmetric, {.construct = true});
      record("J2(-1) skew yes" + tag, rm.exists && rm.witness.has_value());
    } catch (const Error& e) {
      record(std::string("exception: ") + e.what() + tag, false);
    }
  }
  c.passed = all;
  std::size_t ok = 0;
  for (const auto& x : cases) ok += x["ok"].get<bool>() ? 1 : 0;
  c.summary = std::to_string(ok) + "/" + std::to_string(cases.size()) + " pinned cases hold";
  c.details = {{"cases", cases}};
  return c;
}

CriterionResult criterion_dual_algebra(std::uint64_t seed) {
  CriterionResult c = make(4, "dual machinery");
  std::size_t involutions = 0;
  std::size_t involution_ok = 0;
  std::size_t roundtrips = 0;
  std::size_t roundtrip_ok = 0;
  json failures = json::array();
  for (const Field& f : {Field::rationals(), Field::prime(101)}) {
    for (const Poly& p : random_monic_corpus(f, seed, 200)) {
      ++involutions;
      const bool ok = dual_poly(dual_poly(p)) == p && additive_dual_poly(additive_dual_poly(p)) == p;
      involution_ok += ok ? 1 : 0;
      if (!ok && failures.size() < kMaxListed) failures.push_back(p.to_string());
    }
    for (const Poly& p : self_dual_corpus(f, seed + 1, 10, 8)) {
      ++roundtrips;
      bool ok = is_self_dual(p);
      if (ok) {
        const Poly q = substitute_y_eq_x_plus_inv(p);
        ok = 2 * q.degree() == p.degree() && expand_substitution(q, p.degree() / 2) == p;
      }
      roundtrip_ok += ok ? 1 : 0;
      if (!ok && failures.size() < kMaxListed) failures.push_back(p.to_string());
    }
  }
  c.passed = involution_ok == involutions && roundtrip_ok == roundtrips;
  c.summary = std::to_string(involution_ok) + "/" + std::to_string(involutions) + " involutions, " +
              std::to_string(roundtrip_ok) + "/" + std::to_string(roundtrips) + " substitution round trips";
  c.details = {{"involutions", involutions},
               {"involutions_ok", involution_ok},
               {"round_trips", roundtrips},
               {"round_trips_ok", roundtrip_ok},
               {"failures", failures}};
  return c;
}

CriterionResult criterion_level_bounds(std::uint64_t seed) {
  CriterionResult c = make(5, "level bounds");
  std::size_t checked = 0;
  std::size_t satisfied = 0;
  std::map<std::string, std::size_t> cases;
  json failures = json::array();
  for (std::uint64_t p : {101ull, 257ull}) {
    const Field f = Field::prime(p);
    for (const auto& inst : unipotent_corpus(f, seed, 6)) {
      const Matrix& t = inst.matrix;
      if (!(t - Matrix::identity(f, t.rows())).pow(t.rows()).is_zero()) continue;
      for (Symmetry sym : kSymmetries) {
        try {
          if (!decide_invariant_form(t, sym).exists) continue;
          ++checked;
          const LevelReport r = level_analysis(t, construct_invariant_form(t, sym));
          ++cases[std::string(to_string(r.bound_case))];
          if (r.bound_satisfied) {
            ++satisfied;
          } else if (failures.size() < kMaxListed) {
            failures.push_back({{"recipe", inst.recipe}, {"symmetry", to_string(sym)}, {"report", level_json(r)}});
          }
        } catch (const Error& e) {
          if (failures.size() < kMaxListed) failures.push_back({{"recipe", inst.recipe}, {"error", e.what()}});
        }
      }
    }
  }
  bool terminal = false;
  json terminal_report;
  try {
    const Field f = Field::prime(101);
    const Matrix j3 = upper_jordan(f, 3, 1);
    const LevelReport r = level_analysis(j3, construct_invariant_form(j3, Symmetry::Symmetric));
    terminal_report = level_json(r);
    terminal = r.level == 3 && r.witt_index == 1 && r.bound_case == BoundCase::GeneralOdd && r.bound_satisfied;
  } catch (const Error& e) {
    terminal_report = e.what();
  }
  json case_counts = json::object();
  for (const auto& [k, v] : cases) case_counts[k] = v;
  c.passed = checked > 0 && satisfied == checked && terminal;
  c.summary = std::to_string(satisfied) + "/" + std::to_string(checked) + " unipotent isometries within bounds; k = 2l+1 at J3(1): " +
              (terminal ? "yes" : "no");
  c.details = {{"checked", checked},
               {"satisfied", satisfied},
               {"cases", case_counts},
               {"terminal_case", terminal_report},
               {"failures", failures}};
  return c;
}

CriterionResult criterion_orthogonal_decomposition(std::uint64_t seed) {
  CriterionResult c = make(6, "orthogonal decomposition");
  std::size_t checked = 0;
  std::size_t ok_count = 0;
  std::map<std::string, std::size_t> kinds;
  json failures = json::array();
  const Field f = Field::prime(101);
  for (const auto& inst : unipotent_corpus(f, seed, 6)) {
    const Matrix& t = inst.matrix;
    for (Symmetry sym : kSymmetries) {
      std::string problem;
      try {
        if (!decide_invariant_form(t, sym).exists) continue;
        ++checked;
        const FormCertificate cert = construct_invariant_form(t, sym);
        const Matrix& b = cert.gram();
        const OrthogonalSummandReport report = orthogonal_decomposition(t, cert);
        std::size_t total = 0;
        for (std::size_t i = 0; i < report.summands.size() && problem.empty(); ++i) {
          const auto& s = report.summands[i];
          ++kinds[std::string(to_string(s.kind))];
          total += s.basis.cols();
          (void)restrict_to(t, s.basis);
          if (det(s.basis.transpose() * b * s.basis).is_zero()) problem = "degenerate summand";
          if (sym == Symmetry::Symmetric && s.kind == SummandKind::EvenIndecomposable) problem = "even summand for symmetric form";
          if (sym == Symmetry::SkewSymmetric && s.kind == SummandKind::OddIndecomposable) problem = "odd summand for skew form";
          if (s.kind == SummandKind::StandardPair) {
            const Matrix h1 = s.basis.block(0, 0, s.basis.rows(), s.half);
            const Matrix h2 = s.basis.block(0, s.half, s.basis.rows(), s.basis.cols() - s.half);
            if (h1.cols() != h2.cols()) problem = "unequal halves";
            if (!(h1.transpose() * b * h1).is_zero() || !(h2.transpose() * b * h2).is_zero()) problem = "half not isotropic";
            (void)restrict_to(t, h1);
            (void)restrict_to(t, h2);
          }
          for (std::size_t j = i + 1; j < report.summands.size(); ++j) {
            if (!(s.basis.transpose() * b * report.summands[j].basis).is_zero()) problem = "summands not orthogonal";
          }
        }
        if (problem.empty() && total != t.rows()) problem = "summands do not cover V";
      } catch (const Error& e) {
        problem = e.what();
      }
      if (problem.empty()) {
        ++ok_count;
      } else if (failures.size() < kMaxListed) {
        failures.push_back({{"recipe", inst.recipe}, {"symmetry", to_string(sym)}, {"problem", problem}});
      }
    }
  }
  json kind_counts = json::object();
  for (const auto& [k, v] : kinds) kind_counts[k] = v;
  c.passed = checked > 0 && ok_count == checked;
  c.summary = std::to_string(ok_count) + "/" + std::to_string(checked) + " decompositions verified";
  c.details = {{"checked", checked}, {"verified", ok_count}, {"kinds", kind_counts}, {"failures", failures}};
  return c;
}

CriterionResult criterion_reality(std::uint64_t seed) {
  CriterionResult c = make(7, "reality");
  std::size_t group_checked = 0;
  std::size_t group_agree = 0;
  json failures = json::array();
  for (std::uint64_t p : {2ull, 3ull}) {
    const Field f = Field::prime(p);
    for (std::uint64_t code = 0; code < p * p * p * p; ++code) {
      Matrix t(f, 2, 2);
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < 4; ++i, rest /= p) t(i / 2, i % 2) = Scalar(f, static_cast<long>(rest % p));
      if (det(t).is_zero()) continue;
      ++group_checked;
      const bool ok = brute_force_reality(t) == decide_real(t).is_real;
      group_agree += ok ? 1 : 0;
      if (!ok && failures.size() < kMaxListed) failures.push_back(t.to_string());
    }
  }
  std::mt19937_64 rng(seed);
  const Field q = Field::rationals();
  std::size_t conj_checked = 0;
  std::size_t conj_agree = 0;
  std::size_t real_count = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + draw_below(rng, 4);
    Matrix t = random_invertible_matrix(q, n, rng);
    if (i % 2 == 0) {
      // Half the samples are real by construction: A (+) A^-1, padded with 1.
      const Matrix a = random_invertible_matrix(q, n / 2 == 0 ? 1 : n / 2, rng);
      std::vector<Matrix> blocks;
      if (n >= 2) blocks = {a, inverse(a)};
      if (n % 2 == 1) blocks.push_back(Matrix::identity(q, 1));
      t = block_diagonal(q, blocks);
    }
    const Matrix g = random_invertible_matrix(q, n, rng);
    const bool a = decide_real(t).is_real;
    const bool b = decide_real(g * t * inverse(g)).is_real;
    ++conj_checked;
    real_count += a ? 1 : 0;
    conj_agree += a == b ? 1 : 0;
    if (a != b && failures.size() < kMaxListed) failures.push_back(t.to_string());
  }
  c.passed = group_checked == 6 + 48 && group_agree == group_checked && conj_agree == conj_checked;
  c.summary = std::to_string(group_agree) + "/" + std::to_string(group_checked) + " of GL(2,2) and GL(2,3), " +
              std::to_string(conj_agree) + "/" + std::to_string(conj_checked) + " conjugations over Q";
  c.details = {{"group_elements", group_checked},
               {"group_agree", group_agree},
               {"conjugations", conj_checked},
               {"conjugations_agree", conj_agree},
               {"real_samples", real_count},
               {"failures", failures}};
  return c;
}

bool SelftestReport::passed() const {
  for (const auto& c : criteria) {
    if (!c.passed) return false;
  }
  return true;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  report.records = run_corpus(options);
  report.criteria.push_back(criterion_oracle_agreement(report.records));
  report.criteria.push_back(criterion_witness_completeness(report.records));
  report.criteria.push_back(criterion_parity_cases());
  report.criteria.push_back(criterion_dual_algebra(options.seed));
  report.criteria.push_back(criterion_level_bounds(options.seed));
  report.criteria.push_back(criterion_orthogonal_decomposition(options.seed));
  report.criteria.push_back(criterion_reality(options.seed));
  report.criteria.push_back(criterion_converter(report.records));
  return report;
}

json selftest_json(const SelftestReport& report, const SelftestOptions& options) {
  json criteria = json::array();
  for (const auto& c : report.criteria) {
    criteria.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"summary", c.summary}, {"details", c.details}});
  }
  json instances = json::array();
  for (const auto& r : report.records) {
    json row = record_brief(r);
    row["n"] = r.n;
    for (std::size_t s = 0; s < 2; ++s) {
      json v{{"exists", r.decision[s]}, {"oracle", r.oracle[s]}, {"space_dim", r.space_dim[s]}};
      if (r.witness[s] >= 0) v["witness"] = r.witness[s] == 1;
      if (!r.routes[s].empty()) v["routes"] = r.routes[s];
      if (r.converter[s] >= 0) v["converter"] = r.converter[s] == 1;
      row[std::string(to_string(kSymmetries[s]))] = std::move(v);
    }
    if (!r.error.empty()) row["error"] = r.error;
    instances.push_back(std::move(row));
  }
  return json{{"seed", options.seed},
              {"count", options.count},
              {"trials", options.trials},
              {"passed", report.passed()},
              {"criteria", criteria},
              {"instances", instances}};
}

}  // namespace invform::cli
