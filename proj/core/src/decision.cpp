#include "invform/decision.hpp"

#include <algorithm>

#include "invform/construction.hpp"
#include "invform/error.hpp"

namespace invform {

namespace {

std::string describe(const ElementaryDivisor& d) {
  std::string s = "(" + d.p.to_string() + ")";
  if (d.k > 1) s += "^" + std::to_string(d.k);
  return s + " with multiplicity " + std::to_string(d.multiplicity);
}

const ElementaryDivisor* find_divisor(const std::vector<ElementaryDivisor>& list, const Poly& p, unsigned k) {
  for (const auto& d : list) {
    if (d.k == k && d.p == p) return &d;
  }
  return nullptr;
}

void check_square(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "expected a square matrix");
}

void check_odd_dimension(DecisionReport& report, std::size_t n) {
  if (report.symmetry != Symmetry::SkewSymmetric || n % 2 == 0) return;
  for (const auto& d : report.divisors) {
    if ((d.dimension() * d.multiplicity) % 2 == 1) {
      report.obstructions.push_back({ObstructionKind::OddDimensionSkew, d,
                                     "skew forms need even dimension, n = " + std::to_string(n) + "; " + describe(d) +
                                         " contributes an odd dimension"});
      return;
    }
  }
}

// Parity rule for the special eigenvalue blocks: symmetric needs k odd or
// even multiplicity, skew needs k even or even multiplicity.
bool parity_ok(const ElementaryDivisor& d, Symmetry symmetry) {
  const bool k_odd = d.k % 2 == 1;
  const bool right_parity = symmetry == Symmetry::Symmetric ? k_odd : !k_odd;
  return right_parity || d.multiplicity % 2 == 0;
}

}  // namespace

std::string_view to_string(ObstructionKind kind) noexcept {
  switch (kind) {
    case ObstructionKind::UnpairedDual: return "UnpairedDual";
    case ObstructionKind::BadUnipotentParity: return "BadUnipotentParity";
    case ObstructionKind::OddDimensionSkew: return "OddDimensionSkew";
    case ObstructionKind::UnpairedAdditiveDual: return "UnpairedAdditiveDual";
    case ObstructionKind::BadNilpotentParity: return "BadNilpotentParity";
  }
  return "?";
}

DecisionReport decide_invariant_form(const Matrix& t, Symmetry symmetry, const DecisionOptions& options) {
  check_square(t);
  const Field& field = t.field();
  const std::size_t n = t.rows();
  require_large_characteristic(field, n, "decide_invariant_form");
  if (det(t).is_zero()) throw Error(ErrorKind::Singular, "T is not invertible");

  DecisionReport report;
  report.symmetry = symmetry;
  report.setting = Setting::Invariant;
  report.divisors = elementary_divisors(t, options.factor);

  const Poly x_minus_1 = Poly::linear(Scalar::one(field));
  const Poly x_plus_1 = Poly::linear(-Scalar::one(field));
  for (const auto& d : report.divisors) {
    if (d.p == x_minus_1 || d.p == x_plus_1) {
      if (!parity_ok(d, symmetry)) {
        report.obstructions.push_back(
            {ObstructionKind::BadUnipotentParity, d,
             describe(d) + ": " + (symmetry == Symmetry::Symmetric ? "even" : "odd") +
                 " exponent requires even multiplicity for a " + std::string(to_string(symmetry)) + " form"});
      }
      continue;
    }
    const Poly dual = dual_poly(d.p);
    if (dual == d.p) continue;
    const ElementaryDivisor* partner = find_divisor(report.divisors, dual, d.k);
    if (partner == nullptr || partner->multiplicity != d.multiplicity) {
      report.obstructions.push_back(
          {ObstructionKind::UnpairedDual, d,
           describe(d) + ": dual (" + dual.to_string() + ")" + (d.k > 1 ? "^" + std::to_string(d.k) : "") +
               (partner == nullptr ? " is not an elementary divisor"
                                   : " has multiplicity " + std::to_string(partner->multiplicity))});
    }
  }
  check_odd_dimension(report, n);
  report.exists = report.obstructions.empty();
  if (report.exists && options.construct) report.witness = construct_invariant_form(t, symmetry, options.factor);
  return report;
}

DecisionReport decide_infinitesimal_form(const Matrix& s, Symmetry symmetry, const DecisionOptions& options) {
  check_square(s);
  const Field& field = s.field();
  const std::size_t n = s.rows();
  require_large_characteristic(field, n, "decide_infinitesimal_form");

  DecisionReport report;
  report.symmetry = symmetry;
  report.setting = Setting::Infinitesimal;
  report.divisors = elementary_divisors(s, options.factor);

  const Poly x = Poly::x(field);
  for (const auto& d : report.divisors) {
    if (d.p == x) {
      if (!parity_ok(d, symmetry)) {
        report.obstructions.push_back(
            {ObstructionKind::BadNilpotentParity, d,
             describe(d) + ": " + (symmetry == Symmetry::Symmetric ? "even" : "odd") +
                 " exponent requires even multiplicity for a " + std::string(to_string(symmetry)) + " form"});
      }
      continue;
    }
    const Poly dual = additive_dual_poly(d.p);
    if (dual == d.p) continue;
    const ElementaryDivisor* partner = find_divisor(report.divisors, dual, d.k);
    if (partner == nullptr || partner->multiplicity != d.multiplicity) {
      report.obstructions.push_back(
          {ObstructionKind::UnpairedAdditiveDual, d,
           describe(d) + ": additive dual (" + dual.to_string() + ")" + (d.k > 1 ? "^" + std::to_string(d.k) : "") +
               (partner == nullptr ? " is not an elementary divisor"
                                   : " has multiplicity " + std::to_string(partner->multiplicity))});
    }
  }
  check_odd_dimension(report, n);
  report.exists = report.obstructions.empty();
  if (report.exists && options.construct) report.witness = construct_infinitesimal_form(s, symmetry, options.factor);
  return report;
}

RealityReport decide_real(const Matrix& t, const FactorOptions& options) {
  check_square(t);
  if (det(t).is_zero()) throw Error(ErrorKind::Singular, "T is not invertible");
  const std::vector<ElementaryDivisor> mine = elementary_divisors(t, options);
  const std::vector<ElementaryDivisor> theirs = elementary_divisors(inverse(t), options);

  RealityReport report;
  for (const auto& d : mine) {
    const ElementaryDivisor* other = find_divisor(theirs, d.p, d.k);
    if (other == nullptr) {
      report.mismatches.push_back({d, std::nullopt});
    } else if (other->multiplicity != d.multiplicity) {
      report.mismatches.push_back({d, *other});
    }
  }
  for (const auto& d : theirs) {
    if (find_divisor(mine, d.p, d.k) == nullptr) report.mismatches.push_back({d, std::nullopt});
  }
  report.is_real = report.mismatches.empty();

  const Field& field = t.field();
  const std::size_t n = t.rows();
  if (report.is_real && char_exceeds(field, n) && !(field.is_prime_field() && field.modulus() == 2)) {
    const Poly x_minus_1 = Poly::linear(Scalar::one(field));
    const Poly x_plus_1 = Poly::linear(-Scalar::one(field));
    RealitySplitting split{Matrix(field, n, 0), Matrix(field, n, 0)};
    for (const auto& s : indecomposable_decomposition(t, options)) {
      const bool special = s.divisor.p == x_minus_1 || s.divisor.p == x_plus_1;
      if (special && s.divisor.k % 2 == 0) {
        split.basis2 = hconcat(split.basis2, s.basis);
      } else {
        split.basis1 = hconcat(split.basis1, s.basis);
      }
    }
    report.splitting = std::move(split);
  }
  return report;
}

}  // namespace invform
