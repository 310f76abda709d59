#pragma once

/*
 * Parametric families of A^4 + h B^4 = C^4 + h D^4.
 *
 * The master family comes from p (h m^2 + h p^2) = q (m^2 + q^2) with
 * p = m^2 + q^2:
 *     h = (m^2 + (m^2 + q^2)^2) / q
 *     A = m + m^2 + q^2, B = m - q, C = m - m^2 - q^2, D = m + q
 * and the registry holds its named specialisations. Every family is
 * checked on a grid large enough to certify the polynomial identity; a
 * family that fails is quarantined and kept visible in the catalog.
 */

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "quartic/quadruple.hpp"

namespace quartic::parametric {

struct FamilyTerms {
  Rational h, A, B, C, D;
};

// A^4 + h B^4 - C^4 - h D^4
Rational residual(const FamilyTerms& t);

enum class FamilyStatus {
  Verified,
  Quarantined,            // formulas as stated fail the identity
  ConjecturalCorrection,  // minimal edit of a quarantined family
};

std::string_view status_tag(FamilyStatus s);

struct FamilyDef {
  std::string name;
  std::vector<std::string> params;
  int h_degree;  // degree of h in the family's main parameter
  std::function<FamilyTerms(std::span<const Rational>)> eval;
  // Reason the parameters are outside the family's domain, if they are.
  std::function<std::optional<std::string>(std::span<const Rational>)> excluded;
  // Per-parameter degree bound of the residual (times any denominator).
  std::vector<int> residual_degree;
  std::string note;
  std::string erratum;  // set for quarantined / corrected entries
  FamilyStatus status = FamilyStatus::Verified;
};

// Registry in catalog order; statuses already reflect certification.
const std::vector<FamilyDef>& registry();
// Throws InvalidInput for an unknown name.
const FamilyDef& find_family(std::string_view name);

struct FamilyValue {
  FamilyTerms terms;
  std::optional<Quadruple> quadruple;  // nullopt when the point is trivial
};

// Raw evaluation with arity/domain checks but no identity requirement.
FamilyTerms evaluate_terms(const FamilyDef& def, std::span<const Rational> params);

// Throws InvalidInput for unknown names, wrong arity, excluded parameters
// and quarantined families; VerificationFailure if the identity fails.
FamilyValue eval_family(std::string_view name, std::span<const Rational> params);

FamilyValue master_family(const Rational& m, const Rational& q);

// Grid certification: evaluates the residual on a product of
// residual_degree[i] + 1 distinct nonzero values per parameter, which
// proves a polynomial identity. Returns the first failing point, if any.
struct Certificate {
  bool identity = false;
  std::size_t points = 0;
  std::vector<Rational> counterexample;
};
Certificate certify(const FamilyDef& def);

struct SampleReport {
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;  // excluded draws
  std::vector<Rational> first_failure;
};
// Random in-domain rational parameters with numerator/denominator in
// [-height, height] / [1, height].
SampleReport sample_identity(const FamilyDef& def, std::size_t samples, std::mt19937_64& rng,
                             long height = 50);

struct CatalogEntry {
  std::string name;
  std::size_t arity;
  int h_degree;
  FamilyStatus status;
  std::string note;
  std::string erratum;
};
std::vector<CatalogEntry> list_families();

}  // namespace quartic::parametric
