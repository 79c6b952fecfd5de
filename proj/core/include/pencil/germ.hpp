// Plane curve germs: squarefree factorizations with multiplicities, built
// from parsed expressions or from explicit factor lists.
#pragma once

#include <string>
#include <vector>

#include "pencil/poly.hpp"

namespace pencil {

struct GermFactor {
  Poly2 poly;  // squarefree, canonical, pairwise coprime with the others
  Int mult;
};

/// A local curve germ at the origin: product of squarefree pairwise-coprime
/// factors with multiplicities. Factors that do not pass through the origin
/// are excluded at construction and reported as warnings.
struct CurveGerm {
  std::vector<GermFactor> factors;
  std::vector<std::string> warnings;

  bool vanishes_at_origin() const { return !factors.empty(); }
  /// Product of the factors with multiplicities (the germ up to a unit).
  Poly2 product() const;
  /// Product of the distinct factors (the reduced germ).
  Poly2 reduced() const;
  std::string str() const;
};

/// Builds a germ from written (base, exponent) factors: each base is
/// squarefree-decomposed and the factor set is refined to pairwise coprime.
CurveGerm make_germ(const std::vector<std::pair<Poly2, Int>>& written,
                    bool exclude_non_vanishing = true);

/// Parses an expression in x, y (integer coefficients, +, -, *, ^,
/// parentheses) into a CurveGerm. Throws ParseError with position on bad
/// syntax and std::domain_error on the zero polynomial.
CurveGerm parse_germ(const std::string& text);

}  // namespace pencil
