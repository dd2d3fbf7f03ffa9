#ifndef FLAGPOLY_CHARFORMULA_HPP
#define FLAGPOLY_CHARFORMULA_HPP

#include <string>
#include <vector>

#include "flagpoly/rational.hpp"
#include "flagpoly/rootsys.hpp"

namespace flagpoly {

// Exact univariate polynomial with rational coefficients, coeffs[k] the
// coefficient of n^k. For Ehrhart polynomials of Delta(lambda) the degree
// is N_P and the leading coefficient positive.
struct EhrhartPolynomial {
  RatVec coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rat eval(const Int& n) const;
  bool operator==(const EhrhartPolynomial& o) const { return coeffs == o.coeffs; }
  std::string to_display_string() const;  // "8n^3+12n^2+6n+1"
};

struct TheoremReport {
  Weight lam;
  bool is_anticanonical = false;
  Int interior_count_at_1 = 0;
  bool hibi_holds = false;
  bool consistent = false;  // is_anticanonical <=> interior_count_at_1 == 1
};

// dim H^0(G/P, L_lambda) = prod_{beta in Phi_P^+} <lambda+rho,beta^vee>/<rho,beta^vee>.
// Requires lambda in Lambda_P^+.
Int kostant_dimension(const RootSystem& rs, const ParabolicData& par,
                      const Weight& lam);

// The product above with lambda -> n*lambda, expanded exactly in n.
EhrhartPolynomial ehrhart_polynomial(const RootSystem& rs,
                                     const ParabolicData& par,
                                     const Weight& lam);

// (-1)^{N_P} L(-n) for n >= 1; asserted a non-negative integer.
Int interior_count(const RootSystem& rs, const ParabolicData& par,
                   const Weight& lam, long n);

// L(n) == (-1)^{N_P} L(-n-1) as polynomials (coefficient comparison).
bool hibi_identity_holds(const RootSystem& rs, const ParabolicData& par,
                         const Weight& lam);

// Main-Theorem classification of a P-regular weight.
TheoremReport classify_weight(const RootSystem& rs, const ParabolicData& par,
                              const Weight& lam);

// Helpers shared with other modules.
Int weyl_dimension(const RootSystem& rs, const Weight& lam);  // I = emptyset
EhrhartPolynomial polynomial_from_coeffs(RatVec coeffs);
// q(n) = sign * p(-n-1), expanded.
EhrhartPolynomial reciprocal_shift(const EhrhartPolynomial& p, int sign);

}  // namespace flagpoly

#endif
