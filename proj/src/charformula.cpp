#include "flagpoly/charformula.hpp"

#include <cassert>
#include <sstream>

namespace flagpoly {

Rat EhrhartPolynomial::eval(const Int& n) const {
  Rat acc = 0;
  for (int k = degree(); k >= 0; --k) acc = acc * Rat(n) + coeffs[k];
  return acc;
}

std::string EhrhartPolynomial::to_display_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeffs[k];
    if (c == 0 && !(degree() == 0 && k == 0)) continue;
    if (!first) os << (c >= 0 ? "+" : "");
    Rat a = c;
    if (!(k > 0 && (a == 1 || a == -1))) {
      os << rat_to_string(a);
      if (k > 0) os << "*";
    } else if (a == -1) {
      os << "-";
    }
    if (k > 0) {
      os << "n";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

void require_lambda_p_plus(const RootSystem& rs, const ParabolicData& par,
                           const Weight& lam) {
  if (!in_lambda_p_plus(rs, par, lam))
    throw InvalidInput("weight " + to_string(lam) +
                       " is not in Lambda_P^+ for this parabolic");
}

}  // namespace

Int kostant_dimension(const RootSystem& rs, const ParabolicData& par,
                      const Weight& lam) {
  require_lambda_p_plus(rs, par, lam);
  Rat prod = 1;
  for (const Root& beta : par.phi_p_plus) {
    Int num = rs.pairing(add_weights(lam, rs.rho), beta);
    Int den = rs.pairing(rs.rho, beta);
    prod *= Rat(num, den);
  }
  prod.canonicalize();
  assert(prod.get_den() == 1);
  return prod.get_num();
}

EhrhartPolynomial ehrhart_polynomial(const RootSystem& rs,
                                     const ParabolicData& par,
                                     const Weight& lam) {
  require_lambda_p_plus(rs, par, lam);
  // Product of linear factors (a_beta n + b_beta)/b_beta = (a/b) n + 1.
  RatVec coeffs{Rat(1)};
  for (const Root& beta : par.phi_p_plus) {
    Int a = rs.pairing(lam, beta);
    Int b = rs.pairing(rs.rho, beta);
    Rat slope(a, b);
    slope.canonicalize();
    RatVec next(coeffs.size() + 1, Rat(0));
    for (std::size_t k = 0; k <= coeffs.size(); ++k) {
      if (k < coeffs.size()) next[k] += coeffs[k];
      if (k > 0) next[k] += slope * coeffs[k - 1];
    }
    coeffs = std::move(next);
  }
  // For non-regular lambda some factors are constant 1; trim zero leaders.
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  EhrhartPolynomial p{coeffs};
  assert(p.eval(0) == 1);
  return p;
}

Int interior_count(const RootSystem& rs, const ParabolicData& par,
                   const Weight& lam, long n) {
  if (n < 1) throw InvalidInput("interior_count requires n >= 1");
  require_lambda_p_plus(rs, par, lam);
  Rat prod = 1;
  for (const Root& beta : par.phi_p_plus) {
    Int num = rs.pairing(lam, beta) * (-n) + rs.pairing(rs.rho, beta);
    Int den = rs.pairing(rs.rho, beta);
    prod *= Rat(num, den);
  }
  if (par.n_p % 2 != 0) prod = -prod;
  prod.canonicalize();
  assert(prod.get_den() == 1);
  Int count = prod.get_num();
  assert(count >= 0);
  return count;
}

EhrhartPolynomial polynomial_from_coeffs(RatVec coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return EhrhartPolynomial{std::move(coeffs)};
}

EhrhartPolynomial reciprocal_shift(const EhrhartPolynomial& p, int sign) {
  // sign * p(-n-1): expand (-n-1)^k by the binomial theorem.
  const int d = p.degree();
  RatVec out(d + 1, Rat(0));
  // binom table
  std::vector<IntVec> binom(d + 1, IntVec(d + 1, Int(0)));
  for (int i = 0; i <= d; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : Int(0));
  }
  for (int k = 0; k <= d; ++k) {
    // (-n-1)^k = (-1)^k (n+1)^k = (-1)^k sum_j C(k,j) n^j
    for (int j = 0; j <= k; ++j) {
      Rat term = p.coeffs[k] * Rat(binom[k][j]);
      if (k % 2 != 0) term = -term;
      out[j] += term;
    }
  }
  if (sign < 0)
    for (Rat& c : out) c = -c;
  return polynomial_from_coeffs(std::move(out));
}

bool hibi_identity_holds(const RootSystem& rs, const ParabolicData& par,
                         const Weight& lam) {
  EhrhartPolynomial L = ehrhart_polynomial(rs, par, lam);
  EhrhartPolynomial R = reciprocal_shift(L, par.n_p % 2 == 0 ? 1 : -1);
  return L == R;
}

TheoremReport classify_weight(const RootSystem& rs, const ParabolicData& par,
                              const Weight& lam) {
  if (!is_p_regular(rs, par, lam))
    throw InvalidInput("classify_weight requires a P-regular weight");
  TheoremReport rep;
  rep.lam = lam;
  rep.is_anticanonical = (lam == anticanonical_weight(rs, par));
  rep.interior_count_at_1 = interior_count(rs, par, lam, 1);
  rep.hibi_holds = hibi_identity_holds(rs, par, lam);
  rep.consistent = rep.is_anticanonical == (rep.interior_count_at_1 == 1);
  return rep;
}

Int weyl_dimension(const RootSystem& rs, const Weight& lam) {
  if (!lam.is_dominant())
    throw InvalidInput("weyl_dimension requires a dominant weight");
  Rat prod = 1;
  for (const Root& beta : rs.positive_roots) {
    Int num = rs.pairing(add_weights(lam, rs.rho), beta);
    Int den = rs.pairing(rs.rho, beta);
    prod *= Rat(num, den);
  }
  prod.canonicalize();
  assert(prod.get_den() == 1);
  return prod.get_num();
}

}  // namespace flagpoly
