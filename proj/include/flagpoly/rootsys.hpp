#ifndef FLAGPOLY_ROOTSYS_HPP
#define FLAGPOLY_ROOTSYS_HPP

#include <map>
#include <string>
#include <vector>

#include "flagpoly/rational.hpp"

namespace flagpoly {

// Finite crystallographic root systems. Conventions, fixed once:
//   * cartan[i][j] = <alpha_j, alpha_i^vee>,
//   * roots are stored in the simple-root basis, weights in the
//     fundamental-weight basis (both integral),
//   * B2 has alpha_2 short, G2 has alpha_1 short.

struct CartanType {
  char family = 'A';  // one of A B C D E F G
  int rank = 1;
};

CartanType cartan_type(char family, int rank);  // validates the pair
CartanType cartan_type_from_string(const std::string& s);  // e.g. "A5", "G2"

struct Root {
  std::vector<long> coeffs;  // simple-root basis

  long height() const;
  bool operator==(const Root& o) const { return coeffs == o.coeffs; }
  bool operator<(const Root& o) const;  // height, then lex
};

struct Weight {
  std::vector<long> coeffs;  // fundamental-weight basis

  bool is_dominant() const;
  bool is_zero() const;
  bool operator==(const Weight& o) const { return coeffs == o.coeffs; }
  bool operator<(const Weight& o) const { return coeffs < o.coeffs; }
};

std::string to_string(const Root& r);
std::string to_string(const Weight& w);

class RootSystem {
 public:
  CartanType type;
  std::vector<std::vector<long>> cartan;  // a_{ij} = <alpha_j, alpha_i^vee>
  std::vector<long> symmetrizer;          // minimal d_i with d_i a_{ij} = d_j a_{ji}
  std::vector<Root> positive_roots;       // height-then-lex order
  Weight rho;                             // (1, ..., 1)

  int rank() const { return type.rank; }
  int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }

  bool is_positive_root(const Root& r) const;
  int positive_root_index(const Root& r) const;  // -1 if absent

  // d_beta = (beta, beta)/2 in the normalization (alpha_i, alpha_i)/2 = d_i.
  Int root_norm(const Root& beta) const;

  // <lambda, beta^vee> for a positive root beta; exact integer.
  Int pairing(const Weight& lam, const Root& beta) const;

  // Linear form of the same pairing: coefficient vector c with
  // <lambda, beta^vee> = sum_j c_j * lambda_j. Entries are rational only in
  // the intermediate sense; the returned vector is the exact row.
  RatVec coroot_row(const Root& beta) const;

  // alpha_i in fundamental coordinates (column i of the Cartan matrix).
  Weight simple_root_as_weight(int i) const;

  // Weight coordinates of an arbitrary root-lattice element.
  Weight root_to_weight(const Root& r) const;

  // Simple reflection s_i on weights and on root-lattice vectors.
  Weight reflect_weight(int i, const Weight& w) const;
  std::vector<long> reflect_root_vec(int i, const std::vector<long>& v) const;

  std::string name() const;  // e.g. "A5"

 private:
  std::map<std::vector<long>, int> root_index_;
  std::vector<Int> norms_;  // d_beta per positive root
  friend RootSystem build_root_system(const CartanType&);
};

struct ParabolicData {
  std::vector<int> levi_set;      // sorted, 1-based indices
  std::vector<Root> phi_p_plus;   // Phi^+ \ <I>^+, height-then-lex
  std::vector<Root> levi_roots;   // <I>^+
  int n_p = 0;                    // |Phi_P^+|
  std::vector<std::vector<long>> w_i_action;       // on weights (fund. coords)
  std::vector<std::vector<long>> w_i_root_action;  // on the root lattice
  std::vector<int> w_i_word;      // reduced word for w_I

  Weight apply_w_i(const Weight& w) const;
  std::vector<long> apply_w_i_root(const std::vector<long>& v) const;
  bool in_levi(int i) const;  // 1-based
};

RootSystem build_root_system(const CartanType& ct);

// <lambda, beta^vee>; beta must be a root of rs (else InvalidInput).
Int pairing(const RootSystem& rs, const Weight& lam, const Root& beta);

// Parabolic data for the Levi subset I (1-based). I = full set is rejected.
ParabolicData parabolic(const RootSystem& rs, const std::vector<int>& levi);

// rho + w_I(rho) = sum over Phi_P^+ (both are computed and must agree).
Weight anticanonical_weight(const RootSystem& rs, const ParabolicData& par);

// <lam, alpha^vee> = 0 on I and > 0 off I.
bool is_p_regular(const RootSystem& rs, const ParabolicData& par,
                  const Weight& lam);

// lam in Lambda_P^+: dominant and orthogonal to the Levi set.
bool in_lambda_p_plus(const RootSystem& rs, const ParabolicData& par,
                      const Weight& lam);

// Classical positive-root count for the type.
long classical_positive_root_count(const CartanType& ct);

Weight weight_from_coeffs(std::vector<long> coeffs);
Weight scale_weight(const Weight& w, long k);
Weight add_weights(const Weight& a, const Weight& b);

}  // namespace flagpoly

#endif
