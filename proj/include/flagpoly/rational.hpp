#ifndef FLAGPOLY_RATIONAL_HPP
#define FLAGPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "flagpoly/errors.hpp"

namespace flagpoly {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

// Canonical string form "p" or "p/q" with q > 1.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

Int floor_div(const Int& num, const Int& den);  // den > 0
Int ceil_div(const Int& num, const Int& den);   // den > 0
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);

// Divides the vector by the gcd of its entries (content). Zero vectors pass
// through. Returns the content.
Int reduce_content(IntVec& v);

// Clears denominators: returns integer vector d*v with d = lcm of
// denominators, then content-reduced. Never flips sign.
IntVec scale_to_integer(const RatVec& v);

IntVec int_vec(const std::vector<long>& v);
RatVec rat_vec(const IntVec& v);

bool is_integral(const RatVec& v);
IntVec to_integral(const RatVec& v);  // throws InvalidInput if not integral

// Exact rank of a rational matrix (Gaussian elimination over Q).
int rank_of(const RatMat& rows);
int rank_of(const IntMat& rows);

// Incremental row basis for rank queries: feed rows one at a time, rank()
// is the rank of everything fed so far.
class RowBasis {
 public:
  explicit RowBasis(int cols) : cols_(cols) {}
  // Returns true if the row increased the rank.
  bool add(RatVec row);
  bool add(const IntVec& row);
  int rank() const { return static_cast<int>(rows_.size()); }
  // True if `row` lies in the span of the rows fed so far.
  bool in_span(RatVec row) const;

 private:
  int cols_;
  std::vector<RatVec> rows_;  // echelon form, pivot columns increasing
  std::vector<int> pivots_;
  bool reduce(RatVec& row) const;  // true if row becomes zero
};

// Solves A x = b over Q (A square, invertible); throws InvalidInput if
// singular or inconsistent.
RatVec solve_linear(RatMat a, RatVec b);

// Reduced row-echelon form over Q, in place; returns pivot columns.
std::vector<int> rref(RatMat& m);

// Basis of the integer kernel {x in Z^n : M x = 0} of an integer matrix.
// The basis spans the full (saturated) kernel lattice.
IntMat integer_kernel(const IntMat& m);

// One integer solution of M x = b, if any.
bool integer_solve(const IntMat& m, const IntVec& b, IntVec& solution);

}  // namespace flagpoly

#endif
