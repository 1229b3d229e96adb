#pragma once

// Multiplicities of the Levi restriction of Weyl modules: beta(la, mu) is
// the number of times the outer tensor product of the highest weight
// modules of mu's components occurs in the Weyl module of la.
//
// Three independent algorithms compute it:
//   singular - count singular semistandard tableaux of shape la, weight mu;
//   chain    - sum over nested chains of products of skew singular counts
//              (the production path);
//   solve    - solve the unitriangular system relating tableau counts and
//              Kostka products.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "weylchar/integer.hpp"
#include "weylchar/matrix.hpp"
#include "weylchar/shapes.hpp"

namespace weylchar {

// ------------------------------------------------------------- classical

// Number of semistandard Young tableaux of shape nu and content weight
// (any composition; zeros allowed). Throws InputError when the sizes differ.
Count kostka(const Partition& nu, std::span<const int> weight);

// Littlewood-Richardson coefficient c^nu_{la,mu}: skew tableaux of shape
// nu/la and content mu whose row reading word (right to left, top to
// bottom) is a lattice word. Zero when la is not inside nu or sizes
// disagree.
Count lr_coeff(const Partition& nu, const Partition& la, const Partition& mu);

// s_a * s_b = sum_nu lr_product(a, b)[nu] s_nu.
std::map<Partition, Count> lr_product(const Partition& a, const Partition& b);

// ------------------------------------------------------------ singular counts

// Semistandard fillings of the skew shape by letters of alphabet comp only,
// with content weight, whose decreasing-cell-order reading is a lattice
// word. Zero when a cell lies in a component after comp.
Count skew_singular_count(const SkewShape& shape, int comp, const Partition& weight);

// Same count, the weight given as a multicomposition nonzero in one
// component only. Throws InputError when the weight is spread out or not a
// partition in that component.
Count skew_singular_count(const SkewShape& shape, const MultiComposition& weight);

// ------------------------------------------------------------------ chains

// la = steps[r] contains steps[r-1] ... contains steps[0] = empty with
// components k+1.. of steps[k] empty and |steps[k]| - |steps[k-1]| = |mu^(k)|.
struct Chain {
  std::vector<MultiPartition> steps;
  friend bool operator==(const Chain&, const Chain&) = default;
};

std::vector<Chain> enumerate_chains(const MultiPartition& la, const MultiPartition& mu);

// -------------------------------------------------------------------- beta

enum class BetaMethod { singular, chain, solve };

BetaMethod parse_beta_method(const std::string& name);
std::string to_string(BetaMethod m);

Count beta_singular(const MultiPartition& la, const MultiPartition& mu, const ShapeBound& bound);
Count beta_chain(const MultiPartition& la, const MultiPartition& mu, const ShapeBound& bound);

// beta(la, nu) for every nu of enumerate_multipartitions(|la|, bound), in
// that order. Throws ConsistencyError if the system has no nonnegative
// integer solution.
std::vector<Count> beta_solve_row(const MultiPartition& la, const ShapeBound& bound);
Count beta_solve(const MultiPartition& la, const MultiPartition& mu, const ShapeBound& bound);

Count beta(const MultiPartition& la, const MultiPartition& mu, const ShapeBound& bound,
           BetaMethod method = BetaMethod::chain);

// Product over components of K_{nu^(k), mu^(k)}; zero unless zeta agrees.
Count kostka_product(const MultiPartition& nu, const MultiComposition& mu);

// ------------------------------------------------------------------ matrix

// Rows and columns indexed by the canonically ordered multipartitions of n.
// Upper unitriangular: larger shapes come first.
struct BetaMatrix {
  int n = 0;
  ShapeBound bound;
  std::vector<MultiPartition> order;
  Matrix<Count> values;

  std::size_t dimension() const noexcept { return order.size(); }
  // Position of mp in order; throws InputError when absent.
  std::size_t index_of(const MultiPartition& mp) const;
  Count at(const MultiPartition& la, const MultiPartition& mu) const { return values(index_of(la), index_of(mu)); }
};

// Each row is an independent task; jobs > 1 computes rows concurrently with
// identical results. Throws ConsistencyError when the result is not
// unitriangular.
BetaMatrix build_beta_matrix(int n, const ShapeBound& bound, BetaMethod method = BetaMethod::chain,
                             unsigned jobs = 1);

// The inverse matrix B' with B * B' = I, sharing B's index.
BetaMatrix invert_beta_matrix(const BetaMatrix& b);

// Process-wide memo of the stable matrix (m_k = n) and its inverse.
struct StableBasis {
  BetaMatrix beta;
  BetaMatrix inverse;
  std::map<MultiPartition, std::size_t> index;
};
const StableBasis& stable_basis(int n, int r);

// ------------------------------------------------------- grouping factor

struct FactorCheck {
  bool equal = false;
  Count beta = 0;
  Count product = 0;
};

// Compares beta(la, mu) with the product over groups of p of the group-wise
// beta values, each computed with the group's own row bounds. Throws
// InputError unless zeta_p(la) == zeta_p(mu).
FactorCheck bp_factor_check(const MultiPartition& la, const MultiPartition& mu, const Grouping& p,
                            const ShapeBound& bound);

}  // namespace weylchar
