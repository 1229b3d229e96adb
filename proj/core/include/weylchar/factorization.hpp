#pragma once

// Matrix identities of the form B * Dbar = D * X over externally supplied
// decomposition matrices. Nothing here computes D, Dbar or X; the harness
// only multiplies and compares.

#include <string>
#include <vector>

#include "weylchar/integer.hpp"
#include "weylchar/matrix.hpp"
#include "weylchar/multiplicity.hpp"
#include "weylchar/shapes.hpp"

namespace weylchar {

// A square matrix over the canonically ordered multipartitions of n.
struct IndexedMatrix {
  int n = 0;
  ShapeBound bound;
  std::vector<MultiPartition> order;
  Matrix<BigInt> values;

  std::size_t dimension() const noexcept { return order.size(); }
};

IndexedMatrix to_indexed(const BetaMatrix& b);
IndexedMatrix identity_indexed(int n, const ShapeBound& bound);

// Throws InputError unless a and b share n, bound and index order.
void require_same_index(const IndexedMatrix& a, const IndexedMatrix& b, const std::string& what);

// D = B * Dbar, the case X = I.
IndexedMatrix derive_decomposition(const IndexedMatrix& b, const IndexedMatrix& dbar);

// A pair with zeta(la) = zeta(mu) where d and dbar disagree.
struct BlockMismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  BigInt d;
  BigInt dbar;
};

struct FactorizationReport {
  std::size_t dimension = 0;
  BigInt residual;  // max |(B*Dbar - D*X)_{ij}|
  std::vector<std::string> warnings;
  std::vector<BlockMismatch> block_mismatches;

  bool holds() const { return residual == 0; }
};

// Unitriangularity of the supplied matrices is reported as a warning, never
// enforced; mismatched indices are an InputError.
FactorizationReport factorization_harness(const IndexedMatrix& b, const IndexedMatrix& dbar, const IndexedMatrix& x,
                                          const IndexedMatrix& d);

}  // namespace weylchar
