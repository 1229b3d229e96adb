#include "weylchar/factorization.hpp"

#include "weylchar/errors.hpp"

namespace weylchar {

IndexedMatrix to_indexed(const BetaMatrix& b) {
  return IndexedMatrix{b.n, b.bound, b.order, b.values.cast<BigInt>()};
}

IndexedMatrix identity_indexed(int n, const ShapeBound& bound) {
  auto order = enumerate_multipartitions(n, bound);
  auto dim = order.size();
  return IndexedMatrix{n, bound, std::move(order), Matrix<BigInt>::identity(dim)};
}

void require_same_index(const IndexedMatrix& a, const IndexedMatrix& b, const std::string& what) {
  if (a.n != b.n || !(a.bound == b.bound))
    throw InputError(what + ": matrices are indexed by different (n, m)");
  if (a.order != b.order) throw InputError(what + ": matrices list the multipartitions in different orders");
  if (a.values.rows() != a.dimension() || a.values.cols() != a.dimension() || b.values.rows() != b.dimension() ||
      b.values.cols() != b.dimension())
    throw InputError(what + ": matrix dimension differs from its index");
}

IndexedMatrix derive_decomposition(const IndexedMatrix& b, const IndexedMatrix& dbar) {
  require_same_index(b, dbar, "derive D");
  IndexedMatrix d = b;
  d.values = b.values * dbar.values;
  return d;
}

namespace {
void warn_shape(const IndexedMatrix& m, const char* name, std::vector<std::string>& out) {
  if (!is_upper_unitriangular(m.values)) out.push_back(std::string(name) + " is not upper unitriangular");
}
}  // namespace

FactorizationReport factorization_harness(const IndexedMatrix& b, const IndexedMatrix& dbar, const IndexedMatrix& x,
                                          const IndexedMatrix& d) {
  require_same_index(b, dbar, "factorize");
  require_same_index(b, x, "factorize");
  require_same_index(b, d, "factorize");
  FactorizationReport report;
  report.dimension = b.dimension();
  warn_shape(b, "B", report.warnings);
  warn_shape(dbar, "Dbar", report.warnings);
  warn_shape(x, "X", report.warnings);
  warn_shape(d, "D", report.warnings);
  report.residual = max_abs_entry(b.values * dbar.values - d.values * x.values);
  // Within a zeta block D and Dbar must coincide.
  for (std::size_t i = 0; i < b.dimension(); ++i)
    for (std::size_t j = 0; j < b.dimension(); ++j)
      if (b.order[i].zeta() == b.order[j].zeta() && d.values(i, j) != dbar.values(i, j))
        report.block_mismatches.push_back(BlockMismatch{i, j, d.values(i, j), dbar.values(i, j)});
  return report;
}

}  // namespace weylchar
