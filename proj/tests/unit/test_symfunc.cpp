#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "weylchar/errors.hpp"
#include "weylchar/multiplicity.hpp"
#include "weylchar/symfunc.hpp"
#include "weylchar/tableaux.hpp"

using namespace weylchar;
using fixtures::mp;

namespace {
SchurExpansion schur(const MultiPartition& la) {
  SchurExpansion e(la.r(), la.size(), Basis::schur);
  e.add(la, 1);
  return e;
}

// Product of two polynomials in the flattened variables of bound.
MonomialPoly multiply(const MonomialPoly& a, const MonomialPoly& b) {
  MonomialPoly out(a.degree() + b.degree(), a.bound());
  for (const auto& [x, c] : a.terms())
    for (const auto& [y, d] : b.terms()) {
      auto rows = x.rows();
      for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t i = 0; i < rows[k].size(); ++i) rows[k][i] += y.rows()[k][i];
      out.add(MultiComposition(rows), c * d);
    }
  return out;
}

// Fraction-free Gaussian elimination.
BigInt determinant(Matrix<BigInt> m) {
  const std::size_t n = m.rows();
  BigInt prev = 1, sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return n == 0 ? BigInt(1) : sign * m(n - 1, n - 1);
}
}  // namespace

TEST(Monomials, Examples) {
  auto one = schur_to_monomials(mp({{1}, {}}), ShapeBound({2, 2}));
  EXPECT_EQ(one.terms().size(), 2u);
  EXPECT_EQ(one.coeff(MultiComposition({{1, 0}, {0, 0}})), 1);
  EXPECT_EQ(one.coeff(MultiComposition({{0, 1}, {0, 0}})), 1);
  auto sq = schur_to_monomials(mp({{2}, {}}), ShapeBound({1, 1}));
  EXPECT_EQ(sq.terms().size(), 1u);
  EXPECT_EQ(sq.coeff(MultiComposition({{2}, {0}})), 1);
  auto hook = schur_to_monomials(mp({{2, 1}, {}}), ShapeBound({3, 1}));
  EXPECT_EQ(hook.coeff(MultiComposition({{1, 1, 1}, {0}})), 2);
  EXPECT_TRUE(schur_to_monomials(mp({{1, 1}, {}}), ShapeBound({1, 1})).terms().empty());
}

TEST(Character, Examples) {
  const ShapeBound bound({1, 1});
  auto ch = character(mp({{1}, {}}), bound);
  EXPECT_EQ(ch.terms().size(), 2u);
  EXPECT_EQ(ch.coeff(MultiComposition({{1}, {0}})), 1);
  EXPECT_EQ(ch.coeff(MultiComposition({{0}, {1}})), 1);
  EXPECT_THROW(character(mp({{2}, {}}), bound), InputError);
}

TEST(Character, CoefficientsCountTableaux) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= (r == 3 ? 3 : 4); ++n) {
      const auto bound = ShapeBound::uniform(r, n);
      for (const auto& la : enumerate_multipartitions(n, bound)) {
        auto ch = character(la, bound);
        EXPECT_EQ(ch.coeff(MultiComposition::from_partition(la, bound)), 1);
        for (const auto& mu : enumerate_multicompositions(n, bound))
          EXPECT_EQ(ch.coeff(mu), BigInt(oracle::tableau_count(la, mu.rows(), bound)));
        EXPECT_EQ(ch, to_monomials(tilde_schur(la), bound));
      }
    }
}

TEST(Tilde, Examples) {
  auto t = tilde_schur(mp({{1}, {1}}));
  EXPECT_EQ(t.terms().size(), 3u);
  for (const auto& x : {mp({{1}, {1}}), mp({{}, {2}}), mp({{}, {1, 1}})}) EXPECT_EQ(t.coeff(x), 1);
  auto row = tilde_schur(mp({{2}, {}}));
  EXPECT_EQ(row.terms().size(), 3u);
  for (const auto& x : {mp({{2}, {}}), mp({{1}, {1}}), mp({{}, {2}})}) EXPECT_EQ(row.coeff(x), 1);
  for (const auto& p : partitions_of(4)) EXPECT_EQ(tilde_schur(MultiPartition({p})), schur(MultiPartition({p})));
}

TEST(Tilde, BasisRoundTrip) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= (r == 3 ? 4 : 5); ++n)
      for (const auto& la : enumerate_multipartitions(n, ShapeBound::uniform(r, n))) {
        SchurExpansion e(r, n, Basis::tilde);
        e.add(la, 3);
        auto s = tilde_to_schur(e);
        EXPECT_EQ(s.basis(), Basis::schur);
        EXPECT_EQ(schur_to_tilde(s), e);
        EXPECT_EQ(tilde_to_schur(schur_to_tilde(schur(la))), schur(la));
      }
}

TEST(Tilde, ChangeOfBasisHasDeterminantOne) {
  for (int n = 0; n <= 4; ++n) {
    auto b = build_beta_matrix(n, ShapeBound::uniform(2, n));
    EXPECT_EQ(determinant(b.values.cast<BigInt>()), 1);
    for (std::size_t i = 0; i < b.dimension(); ++i) {
      auto row = tilde_schur(b.order[i]);
      for (std::size_t j = 0; j < b.dimension(); ++j) EXPECT_EQ(row.coeff(b.order[j]), b.values(i, j));
    }
  }
}

TEST(Product, Examples) {
  auto empty = schur(mp({{}, {}}));
  auto la = schur(mp({{2, 1}, {1}}));
  EXPECT_EQ(schur_product(empty, la), la);
  auto box = schur(mp({{1}, {}}));
  auto sq = schur_product(box, box);
  EXPECT_EQ(sq.terms().size(), 2u);
  EXPECT_EQ(sq.coeff(mp({{2}, {}})), 1);
  EXPECT_EQ(sq.coeff(mp({{1, 1}, {}})), 1);
  EXPECT_EQ(sq.degree(), 2);
  EXPECT_THROW(schur_product(box, schur(mp({{1}}))), InputError);
}

TEST(Product, AgreesWithMonomialMultiplication) {
  const int r = 2;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 4; ++b) {
      const auto bound = ShapeBound::uniform(r, a + b);
      for (const auto& x : enumerate_multipartitions(a, ShapeBound::uniform(r, a)))
        for (const auto& y : enumerate_multipartitions(b, ShapeBound::uniform(r, b))) {
          auto lhs = to_monomials(schur_product(schur(x), schur(y)), bound);
          auto rhs = multiply(schur_to_monomials(x, bound), schur_to_monomials(y, bound));
          EXPECT_EQ(lhs, rhs) << x.str() << " " << y.str();
        }
    }
}

TEST(StructureConstants, Examples) {
  auto e = c_coeffs(mp({{}, {}}), mp({{2}, {1}}));
  EXPECT_EQ(e.terms().size(), 1u);
  EXPECT_EQ(e.coeff(mp({{2}, {1}})), 1);
  auto boxes = c_coeffs(mp({{1}, {}}), mp({{1}, {}}));
  EXPECT_EQ(boxes.basis(), Basis::tilde);
  EXPECT_EQ(boxes.terms().size(), 2u);
  EXPECT_EQ(boxes.coeff(mp({{2}, {}})), 1);
  EXPECT_EQ(boxes.coeff(mp({{1, 1}, {}})), 1);
  auto mixed = c_coeffs(mp({{1}, {}}), mp({{}, {1}}));
  EXPECT_EQ(mixed.terms().size(), 1u);
  EXPECT_EQ(mixed.coeff(mp({{1}, {1}})), 1);
}

TEST(StructureConstants, StructuralProperties) {
  const int r = 2;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (const auto& la : enumerate_multipartitions(a, ShapeBound::uniform(r, a)))
        for (const auto& mu : enumerate_multipartitions(b, ShapeBound::uniform(r, b))) {
          auto c = c_coeffs(la, mu);
          EXPECT_EQ(c.degree(), a + b);
          EXPECT_EQ(c, c_coeffs(mu, la));
          auto sum = la.zeta();
          for (int k = 0; k < r; ++k) sum[static_cast<std::size_t>(k)] += mu.zeta()[static_cast<std::size_t>(k)];
          for (const auto& nu : enumerate_multipartitions(a + b, ShapeBound::uniform(r, a + b)))
            if (nu.zeta() == sum) {
              BigInt product = 1;
              for (std::size_t k = 0; k < 2; ++k)
                product *= lr_coeff(nu.component(k), la.component(k), mu.component(k));
              EXPECT_EQ(c.coeff(nu), product);
            }
        }
}

TEST(StructureConstants, ConcentratedFactorsAreLR) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (const auto& p : partitions_of(a))
        for (const auto& q : partitions_of(b))
          for (int t = 0; t < 2; ++t) {
            auto c = c_coeffs(MultiPartition::concentrated(2, t, p), MultiPartition::concentrated(2, t, q));
            for (const auto& [nu, coeff] : c.terms()) {
              EXPECT_EQ(nu.concentrated_component() == t || nu.size() == 0, true);
              EXPECT_EQ(coeff, lr_coeff(nu.component(static_cast<std::size_t>(t)), p, q));
            }
          }
}

TEST(ConjectureScan, ReportShape) {
  auto report = conjecture_scan(4, 2);
  EXPECT_EQ(report.scanned, 164u);
  auto parallel = conjecture_scan(4, 2, 3);
  EXPECT_EQ(parallel.scanned, report.scanned);
  EXPECT_EQ(parallel.c1_violations.size(), report.c1_violations.size());
  EXPECT_EQ(parallel.c2_violations.size(), report.c2_violations.size());
}

TEST(UnionAlphabet, Examples) {
  auto e = union_alphabet_schur(Partition({1}), 0, 2);
  EXPECT_EQ(e.terms().size(), 2u);
  EXPECT_EQ(e.coeff(mp({{1}, {}})), 1);
  EXPECT_EQ(e.coeff(mp({{}, {1}})), 1);
  auto last = union_alphabet_schur(Partition({2, 1}), 2, 3);
  EXPECT_EQ(last.terms().size(), 1u);
  EXPECT_EQ(last.coeff(mp({{}, {}, {2, 1}})), 1);
  EXPECT_THROW(union_alphabet_schur(Partition({1}), 2, 2), InputError);
}

TEST(UnionAlphabet, EqualsTildeOfConcentrated) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 4; ++n)
      for (const auto& p : partitions_of(n))
        for (int t = 0; t < r; ++t)
          EXPECT_EQ(union_alphabet_schur(p, t, r), tilde_schur(MultiPartition::concentrated(r, t, p)));
}
