#pragma once

// Symmetric polynomials in r alphabets X^(1), ..., X^(r), alphabet k having
// m_k variables. Schur expansions are the primary representation; products
// live in the stable ring where every alphabet is large enough, so indices
// are never truncated.

#include <map>
#include <string>
#include <vector>

#include "weylchar/integer.hpp"
#include "weylchar/shapes.hpp"

namespace weylchar {

enum class Basis { schur, tilde };

std::string to_string(Basis b);

// sum coeff * S_index (basis schur) or sum coeff * S~_index (basis tilde).
// Every index has size degree; zero coefficients are never stored.
class SchurExpansion {
 public:
  SchurExpansion() = default;
  SchurExpansion(int r, int degree, Basis basis) : r_(r), degree_(degree), basis_(basis) {}

  int r() const noexcept { return r_; }
  int degree() const noexcept { return degree_; }
  Basis basis() const noexcept { return basis_; }
  const std::map<MultiPartition, BigInt>& terms() const noexcept { return terms_; }
  bool zero() const noexcept { return terms_.empty(); }

  // Throws InputError for an index of the wrong size or component count.
  void add(const MultiPartition& index, const BigInt& coeff);
  BigInt coeff(const MultiPartition& index) const;

  // Terms in canonical index order.
  std::vector<std::pair<MultiPartition, BigInt>> sorted_terms() const;

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  int r_ = 0;
  int degree_ = 0;
  Basis basis_ = Basis::schur;
  std::map<MultiPartition, BigInt> terms_;
};

// sum coeff * x^exponent over exponents bounded by bound.
class MonomialPoly {
 public:
  MonomialPoly() = default;
  MonomialPoly(int degree, ShapeBound bound) : degree_(degree), bound_(std::move(bound)) {}

  int degree() const noexcept { return degree_; }
  const ShapeBound& bound() const noexcept { return bound_; }
  const std::map<MultiComposition, BigInt>& terms() const noexcept { return terms_; }

  void add(const MultiComposition& exponent, const BigInt& coeff);
  BigInt coeff(const MultiComposition& exponent) const;

  // Terms with exponents in decreasing lexicographic order.
  std::vector<std::pair<MultiComposition, BigInt>> sorted_terms() const;

  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

 private:
  int degree_ = 0;
  ShapeBound bound_;
  std::map<MultiComposition, BigInt> terms_;
};

// S_la(x) = prod_k s_{la^(k)}(x^(k)) in monomials.
MonomialPoly schur_to_monomials(const MultiPartition& la, const ShapeBound& bound);

// Monomial expansion of a Schur-basis expansion.
MonomialPoly to_monomials(const SchurExpansion& e, const ShapeBound& bound);

// ch W(la): coefficient of x^mu is sum_nu beta(la, nu) prod_k K_{nu^(k), mu^(k)}.
// Requires the stable regime m_k >= |la|.
MonomialPoly character(const MultiPartition& la, const ShapeBound& bound);

// S~_la = sum_mu beta(la, mu) S_mu, in the Schur basis.
SchurExpansion tilde_schur(const MultiPartition& la);

// Basis changes through B and its inverse B' at the expansion's degree.
SchurExpansion tilde_to_schur(const SchurExpansion& e);
SchurExpansion schur_to_tilde(const SchurExpansion& e);

// Product of two Schur-basis expansions, componentwise Littlewood-Richardson.
SchurExpansion schur_product(const SchurExpansion& a, const SchurExpansion& b);

// c^nu_{la,mu}: the tilde-basis expansion of S~_la * S~_mu.
SchurExpansion c_coeffs(const MultiPartition& la, const MultiPartition& mu);

struct ConjectureHit {
  MultiPartition la;
  MultiPartition mu;
  MultiPartition nu;
  BigInt coeff;
};

struct ConjectureReport {
  int n_max = 0;
  int r = 0;
  std::size_t scanned = 0;  // ordered pairs (la, mu)
  std::vector<ConjectureHit> c1_violations;  // negative c^nu
  std::vector<ConjectureHit> c2_violations;  // nonzero c^nu with zeta(nu) != zeta(la) + zeta(mu)
};

// Scans every ordered pair with |la| + |mu| <= n_max. Pairs are independent
// tasks; the report does not depend on jobs.
ConjectureReport conjecture_scan(int n_max, int r, unsigned jobs = 1);

// s_p(X^(t) + ... + X^(r)) in the Schur basis as an r-alphabet expansion,
// components before t empty. t is 0-based.
SchurExpansion union_alphabet_schur(const Partition& p, int t, int r);

}  // namespace weylchar
