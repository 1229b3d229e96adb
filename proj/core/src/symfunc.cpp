#include "weylchar/symfunc.hpp"

#include <algorithm>
#include <functional>

#include "weylchar/errors.hpp"
#include "weylchar/memo.hpp"
#include "weylchar/multiplicity.hpp"
#include "weylchar/parallel.hpp"

namespace weylchar {

std::string to_string(Basis b) { return b == Basis::schur ? "schur" : "tilde"; }

// ---------------------------------------------------------------- storage

void SchurExpansion::add(const MultiPartition& index, const BigInt& coeff) {
  if (index.r() != r_ || index.size() != degree_)
    throw InputError("expansion index " + index.str() + " does not have degree " + std::to_string(degree_));
  if (coeff == 0) return;
  auto [it, fresh] = terms_.try_emplace(index, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt SchurExpansion::coeff(const MultiPartition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<MultiPartition, BigInt>> SchurExpansion::sorted_terms() const {
  std::vector<std::pair<MultiPartition, BigInt>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_before(a.first, b.first); });
  return out;
}

void MonomialPoly::add(const MultiComposition& exponent, const BigInt& coeff) {
  if (!(exponent.bound() == bound_) || exponent.size() != degree_)
    throw InputError("monomial exponent does not match the polynomial's degree and bound");
  if (coeff == 0) return;
  auto [it, fresh] = terms_.try_emplace(exponent, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MonomialPoly::coeff(const MultiComposition& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<MultiComposition, BigInt>> MonomialPoly::sorted_terms() const {
  return {terms_.rbegin(), terms_.rend()};
}

// ------------------------------------------------------------- monomials

MonomialPoly schur_to_monomials(const MultiPartition& la, const ShapeBound& bound) {
  if (la.r() != bound.r()) throw InputError("schur_to_monomials: component count mismatch");
  MonomialPoly out(la.size(), bound);
  if (!la.fits(bound)) return out;
  // Only exponents with zeta(mu) = zeta(la) can carry a nonzero coefficient,
  // so the rows are chosen component by component.
  std::vector<std::vector<std::pair<std::vector<int>, Count>>> options(static_cast<std::size_t>(la.r()));
  for (std::size_t k = 0; k < options.size(); ++k)
    for (auto& row : compositions(la.component(k).size(), bound[k]))
      if (Count c = kostka(la.component(k), row); c != 0) options[k].emplace_back(std::move(row), c);
  std::vector<std::vector<int>> rows(options.size());
  std::function<void(std::size_t, Count)> pick = [&](std::size_t k, Count c) {
    if (k == options.size()) {
      out.add(MultiComposition(rows), BigInt(c));
      return;
    }
    for (const auto& [row, kk] : options[k]) {
      rows[k] = row;
      pick(k + 1, checked_mul(c, kk));
    }
  };
  pick(0, 1);
  return out;
}

MonomialPoly to_monomials(const SchurExpansion& e, const ShapeBound& bound) {
  if (e.basis() != Basis::schur) return to_monomials(tilde_to_schur(e), bound);
  MonomialPoly out(e.degree(), bound);
  for (const auto& [index, c] : e.terms()) {
    if (!index.fits(bound)) continue;
    const auto expanded = schur_to_monomials(index, bound);
    for (const auto& [mu, k] : expanded.terms()) out.add(mu, c * k);
  }
  return out;
}

MonomialPoly character(const MultiPartition& la, const ShapeBound& bound) {
  bound.require_stable(la.size());
  const auto order = enumerate_multipartitions(la.size(), bound);
  std::vector<Count> row;
  for (const auto& nu : order) row.push_back(beta_chain(la, nu, bound));
  MonomialPoly out(la.size(), bound);
  for (const auto& mu : enumerate_multicompositions(la.size(), bound)) {
    Count c = 0;
    for (std::size_t q = 0; q < order.size(); ++q)
      if (row[q] != 0) c = checked_add(c, checked_mul(row[q], kostka_product(order[q], mu)));
    out.add(mu, BigInt(c));
  }
  return out;
}

// ----------------------------------------------------------- basis change

namespace {
const StableBasis& basis_for(const SchurExpansion& e) { return stable_basis(e.degree(), e.r()); }
}  // namespace

SchurExpansion tilde_schur(const MultiPartition& la) {
  const auto& sb = stable_basis(la.size(), la.r());
  const std::size_t i = sb.index.at(la);
  SchurExpansion out(la.r(), la.size(), Basis::schur);
  for (std::size_t j = 0; j < sb.beta.dimension(); ++j)
    out.add(sb.beta.order[j], BigInt(sb.beta.values(i, j)));
  return out;
}

namespace {
// out_j = sum_i e_i M_{ij}.
SchurExpansion apply_rows(const SchurExpansion& e, const BetaMatrix& m, Basis target) {
  const auto& sb = basis_for(e);
  SchurExpansion out(e.r(), e.degree(), target);
  for (const auto& [index, c] : e.terms()) {
    auto it = sb.index.find(index);
    if (it == sb.index.end()) throw InputError("expansion index " + index.str() + " outside the stable basis");
    for (std::size_t j = 0; j < m.dimension(); ++j)
      if (m.values(it->second, j) != 0) out.add(m.order[j], c * m.values(it->second, j));
  }
  return out;
}
}  // namespace

SchurExpansion tilde_to_schur(const SchurExpansion& e) {
  if (e.basis() == Basis::schur) return e;
  return apply_rows(e, basis_for(e).beta, Basis::schur);
}

SchurExpansion schur_to_tilde(const SchurExpansion& e) {
  if (e.basis() == Basis::tilde) return e;
  return apply_rows(e, basis_for(e).inverse, Basis::tilde);
}

// ----------------------------------------------------------------- product

SchurExpansion schur_product(const SchurExpansion& a0, const SchurExpansion& b0) {
  if (a0.r() != b0.r()) throw InputError("schur_product: component count mismatch");
  const SchurExpansion a = tilde_to_schur(a0);
  const SchurExpansion b = tilde_to_schur(b0);
  const int r = a.r();
  SchurExpansion out(r, a.degree() + b.degree(), Basis::schur);
  for (const auto& [xi, ca] : a.terms())
    for (const auto& [eta, cb] : b.terms()) {
      std::vector<std::map<Partition, Count>> factors;
      for (int k = 0; k < r; ++k)
        factors.push_back(lr_product(xi.component(static_cast<std::size_t>(k)), eta.component(static_cast<std::size_t>(k))));
      const BigInt base = ca * cb;
      std::vector<Partition> comps(static_cast<std::size_t>(r));
      std::function<void(int, const BigInt&)> expand = [&](int k, const BigInt& c) {
        if (k == r) {
          out.add(MultiPartition(comps), c);
          return;
        }
        for (const auto& [tau, lr] : factors[static_cast<std::size_t>(k)]) {
          comps[static_cast<std::size_t>(k)] = tau;
          expand(k + 1, c * lr);
        }
      };
      expand(0, base);
    }
  return out;
}

SchurExpansion c_coeffs(const MultiPartition& la, const MultiPartition& mu) {
  if (la.r() != mu.r()) throw InputError("c_coeffs: component count mismatch");
  return schur_to_tilde(schur_product(tilde_schur(la), tilde_schur(mu)));
}

// -------------------------------------------------------------- conjectures

ConjectureReport conjecture_scan(int n_max, int r, unsigned jobs) {
  if (n_max < 0 || r < 1) throw InputError("conjecture_scan: need n_max >= 0 and r >= 1");
  std::vector<std::pair<MultiPartition, MultiPartition>> pairs;
  for (int a = 0; a <= n_max; ++a)
    for (int b = 0; a + b <= n_max; ++b)
      for (const auto& la : enumerate_multipartitions(a, ShapeBound::uniform(r, a)))
        for (const auto& mu : enumerate_multipartitions(b, ShapeBound::uniform(r, b))) pairs.emplace_back(la, mu);

  // Warm the shared basis tables serially so workers only read them.
  for (int n = 0; n <= n_max; ++n) stable_basis(n, r);

  std::vector<std::vector<ConjectureHit>> c1(pairs.size()), c2(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    const auto& [la, mu] = pairs[i];
    auto sum = la.zeta();
    const auto zm = mu.zeta();
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += zm[k];
    for (const auto& [nu, c] : c_coeffs(la, mu).sorted_terms()) {
      if (c < 0) c1[i].push_back(ConjectureHit{la, mu, nu, c});
      if (nu.zeta() != sum) c2[i].push_back(ConjectureHit{la, mu, nu, c});
    }
  });

  ConjectureReport report;
  report.n_max = n_max;
  report.r = r;
  report.scanned = pairs.size();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    report.c1_violations.insert(report.c1_violations.end(), c1[i].begin(), c1[i].end());
    report.c2_violations.insert(report.c2_violations.end(), c2[i].begin(), c2[i].end());
  }
  return report;
}

// ---------------------------------------------------------- union alphabet

namespace {
using Tail = std::map<std::vector<Partition>, BigInt>;

// s_p(X^(t) + ... + X^(r-1)) as products s_{a_t}(X^(t)) ... s_{a_{r-1}}(X^(r-1)).
Tail expand_union(const Partition& p, int t, int r) {
  Tail out;
  if (t == r - 1) {
    out.emplace(std::vector<Partition>{p}, BigInt(1));
    return out;
  }
  for (int s = p.size(); s >= 0; --s)
    for (const auto& alpha : subpartitions(p, s))
      for (const auto& gamma : partitions_of(p.size() - s)) {
        Count c = lr_coeff(p, alpha, gamma);
        if (c == 0) continue;
        for (const auto& [rest, d] : expand_union(gamma, t + 1, r)) {
          std::vector<Partition> key{alpha};
          key.insert(key.end(), rest.begin(), rest.end());
          out[key] += d * c;
        }
      }
  return out;
}
}  // namespace

SchurExpansion union_alphabet_schur(const Partition& p, int t, int r) {
  if (r < 1 || t < 0 || t >= r) throw InputError("union_alphabet_schur: need 0 <= t < r");
  SchurExpansion out(r, p.size(), Basis::schur);
  for (const auto& [tail, c] : expand_union(p, t, r)) {
    std::vector<Partition> comps(static_cast<std::size_t>(t));
    comps.insert(comps.end(), tail.begin(), tail.end());
    out.add(MultiPartition(comps), c);
  }
  return out;
}

}  // namespace weylchar
