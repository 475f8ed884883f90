#include "hilb/groebner.hpp"

#include <algorithm>

#include "hilb/errors.hpp"

namespace hilb {

namespace {
template <class K>
std::vector<Poly<K>> convert_gens(const K& F, const std::vector<IPoly>& gens,
                                  int trunc) {
  std::vector<Poly<K>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(poly_from_ipoly(F, g, trunc));
  return out;
}
}  // namespace

template <class K>
TruncatedGB<K>::TruncatedGB(const K& F, int nvars, int trunc,
                            const std::vector<IPoly>& gens,
                            std::size_t universe_cap)
    : TruncatedGB(F, nvars, trunc, convert_gens(F, gens, trunc), universe_cap) {}

template <class K>
TruncatedGB<K>::TruncatedGB(const K& F, int nvars, int trunc,
                            const std::vector<Poly<K>>& gens,
                            std::size_t universe_cap)
    : F_(F), nv_(nvars), N_(trunc) {
  if (trunc < 2) throw TruncationTooSmall("truncation order must be >= 2");
  for (const auto& g : gens) add_poly(g);
  drain_pairs();
  while (boundary_pass()) drain_pairs();
  minimalize();
  build_tables(universe_cap);
}

template <class K>
Poly<K> TruncatedGB<K>::spoly(const Poly<K>& f, const Poly<K>& g) const {
  Monomial l = f.lm().lcm(g.lm());
  Monomial uf = f.lm().divide_into(l);
  Monomial ug = g.lm().divide_into(l);
  // lc-normalized: basis elements are monic.
  Poly<K> s = poly_axpy(F_, nv_, Poly<K>{}, F_.one(), uf, f, N_);
  return poly_axpy(F_, nv_, s, F_.neg(F_.one()), ug, g, N_);
}

template <class K>
Poly<K> TruncatedGB<K>::reduce_full(Poly<K> p) const {
  Poly<K> out;
  while (!p.is_zero()) {
    const Monomial& t = p.lm();
    const Poly<K>* div = nullptr;
    for (const auto& g : basis_) {
      if (g.lm().divides(t)) {
        div = &g;
        break;
      }
    }
    if (!div) {
      out.terms.push_back(p.terms.front());
      p.terms.erase(p.terms.begin());
      continue;
    }
    Monomial u = div->lm().divide_into(t);
    p = poly_axpy(F_, nv_, p, F_.neg(p.lc()), u, *div, N_);
  }
  return out;
}

template <class K>
bool TruncatedGB<K>::add_poly(Poly<K> p) {
  p = reduce_full(std::move(p));
  if (p.is_zero()) return false;
  p = poly_monic(F_, p);
  basis_.push_back(std::move(p));
  add_pairs_for(basis_.size() - 1);
  return true;
}

template <class K>
void TruncatedGB<K>::add_pairs_for(std::size_t idx) {
  auto later = [&](const Pair& a, const Pair& b) {  // min-heap on (deg, lcm, i, j)
    if (a.deg != b.deg) return a.deg > b.deg;
    if (!(a.lcm == b.lcm)) return grevlex_less(b.lcm, a.lcm, nv_);
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  };
  for (std::size_t i = 0; i < idx; ++i) {
    const Monomial& a = basis_[i].lm();
    const Monomial& b = basis_[idx].lm();
    if (a.coprime(b)) continue;  // S-polynomial reduces to zero
    Monomial l = a.lcm(b);
    pairs_.push_back({l.degree(), l, i, idx});
    std::push_heap(pairs_.begin(), pairs_.end(), later);
  }
}

template <class K>
void TruncatedGB<K>::drain_pairs() {
  auto later = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg > b.deg;
    if (!(a.lcm == b.lcm)) return grevlex_less(b.lcm, a.lcm, nv_);
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  };
  while (!pairs_.empty()) {
    std::pop_heap(pairs_.begin(), pairs_.end(), later);
    Pair pr = pairs_.back();
    pairs_.pop_back();
    add_poly(spoly(basis_[pr.i], basis_[pr.j]));
  }
}

template <class K>
bool TruncatedGB<K>::boundary_pass() {
  bool added = false;
  for (std::size_t idx = 0; idx < basis_.size(); ++idx) {
    // Copy: basis_ may grow while we scan.
    Poly<K> f = basis_[idx];
    int lead = f.lm().degree();
    if (static_cast<int>(f.terms.size()) < 2) continue;
    int mintail = N_;
    for (std::size_t t = 1; t < f.terms.size(); ++t)
      mintail = std::min(mintail, f.terms[t].first.degree());
    if (mintail >= lead) continue;  // u * tail truncates entirely
    int udeg = N_ - lead;
    if (udeg < 0) continue;
    Poly<K> tail;
    tail.terms.assign(f.terms.begin() + 1, f.terms.end());
    std::vector<Monomial> us;
    for_each_monomial_of_degree(nv_, udeg, [&](const Monomial& m) { us.push_back(m); });
    for (const Monomial& u : us) {
      Poly<K> s = poly_axpy(F_, nv_, Poly<K>{}, F_.one(), u, tail, N_);
      if (s.is_zero()) continue;
      if (add_poly(std::move(s))) added = true;
    }
  }
  return added;
}

template <class K>
void TruncatedGB<K>::minimalize() {
  // Leads are pairwise distinct (a repeat would have reduced to zero), so a
  // minimal basis keeps exactly the elements with undivided leads; the rest
  // still reduce to zero against it.
  std::vector<Poly<K>> kept;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis_.size() && !redundant; ++j)
      if (i != j && basis_[j].lm().divides(basis_[i].lm())) redundant = true;
    if (!redundant) kept.push_back(basis_[i]);
  }
  basis_ = std::move(kept);
  std::sort(basis_.begin(), basis_.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return grevlex_less(a.lm(), b.lm(), nv_);
  });
  // Tail-reduce once: tails are strictly below every lead, so this yields the
  // unique reduced basis for the fixed lead set.
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Poly<K> lead;
    lead.terms.push_back(basis_[i].terms.front());
    Poly<K> tail;
    tail.terms.assign(basis_[i].terms.begin() + 1, basis_[i].terms.end());
    Poly<K> red = reduce_full(std::move(tail));
    lead.terms.insert(lead.terms.end(), red.terms.begin(), red.terms.end());
    basis_[i] = std::move(lead);
  }
}

template <class K>
void TruncatedGB<K>::build_tables(std::size_t universe_cap) {
  universe_ = monomials_below(nv_, N_);
  if (universe_.size() > universe_cap)
    throw ResourceLimit("monomial universe exceeds cap: " +
                        std::to_string(universe_.size()));
  uni_index_.reserve(universe_.size() * 2);
  for (std::size_t i = 0; i < universe_.size(); ++i)
    uni_index_[universe_[i].key()] = static_cast<int>(i);
  std_.clear();
  std_index_.clear();
  std::vector<int> divisor(universe_.size(), -1);
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    for (std::size_t g = 0; g < basis_.size(); ++g)
      if (basis_[g].lm().divides(universe_[i])) {
        divisor[i] = static_cast<int>(g);
        break;
      }
    if (divisor[i] < 0) {
      std_index_[universe_[i].key()] = static_cast<int>(std_.size());
      std_.push_back(universe_[i]);
    }
  }
  nf_.assign(universe_.size(), {});
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    const Monomial& t = universe_[i];
    if (divisor[i] < 0) {
      nf_[i] = {{std_index_.at(t.key()), F_.one()}};
      continue;
    }
    const Poly<K>& g = basis_[static_cast<std::size_t>(divisor[i])];
    Monomial u = g.lm().divide_into(t);
    SparseVec<K> acc;
    for (std::size_t k = 1; k < g.terms.size(); ++k) {
      const auto& [m, c] = g.terms[k];
      Monomial um = u.mul(m);
      if (um.degree() >= N_) continue;
      // u*m is grevlex-smaller than t, so its normal form is already known.
      acc = sparse_axpy(F_, acc, F_.neg(c), nf_[uni_index_.at(um.key())]);
    }
    nf_[i] = std::move(acc);
  }
}

template <class K>
int TruncatedGB<K>::std_index(const Monomial& m) const {
  auto it = std_index_.find(m.key());
  return it == std_index_.end() ? -1 : it->second;
}

template <class K>
const SparseVec<K>& TruncatedGB<K>::nf(const Monomial& m) const {
  auto it = uni_index_.find(m.key());
  if (it == uni_index_.end())
    throw OrderOutOfRange("normal form requested outside the truncation");
  return nf_[static_cast<std::size_t>(it->second)];
}

template <class K>
SparseVec<K> TruncatedGB<K>::nf_poly(const Poly<K>& p) const {
  SparseVec<K> acc;
  for (const auto& [m, c] : p.terms) {
    if (m.degree() >= N_) continue;
    acc = sparse_axpy(F_, acc, c, nf(m));
  }
  return acc;
}

template <class K>
void TruncatedGB<K>::certify(const std::vector<Poly<K>>& original_gens) const {
  for (const auto& g : original_gens) {
    if (!nf_poly(g).empty())
      throw CrossCheckFailure("generator does not reduce to zero");
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (basis_[i].lm().coprime(basis_[j].lm())) continue;
      if (!nf_poly(spoly(basis_[i], basis_[j])).empty())
        throw CrossCheckFailure("S-polynomial with nonzero normal form");
    }
    // Boundary pairs against the implicit degree-N monomial generators.
    const Poly<K>& f = basis_[i];
    if (f.terms.size() < 2) continue;
    int lead = f.lm().degree();
    int mintail = N_;
    for (std::size_t t = 1; t < f.terms.size(); ++t)
      mintail = std::min(mintail, f.terms[t].first.degree());
    if (mintail >= lead) continue;
    for_each_monomial_of_degree(nv_, N_ - lead, [&](const Monomial& u) {
      SparseVec<K> acc;
      for (std::size_t t = 1; t < f.terms.size(); ++t) {
        const auto& [m, c] = f.terms[t];
        Monomial um = u.mul(m);
        if (um.degree() >= N_) continue;
        acc = sparse_axpy(F_, acc, c, nf(um));
      }
      if (!acc.empty())
        throw CrossCheckFailure("m^N boundary pair with nonzero normal form");
    });
  }
}

template class TruncatedGB<PrimeField>;
template class TruncatedGB<RationalField>;

}  // namespace hilb
