#include "hilb/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hilb {

// ---------------------------------------------------------------------------
// TruncatedAlgebra queries
// ---------------------------------------------------------------------------

template <class K>
const Subspace<K>& TruncatedAlgebra<K>::power(int j) const {
  if (j < 0 || j > N) throw OrderOutOfRange("power index " + std::to_string(j));
  return chain[static_cast<std::size_t>(j)];
}

template <class K>
long long TruncatedAlgebra<K>::hilbert_value(int n) const {
  if (n < 0 || n + 1 > N) throw OrderOutOfRange("Hilbert value outside truncation");
  return power(n).dim() - power(n + 1).dim();
}

template <class K>
std::vector<long long> TruncatedAlgebra<K>::hilbert_values() const {
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) out.push_back(hilbert_value(n));
  return out;
}

template <class K>
SparseVec<K> TruncatedAlgebra<K>::unit_vector() const {
  if (kind != AlgebraKind::extension_ring) {
    for (int i = 0; i < dim; ++i)
      if (order_of[static_cast<std::size_t>(i)] == 0) return {{i, F.one()}};
    throw Error("algebra without a unit coordinate");
  }
  // 1 (x) X^0 in adapted coordinates.
  SparseVec<K> base_unit = ext_base->unit_vector();
  SparseVec<K> out;
  std::vector<typename K::Elem> acc(ext_rows.size(), F.zero());
  for (auto& [j, c] : base_unit)
    for (std::size_t i = 0; i < ext_rows.size(); ++i) {
      auto t = ext_tcols[static_cast<std::size_t>(j)][i];
      if (!F.is_zero(t)) acc[i] = F.add(acc[i], F.mul(c, t));
    }
  for (int i = 0; i < dim; ++i) {
    auto& [k, alpha] = ext_label[static_cast<std::size_t>(i)];
    if (alpha.is_one() && !F.is_zero(acc[static_cast<std::size_t>(k)]))
      out.emplace_back(i, acc[static_cast<std::size_t>(k)]);
  }
  return out;
}

template <class K>
SparseVec<K> TruncatedAlgebra<K>::generator_element(int i) const {
  return gen_ops[static_cast<std::size_t>(i)].apply(F, unit_vector());
}

template <class K>
SparseVec<K> TruncatedAlgebra<K>::apply_word(const std::vector<int>& w,
                                             SparseVec<K> v) const {
  for (int g : w) v = gen_ops[static_cast<std::size_t>(g)].apply(F, v);
  return v;
}

template <class K>
SparseVec<K> TruncatedAlgebra<K>::mult_vec(const SparseVec<K>& u,
                                           const SparseVec<K>& v) const {
  if (kind != AlgebraKind::extension_ring) {
    SparseVec<K> acc;
    for (auto& [b, c] : u)
      acc = sparse_axpy(F, acc, c, apply_word(words[static_cast<std::size_t>(b)], v));
    return acc;
  }
  // Blockwise: (v_k (x) X^a) * (v_k' (x) X^b) = (v_k v_k') (x) X^{a+b}.
  std::map<std::pair<int, std::uint64_t>, int> label_index;
  for (int i = 0; i < dim; ++i)
    label_index[{ext_label[static_cast<std::size_t>(i)].first,
                 ext_label[static_cast<std::size_t>(i)].second.key()}] = i;
  SparseVec<K> acc;
  for (auto& [iu, cu] : u) {
    auto& [k, alpha] = ext_label[static_cast<std::size_t>(iu)];
    for (auto& [iv, cv] : v) {
      auto& [k2, beta] = ext_label[static_cast<std::size_t>(iv)];
      Monomial gamma = alpha.mul(beta);
      if (ext_border[static_cast<std::size_t>(k)] + ext_border[static_cast<std::size_t>(k2)] +
              gamma.degree() >= N)
        continue;
      SparseVec<K> p = ext_base->mult_vec(ext_rows[static_cast<std::size_t>(k)],
                                          ext_rows[static_cast<std::size_t>(k2)]);
      std::vector<typename K::Elem> ad(ext_rows.size(), F.zero());
      for (auto& [j, c] : p)
        for (std::size_t t = 0; t < ext_rows.size(); ++t) {
          auto e = ext_tcols[static_cast<std::size_t>(j)][t];
          if (!F.is_zero(e)) ad[t] = F.add(ad[t], F.mul(c, e));
        }
      auto scale = F.mul(cu, cv);
      SparseVec<K> piece;
      for (std::size_t t = 0; t < ad.size(); ++t) {
        if (F.is_zero(ad[t])) continue;
        if (ext_border[t] + gamma.degree() >= N) continue;
        auto it = label_index.find({static_cast<int>(t), gamma.key()});
        if (it == label_index.end()) continue;
        piece.emplace_back(it->second, F.mul(scale, ad[t]));
      }
      std::sort(piece.begin(), piece.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      acc = sparse_axpy(F, acc, F.one(), piece);
    }
  }
  return acc;
}

template <class K>
LinOp<K> TruncatedAlgebra<K>::element_op(const SparseVec<K>& u) const {
  LinOp<K> op;
  op.n = dim;
  op.cols.resize(static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j)
    op.cols[static_cast<std::size_t>(j)] = mult_vec(u, {{j, F.one()}});
  return op;
}

template <class K>
LinOp<K> TruncatedAlgebra<K>::linear_form_op(
    const std::vector<typename K::Elem>& coeffs) const {
  LinOp<K> op = LinOp<K>::zero(dim);
  for (std::size_t i = 0; i < gen_ops.size(); ++i) {
    if (F.is_zero(coeffs[i])) continue;
    op = op.plus(F, coeffs[i], gen_ops[i]);
  }
  return op;
}

template <class K>
SparseVec<K> TruncatedAlgebra<K>::linear_form_vec(
    const std::vector<typename K::Elem>& coeffs) const {
  SparseVec<K> acc;
  for (std::size_t i = 0; i < gen_ops.size(); ++i) {
    if (F.is_zero(coeffs[i])) continue;
    acc = sparse_axpy(F, acc, coeffs[i], generator_element(static_cast<int>(i)));
  }
  return acc;
}

template <class K>
std::pair<int, SparseVec<K>> TruncatedAlgebra<K>::initial_form(
    const SparseVec<K>& v) const {
  if (v.empty()) throw ZeroElement("initial form of zero");
  int j = 0;
  while (j + 1 <= N && power(j + 1).contains(v)) ++j;
  SparseVec<K> residue = j + 1 <= N ? power(j + 1).reduce(v) : v;
  if (residue.empty()) throw ZeroElement("element vanishes past the truncation");
  return {j, residue};
}

template <class K>
int TruncatedAlgebra<K>::artinian_bound() const {
  for (int j = 0; j <= N; ++j)
    if (power(j).dim() == 0) return j;
  return -1;
}

// ---------------------------------------------------------------------------
// shared construction helpers
// ---------------------------------------------------------------------------

namespace {

template <class K>
std::vector<Subspace<K>> closure_chain(const K& F, int dim, int N,
                                       const std::vector<LinOp<K>>& ops) {
  std::vector<Subspace<K>> chain;
  chain.reserve(static_cast<std::size_t>(N) + 1);
  chain.push_back(Subspace<K>::full(F, dim));
  for (int j = 1; j <= N; ++j) {
    Subspace<K> next(F, dim);
    for (const auto& row : chain.back().rows())
      for (const auto& op : ops) next.insert(op.apply(F, row));
    chain.push_back(std::move(next));
  }
  return chain;
}

template <class K>
std::vector<int> orders_from_chain(const std::vector<Subspace<K>>& chain, int dim,
                                   const K& F) {
  std::vector<int> out(static_cast<std::size_t>(dim), 0);
  for (int b = 0; b < dim; ++b) {
    SparseVec<K> e{{b, F.one()}};
    int j = 0;
    while (j + 1 < static_cast<int>(chain.size()) && chain[static_cast<std::size_t>(j + 1)].contains(e))
      ++j;
    out[static_cast<std::size_t>(b)] = j;
  }
  return out;
}

template <class K>
void check_commutation(const TruncatedAlgebra<K>& A) {
  const K& F = A.F;
  int samples = A.dim <= 400 ? A.dim : 64;
  int stride = std::max(1, A.dim / std::max(1, samples));
  for (std::size_t i = 0; i < A.gen_ops.size(); ++i)
    for (std::size_t j = i + 1; j < A.gen_ops.size(); ++j)
      for (int b = 0; b < A.dim; b += stride) {
        SparseVec<K> e{{b, F.one()}};
        auto ij = A.gen_ops[i].apply(F, A.gen_ops[j].apply(F, e));
        auto ji = A.gen_ops[j].apply(F, A.gen_ops[i].apply(F, e));
        if (ij != ji)
          throw CrossCheckFailure("multiplication operators do not commute");
      }
}

/// u * p truncated, where u is a monomial over the kept variables.
template <class K>
Poly<K> poly_mul_trunc(const K& F, int nvars, const Poly<K>& a, const Poly<K>& b,
                       int trunc) {
  Poly<K> acc;
  for (auto& [m, c] : a.terms) {
    if (m.degree() >= trunc) continue;
    acc = poly_axpy(F, nvars, acc, c, m, b, trunc);
  }
  return acc;
}

template <class K>
Poly<K> poly_substitute(const K& F, int nvars, const Poly<K>& p, int var,
                        const Poly<K>& repl, int trunc) {
  Poly<K> out;
  for (auto& [m, c] : p.terms) {
    int k = m.e[var];
    Monomial rest = m;
    rest.e[var] = 0;
    rest.deg = static_cast<std::uint16_t>(rest.deg - k);
    Poly<K> piece;
    piece.terms.emplace_back(rest, c);
    for (int t = 0; t < k; ++t) piece = poly_mul_trunc(F, nvars, piece, repl, trunc);
    out = poly_axpy(F, nvars, out, F.one(), Monomial::one(), piece, trunc);
  }
  return out;
}

std::vector<std::string> extension_var_names(std::vector<std::string> base,
                                             int extra) {
  std::set<std::string> taken(base.begin(), base.end());
  for (int i = 1; i <= extra; ++i) {
    std::string name = "w" + std::to_string(i);
    while (taken.count(name)) name += "_";
    taken.insert(name);
    base.push_back(name);
  }
  return base;
}

}  // namespace

// ---------------------------------------------------------------------------
// lowering
// ---------------------------------------------------------------------------

QuotientData lower_to_quotient(const RingSpec& spec, int toric_degree_cap) {
  if (spec.is_quotient()) return spec.quotient();
  if (spec.is_semigroup()) {
    NumericalSemigroup S(spec.semigroup().gens);
    QuotientData q;
    q.field = FieldSpec::Q();  // placeholder; lengths are field-independent
    for (long long a : S.gens()) q.vars.push_back("t" + std::to_string(a));
    if (q.vars.size() > kMaxVars)
      throw ValidationError("too many semigroup generators to present");
    q.ideal = S.toric_relations(toric_degree_cap);
    return q;
  }
  // Flatten nested extensions, then append fresh variables.
  const RingSpec* cur = &spec;
  int extra = 0;
  while (cur->is_extension()) {
    extra += cur->extension().extra;
    cur = cur->extension().base.get();
  }
  QuotientData base = lower_to_quotient(*cur, toric_degree_cap);
  QuotientData q;
  q.field = base.field;
  q.vars = extension_var_names(base.vars, extra);
  if (q.vars.size() > kMaxVars)
    throw ValidationError("extension exceeds the variable cap");
  int nv = static_cast<int>(q.vars.size());
  for (auto p : base.ideal) {
    p.nvars = nv;  // exponents of the new variables are zero
    q.ideal.push_back(std::move(p));
  }
  if (base.declared_dim) q.declared_dim = *base.declared_dim + extra;
  return q;
}

// ---------------------------------------------------------------------------
// build paths
// ---------------------------------------------------------------------------

namespace {

template <class K>
AlgebraPtr<K> build_quotient(const K& F, const QuotientData& q, int N,
                             const BuildOptions& opt) {
  int nv = static_cast<int>(q.vars.size());
  std::vector<Poly<K>> gens;
  for (const auto& g : q.ideal) gens.push_back(poly_from_ipoly(F, g, N));

  // Eliminate variables that occur in exactly one, linear, term of some
  // generator: v = -c^{-1} (g - c v).  Appended superficial linear forms are
  // always of this shape.
  std::vector<int> keep(static_cast<std::size_t>(nv), 1);
  std::vector<std::pair<int, Poly<K>>> repls;  // (var, replacement over kept vars)
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t gi = 0; gi < gens.size() && !changed; ++gi) {
      const Poly<K>& g = gens[gi];
      if (g.is_zero()) continue;
      for (int v = 0; v < nv && !changed; ++v) {
        if (!keep[static_cast<std::size_t>(v)]) continue;
        int linear_at = -1;
        bool elsewhere = false;
        for (std::size_t t = 0; t < g.terms.size(); ++t) {
          const Monomial& m = g.terms[t].first;
          if (!m.e[v]) continue;
          if (m.degree() == 1 && m.e[v] == 1 && linear_at < 0)
            linear_at = static_cast<int>(t);
          else
            elsewhere = true;
        }
        if (linear_at < 0 || elsewhere) continue;
        auto c = g.terms[static_cast<std::size_t>(linear_at)].second;
        Poly<K> rest;
        for (std::size_t t = 0; t < g.terms.size(); ++t)
          if (static_cast<int>(t) != linear_at) rest.terms.push_back(g.terms[t]);
        auto scale = F.neg(F.inv(c));
        for (auto& [m, cc] : rest.terms) cc = F.mul(scale, cc);
        // Substitute into every other generator and recorded replacement.
        std::vector<Poly<K>> next;
        for (std::size_t gj = 0; gj < gens.size(); ++gj) {
          if (gj == gi) continue;
          next.push_back(poly_substitute(F, nv, gens[gj], v, rest, N));
        }
        gens = std::move(next);
        for (auto& [w, r] : repls) r = poly_substitute(F, nv, r, v, rest, N);
        repls.emplace_back(v, rest);
        keep[static_cast<std::size_t>(v)] = 0;
        changed = true;
      }
    }
  }
  std::erase_if(gens, [](const Poly<K>& p) { return p.is_zero(); });

  // Remap kept variables onto 0..k-1 for the Groebner engine.
  std::vector<int> kept;
  std::vector<int> newidx(static_cast<std::size_t>(nv), -1);
  for (int v = 0; v < nv; ++v)
    if (keep[static_cast<std::size_t>(v)]) {
      newidx[static_cast<std::size_t>(v)] = static_cast<int>(kept.size());
      kept.push_back(v);
    }
  int knv = static_cast<int>(kept.size());
  auto remap_mon = [&](const Monomial& m) {
    Monomial r;
    for (int v = 0; v < nv; ++v)
      if (m.e[v]) r.e[newidx[static_cast<std::size_t>(v)]] = m.e[v];
    r.deg = m.deg;
    return r;
  };
  std::vector<Poly<K>> kgens;
  for (auto& g : gens) {
    Poly<K> r;
    for (auto& [m, c] : g.terms) r.terms.emplace_back(remap_mon(m), c);
    std::sort(r.terms.begin(), r.terms.end(), [&](const auto& a, const auto& b) {
      return grevlex_less(b.first, a.first, knv);
    });
    kgens.push_back(std::move(r));
  }

  TruncatedGB<K> gb(F, knv, N, kgens);
  const auto& std_mons = gb.standard_monomials();
  if (std_mons.size() > opt.basis_cap)
    throw ResourceLimit("basis size " + std::to_string(std_mons.size()) +
                        " exceeds cap " + std::to_string(opt.basis_cap));
  if (opt.certify) gb.certify(kgens);

  auto A = std::make_shared<TruncatedAlgebra<K>>(F);
  A->kind = AlgebraKind::quotient_ring;
  A->N = N;
  A->dim = static_cast<int>(std_mons.size());
  A->gen_names = q.vars;

  // Operators for the kept variables come straight from normal forms.
  std::vector<LinOp<K>> kept_ops(static_cast<std::size_t>(knv));
  for (int kv = 0; kv < knv; ++kv) {
    LinOp<K>& op = kept_ops[static_cast<std::size_t>(kv)];
    op.n = A->dim;
    op.cols.resize(static_cast<std::size_t>(A->dim));
    for (int s = 0; s < A->dim; ++s) {
      Monomial t = std_mons[static_cast<std::size_t>(s)].mul(Monomial::var(kv));
      if (t.degree() >= N) continue;
      op.cols[static_cast<std::size_t>(s)] = gb.nf(t);
    }
  }
  A->words.resize(static_cast<std::size_t>(A->dim));
  A->basis_names.resize(static_cast<std::size_t>(A->dim));
  for (int s = 0; s < A->dim; ++s) {
    const Monomial& m = std_mons[static_cast<std::size_t>(s)];
    for (int kv = 0; kv < knv; ++kv)
      for (int t = 0; t < m.e[kv]; ++t)
        A->words[static_cast<std::size_t>(s)].push_back(kept[static_cast<std::size_t>(kv)]);
    std::vector<std::string> kept_names;
    for (int v : kept) kept_names.push_back(q.vars[static_cast<std::size_t>(v)]);
    A->basis_names[static_cast<std::size_t>(s)] = monomial_str(m, kept_names);
  }

  // Eliminated variables multiply as their replacement elements.
  A->gen_ops.resize(static_cast<std::size_t>(nv));
  for (int kv = 0; kv < knv; ++kv)
    A->gen_ops[static_cast<std::size_t>(kept[static_cast<std::size_t>(kv)])] =
        kept_ops[static_cast<std::size_t>(kv)];
  for (auto& [v, repl] : repls) {
    Poly<K> r;
    for (auto& [m, c] : repl.terms) r.terms.emplace_back(remap_mon(m), c);
    SparseVec<K> vec = gb.nf_poly(r);
    LinOp<K> op = LinOp<K>::zero(A->dim);
    // replacement is a combination of kept variables and higher terms; use
    // the generic word route via a temporary algebra view
    op.cols.resize(static_cast<std::size_t>(A->dim));
    for (int s = 0; s < A->dim; ++s) {
      SparseVec<K> acc;
      for (auto& [b, c] : vec) {
        // b * s as monomials
        Monomial prod = std_mons[static_cast<std::size_t>(b)].mul(
            std_mons[static_cast<std::size_t>(s)]);
        if (prod.degree() >= N) continue;
        acc = sparse_axpy(F, acc, c, gb.nf(prod));
      }
      op.cols[static_cast<std::size_t>(s)] = std::move(acc);
    }
    A->gen_ops[static_cast<std::size_t>(v)] = std::move(op);
  }

  std::vector<LinOp<K>> all_ops = A->gen_ops;
  A->chain = closure_chain(F, A->dim, N, all_ops);
  A->order_of = orders_from_chain(A->chain, A->dim, F);
  if (opt.certify) check_commutation(*A);
  return A;
}

template <class K>
AlgebraPtr<K> build_semigroup(const K& F, const SemigroupData& s, int N,
                              const BuildOptions& opt) {
  NumericalSemigroup S(s.gens);
  auto basis = S.truncation_basis(N);
  if (basis.size() > opt.basis_cap)
    throw ResourceLimit("basis size exceeds cap");
  auto A = std::make_shared<TruncatedAlgebra<K>>(F);
  A->kind = AlgebraKind::semigroup_ring;
  A->N = N;
  A->dim = static_cast<int>(basis.size());
  std::map<long long, int> index;
  for (int i = 0; i < A->dim; ++i) index[basis[static_cast<std::size_t>(i)].first] = i;
  for (long long a : S.gens()) A->gen_names.push_back("t" + std::to_string(a));
  A->gen_ops.resize(S.gens().size());
  for (std::size_t g = 0; g < S.gens().size(); ++g) {
    LinOp<K>& op = A->gen_ops[g];
    op.n = A->dim;
    op.cols.resize(static_cast<std::size_t>(A->dim));
    for (int i = 0; i < A->dim; ++i) {
      long long target = basis[static_cast<std::size_t>(i)].first + S.gens()[g];
      auto it = index.find(target);
      if (it != index.end()) op.cols[static_cast<std::size_t>(i)] = {{it->second, F.one()}};
    }
  }
  A->words.resize(static_cast<std::size_t>(A->dim));
  A->basis_names.resize(static_cast<std::size_t>(A->dim));
  for (int i = 0; i < A->dim; ++i) {
    long long v = basis[static_cast<std::size_t>(i)].first;
    A->words[static_cast<std::size_t>(i)] = S.decompose(v);
    A->basis_names[static_cast<std::size_t>(i)] =
        v == 0 ? "1" : "t^" + std::to_string(v);
  }
  A->chain = closure_chain(F, A->dim, N, A->gen_ops);
  A->order_of = orders_from_chain(A->chain, A->dim, F);
  if (opt.certify) {
    // The subspace chain must reproduce the combinatorial order function.
    for (int i = 0; i < A->dim; ++i)
      if (A->order_of[static_cast<std::size_t>(i)] != basis[static_cast<std::size_t>(i)].second)
        throw CrossCheckFailure("semigroup order mismatch: linear algebra vs "
                                "enumeration");
    check_commutation(*A);
  }
  return A;
}

template <class K>
AlgebraPtr<K> build_extension(const K& F, const RingSpec& spec, int N,
                              const BuildOptions& opt) {
  const RingSpec* cur = &spec;
  int extra = 0;
  while (cur->is_extension()) {
    extra += cur->extension().extra;
    cur = cur->extension().base.get();
  }
  AlgebraPtr<K> base = build_truncation(F, *cur, N, opt);
  int bd = base->dim;

  // Flag basis adapted to the base filtration: suffixes span the chain.
  auto A = std::make_shared<TruncatedAlgebra<K>>(F);
  A->kind = AlgebraKind::extension_ring;
  A->N = N;
  A->ext_base = base;
  A->ext_m = extra;
  {
    Subspace<K> acc = base->power(N);
    if (acc.dim() != 0)
      throw CrossCheckFailure("m^N image nonzero in the base truncation");
    std::vector<std::pair<SparseVec<K>, int>> adapted;
    for (int j = N - 1; j >= 0; --j)
      for (const auto& row : base->power(j).rows()) {
        SparseVec<K> r = acc.reduce(row);
        if (r.empty()) continue;
        auto inv = F.inv(r.front().second);
        for (auto& [i, c] : r) c = F.mul(inv, c);
        adapted.emplace_back(r, j);
        acc.insert(r);
      }
    if (static_cast<int>(adapted.size()) != bd)
      throw CrossCheckFailure("adapted basis does not span the base");
    std::reverse(adapted.begin(), adapted.end());  // ascending order
    for (auto& [row, ord] : adapted) {
      A->ext_rows.push_back(row);
      A->ext_border.push_back(ord);
    }
  }

  // Invert the adapted basis matrix (columns = adapted vectors).
  {
    std::vector<std::vector<typename K::Elem>> m(
        static_cast<std::size_t>(bd),
        std::vector<typename K::Elem>(static_cast<std::size_t>(2 * bd), F.zero()));
    for (int k = 0; k < bd; ++k) {
      for (auto& [i, c] : A->ext_rows[static_cast<std::size_t>(k)])
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = c;
      m[static_cast<std::size_t>(k)][static_cast<std::size_t>(bd + k)] = F.one();
    }
    for (int col = 0; col < bd; ++col) {
      int piv = -1;
      for (int r = col; r < bd; ++r)
        if (!F.is_zero(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)])) {
          piv = r;
          break;
        }
      if (piv < 0) throw CrossCheckFailure("adapted basis is singular");
      std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(col)]);
      auto inv = F.inv(m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)]);
      for (int c = 0; c < 2 * bd; ++c)
        m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] =
            F.mul(inv, m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)]);
      for (int r = 0; r < bd; ++r) {
        if (r == col) continue;
        auto f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        if (F.is_zero(f)) continue;
        for (int c = 0; c < 2 * bd; ++c)
          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
              F.sub(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                    F.mul(f, m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)]));
      }
    }
    // tcols[j] = adapted coordinates of the unit vector e_j.
    A->ext_tcols.assign(static_cast<std::size_t>(bd),
                        std::vector<typename K::Elem>(static_cast<std::size_t>(bd), F.zero()));
    for (int i = 0; i < bd; ++i)
      for (int j = 0; j < bd; ++j)
        A->ext_tcols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(bd + j)];
  }

  // Basis labels (k, alpha), graded by border + |alpha|.
  std::vector<Monomial> xmons = monomials_below(extra, N);
  std::vector<std::tuple<int, int, std::uint64_t, int>> order_keys;
  std::vector<std::pair<int, Monomial>> labels;
  for (const auto& alpha : xmons)
    for (int k = 0; k < bd; ++k) {
      int o = A->ext_border[static_cast<std::size_t>(k)] + alpha.degree();
      if (o >= N) continue;
      order_keys.emplace_back(o, alpha.degree(), alpha.key(), k);
      labels.emplace_back(k, alpha);
    }
  std::vector<std::size_t> perm(labels.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return order_keys[a] < order_keys[b];
  });
  A->dim = static_cast<int>(labels.size());
  if (labels.size() > opt.basis_cap) throw ResourceLimit("extension basis exceeds cap");
  A->ext_label.resize(labels.size());
  std::map<std::pair<int, std::uint64_t>, int> label_index;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    A->ext_label[i] = labels[perm[i]];
    label_index[{A->ext_label[i].first, A->ext_label[i].second.key()}] =
        static_cast<int>(i);
  }
  A->basis_names.resize(labels.size());
  {
    std::vector<std::string> xnames;
    auto allnames = extension_var_names(base->gen_names, extra);
    for (std::size_t i = base->gen_names.size(); i < allnames.size(); ++i)
      xnames.push_back(allnames[i]);
    A->gen_names = allnames;
    for (std::size_t i = 0; i < A->ext_label.size(); ++i) {
      auto& [k, alpha] = A->ext_label[i];
      std::string nm = "[" + std::to_string(k) + "]";
      if (!alpha.is_one()) nm += "*" + monomial_str(alpha, xnames);
      A->basis_names[i] = nm;
    }
  }

  // Base-variable operators: adapted image of each adapted vector, shifted
  // blockwise; X-variable operators shift the label monomial.
  std::vector<std::vector<std::pair<int, typename K::Elem>>> base_cols(
      base->gen_ops.size());
  for (std::size_t g = 0; g < base->gen_ops.size(); ++g) {
    base_cols[g].clear();
  }
  // adapted image per (generator, k): list of (target k', coeff)
  std::vector<std::vector<std::vector<std::pair<int, typename K::Elem>>>> img(
      base->gen_ops.size(),
      std::vector<std::vector<std::pair<int, typename K::Elem>>>(
          static_cast<std::size_t>(bd)));
  for (std::size_t g = 0; g < base->gen_ops.size(); ++g)
    for (int k = 0; k < bd; ++k) {
      SparseVec<K> w = base->gen_ops[g].apply(F, A->ext_rows[static_cast<std::size_t>(k)]);
      std::vector<typename K::Elem> ad(static_cast<std::size_t>(bd), F.zero());
      for (auto& [j, c] : w)
        for (int t = 0; t < bd; ++t) {
          auto e = A->ext_tcols[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
          if (!F.is_zero(e))
            ad[static_cast<std::size_t>(t)] = F.add(ad[static_cast<std::size_t>(t)], F.mul(c, e));
        }
      for (int t = 0; t < bd; ++t) {
        if (F.is_zero(ad[static_cast<std::size_t>(t)])) continue;
        if (A->ext_border[static_cast<std::size_t>(t)] <=
            A->ext_border[static_cast<std::size_t>(k)])
          throw CrossCheckFailure("generator image does not raise the order");
        img[g][static_cast<std::size_t>(k)].emplace_back(t, ad[static_cast<std::size_t>(t)]);
      }
    }
  A->gen_ops.assign(base->gen_ops.size() + static_cast<std::size_t>(extra),
                    LinOp<K>::zero(A->dim));
  for (auto& op : A->gen_ops) op.cols.resize(static_cast<std::size_t>(A->dim));
  for (int i = 0; i < A->dim; ++i) {
    auto& [k, alpha] = A->ext_label[static_cast<std::size_t>(i)];
    for (std::size_t g = 0; g < base->gen_ops.size(); ++g) {
      SparseVec<K> col;
      for (auto& [t, c] : img[g][static_cast<std::size_t>(k)]) {
        if (A->ext_border[static_cast<std::size_t>(t)] + alpha.degree() >= N) continue;
        auto it = label_index.find({t, alpha.key()});
        if (it == label_index.end()) continue;
        col.emplace_back(it->second, c);
      }
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      A->gen_ops[g].cols[static_cast<std::size_t>(i)] = std::move(col);
    }
    for (int x = 0; x < extra; ++x) {
      Monomial beta = alpha.mul(Monomial::var(x));
      if (A->ext_border[static_cast<std::size_t>(k)] + beta.degree() >= N) continue;
      auto it = label_index.find({k, beta.key()});
      if (it == label_index.end()) continue;
      A->gen_ops[base->gen_ops.size() + static_cast<std::size_t>(x)]
          .cols[static_cast<std::size_t>(i)] = {{it->second, F.one()}};
    }
  }

  A->chain = closure_chain(F, A->dim, N, A->gen_ops);
  A->order_of = orders_from_chain(A->chain, A->dim, F);
  if (opt.certify) {
    for (int i = 0; i < A->dim; ++i) {
      auto& [k, alpha] = A->ext_label[static_cast<std::size_t>(i)];
      if (A->order_of[static_cast<std::size_t>(i)] !=
          A->ext_border[static_cast<std::size_t>(k)] + alpha.degree())
        throw CrossCheckFailure("tensor grading mismatch with subspace chain");
    }
    check_commutation(*A);
  }
  return A;
}

}  // namespace

template <class K>
AlgebraPtr<K> build_truncation(const K& F, const RingSpec& spec, int N,
                               const BuildOptions& opt) {
  if (N < 2) throw TruncationTooSmall("truncation order must be >= 2");
  if (spec.is_quotient()) return build_quotient(F, spec.quotient(), N, opt);
  if (spec.is_semigroup()) return build_semigroup(F, spec.semigroup(), N, opt);
  return build_extension(F, spec, N, opt);
}

// ---------------------------------------------------------------------------
// ideal machinery
// ---------------------------------------------------------------------------

template <class K>
IdealHandle<K> ideal_from_elements(const TruncatedAlgebra<K>& A,
                                   const std::vector<SparseVec<K>>& elems) {
  Subspace<K> span(A.F, A.dim);
  for (const auto& f : elems)
    for (int b = 0; b < A.dim; ++b)
      span.insert(A.mult_vec({{b, A.F.one()}}, f));
  return {elems, std::move(span)};
}

template <class K>
IdealHandle<K> ideal_from_linear_forms(
    const TruncatedAlgebra<K>& A,
    const std::vector<std::vector<typename K::Elem>>& coeff_rows) {
  Subspace<K> span(A.F, A.dim);
  std::vector<SparseVec<K>> elems;
  for (const auto& coeffs : coeff_rows) {
    LinOp<K> op = A.linear_form_op(coeffs);
    elems.push_back(A.linear_form_vec(coeffs));
    for (int j = 0; j < A.dim; ++j) span.insert(op.cols[static_cast<std::size_t>(j)]);
  }
  return {std::move(elems), std::move(span)};
}

template <class K>
IdealHandle<K> colon_ideal(const TruncatedAlgebra<K>& A, const IdealHandle<K>& J,
                           const std::vector<SparseVec<K>>& multipliers) {
  Subspace<K> result = Subspace<K>::full(A.F, A.dim);
  bool first = true;
  for (const auto& f : multipliers) {
    if (f.empty()) continue;  // (J : 0) imposes nothing
    LinOp<K> op = A.element_op(f);
    Subspace<K> pre = preimage(A.F, op, J.span);
    result = first ? pre : intersect(A.F, result, pre);
    first = false;
  }
  std::vector<SparseVec<K>> gens(result.rows().begin(), result.rows().end());
  return {std::move(gens), std::move(result)};
}

template <class K>
Subspace<K> colon_by_m(const TruncatedAlgebra<K>& A, const Subspace<K>& W) {
  Subspace<K> result = Subspace<K>::full(A.F, A.dim);
  bool first = true;
  for (const auto& op : A.gen_ops) {
    Subspace<K> pre = preimage(A.F, op, W);
    result = first ? pre : intersect(A.F, result, pre);
    first = false;
  }
  return result;
}

template <class K>
int min_generators(const TruncatedAlgebra<K>& A, const IdealHandle<K>& J) {
  Subspace<K> mJ(A.F, A.dim);
  for (const auto& row : J.span.rows())
    for (const auto& op : A.gen_ops) mJ.insert(op.apply(A.F, row));
  return quotient_dim(J.span, mJ);
}

template <class K>
Subspace<K> ideal_times_subspace(const TruncatedAlgebra<K>& A,
                                 const std::vector<SparseVec<K>>& elems,
                                 const Subspace<K>& W) {
  Subspace<K> out(A.F, A.dim);
  for (const auto& f : elems) {
    LinOp<K> op = A.element_op(f);
    for (const auto& row : W.rows()) out.insert(op.apply(A.F, row));
  }
  return out;
}

template <class K>
int socle_dim(const TruncatedAlgebra<K>& A) {
  if (A.artinian_bound() < 0)
    throw Error("socle of a non-Artinian truncation");
  Subspace<K> soc = Subspace<K>::full(A.F, A.dim);
  bool first = true;
  for (const auto& op : A.gen_ops) {
    Subspace<K> ker = kernel(A.F, op);
    soc = first ? ker : intersect(A.F, soc, ker);
    first = false;
  }
  return soc.dim();
}

// ---------------------------------------------------------------------------

template class TruncatedAlgebra<PrimeField>;
template class TruncatedAlgebra<RationalField>;
template AlgebraPtr<PrimeField> build_truncation(const PrimeField&, const RingSpec&,
                                                 int, const BuildOptions&);
template AlgebraPtr<RationalField> build_truncation(const RationalField&,
                                                    const RingSpec&, int,
                                                    const BuildOptions&);
template IdealHandle<PrimeField> ideal_from_elements(
    const TruncatedAlgebra<PrimeField>&, const std::vector<SparseVec<PrimeField>>&);
template IdealHandle<RationalField> ideal_from_elements(
    const TruncatedAlgebra<RationalField>&,
    const std::vector<SparseVec<RationalField>>&);
template IdealHandle<PrimeField> ideal_from_linear_forms(
    const TruncatedAlgebra<PrimeField>&,
    const std::vector<std::vector<PrimeField::Elem>>&);
template IdealHandle<RationalField> ideal_from_linear_forms(
    const TruncatedAlgebra<RationalField>&,
    const std::vector<std::vector<RationalField::Elem>>&);
template IdealHandle<PrimeField> colon_ideal(const TruncatedAlgebra<PrimeField>&,
                                             const IdealHandle<PrimeField>&,
                                             const std::vector<SparseVec<PrimeField>>&);
template IdealHandle<RationalField> colon_ideal(
    const TruncatedAlgebra<RationalField>&, const IdealHandle<RationalField>&,
    const std::vector<SparseVec<RationalField>>&);
template Subspace<PrimeField> colon_by_m(const TruncatedAlgebra<PrimeField>&,
                                         const Subspace<PrimeField>&);
template Subspace<RationalField> colon_by_m(const TruncatedAlgebra<RationalField>&,
                                            const Subspace<RationalField>&);
template int min_generators(const TruncatedAlgebra<PrimeField>&,
                            const IdealHandle<PrimeField>&);
template int min_generators(const TruncatedAlgebra<RationalField>&,
                            const IdealHandle<RationalField>&);
template Subspace<PrimeField> ideal_times_subspace(
    const TruncatedAlgebra<PrimeField>&, const std::vector<SparseVec<PrimeField>>&,
    const Subspace<PrimeField>&);
template Subspace<RationalField> ideal_times_subspace(
    const TruncatedAlgebra<RationalField>&,
    const std::vector<SparseVec<RationalField>>&, const Subspace<RationalField>&);
template int socle_dim(const TruncatedAlgebra<PrimeField>&);
template int socle_dim(const TruncatedAlgebra<RationalField>&);

}  // namespace hilb
