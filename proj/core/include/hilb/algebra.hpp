#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hilb/groebner.hpp"
#include "hilb/linalg.hpp"
#include "hilb/ringspec.hpp"
#include "hilb/semigroup.hpp"

namespace hilb {

struct BuildOptions {
  std::size_t basis_cap = 20000;
  bool certify = true;       // cross-check construction (GB certificate, gradings)
  int toric_degree_cap = 18; // relation degree when lowering semigroup specs
};

enum class AlgebraKind { quotient_ring, semigroup_ring, extension_ring };

/// The finite-dimensional algebra A/m^N with multiplication operators for the
/// degree-one generators and the honestly computed chain of images of the
/// powers of the maximal ideal.  Immutable once built; shareable across
/// threads.
template <class K>
class TruncatedAlgebra {
 public:
  K F;
  AlgebraKind kind = AlgebraKind::quotient_ring;
  int N = 0;
  int dim = 0;
  std::vector<std::string> gen_names;
  std::vector<LinOp<K>> gen_ops;
  std::vector<std::string> basis_names;
  std::vector<int> order_of;        // order of each basis coordinate
  std::vector<Subspace<K>> chain;   // images of m^0 .. m^N (closure-computed)

  // quotient_ring / semigroup_ring: factorization of each basis element into
  // generators, for multiplication by arbitrary elements.
  std::vector<std::vector<int>> words;

  // extension_ring: base algebra, adapted base vectors (rows, base
  // coordinates), base-to-adapted transform columns, labels (k, alpha).
  std::shared_ptr<const TruncatedAlgebra<K>> ext_base;
  std::vector<SparseVec<K>> ext_rows;
  std::vector<std::vector<typename K::Elem>> ext_tcols;
  std::vector<int> ext_border;                    // order of adapted base vector k
  std::vector<std::pair<int, Monomial>> ext_label;  // basis i -> (k, alpha)
  int ext_m = 0;

  explicit TruncatedAlgebra(const K& f) : F(f) {}

  const Subspace<K>& power(int j) const;         // image of m^j, 0 <= j <= N
  long long hilbert_value(int n) const;          // l(m^n/m^{n+1}), n+1 <= N
  std::vector<long long> hilbert_values() const; // n = 0 .. N-1

  SparseVec<K> unit_vector() const;
  SparseVec<K> generator_element(int i) const;

  /// Multiplication by an arbitrary element u (basis coordinates).
  SparseVec<K> mult_vec(const SparseVec<K>& u, const SparseVec<K>& v) const;
  LinOp<K> element_op(const SparseVec<K>& u) const;

  /// Operator for a degree-one combination of the generators.
  LinOp<K> linear_form_op(const std::vector<typename K::Elem>& coeffs) const;
  SparseVec<K> linear_form_vec(const std::vector<typename K::Elem>& coeffs) const;

  /// Largest j with v in power(j), plus the residue mod power(j+1).
  std::pair<int, SparseVec<K>> initial_form(const SparseVec<K>& v) const;

  /// Smallest j <= N with power(j) = 0, or -1 if the truncation never dies
  /// (the ring is not Artinian as far as this truncation can see).
  int artinian_bound() const;

 private:
  SparseVec<K> apply_word(const std::vector<int>& w, SparseVec<K> v) const;
};

/// An ideal of A/m^N: generating elements plus their A-stable span.
template <class K>
struct IdealHandle {
  std::vector<SparseVec<K>> gens;
  Subspace<K> span;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const TruncatedAlgebra<K>>;

/// Builds A/m^N for the spec.  Quotient specs run the truncated Buchberger
/// engine (degree-one generators are eliminated by substitution first);
/// semigroup specs use the combinatorial backend; extension specs use the
/// tensor construction over the base truncation.
template <class K>
AlgebraPtr<K> build_truncation(const K& F, const RingSpec& spec, int N,
                               const BuildOptions& opt = {});

/// Ideal generated by elements (span of b*f over the basis).
template <class K>
IdealHandle<K> ideal_from_elements(const TruncatedAlgebra<K>& A,
                                   const std::vector<SparseVec<K>>& elems);

/// Ideal generated by degree-one combinations of the generators (the span is
/// the union of the operator images; no closure pass needed).
template <class K>
IdealHandle<K> ideal_from_linear_forms(
    const TruncatedAlgebra<K>& A,
    const std::vector<std::vector<typename K::Elem>>& coeff_rows);

/// {a : a*f in J.span for every f}, computed as an intersection of operator
/// preimages.  Results about degree-j data are trusted only for
/// j <= N - max order of the multipliers (see colon_trust_bound).
template <class K>
IdealHandle<K> colon_ideal(const TruncatedAlgebra<K>& A, const IdealHandle<K>& J,
                           const std::vector<SparseVec<K>>& multipliers);

/// (W : m) = intersection of generator-operator preimages of W.
template <class K>
Subspace<K> colon_by_m(const TruncatedAlgebra<K>& A, const Subspace<K>& W);

/// mu(J) = dim J/mJ.
template <class K>
int min_generators(const TruncatedAlgebra<K>& A, const IdealHandle<K>& J);

/// J * W (span of f*w over ideal generators f and a basis of W).
template <class K>
Subspace<K> ideal_times_subspace(const TruncatedAlgebra<K>& A,
                                 const std::vector<SparseVec<K>>& elems,
                                 const Subspace<K>& W);

/// dim of the socle (0 : m) of an Artinian algebra (chain must die).
template <class K>
int socle_dim(const TruncatedAlgebra<K>& A);

/// Flattens nested extensions and rewrites semigroup bases through their
/// toric presentation; extensions append fresh variables.  The variable
/// order always matches the generator order of the built algebra.
QuotientData lower_to_quotient(const RingSpec& spec, int toric_degree_cap = 18);

/// Generic stabilization driver: runs query at N, N+step, N+3*step, ...
/// (doubling) until two successive results agree; returns the stable value
/// and the truncation that produced it.
template <class R>
struct Stabilized {
  R value;
  int n_used = 0;
};

template <class R>
Stabilized<R> stabilize(const std::function<std::optional<R>(int)>& query, int n0,
                        int step, int n_cap) {
  std::optional<R> prev;
  int prev_n = 0;
  int N = n0;
  int s = step;
  while (N <= n_cap) {
    std::optional<R> cur = query(N);
    if (cur && prev && *cur == *prev) return {*cur, N};
    if (cur) {
      prev = cur;
      prev_n = N;
    }
    N += s;
    s *= 2;
  }
  (void)prev_n;
  throw ResourceLimit("no stabilization below truncation cap " +
                      std::to_string(n_cap));
}

}  // namespace hilb
