#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilb/hilbert.hpp"

namespace hilb {

struct FiltrationOptions {
  std::uint64_t seed = 1;
  int retry_budget = 8;
  int rr_imax = 4;
  int n_cap = 40;
  BuildOptions build;
};

/// A degree-one element verified superficial: the colon table
/// b_n = l((m^{n+1} : x) / m^n) was computed directly over the certified
/// window and matches the quotient-series route
/// (h_B(z) - h_A(z)) / (1-z)^d exactly.
struct SuperficialElement {
  std::vector<long long> coeffs;    // integer lifts over the ring generators
  std::uint64_t seed = 0;
  int attempt = 0;
  std::vector<long long> b;         // b_x(z) coefficients (b[0] = 0)
  std::vector<long long> b_direct;  // direct colon values for n = 0..checked_to
  int checked_to = 0;
  HilbertSeries h_quotient;
  std::string printed;              // e.g. "3*x + 17*y + z"
};

/// Verified superficial sequence x_1, ..., x_r with the quotient specs
/// A/(x_1..x_i) and their series; element i is superficial for level i.
struct SuperficialChain {
  std::vector<RingSpec> specs;            // specs[0] = input, size r+1
  std::vector<SuperficialElement> elems;  // size r
  std::vector<SeriesResult> series;       // size r+1
};

struct ReductionData {
  std::vector<long long> lengths;  // l(m^{j+1}/J m^j) for j = 0..reduction_number
  int reduction_number = 0;
  long long colength = 0;  // l(A/J)
  bool cm_verified = false;
};

struct RatliffRushData {
  int i_max = 0;
  std::vector<long long> rr_gap;  // l(~m^i / m^i) for i = 1..i_max
  std::vector<long long> r_poly;  // r(z): r_n = l(~m^{n+1}/m^{n+1})
  HilbertSeries h_tilde;
  int stabilized_at = 0;  // largest colon index l needed by the unions
};

struct DepthResult {
  int depth = 0;
  bool cohen_macaulay = false;        // depth == dim
  std::vector<long long> blocking_b;  // b_x of the first obstructed level
};

// --- spec-level operations -------------------------------------------------

template <class K>
SuperficialElement find_superficial(const K& F, const RingSpec& spec,
                                    const FiltrationOptions& opt);

/// B = A/(x): appends the linear form to the (lowered) presentation.
RingSpec quotient_spec(const RingSpec& spec, const std::vector<long long>& coeffs,
                       FieldSpec field, int declared_dim,
                       int toric_degree_cap = 18);

/// b_x(z) of a verified superficial element (both computation routes agree by
/// construction of SuperficialElement).
template <class K>
std::vector<long long> b_polynomial(const K& F, const RingSpec& spec,
                                    const FiltrationOptions& opt);

template <class K>
SuperficialChain superficial_sequence(const K& F, const RingSpec& spec, int r,
                                      const FiltrationOptions& opt);

template <class K>
ReductionData minimal_reduction(const K& F, const RingSpec& spec,
                                const SuperficialChain& chain,
                                const SeriesResult& series,
                                const FiltrationOptions& opt);

template <class K>
RatliffRushData ratliff_rush(const K& F, const RingSpec& spec,
                             const SeriesResult& series,
                             const FiltrationOptions& opt);

/// sigma_j = l(~m^{j+1} / J ~m^j) for j = 0..j_top (dimension two only);
/// asserts e_1 = sum sigma_j and e_2 = sum_{j>=1} j sigma_j.
template <class K>
std::vector<long long> sigma_table(const K& F, const RingSpec& spec,
                                   const SuperficialChain& chain,
                                   const SeriesResult& series,
                                   const RatliffRushData& rr,
                                   const FiltrationOptions& opt);

/// rho_n = l(m^{n+1} / x m^n) for n = 0..n_top (dimension one only); asserts
/// H(A,n) = e - rho_n and e_i = sum_j C(j,i-1) rho_j for i = 1..3.
template <class K>
std::vector<long long> rho_table(const K& F, const RingSpec& spec,
                                 const SuperficialChain& chain,
                                 const SeriesResult& series,
                                 const FiltrationOptions& opt);

/// Cohen-Macaulay type: socle dimension of the Artinian reduction by a
/// maximal verified superficial sequence; computed for two seeds and
/// required to agree.
template <class K>
int cm_type(const K& F, const RingSpec& spec, const SeriesResult& series,
            const FiltrationOptions& opt);

/// Depth of G(A) by iterated verified superficial quotients: each level with
/// b_x = 0 certifies one more regular initial form; the numerator identity
/// h_A = h_B - (1-z)^d b_x is checked at every level.
template <class K>
DepthResult depth_assoc_graded(const K& F, const RingSpec& spec,
                               const SuperficialChain& chain,
                               const SeriesResult& series,
                               const FiltrationOptions& opt);

struct M3JReport {
  long long len_m3_over_Jm2 = 0;
  long long len_colon = 0;     // l((m^3 : x) / m^2)
  long long len_quotient = 0;  // l(n^3 / (y,z) n^2) in B = A/(x)
  bool additive = false;
};

/// Dimension-three length additivity along the exact complex
/// 0 -> (m^3:x)/m^2 -> m^3/Jm^2 -> n^3/(y,z)n^2 -> 0.
template <class K>
M3JReport check_m3J_lengths(const K& F, const RingSpec& spec,
                            const SuperficialChain& chain,
                            const SeriesResult& series,
                            const FiltrationOptions& opt);

}  // namespace hilb
