#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hilb/poly.hpp"

namespace hilb {

/// Coefficient field of a presentation: the rationals or a prime field.
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::prime;
  std::uint32_t p = 32003;

  static FieldSpec Q() { return {Kind::rationals, 0}; }
  static FieldSpec Fp(std::uint32_t p) { return {Kind::prime, p}; }
  bool operator==(const FieldSpec&) const = default;
};

struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  std::string message;
};

struct RingSpec;

/// k[[t^a1, ..., t^ak]] for a numerical semigroup <a1 < ... < ak>, gcd 1.
struct SemigroupData {
  std::vector<long long> gens;  // sorted ascending, duplicates removed
  bool field_given = false;     // accepted and ignored (any field works)
};

/// field[vars]/(ideal), localized at the irrelevant maximal ideal.
struct QuotientData {
  FieldSpec field;
  std::vector<std::string> vars;
  std::vector<IPoly> ideal;  // canonical sparse form, every monomial degree >= 1
  std::optional<int> declared_dim;
};

/// base[X1..Xm] localized at (m_base, X1..Xm).
struct ExtensionData {
  std::shared_ptr<const RingSpec> base;
  int extra = 1;
};

struct RingSpec {
  std::variant<SemigroupData, QuotientData, ExtensionData> v;

  bool is_semigroup() const { return std::holds_alternative<SemigroupData>(v); }
  bool is_quotient() const { return std::holds_alternative<QuotientData>(v); }
  bool is_extension() const { return std::holds_alternative<ExtensionData>(v); }
  const SemigroupData& semigroup() const { return std::get<SemigroupData>(v); }
  const QuotientData& quotient() const { return std::get<QuotientData>(v); }
  const ExtensionData& extension() const { return std::get<ExtensionData>(v); }
};

/// Parses the input grammar.  Throws SyntaxError (with position) on malformed
/// text and ValidationError when an invariant fails (gcd != 1, constant term,
/// unknown variable, p not prime).
RingSpec parse_ring_spec(const std::string& text);

/// Non-throwing invariant check; empty result iff the spec is valid.
/// A field given with `semigroup` yields a warning, not an error.
std::vector<Diagnostic> validate(const RingSpec& spec);

/// Canonical printer; emits the same grammar parse_ring_spec accepts.
std::string print_ring_spec(const RingSpec& spec);

/// Returns a copy with the coefficient field replaced (recursively for
/// extensions; a no-op for semigroup specs, whose lengths are
/// field-independent).
RingSpec with_field(const RingSpec& spec, FieldSpec f);

/// The field the spec declares, if any (semigroup specs declare none).
std::optional<FieldSpec> declared_field(const RingSpec& spec);

/// Largest total degree among ideal generators (1 for semigroup specs until
/// lowered); used to size faithfulness windows.
int max_generator_degree(const RingSpec& spec);

}  // namespace hilb
