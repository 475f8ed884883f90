#include "hilb/ringspec.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hilb/errors.hpp"

namespace hilb {
namespace {

enum class Tok { integer, ident, lparen, rparen, lbrack, rbrack, slash, comma,
                 caret, star, plus, minus, end };

struct Token {
  Tok kind;
  std::string text;
  long long value = 0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(tok_.pos, msg);
  }

 private:
  void advance() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_[i_] == '#') {  // comment to end of line
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_ = {Tok::end, "", 0, i_};
      return;
    }
    char c = s_[i_];
    auto sym = [&](Tok k) {
      tok_ = {k, std::string(1, c), 0, i_};
      ++i_;
    };
    switch (c) {
      case '(': return sym(Tok::lparen);
      case ')': return sym(Tok::rparen);
      case '[': return sym(Tok::lbrack);
      case ']': return sym(Tok::rbrack);
      case '/': return sym(Tok::slash);
      case ',': return sym(Tok::comma);
      case '^': return sym(Tok::caret);
      case '*': return sym(Tok::star);
      case '+': return sym(Tok::plus);
      case '-': return sym(Tok::minus);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      long long v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        if (v > (1ll << 56)) throw SyntaxError(start, "integer literal too large");
        v = v * 10 + (s_[i_] - '0');
        ++i_;
      }
      tok_ = {Tok::integer, s_.substr(start, i_ - start), v, start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      tok_ = {Tok::ident, s_.substr(start, i_ - start), 0, start};
      return;
    }
    throw SyntaxError(i_, std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  RingSpec parse() {
    RingSpec spec = parse_spec();
    if (lex_.peek().kind != Tok::end) lex_.fail("trailing input after ring spec");
    return spec;
  }

 private:
  Lexer lex_;

  bool at_ident(const char* kw) const {
    return lex_.peek().kind == Tok::ident && lex_.peek().text == kw;
  }

  Token expect(Tok k, const char* what) {
    if (lex_.peek().kind != k) lex_.fail(std::string("expected ") + what);
    return lex_.take();
  }

  long long expect_int(const char* what) {
    return expect(Tok::integer, what).value;
  }

  RingSpec parse_spec() {
    if (at_ident("semigroup")) return parse_semigroup();
    if (at_ident("ring")) return parse_quotient();
    if (at_ident("extend")) return parse_extension();
    lex_.fail("expected 'semigroup', 'ring' or 'extend'");
  }

  FieldSpec parse_field() {
    Token t = expect(Tok::ident, "a field ('Q' or 'F <prime>')");
    if (t.text == "Q") return FieldSpec::Q();
    if (t.text == "F") {
      long long p = expect_int("a prime after 'F'");
      if (p < 3 || p >= (1ll << 31) || !is_prime(static_cast<std::uint64_t>(p)))
        throw ValidationError("F " + std::to_string(p) + ": not an odd prime below 2^31");
      return FieldSpec::Fp(static_cast<std::uint32_t>(p));
    }
    throw SyntaxError(t.pos, "unknown field '" + t.text + "'");
  }

  RingSpec parse_semigroup() {
    lex_.take();  // semigroup
    SemigroupData data;
    if (at_ident("Q") || at_ident("F")) {
      parse_field();  // accepted and ignored; any field gives the same lengths
      data.field_given = true;
    }
    while (lex_.peek().kind == Tok::integer) {
      long long g = lex_.take().value;
      if (g < 1) throw ValidationError("semigroup generators must be positive");
      data.gens.push_back(g);
    }
    if (data.gens.empty()) lex_.fail("expected at least one semigroup generator");
    std::sort(data.gens.begin(), data.gens.end());
    data.gens.erase(std::unique(data.gens.begin(), data.gens.end()), data.gens.end());
    long long g = 0;
    for (long long a : data.gens) g = std::gcd(g, a);
    if (g != 1)
      throw ValidationError("semigroup generators have gcd " + std::to_string(g) +
                            ", expected 1");
    return RingSpec{data};
  }

  RingSpec parse_quotient() {
    lex_.take();  // ring
    QuotientData data;
    data.field = parse_field();
    expect(Tok::lbrack, "'['");
    data.vars = parse_varlist(Tok::rbrack);
    expect(Tok::rbrack, "']'");
    if (data.vars.size() > kMaxVars)
      throw ValidationError("too many variables (max " + std::to_string(kMaxVars) + ")");
    {
      auto sorted = data.vars;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ValidationError("variable names must be distinct");
    }
    expect(Tok::slash, "'/'");
    expect(Tok::lparen, "'('");
    if (lex_.peek().kind != Tok::rparen) {
      parse_poly_item(data);
      while (lex_.peek().kind == Tok::comma) {
        lex_.take();
        parse_poly_item(data);
      }
    }
    expect(Tok::rparen, "')'");
    if (at_ident("dim")) {
      lex_.take();
      long long d = expect_int("a dimension after 'dim'");
      if (d < 0) throw ValidationError("declared dimension must be nonnegative");
      data.declared_dim = static_cast<int>(d);
    }
    for (auto& g : data.ideal) {
      if (g.is_zero()) continue;
      if (g.min_degree() == 0)
        throw ValidationError("ideal generator has a constant term: " +
                              g.str(data.vars));
    }
    std::erase_if(data.ideal, [](const IPoly& p) { return p.is_zero(); });
    return RingSpec{data};
  }

  RingSpec parse_extension() {
    lex_.take();  // extend
    expect(Tok::lparen, "'('");
    RingSpec base = parse_spec();
    expect(Tok::rparen, "')'");
    if (!at_ident("by")) lex_.fail("expected 'by'");
    lex_.take();
    long long m = expect_int("a variable count after 'by'");
    if (m < 1) throw ValidationError("extension must add at least one variable");
    ExtensionData data;
    data.base = std::make_shared<RingSpec>(std::move(base));
    data.extra = static_cast<int>(m);
    return RingSpec{data};
  }

  std::vector<std::string> parse_varlist(Tok) {
    std::vector<std::string> vars;
    vars.push_back(expect(Tok::ident, "a variable name").text);
    while (lex_.peek().kind == Tok::comma) {
      lex_.take();
      vars.push_back(expect(Tok::ident, "a variable name").text);
    }
    return vars;
  }

  int var_index(const QuotientData& data, const Token& t) {
    for (std::size_t i = 0; i < data.vars.size(); ++i)
      if (data.vars[i] == t.text) return static_cast<int>(i);
    throw ValidationError("unknown variable '" + t.text + "' at position " +
                          std::to_string(t.pos));
  }

  /// Either "(v1,..,vk)^d" (all degree-d monomials in the listed variables)
  /// or an ordinary polynomial.
  void parse_poly_item(QuotientData& data) {
    if (lex_.peek().kind == Tok::lparen) {
      lex_.take();
      std::vector<int> idx;
      idx.push_back(var_index(data, expect(Tok::ident, "a variable name")));
      while (lex_.peek().kind == Tok::comma) {
        lex_.take();
        idx.push_back(var_index(data, expect(Tok::ident, "a variable name")));
      }
      expect(Tok::rparen, "')'");
      expect(Tok::caret, "'^'");
      long long d = expect_int("an exponent");
      if (d < 1 || d > 200) throw ValidationError("power out of range");
      int nv = static_cast<int>(data.vars.size());
      for_each_monomial_of_degree(static_cast<int>(idx.size()), static_cast<int>(d),
                                  [&](const Monomial& m) {
        Monomial full;
        for (std::size_t i = 0; i < idx.size(); ++i) {
          full.e[idx[i]] = static_cast<std::uint8_t>(full.e[idx[i]] + m.e[i]);
        }
        full.deg = static_cast<std::uint16_t>(d);
        IPoly p = IPoly::term(nv, full, 1);
        data.ideal.push_back(std::move(p));
      });
      return;
    }
    data.ideal.push_back(parse_poly(data));
  }

  IPoly parse_poly(QuotientData& data) {
    int nv = static_cast<int>(data.vars.size());
    IPoly out = IPoly::zero(nv);
    bool neg = false;
    if (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus)
      neg = lex_.take().kind == Tok::minus;
    out = out.add(parse_term(data, neg));
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      bool n = lex_.take().kind == Tok::minus;
      out = out.add(parse_term(data, n));
    }
    return out;
  }

  IPoly parse_term(QuotientData& data, bool negate) {
    int nv = static_cast<int>(data.vars.size());
    BigInt coeff = 1;
    Monomial mono = Monomial::one();
    bool have_factor = false;
    if (lex_.peek().kind == Tok::integer) {
      coeff = BigInt(lex_.take().value);
      have_factor = true;
      if (lex_.peek().kind == Tok::star)
        lex_.take();
      else
        return IPoly::term(nv, mono, negate ? -coeff : coeff);
    }
    while (true) {
      Token t = expect(Tok::ident, "a variable");
      int i = var_index(data, t);
      long long e = 1;
      if (lex_.peek().kind == Tok::caret) {
        lex_.take();
        e = expect_int("an exponent");
        if (e < 0 || e > 200) throw ValidationError("exponent out of range");
      }
      for (long long k = 0; k < e; ++k) mono = mono.mul(Monomial::var(i));
      have_factor = true;
      if (lex_.peek().kind == Tok::star)
        lex_.take();
      else
        break;
    }
    if (!have_factor) lex_.fail("expected a term");
    return IPoly::term(nv, mono, negate ? -coeff : coeff);
  }
};

std::string field_str(const FieldSpec& f) {
  return f.kind == FieldSpec::Kind::rationals ? "Q" : "F " + std::to_string(f.p);
}

}  // namespace

RingSpec parse_ring_spec(const std::string& text) {
  return Parser(text).parse();
}

std::vector<Diagnostic> validate(const RingSpec& spec) {
  std::vector<Diagnostic> out;
  auto err = [&](std::string m) {
    out.push_back({Diagnostic::Severity::error, std::move(m)});
  };
  if (spec.is_semigroup()) {
    const auto& s = spec.semigroup();
    if (s.gens.empty()) {
      err("semigroup has no generators");
      return out;
    }
    long long g = 0;
    for (long long a : s.gens) {
      if (a < 1) err("generator " + std::to_string(a) + " is not positive");
      g = std::gcd(g, a);
    }
    if (g != 1) err("generators have gcd " + std::to_string(g) + ", expected 1");
    if (!std::is_sorted(s.gens.begin(), s.gens.end()) ||
        std::adjacent_find(s.gens.begin(), s.gens.end()) != s.gens.end())
      err("generators must be stored sorted without duplicates");
    if (s.field_given)
      out.push_back({Diagnostic::Severity::warning,
                     "field on a semigroup spec is ignored (lengths are "
                     "field-independent)"});
  } else if (spec.is_quotient()) {
    const auto& q = spec.quotient();
    if (q.field.kind == FieldSpec::Kind::prime && !is_prime(q.field.p))
      err("field modulus " + std::to_string(q.field.p) + " is not prime");
    if (q.field.kind == FieldSpec::Kind::prime && q.field.p <= 2)
      err("prime field must have p > 2");
    auto sorted = q.vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      err("variable names must be distinct");
    if (q.vars.size() > kMaxVars)
      err("too many variables (max " + std::to_string(kMaxVars) + ")");
    for (const auto& p : q.ideal) {
      if (p.is_zero()) continue;
      if (p.min_degree() == 0)
        err("ideal generator has a constant term: " + p.str(q.vars));
    }
    if (q.declared_dim && *q.declared_dim < 0) err("declared dimension is negative");
  } else {
    const auto& e = spec.extension();
    if (e.extra < 1) err("extension must add at least one variable (m >= 1)");
    if (!e.base) {
      err("extension has no base spec");
      return out;
    }
    auto base = validate(*e.base);
    out.insert(out.end(), base.begin(), base.end());
  }
  return out;
}

std::string print_ring_spec(const RingSpec& spec) {
  if (spec.is_semigroup()) {
    std::string s = "semigroup";
    for (long long g : spec.semigroup().gens) s += " " + std::to_string(g);
    return s;
  }
  if (spec.is_quotient()) {
    const auto& q = spec.quotient();
    std::string s = "ring " + field_str(q.field) + "[";
    for (std::size_t i = 0; i < q.vars.size(); ++i) {
      if (i) s += ",";
      s += q.vars[i];
    }
    s += "] / (";
    for (std::size_t i = 0; i < q.ideal.size(); ++i) {
      if (i) s += ", ";
      s += q.ideal[i].str(q.vars);
    }
    s += ")";
    if (q.declared_dim) s += " dim " + std::to_string(*q.declared_dim);
    return s;
  }
  const auto& e = spec.extension();
  return "extend (" + print_ring_spec(*e.base) + ") by " + std::to_string(e.extra);
}

RingSpec with_field(const RingSpec& spec, FieldSpec f) {
  if (spec.is_semigroup()) return spec;
  if (spec.is_quotient()) {
    QuotientData q = spec.quotient();
    q.field = f;
    return RingSpec{q};
  }
  ExtensionData e = spec.extension();
  e.base = std::make_shared<RingSpec>(with_field(*e.base, f));
  return RingSpec{e};
}

std::optional<FieldSpec> declared_field(const RingSpec& spec) {
  if (spec.is_semigroup()) return std::nullopt;
  if (spec.is_quotient()) return spec.quotient().field;
  return declared_field(*spec.extension().base);
}

int max_generator_degree(const RingSpec& spec) {
  if (spec.is_semigroup()) return 1;
  if (spec.is_quotient()) {
    int d = 1;
    for (const auto& p : spec.quotient().ideal) d = std::max(d, p.degree());
    return d;
  }
  return max_generator_degree(*spec.extension().base);
}

}  // namespace hilb
