#include "arborium/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

#include "arborium/error.hpp"

namespace arborium {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"u", "X", "Y", "V", "E", "s", "v"};

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
  return r;
}

void accumulate(MultiPoly::Terms& into, const Exponents& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

// Works on signed exponents as well; used for Laurent intermediates.
MultiPoly::Terms multiply_terms(const MultiPoly::Terms& a, const MultiPoly::Terms& b) {
  MultiPoly::Terms out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) accumulate(out, add_exponents(ea, eb), ca * cb);
  }
  return out;
}

MultiPoly::Terms pow_terms(const MultiPoly::Terms& base, unsigned k) {
  MultiPoly::Terms result;
  result.emplace(Exponents{}, Rat(1));
  MultiPoly::Terms b = base;
  while (k != 0) {
    if (k & 1U) result = multiply_terms(result, b);
    k >>= 1U;
    if (k != 0) b = multiply_terms(b, b);
  }
  return result;
}

void append_monomial(std::ostream& os, const Exponents& e) {
  bool first = true;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << kVarNames[i];
    if (e[i] != 1) os << '^' << e[i];
  }
}

}  // namespace

std::string_view var_name(Var x) { return kVarNames[static_cast<std::size_t>(x)]; }

std::optional<Var> parse_var(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da < db;
  // Within a degree, a higher power of an earlier variable ranks higher.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(Var x) {
  Exponents e{};
  e[static_cast<std::size_t>(x)] = 1;
  return monomial(Rat(1), e);
}

MultiPoly MultiPoly::monomial(const Rat& c, const Exponents& e) {
  Terms t;
  t.emplace(e, c);
  return from_terms(std::move(t));
}

MultiPoly MultiPoly::from_terms(Terms terms) {
  MultiPoly p;
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second.is_zero()) {
      it = terms.erase(it);
      continue;
    }
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (it->first[i] < 0) {
        std::ostringstream os;
        append_monomial(os, it->first);
        throw AlgebraError("negative exponent in polynomial term " + os.str());
      }
    }
    ++it;
  }
  p.terms_ = std::move(terms);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rat MultiPoly::constant_term() const { return coefficient(Exponents{}); }

Rat MultiPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::degree(Var x) const {
  const auto i = static_cast<std::size_t>(x);
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

int MultiPoly::total_degree() const { return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first); }

MultiPoly MultiPoly::coefficient(Var x, int k) const {
  const auto i = static_cast<std::size_t>(x);
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exponents stripped = e;
    stripped[i] = 0;
    out.terms_.emplace(stripped, c);
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  terms_ = multiply_terms(terms_, o.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  r.terms_ = multiply_terms(a.terms_, b.terms_);
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r;
  r.terms_ = pow_terms(terms_, k);
  return r;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw AlgebraError("exact_div by the zero polynomial");
  // Leading-term division in graded-lex order; for an exact divisor the leading
  // term of the running remainder is always divisible by the divisor's leading term.
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  MultiPoly remainder = *this;
  MultiPoly quotient;
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms_.rbegin();
    Exponents qe{};
    for (std::size_t i = 0; i < kNumVars; ++i) {
      qe[i] = re[i] - lead_e[i];
      if (qe[i] < 0) {
        throw AlgebraError("non-exact division: " + to_string() + " by " + divisor.to_string());
      }
    }
    const Rat qc = rc / lead_c;
    quotient.terms_.emplace(qe, qc);
    for (const auto& [de, dc] : divisor.terms_) {
      accumulate(remainder.terms_, add_exponents(de, qe), -(dc * qc));
    }
  }
  return quotient;
}

MultiPoly MultiPoly::substitute(Var x, const MultiPoly& value) const {
  const auto i = static_cast<std::size_t>(x);
  const int max_power = degree(x);
  std::vector<MultiPoly> powers;
  powers.reserve(static_cast<std::size_t>(max_power) + 1);
  powers.emplace_back(1);
  for (int k = 1; k <= max_power; ++k) powers.push_back(powers.back() * value);

  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[i] = 0;
    MultiPoly term = MultiPoly::monomial(c, rest);
    out += term * powers[static_cast<std::size_t>(e[i])];
  }
  return out;
}

Rat MultiPoly::evaluate(const std::map<Var, Rat>& point) const {
  Rat total;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      const auto it = point.find(static_cast<Var>(i));
      if (it == point.end()) {
        throw AlgebraError("evaluate: variable " + std::string(kVarNames[i]) + " is unbound");
      }
      t *= it->second.pow(e[i]);
    }
    total += t;
  }
  return total;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rat magnitude = negative ? -c : c;
    const bool constant = e == Exponents{};
    if (constant) {
      os << magnitude;
    } else {
      if (magnitude != Rat(1)) os << magnitude << '*';
      append_monomial(os, e);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

MultiPoly substitute_laurent(const MultiPoly& p, const std::map<Var, LaurentImage>& images) {
  MultiPoly::Terms result;
  for (const auto& [e, c] : p.terms()) {
    MultiPoly::Terms term;
    Exponents kept = e;
    for (const auto& [x, image] : images) kept[static_cast<std::size_t>(x)] = 0;
    term.emplace(kept, c);
    for (const auto& [x, image] : images) {
      const int k = e[static_cast<std::size_t>(x)];
      if (k == 0) continue;
      MultiPoly::Terms factor = pow_terms(image.numerator.terms(), static_cast<unsigned>(k));
      Exponents shift{};
      for (std::size_t i = 0; i < kNumVars; ++i) shift[i] = image.shift[i] * k;
      MultiPoly::Terms shifted;
      for (const auto& [fe, fc] : factor) shifted.emplace(add_exponents(fe, shift), fc);
      term = multiply_terms(term, shifted);
    }
    for (const auto& [te, tc] : term) accumulate(result, te, tc);
  }
  return MultiPoly::from_terms(std::move(result));
}

MultiPoly binom_poly(const MultiPoly& p, unsigned k) {
  MultiPoly r(1);
  for (unsigned i = 0; i < k; ++i) r *= p - MultiPoly(static_cast<long>(i));
  return r * Rat(BigInt(1), factorial(k));
}

BigInt int_binom(const BigInt& a, long b) {
  if (b < 0) return 0;
  BigInt num = 1;
  for (long i = 0; i < b; ++i) num *= a - i;
  return num / factorial(static_cast<unsigned>(b));
}

}  // namespace arborium
