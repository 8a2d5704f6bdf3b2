#include "cauchon/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "cauchon/error.hpp"
#include "cauchon/zp.hpp"

namespace cauchon {

VarsPtr make_vars(VarList names) { return std::make_shared<const VarList>(std::move(names)); }

VarsPtr matrix_vars(const std::string& prefix, std::size_t m, std::size_t p, bool alias_2x2) {
  VarList names;
  if (alias_2x2 && m == 2 && p == 2) return make_vars({"a", "b", "c", "d"});
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= p; ++j)
      names.push_back(prefix + "[" + std::to_string(i) + "," + std::to_string(j) + "]");
  return make_vars(std::move(names));
}

MPoly::MPoly(VarsPtr vars) : vars_(std::move(vars)) {}

MPoly MPoly::constant(VarsPtr vars, const BigInt& c) {
  MPoly out(vars);
  if (c != 0) out.terms_.emplace(Exponent(out.nvars(), 0), c);
  return out;
}

MPoly MPoly::variable(VarsPtr vars, std::size_t index) {
  MPoly out(vars);
  if (index >= out.nvars()) throw DomainError("variable index out of range");
  Exponent e(out.nvars(), 0);
  e[index] = 1;
  out.terms_.emplace(std::move(e), 1);
  return out;
}

MPoly MPoly::variable(VarsPtr vars, const std::string& name) {
  MPoly probe(vars);
  auto idx = probe.var_index(name);
  if (!idx) throw DomainError("unknown variable '" + name + "'");
  return variable(std::move(vars), *idx);
}

MPoly MPoly::monomial(VarsPtr vars, Exponent e, const BigInt& c) {
  MPoly out(vars);
  if (e.size() != out.nvars()) throw DomainError("exponent length does not match variable count");
  if (c != 0) out.terms_.emplace(std::move(e), c);
  return out;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::optional<std::size_t> MPoly::var_index(const std::string& name) const {
  if (!vars_) return std::nullopt;
  auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_->begin());
}

void MPoly::require_compatible(const MPoly& other) const {
  if (vars_ == other.vars_) return;
  if (vars_ && other.vars_ && *vars_ == *other.vars_) return;
  throw DomainError("polynomials over different variable lists");
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& b) {
  require_compatible(b);
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  out += b;
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  out += -b;
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_compatible(b);
  MPoly out(a.vars_);
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      auto [it, inserted] = out.terms_.emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

MPoly MPoly::scaled(const BigInt& c) const {
  MPoly out(vars_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly out = constant(vars_, 1);
  MPoly base = *this;
  while (k) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

MPoly MPoly::partial_derivative(std::size_t index) const {
  if (index >= nvars()) throw DomainError("unknown variable index for differentiation");
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent d = e;
    --d[index];
    out.terms_.emplace(std::move(d), c * e[index]);
  }
  return out;
}

MPoly MPoly::partial_derivative(const std::string& name) const {
  auto idx = var_index(name);
  if (!idx) throw DomainError("cannot differentiate by unknown variable '" + name + "'");
  return partial_derivative(*idx);
}

Exponent MPoly::monomial_content() const {
  Exponent out(nvars(), 0);
  if (terms_.empty()) return out;
  out = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = std::min(out[v], e[v]);
  return out;
}

BigInt MPoly::integer_content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

MPoly MPoly::divide_monomial(const Exponent& d) const {
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent r = e;
    for (std::size_t v = 0; v < r.size(); ++v) {
      r[v] -= d[v];
      if (r[v] < 0) throw DomainError("monomial division is not exact");
    }
    out.terms_.emplace(std::move(r), c);
  }
  return out;
}

MPoly MPoly::divide_exact(const BigInt& c) const {
  if (c == 0) throw DomainError("division by zero");
  MPoly out(vars_);
  for (const auto& [e, k] : terms_) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
    out.terms_.emplace(e, q);
  }
  return out;
}

const BigInt& MPoly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

std::uint64_t MPoly::eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t prime) const {
  if (point.size() < nvars()) throw DomainError("evaluation point does not cover every variable");
  if (prime < 2) throw DomainError("modulus must be a prime");
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), prime);
    std::uint64_t term = r.get_ui();
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) term = mulmod(term, powmod(point[v] % prime, static_cast<std::uint64_t>(e[v]), prime), prime);
    acc = addmod(acc, term, prime);
  }
  return acc;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() < nvars()) throw DomainError("evaluation point does not cover every variable");
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) term *= point[v];
    acc += term;
  }
  return acc;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || constant_term) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (!e[v]) continue;
      if (need_star) os << '*';
      os << (*vars_)[v];
      if (e[v] > 1) os << '^' << e[v];
      need_star = true;
    }
  }
  return os.str();
}

std::uint64_t eval_mod_p(const MPoly& f, const std::vector<std::uint64_t>& point, std::uint64_t prime) {
  return f.eval_mod(point, prime);
}

}  // namespace cauchon
