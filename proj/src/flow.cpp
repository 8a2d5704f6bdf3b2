#include "cauchon/flow.hpp"

#include <cmath>
#include <sstream>

#include "cauchon/error.hpp"
#include "cauchon/expr.hpp"

namespace cauchon {

ExpPoly::ExpPoly(const Rat& c) { add(Rat(0), 0, c); }

ExpPoly ExpPoly::t() {
  ExpPoly out;
  out.add(Rat(0), 1, Rat(1));
  return out;
}

void ExpPoly::add(const Rat& lambda, int k, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(std::make_pair(lambda, k), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool ExpPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::make_pair(Rat(0), 0));
}

Rat ExpPoly::constant_value() const {
  if (!is_constant()) throw DomainError("expression depends on t: " + to_string());
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

ExpPoly ExpPoly::exp_of(const ExpPoly& arg) {
  // accept lambda * t only
  Rat lambda = 0;
  for (const auto& [key, c] : arg.terms_) {
    if (key != std::make_pair(Rat(0), 1)) throw DomainError("exp() argument must be a rational multiple of t");
    lambda = c;
  }
  ExpPoly out;
  out.add(lambda, 0, Rat(1));
  return out;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out = a;
  for (const auto& [key, c] : b.terms_) out.add(key.first, key.second, c);
  return out;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add(Rat(ka.first + kb.first), ka.second + kb.second, ca * cb);
  return out;
}

ExpPoly ExpPoly::derivative() const {
  ExpPoly out;
  for (const auto& [key, c] : terms_) {
    const auto& [lambda, k] = key;
    if (k > 0) out.add(lambda, k - 1, c * k);
    out.add(lambda, k, c * lambda);
  }
  return out;
}

long double ExpPoly::eval(long double t) const {
  long double s = 0;
  for (const auto& [key, c] : terms_)
    s += static_cast<long double>(c.get_d()) * std::pow(t, key.second) *
         std::exp(static_cast<long double>(key.first.get_d()) * t);
  return s;
}

std::string ExpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const auto& [lambda, k] = key;
    const bool neg = sgn(c) < 0;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    const Rat mag = abs(c);
    std::string body;
    if (k > 0) body += k == 1 ? "t" : "t^" + std::to_string(k);
    if (sgn(lambda) != 0) body += (body.empty() ? "" : "*") + ("exp(" + cauchon::to_string(lambda) + "*t)");
    if (body.empty())
      os << cauchon::to_string(mag);
    else if (mag == 1)
      os << body;
    else
      os << cauchon::to_string(mag) << '*' << body;
  }
  return os.str();
}

ExpPoly parse_exp_poly(const std::string& text, const std::map<std::string, Rat>& params) {
  Semantics<ExpPoly> sem;
  sem.integer = [](const BigInt& v) { return ExpPoly(Rat(v)); };
  sem.symbol = [&](const Expr& e) -> ExpPoly {
    if (e.index) throw DomainError("indexed symbols are not allowed in a path entry");
    if (e.name == "t") return ExpPoly::t();
    if (auto it = params.find(e.name); it != params.end()) return ExpPoly(it->second);
    throw DomainError("unknown symbol '" + e.name + "' in path entry");
  };
  sem.divide = [](const ExpPoly& a, const ExpPoly& b) {
    const Rat d = b.constant_value();
    if (sgn(d) == 0) throw DomainError("division by zero in path entry");
    return a * ExpPoly(Rat(1 / d));
  };
  sem.power = [](const ExpPoly& base, long k) {
    if (k < 0) {
      const Rat v = base.constant_value();
      if (sgn(v) == 0) throw DomainError("zero to a negative power");
      ExpPoly out(Rat(1));
      for (long r = 0; r < -k; ++r) out = out * ExpPoly(Rat(1 / v));
      return out;
    }
    ExpPoly out(Rat(1));
    for (long r = 0; r < k; ++r) out = out * base;
    return out;
  };
  sem.call = [](const std::string& name, const ExpPoly& arg) {
    if (name != "exp") throw DomainError("unknown function " + name);
    return ExpPoly::exp_of(arg);
  };
  return evaluate(parse_expression(text), sem);
}

FlowResidual verify_flow(const FlowPath& path, const MPoly& h, const PoissonRing& ring, int samples) {
  if (path.entries.rows() != ring.rows() || path.entries.cols() != ring.cols())
    throw DomainError("path shape does not match the Poisson ring");
  if (samples < 2) throw DomainError("need at least two sample points");
  const std::vector<ExpPoly>& gamma = path.entries.entries();
  FlowResidual out;
  out.exact_zero = true;
  for (int i = 1; i <= static_cast<int>(ring.rows()); ++i)
    for (int a = 1; a <= static_cast<int>(ring.cols()); ++a) {
      const ExpPoly lhs = path.entries(i - 1, a - 1).derivative();
      const ExpPoly rhs = ring.bracket(h, ring.coordinate(i, a)).substitute(gamma, ExpPoly(), ExpPoly(Rat(1)));
      const ExpPoly r = lhs - rhs;
      out.exact_zero = out.exact_zero && r.is_zero();
      out.residuals.push_back(r.to_string());
      for (int s = 0; s < samples; ++s) {
        const long double t = static_cast<long double>(s) / (samples - 1);
        out.max_numeric = std::max(out.max_numeric, std::fabs(r.eval(t)));
      }
    }
  return out;
}

}  // namespace cauchon
