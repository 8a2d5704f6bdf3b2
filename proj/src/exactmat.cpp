#include "cauchon/exactmat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cauchon {

Rat parse_rat(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw DomainError("empty rational literal");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  auto all_digits = [](std::string_view v) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  const bool negative = s[0] == '-';
  std::string body = s.substr(start);
  Rat out;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw DomainError("bad rational literal '" + s + "'");
    BigInt d(den);
    if (d == 0) throw DomainError("zero denominator in '" + s + "'");
    out = Rat(BigInt(num), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp)) throw DomainError("bad decimal literal '" + s + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    out = Rat(BigInt(ip.empty() ? "0" : ip) * scale + BigInt(fp), scale);
  } else {
    if (!all_digits(body)) throw DomainError("bad rational literal '" + s + "'");
    out = Rat(BigInt(body));
  }
  out.canonicalize();
  return negative ? Rat(-out) : out;
}

std::string to_string(const Rat& r) { return r.get_str(); }

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix out(n, n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RatMatrix zero_matrix(std::size_t m, std::size_t p) { return RatMatrix(m, p, Rat(0)); }

namespace {

// Bareiss on an integer matrix; destroys `a`.
BigInt bareiss(std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  BigInt prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        a[i][j] = v;
      }
    }
    prev_pivot = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

Rat determinant(const RatMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw DomainError("determinant needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<BigInt>> ints(n, std::vector<BigInt>(n));
  BigInt scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) {
      Rat scaled = a(r, c) * l;
      ints[r][c] = scaled.get_num();
    }
    scale *= l;
  }
  Rat out(bareiss(ints), scale);
  out.canonicalize();
  return out;
}

Rat minor(const RatMatrix& a, const MinorIndex& ix) { return determinant(submatrix(a, ix)); }

std::vector<std::pair<MinorIndex, Rat>> all_minors(const RatMatrix& a) { return all_minors_laplace(a); }

BigInt minor_count(std::size_t m, std::size_t p) {
  if (m == 0 || p == 0) throw DomainError("minor_count needs m, p >= 1");
  return binomial(static_cast<unsigned>(m + p), static_cast<unsigned>(m)) - 1;
}

std::vector<std::pair<MinorIndex, Rat>> initial_minors(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("initial minors are defined for square matrices only");
  const int n = static_cast<int>(a.rows());
  std::vector<std::pair<MinorIndex, Rat>> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int k = std::min(i, j);
      std::vector<int> rows, cols;
      for (int t = 0; t < k; ++t) {
        rows.push_back(i - k + 1 + t);
        cols.push_back(j - k + 1 + t);
      }
      MinorIndex ix(rows, cols);
      Rat value = minor(a, ix);
      out.emplace_back(std::move(ix), value);
    }
  }
  return out;
}

bool is_tp(const RatMatrix& a) {
  for (const auto& [ix, v] : initial_minors(a))
    if (sgn(v) <= 0) return false;
  return true;
}

TnnVerdict is_tnn_bruteforce(const RatMatrix& a) {
  TnnVerdict verdict;
  for (auto& [ix, v] : all_minors(a)) {
    if (sgn(v) >= 0) continue;
    if (!verdict.witness_value || v < *verdict.witness_value) {
      verdict.is_tnn = false;
      verdict.witness = ix;
      verdict.witness_value = v;
    }
  }
  return verdict;
}

MinorFamily vanishing_minors(const RatMatrix& a) {
  MinorFamily out(a.rows(), a.cols());
  for (auto& [ix, v] : all_minors(a))
    if (sgn(v) == 0) out.insert(ix);
  return out;
}

// ---- minor indices -------------------------------------------------------

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

MinorIndex::MinorIndex(std::vector<int> r, std::vector<int> c) : rows(std::move(r)), cols(std::move(c)) {
  if (rows.empty() || rows.size() != cols.size())
    throw DomainError("a minor needs equally many rows and columns (at least one)");
  auto increasing = [](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1) return false;
      if (i > 0 && v[i] <= v[i - 1]) return false;
    }
    return true;
  };
  if (!increasing(rows) || !increasing(cols))
    throw DomainError("minor indices must be 1-based and strictly increasing");
}

bool MinorIndex::fits(std::size_t m, std::size_t p) const {
  return !rows.empty() && static_cast<std::size_t>(rows.back()) <= m &&
         static_cast<std::size_t>(cols.back()) <= p;
}

std::strong_ordering operator<=>(const MinorIndex& a, const MinorIndex& b) {
  if (auto c = a.rows.size() <=> b.rows.size(); c != 0) return c;
  if (auto c = a.rows <=> b.rows; c != 0) return c;
  return a.cols <=> b.cols;
}

std::string to_string(const MinorIndex& ix) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < ix.rows.size(); ++i) os << (i ? "," : "") << ix.rows[i];
  os << '|';
  for (std::size_t i = 0; i < ix.cols.size(); ++i) os << (i ? "," : "") << ix.cols[i];
  os << ']';
  return os.str();
}

MinorIndex parse_minor_index(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '[' && ch != ']') s.push_back(ch);
  auto bar = s.find('|');
  if (bar == std::string::npos) throw DomainError("minor index needs '|': " + text);
  auto parse_list = [&](const std::string& part) {
    std::vector<int> v;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw DomainError("bad minor index: " + text);
      v.push_back(std::stoi(item));
    }
    return v;
  };
  return MinorIndex(parse_list(s.substr(0, bar)), parse_list(s.substr(bar + 1)));
}

void MinorFamily::insert(MinorIndex ix) {
  if (!ix.fits(m, p)) throw DomainError("minor " + to_string(ix) + " does not fit the ambient shape");
  members.insert(std::move(ix));
}

std::vector<MinorIndex> all_minor_indices(std::size_t m, std::size_t p) {
  std::vector<MinorIndex> out;
  const int kmax = static_cast<int>(std::min(m, p));
  for (int k = 1; k <= kmax; ++k)
    for (const auto& rs : combinations(static_cast<int>(m), k))
      for (const auto& cs : combinations(static_cast<int>(p), k)) out.emplace_back(rs, cs);
  return out;
}

MinorFamily full_family(std::size_t m, std::size_t p) {
  MinorFamily out(m, p);
  for (auto& ix : all_minor_indices(m, p)) out.members.insert(std::move(ix));
  return out;
}

}  // namespace cauchon
