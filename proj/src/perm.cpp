#include "cauchon/perm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "cauchon/error.hpp"

namespace cauchon {

Permutation::Permutation(std::vector<int> images) : w_(std::move(images)) {
  std::vector<char> seen(w_.size() + 1, 0);
  for (int v : w_) {
    if (v < 1 || static_cast<std::size_t>(v) > w_.size() || seen[v])
      throw DomainError("not a permutation of 1.." + std::to_string(w_.size()));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i) + 1;
  return Permutation(std::move(w));
}

int Permutation::operator()(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > w_.size())
    throw DomainError("permutation argument " + std::to_string(i) + " out of range");
  return w_[i - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) inv[w_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw DomainError("composing permutations of different sizes");
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = u.w_[v.w_[i] - 1];
  return Permutation(std::move(out));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

Permutation longest_element(std::size_t r) {
  if (r == 0) throw DomainError("longest element needs r >= 1");
  std::vector<int> w(r);
  for (std::size_t i = 0; i < r; ++i) w[i] = static_cast<int>(r - i);
  return Permutation(std::move(w));
}

std::string to_one_line(const Permutation& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.size() > 9 && i) out += ',';
    out += std::to_string(w.one_line()[i]);
  }
  return out;
}

std::string to_cycles(const Permutation& w) {
  std::string out;
  std::vector<char> seen(w.size() + 1, 0);
  for (int s = 1; s <= static_cast<int>(w.size()); ++s) {
    if (seen[s] || w(s) == s) continue;
    out += '(';
    for (int x = s; !seen[x]; x = w(x)) {
      if (x != s) out += ' ';
      out += std::to_string(x);
      seen[x] = 1;
    }
    out += ')';
  }
  return out.empty() ? "(1)" : out;
}

Permutation parse_permutation(const std::string& text, std::size_t n) {
  // collapse whitespace runs to one space, trim both ends
  std::string t;
  std::istringstream words(text);
  for (std::string word; words >> word;) t += (t.empty() ? "" : " ") + word;
  if (t.empty()) throw DomainError("empty permutation");

  auto numbers = [](const std::string& s) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    };
    for (char ch : s) {
      if (std::isdigit(static_cast<unsigned char>(ch)))
        cur += ch;
      else if (ch == ' ' || ch == ',')
        flush();
      else
        throw DomainError(std::string("unexpected '") + ch + "' in permutation");
    }
    flush();
    return out;
  };

  if (t.front() == '(') {
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    int largest = 0;
    while (pos < t.size()) {
      if (t[pos] == ' ') {
        ++pos;
        continue;
      }
      if (t[pos] != '(') throw DomainError("malformed cycle notation: " + text);
      const std::size_t close = t.find(')', pos);
      if (close == std::string::npos) throw DomainError("unbalanced parenthesis: " + text);
      cycles.push_back(numbers(t.substr(pos + 1, close - pos - 1)));
      for (int v : cycles.back()) largest = std::max(largest, v);
      pos = close + 1;
    }
    if (n == 0) n = static_cast<std::size_t>(largest);
    if (static_cast<std::size_t>(largest) > n) throw DomainError("cycle entry exceeds n");
    std::vector<int> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i) + 1;
    std::vector<char> used(n + 1, 0);
    for (const auto& cyc : cycles)
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        if (cyc[k] < 1 || used[cyc[k]]) throw DomainError("cycles are not disjoint: " + text);
        used[cyc[k]] = 1;
        w[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
      }
    return Permutation(std::move(w));
  }

  std::vector<int> w;
  if (t.find_first_of(", ") != std::string::npos) {
    w = numbers(t);
  } else {
    for (char ch : t) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw DomainError("malformed permutation: " + text);
      w.push_back(ch - '0');
    }
  }
  if (n != 0 && w.size() != n) throw DomainError("permutation has the wrong length");
  return Permutation(std::move(w));
}

bool in_window(const Permutation& w, std::size_t m, std::size_t p) {
  if (w.size() != m + p) return false;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
    const int d = w(i) - i;
    if (d < -static_cast<int>(p) || d > static_cast<int>(m)) return false;
  }
  return true;
}

RestrictedPermutation::RestrictedPermutation(std::size_t m_, std::size_t p_, Permutation w_)
    : m(m_), p(p_), w(std::move(w_)) {
  if (!in_window(w, m, p))
    throw DomainError(to_one_line(w) + " is not a restricted permutation for " + std::to_string(m) + "x" +
                      std::to_string(p));
}

std::vector<RestrictedPermutation> enumerate_S(std::size_t m, std::size_t p) {
  const int n = static_cast<int>(m + p);
  std::vector<RestrictedPermutation> out;
  std::vector<int> w;
  std::vector<char> used(n + 1, 0);
  std::function<void()> rec = [&] {
    const int i = static_cast<int>(w.size()) + 1;
    if (i > n) {
      out.emplace_back(m, p, Permutation(w));
      return;
    }
    const int lo = std::max(1, i - static_cast<int>(p));
    const int hi = std::min(n, i + static_cast<int>(m));
    for (int v = lo; v <= hi; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      w.push_back(v);
      rec();
      w.pop_back();
      used[v] = 0;
    }
  };
  rec();
  return out;
}

RestrictedPermutation pipe_dream(const CauchonDiagram& c) {
  const int m = static_cast<int>(c.rows()), p = static_cast<int>(c.cols());
  // Follow a pipe that enters (i, a) from below (up = true) or from the right.
  auto trace = [&](int i, int a, bool up) {
    while (true) {
      const bool go_up = c.black(i, a) ? up : !up;
      if (go_up) {
        if (i == 1) return m + a;
        --i;
      } else {
        if (a == 1) return m + 1 - i;
        --a;
      }
      up = go_up;
    }
  };
  std::vector<int> w(m + p);
  for (int col = 1; col <= p; ++col) w[col - 1] = trace(m, col, true);
  for (int row = 1; row <= m; ++row) w[p + m - row] = trace(row, p, false);
  return RestrictedPermutation(c.rows(), c.cols(), Permutation(std::move(w)));
}

CauchonDiagram inverse_pipe_dream(const RestrictedPermutation& rw) {
  const int m = static_cast<int>(rw.m), p = static_cast<int>(rw.p);
  if (!in_window(rw.w, rw.m, rw.p)) throw DomainError("permutation violates the window condition");
  const Permutation inv = rw.w.inverse();

  // Pipes are named by their entry label. Entry label s is either bottom
  // column s (s <= p) or right row p + m + 1 - s.
  auto can_enter_bottom = [&](int s, int i, int a) {
    if (s <= p) return i == m ? s == a : s >= a;
    const int r = p + m + 1 - s;
    return i < m && r >= i + 1;
  };
  auto can_enter_right = [&](int s, int i, int a) {
    if (s <= p) return a < p && s >= a + 1;
    const int r = p + m + 1 - s;
    return a == p ? r == i : r >= i;
  };

  Grid g(rw.m, rw.p);
  // bottom_in[i][a] / right_in[i][a]: pipe entering (i, a) from below / right.
  std::vector<std::vector<int>> bottom_in(m + 1, std::vector<int>(p + 1, 0));
  std::vector<std::vector<int>> right_in(m + 1, std::vector<int>(p + 1, 0));

  auto cauchon_ok = [&](int i, int a) {
    bool left = true, above = true;
    for (int b = 1; b < a; ++b) left = left && g.black(i, b);
    for (int j = 1; j < i; ++j) above = above && g.black(j, a);
    return left || above;
  };

  std::function<bool(int)> place = [&](int k) {
    if (k == m * p) return true;
    const int i = k / p + 1, a = k % p + 1;
    const int top_out = i == 1 ? inv(m + a) : bottom_in[i - 1][a];
    const int left_out = a == 1 ? inv(m + 1 - i) : right_in[i][a - 1];
    for (bool black : {false, true}) {
      const int b_in = black ? top_out : left_out;
      const int r_in = black ? left_out : top_out;
      if (!can_enter_bottom(b_in, i, a) || !can_enter_right(r_in, i, a)) continue;
      g.set_black(i, a, black);
      if (black && !cauchon_ok(i, a)) continue;
      bottom_in[i][a] = b_in;
      right_in[i][a] = r_in;
      if (place(k + 1)) return true;
    }
    g.set_black(i, a, false);
    return false;
  };
  if (!place(0)) throw DomainError("no Cauchon diagram has pipe dream " + to_one_line(rw.w));
  CauchonDiagram d = CauchonDiagram::from_grid(g);
  if (pipe_dream(d).w != rw.w) throw InvariantError("inverse pipe dream failed to round-trip");
  return d;
}

namespace {
// r[i][j] = #{k <= i : w(k) >= j}
std::vector<std::vector<int>> rank_matrix(const Permutation& w) {
  const int n = static_cast<int>(w.size());
  std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 2, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) r[i][j] = r[i - 1][j] + (w(i) >= j ? 1 : 0);
  return r;
}

using Set = std::vector<int>;

bool set_leq(Set a, Set b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

// Calls fn on every k-subset of `pool` (pool ascending); stops when fn is true.
bool any_subset(const Set& pool, std::size_t k, const std::function<bool(const Set&)>& fn) {
  if (k > pool.size()) return false;
  for (const auto& pick : combinations(static_cast<int>(pool.size()), static_cast<int>(k))) {
    Set s;
    for (int x : pick) s.push_back(pool[x - 1]);
    if (fn(s)) return true;
  }
  return false;
}
}  // namespace

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw DomainError("Bruhat comparison of permutations of different sizes");
  const auto ru = rank_matrix(u), rw = rank_matrix(w);
  for (std::size_t i = 1; i < ru.size(); ++i)
    for (std::size_t j = 1; j < ru.size(); ++j)
      if (ru[i][j] > rw[i][j]) return false;
  return true;
}

MinorFamily M_of_w(const RestrictedPermutation& rw) {
  const int m = static_cast<int>(rw.m), p = static_cast<int>(rw.p), n = m + p;
  const Permutation& w = rw.w;
  const Permutation winv = w.inverse();
  auto w0 = [](int r, int x) { return r + 1 - x; };

  // Domains of the L sets in conditions 1 and 2.
  Set dom1, dom2;
  for (int l = 1; l <= p; ++l)
    if (w(l) <= m) dom1.push_back(l);
  for (int l = 1; l <= m; ++l)
    if (w(w0(n, l)) >= m + 1) dom2.push_back(l);

  MinorFamily fam(rw.m, rw.p);
  for (const auto& ix : all_minor_indices(rw.m, rw.p)) {
    const Set& I = ix.rows;
    const Set& Lam = ix.cols;
    const std::size_t k = I.size();

    const bool c1 = !any_subset(dom1, k, [&](const Set& L) {
      if (!set_leq(L, Lam)) return false;
      Set img;
      for (int l : L) img.push_back(w0(m, w(l)));
      return set_leq(I, img);
    });

    const bool c2 = !any_subset(dom2, k, [&](const Set& L) {
      if (!set_leq(L, I)) return false;
      Set shifted, img;
      for (int a : Lam) shifted.push_back(m + a);
      for (int l : L) img.push_back(w(w0(n, l)));
      return set_leq(shifted, img);
    });

    bool c3 = false;
    for (int r = 1; r <= p && !c3; ++r)
      for (int s = r; s <= p && !c3; ++s) {
        int lhs = 0, rhs = 0;
        for (int a : Lam) lhs += (a >= r && a <= s);
        for (int x = r; x <= s; ++x) rhs += !(w(x) >= m + r && w(x) <= m + s);
        c3 = lhs > rhs;
      }

    bool c4 = false;
    for (int r = 1; r <= m && !c4; ++r)
      for (int s = r; s <= m && !c4; ++s) {
        std::set<int> A, B;
        for (int x = r; x <= s; ++x) {
          A.insert(w0(n, x));
          B.insert(winv(w0(m, x)));
        }
        int lhs = 0, rhs = 0;
        for (int i : I) lhs += (i >= r && i <= s);
        for (int a : A) rhs += !B.count(a);
        c4 = lhs > rhs;
      }

    if (c1 || c2 || c3 || c4) fam.insert(ix);
  }
  return fam;
}

}  // namespace cauchon
