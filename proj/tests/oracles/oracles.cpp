#include "oracles.hpp"

#include <functional>
#include <set>

namespace oracle {

mpq_class quantum_int_at(int n, int d, const mpq_class& q) {
  mpq_class x = 1;
  for (int k = 0; k < d; ++k) x *= q;
  mpq_class xn = 1, xinv = 1 / x, xnin = 1;
  int m = n < 0 ? -n : n;
  for (int k = 0; k < m; ++k) {
    xn *= x;
    xnin *= xinv;
  }
  mpq_class v = (xn - xnin) / (x - xinv);
  return n < 0 ? mpq_class(-v) : v;
}

mpq_class eval_at(const klrbraid::LaurentPoly& p, const mpq_class& q) {
  mpq_class total = 0;
  for (const auto& [k, c] : p.terms()) {
    mpq_class pw = 1;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) pw *= q;
    if (k < 0) pw = 1 / pw;
    total += c * pw;
  }
  return total;
}

std::vector<mpq_class> power_series(const std::map<int, long>& num, const std::map<int, long>& den,
                                    int top) {
  std::vector<mpq_class> s;
  auto at = [](const std::map<int, long>& m, int k) -> mpq_class {
    auto it = m.find(k);
    return it == m.end() ? mpq_class(0) : mpq_class(it->second);
  };
  mpq_class d0 = at(den, 0);
  for (int m = 0; m <= top; ++m) {
    // num_m = sum_t den_t s_{m-t}
    mpq_class rest = at(num, m);
    for (int t = 1; t <= m; ++t) rest -= at(den, t) * s[m - t];
    s.push_back(rest / d0);
  }
  return s;
}

FormValue word_form(const klrbraid::CartanDatum& c, const std::vector<int>& x, const std::vector<int>& y) {
  FormValue out;
  out.factor_powers.assign(c.rank(), 0);
  for (int l : x) out.factor_powers[l] += 1;
  // peel letters of x from the left; _ir acts on y
  std::function<std::map<int, mpq_class>(size_t, const std::vector<int>&)> rec =
      [&](size_t pos, const std::vector<int>& v) -> std::map<int, mpq_class> {
    if (pos == x.size()) {
      if (v.empty()) return {{0, mpq_class(1)}};
      return {};
    }
    int i = x[pos];
    std::map<int, mpq_class> acc;
    int shift = 0;
    for (size_t p = 0; p < v.size(); ++p) {
      if (v[p] == i) {
        std::vector<int> rest(v);
        rest.erase(rest.begin() + p);
        for (auto& [k, cf] : rec(pos + 1, rest)) acc[k - shift] += cf;
      }
      shift += c.d(i) * c.a(i, v[p]);
    }
    for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
    return acc;
  };
  out.laurent = rec(0, y);
  return out;
}

namespace {

std::vector<std::vector<int>> roots_by_strings(const klrbraid::CartanDatum& c) {
  const int r = c.rank();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < r; ++i) {
    std::vector<int> s(r, 0);
    s[i] = 1;
    roots.insert(s);
    layer.push_back(s);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& b : layer) {
      for (int i = 0; i < r; ++i) {
        int p = 0;
        std::vector<int> down = b;
        while (true) {
          down[i] -= 1;
          if (!roots.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += c.a(i, j) * b[j];
        if (p - pairing > 0) {
          std::vector<int> up = b;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  return {roots.begin(), roots.end()};
}

}  // namespace

long kostant_partitions(const klrbraid::CartanDatum& c, const std::vector<int>& beta) {
  auto roots = roots_by_strings(c);
  // multiset count via generating-function style DP over roots
  std::map<std::vector<int>, long> ways{{std::vector<int>(c.rank(), 0), 1}};
  for (const auto& a : roots) {
    std::map<std::vector<int>, long> next = ways;
    // unbounded multiplicity: process in increasing order of total
    std::vector<std::vector<int>> keys;
    std::function<void(std::vector<int>&, int)> all = [&](std::vector<int>& v, int k) {
      if (k == c.rank()) {
        keys.push_back(v);
        return;
      }
      for (int t = 0; t <= beta[k]; ++t) {
        v[k] = t;
        all(v, k + 1);
      }
    };
    std::vector<int> tmp(c.rank());
    all(tmp, 0);
    for (const auto& v : keys) {
      std::vector<int> prev = v;
      bool ok = true;
      for (int k = 0; k < c.rank(); ++k) {
        prev[k] -= a[k];
        ok = ok && prev[k] >= 0;
      }
      if (!ok) continue;
      next[v] += next[prev];
    }
    ways = std::move(next);
  }
  return ways[beta];
}

mpz_class weyl_dimension(const klrbraid::CartanDatum& c, const std::vector<int>& lambda) {
  mpq_class num = 1;
  for (const auto& a : roots_by_strings(c)) {
    mpq_class top = 0, bottom = 0;
    for (int j = 0; j < c.rank(); ++j) {
      top += a[j] * c.d(j) * (lambda[j] + 1);
      bottom += a[j] * c.d(j);
    }
    num *= top / bottom;
  }
  return num.get_num();
}

mpz_class factorial(long n) {
  mpz_class r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace oracle
