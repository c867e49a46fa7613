#include "codeg/cyclotomic.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace codeg {

namespace {

  void trim(Poly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
  }

  std::mutex cache_mutex;

}  // namespace

Poly poly_mul(Poly const& a, Poly const& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

Poly poly_divexact(Poly const& a, Poly const& b) {
  if (b.empty() || b.back() != 1) throw std::invalid_argument("poly_divexact: divisor not monic");
  if (a.size() < b.size()) throw std::domain_error("poly_divexact: inexact");
  Poly r = a, q(a.size() - b.size() + 1, 0);
  for (size_t k = q.size(); k-- > 0;) {
    Nat c = r[k + b.size() - 1];
    q[k] = c;
    if (c != 0)
      for (size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  for (auto const& c : r)
    if (c != 0) throw std::domain_error("poly_divexact: inexact");
  trim(q);
  return q;
}

Poly poly_substitute_power(Poly const& a, unsigned t) {
  if (a.empty()) return {};
  Poly c((a.size() - 1) * t + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) c[i * t] = a[i];
  return c;
}

Nat poly_eval(Poly const& a, Nat const& x) {
  Nat v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

Poly const& cyclotomic_poly(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_poly: index 0");
  static std::map<unsigned, Poly> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Poly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) num = poly_divexact(num, cyclotomic_poly(d));
  std::lock_guard<std::mutex> lk(cache_mutex);
  return cache.emplace(n, std::move(num)).first->second;
}

Nat cyclotomic_eval(unsigned i, Nat const& q) {
  if (i == 0) throw std::invalid_argument("cyclotomic_eval: index 0");
  Nat v = ipow(q, i) - 1;
  for (unsigned d = 1; d < i; ++d)
    if (i % d == 0) v /= cyclotomic_eval(d, q);
  return v;
}

std::vector<unsigned> const& cyclotomic_refinement(unsigned i, unsigned t) {
  static std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mutex);
    if (auto it = cache.find({i, t}); it != cache.end()) return it->second;
  }
  // Phi_i(x^t) = prod over d | t, gcd(d, i) = 1 of Phi_{i t / d}(x)
  std::vector<unsigned> js;
  for (unsigned d = t; d >= 1; --d)
    if (t % d == 0 && std::gcd(d, i) == 1) js.push_back(i * t / d);
  Poly lhs = poly_substitute_power(cyclotomic_poly(i), t), rhs{1};
  for (auto j : js) rhs = poly_mul(rhs, cyclotomic_poly(j));
  if (lhs != rhs) throw std::logic_error("cyclotomic_refinement: identity check failed");
  std::lock_guard<std::mutex> lk(cache_mutex);
  return cache.emplace(std::make_pair(i, t), std::move(js)).first->second;
}

Factored const& cyclotomic_factored(unsigned j, unsigned long p) {
  static std::map<std::pair<unsigned, unsigned long>, Factored> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mutex);
    if (auto it = cache.find({j, p}); it != cache.end()) return it->second;
  }
  Factored f(cyclotomic_eval(j, Nat(p)));
  std::lock_guard<std::mutex> lk(cache_mutex);
  return cache.emplace(std::make_pair(j, p), std::move(f)).first->second;
}

std::vector<unsigned> binomial_indices(unsigned i, bool plus) {
  std::vector<unsigned> out;
  if (!plus) {
    for (unsigned d = 1; d <= i; ++d)
      if (i % d == 0) out.push_back(d);
  } else {
    for (unsigned d = 1; d <= 2 * i; ++d)
      if ((2 * i) % d == 0 && i % d != 0) out.push_back(d);
  }
  return out;
}

}  // namespace codeg
