#include "codeg/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace codeg {

Partition::Partition(std::vector<unsigned> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0u), parts.end());
  std::sort(parts.rbegin(), parts.rend());
  parts_ = std::move(parts);
  for (auto x : parts_) size_ += x;
}

Partition Partition::conjugate() const {
  std::vector<unsigned> c(parts_.empty() ? 0 : parts_[0], 0);
  for (auto x : parts_)
    for (unsigned j = 0; j < x; ++j) ++c[j];
  return Partition(std::move(c));
}

std::vector<unsigned> Partition::hooks() const {
  auto c = conjugate().parts();
  std::vector<unsigned> h;
  h.reserve(size_);
  for (unsigned i = 0; i < parts_.size(); ++i)
    for (unsigned j = 0; j < parts_[i]; ++j) h.push_back(parts_[i] - j + c[j] - i - 1);
  return h;
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

void for_each_partition(unsigned m, std::function<void(Partition const&)> const& f) {
  if (m > max_partition_size) throw std::invalid_argument("partition size above the cap");
  if (m == 0) {
    f(Partition());
    return;
  }
  std::vector<unsigned> a{m};
  while (true) {
    f(Partition(a));
    unsigned ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    unsigned v = --a.back();
    unsigned rem = ones + 1;
    while (rem >= v) {
      a.push_back(v);
      rem -= v;
    }
    if (rem) a.push_back(rem);
  }
}

std::vector<Partition> partitions(unsigned m) {
  std::vector<Partition> out;
  for_each_partition(m, [&](Partition const& l) { out.push_back(l); });
  return out;
}

Nat hook_degree(Partition const& l) {
  Nat h = 1;
  for (auto x : l.hooks()) h *= x;
  return factorial(l.size()) / h;
}

Nat DegreeProfile::group_order() const { return alternating ? factorial(m) / 2 : factorial(m); }

Nat DegreeProfile::sum_of_squares() const {
  Nat s = 0;
  for (auto const& d : degrees) s += d * d;
  return s;
}

namespace {

  struct Profiles {
    DegreeProfile sym, alt;
  };

  std::mutex profile_mutex;

  Profiles const& profiles(unsigned m) {
    static std::map<unsigned, Profiles> cache;
    {
      std::lock_guard<std::mutex> lk(profile_mutex);
      if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    Profiles pr;
    pr.sym.alternating = false;
    pr.sym.m = pr.alt.m = m;
    Nat mf = factorial(m);
    for_each_partition(m, [&](Partition const& l) {
      Nat h = 1;
      for (auto x : l.hooks()) h *= x;
      Nat d = mf / h;
      pr.sym.degrees.push_back(d);
      Partition c = l.conjugate();
      if (c == l) {
        if (d % 2 != 0) throw std::logic_error("self-conjugate degree is odd");
        pr.alt.degrees.push_back(d / 2);
        pr.alt.degrees.push_back(d / 2);
      } else if (c < l) {
        pr.alt.degrees.push_back(d);
      }
    });
    std::sort(pr.sym.degrees.begin(), pr.sym.degrees.end());
    std::sort(pr.alt.degrees.begin(), pr.alt.degrees.end());
    if (pr.sym.sum_of_squares() != pr.sym.group_order() || pr.alt.sum_of_squares() != pr.alt.group_order())
      throw std::logic_error("degree sum of squares mismatch");
    std::lock_guard<std::mutex> lk(profile_mutex);
    return cache.emplace(m, std::move(pr)).first->second;
  }

  Interval iv(Nat const& n, mpfr_prec_t p) { return Interval::from(n, p); }
  Interval iv(unsigned long n, mpfr_prec_t p) { return Interval::from(Nat(n), p); }

}  // namespace

DegreeProfile symmetric_degrees(unsigned m) { return profiles(m).sym; }

DegreeProfile alternating_degrees(unsigned m) {
  if (m < 5) throw std::invalid_argument("alternating_degrees needs m >= 5");
  return profiles(m).alt;
}

Nat b_symmetric(unsigned m) { return profiles(m).sym.degrees.back(); }

Nat b_alternating(unsigned m) {
  if (m < 5) throw std::invalid_argument("b_alternating needs m >= 5");
  return profiles(m).alt.degrees.back();
}

Rat f_alternating(unsigned m) {
  Rat f(factorial(m) / 2, b_alternating(m));
  f.canonicalize();
  return f;
}

std::optional<Partition> p_core_witness(unsigned m, unsigned p) {
  if (p < 2) throw std::invalid_argument("p_core_witness: p must be at least 2");
  // a charge n_i contributes at least (p n_i^2 - (p-1)|n_i|)/2 to the size
  auto cost2 = [p](long x) { return static_cast<long>(p) * x * x - static_cast<long>(p - 1) * std::labs(x); };
  long bound = 0;
  while (cost2(bound + 1) <= 2L * m) ++bound;
  std::vector<long> n(p, 0);
  std::optional<Partition> found;

  auto build = [&]() -> Partition {
    long k = 0;
    for (auto x : n) k = std::max(k, std::labs(x));
    std::vector<long> beta;
    for (unsigned i = 0; i < p; ++i)
      for (long j = 0; j < k + n[i]; ++j) beta.push_back(static_cast<long>(i) + static_cast<long>(p) * j);
    std::sort(beta.rbegin(), beta.rend());
    std::vector<unsigned> parts;
    long N = static_cast<long>(beta.size());
    for (long r = 0; r < N; ++r) parts.push_back(static_cast<unsigned>(beta[r] - (N - 1 - r)));
    return Partition(parts);
  };

  std::function<void(unsigned, long, long)> rec = [&](unsigned i, long sum, long cost) {
    if (found) return;
    if (i + 1 == p) {
      n[i] = -sum;
      if (cost + cost2(n[i]) > 2L * m) return;
      Partition l = build();
      if (l.size() == m) found = l;
      return;
    }
    for (long x = -bound; x <= bound; ++x) {
      long c = cost + cost2(x);
      if (c > 2L * m) continue;
      n[i] = x;
      rec(i + 1, sum + x, c);
      if (found) return;
    }
  };
  rec(0, 0, 0);
  if (found) {
    for (auto h : found->hooks())
      if (h % p == 0) throw std::logic_error("abacus witness has a hook divisible by p");
  }
  return found;
}

bool has_p_core(unsigned m, unsigned p) {
  if (p > m) return true;  // (m) has hooks 1..m
  return p_core_witness(m, p).has_value();
}

bool alternating_defect_zero(unsigned m, unsigned p) {
  Nat pp(p);
  unsigned target = valuation(factorial(m) / 2, pp);
  for (auto const& d : alternating_degrees(m).degrees)
    if (valuation(d, pp) == target) return true;
  return false;
}

bool defect_zero_closed_form(unsigned m, unsigned p) {
  if (p == 2) {
    for (long k = -static_cast<long>(m); k <= static_cast<long>(m); ++k) {
      long v = 2 * k * k + k;
      if (v == static_cast<long>(m) || v + 2 == static_cast<long>(m)) return true;
    }
    return false;
  }
  if (p == 3) return !defect_zero_closed_form_literal(m);
  throw std::invalid_argument("closed form known for p = 2 and p = 3 only");
}

bool defect_zero_closed_form_natural_k(unsigned m) {
  for (long k = 0; k <= static_cast<long>(m); ++k) {
    long v = 2 * k * k + k;
    if (v == static_cast<long>(m) || v + 2 == static_cast<long>(m)) return true;
  }
  return false;
}

bool defect_zero_closed_form_literal(unsigned m) {
  for (auto const& [l, e] : factor(Nat(3UL * m + 1)))
    if (l % 3 == 2 && e % 2 == 1) return true;
  return false;
}

Certified vk_lower_holds(unsigned m) {
  Nat b = b_alternating(m);
  return certify([&](mpfr_prec_t pr) {
    auto half = Interval::from(Rat(1, 2), pr);
    auto lhs = half * exp(Interval(pr) - Interval::decimal("1.28255", pr) * sqrt(iv(m, pr))) *
               sqrt(iv(factorial(m), pr));
    return compare_le(lhs, iv(b, pr));
  });
}

Certified vk_upper_holds(unsigned m) {
  Nat b = b_alternating(m);
  return certify([&](mpfr_prec_t pr) {
    auto rhs = exp(Interval(pr) - Interval::decimal("0.11565", pr) * sqrt(iv(m, pr))) *
               sqrt(iv(factorial(m), pr));
    return compare_le(iv(b, pr), rhs);
  });
}

Certified vk_bounds_hold(unsigned m) {
  auto lo = vk_lower_holds(m), hi = vk_upper_holds(m);
  if (lo == Certified::False || hi == Certified::False) return Certified::False;
  if (lo == Certified::True && hi == Certified::True) return Certified::True;
  return Certified::Unknown;
}

Certified branching_lower_bound_holds(unsigned m) {
  Nat b0 = b_alternating(m), b1 = b_alternating(m + 1);
  return certify([&](mpfr_prec_t pr) {
    auto r = iv(2UL * (m + 1), pr) / (sqrt(iv(8UL * m + 1, pr)) + iv(3UL, pr)) * iv(b0, pr);
    return compare_le(r, iv(b1, pr));
  });
}

Certified branching_node_bound_holds(unsigned m) {
  Nat bs = b_symmetric(m), b1 = b_alternating(m + 1);
  return certify([&](mpfr_prec_t pr) {
    auto r = (sqrt(iv(8UL * m + 9, pr)) - iv(1UL, pr)) / iv(2UL, pr) * iv(bs, pr);
    return compare_le(iv(b1, pr), r);
  });
}

Certified branching_upper_bound_holds(unsigned m) {
  Nat b0 = b_alternating(m), b1 = b_alternating(m + 1);
  return certify([&](mpfr_prec_t pr) {
    auto r = (sqrt(iv(8UL * m + 9, pr)) - iv(1UL, pr)) * iv(b0, pr);
    return compare_lt(iv(b1, pr), r);
  });
}

}  // namespace codeg
