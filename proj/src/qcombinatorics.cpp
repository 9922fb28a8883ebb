#include "rq/qcombinatorics.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace rq {

QPoly q_number(long n) { return q_number_at_power(n, 1); }

QPoly q_number_at_power(long n, unsigned k) {
  if (n <= 0) return {};
  if (k == 0) return QPoly(n);
  std::vector<Rational> c(static_cast<std::size_t>((n - 1) * k + 1), Rational(0));
  for (long l = 0; l < n; ++l) c[static_cast<std::size_t>(l * k)] = 1;
  return QPoly(std::move(c));
}

QPoly q_factorial(long n) {
  QPoly r(1);
  for (long l = 1; l <= n; ++l) r *= q_number(l);
  return r;
}

QPoly q_binomial(long n, long p) {
  if (p < 0 || p > n) return {};
  if (p == 0 || p == n) return QPoly(1);

  static std::mutex mu;
  static std::map<std::pair<long, long>, QPoly> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find({n, p});
    if (it != memo.end()) return it->second;
  }
  // [n p] = [n-1 p-1] + q^p [n-1 p]
  QPoly r = q_binomial(n - 1, p - 1) + q_binomial(n - 1, p).shifted(static_cast<std::size_t>(p));
  std::lock_guard lock(mu);
  memo.emplace(std::pair{n, p}, r);
  return r;
}

QPoly q_binomial_by_factorials(long n, long p) {
  if (p < 0 || p > n) return {};
  QPoly num = q_factorial(n);
  QPoly den = q_factorial(p) * q_factorial(n - p);
  return num.exact_div(den);
}

}  // namespace rq
