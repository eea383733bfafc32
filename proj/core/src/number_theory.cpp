#include "cackit/number_theory.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace cackit {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_mod(std::int64_t value, std::uint64_t m) noexcept {
  const auto sm = static_cast<__int128>(m);
  __int128 r = static_cast<__int128>(value) % sm;
  if (r < 0) r += sm;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  // Extended Euclid on signed 128-bit to avoid overflow on the cofactors.
  __int128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) {
    throw std::domain_error("inverse_mod: " + std::to_string(a) + " is not invertible mod " +
                            std::to_string(m));
  }
  __int128 x = old_s % static_cast<__int128>(m);
  if (x < 0) x += m;
  return static_cast<std::uint64_t>(x);
}

std::uint64_t crt_pair(std::uint64_t a, std::uint64_t m, std::uint64_t b, std::uint64_t n) {
  // x = a + m * t, with t = (b - a) * m^-1 mod n.
  const std::uint64_t m_inv = inverse_mod(m % n, n);
  const std::uint64_t diff = reduce_mod(static_cast<std::int64_t>(b % n) - static_cast<std::int64_t>(a % n), n);
  const std::uint64_t t = mul_mod(diff, m_inv, n);
  return a % m + m * t;
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned r) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    constexpr std::uint64_t kBlock = 128;
    for (std::uint64_t len = 1; g == 1; len <<= 1U) {
      x = y;
      for (std::uint64_t i = 0; i < len; ++i) y = f(y);
      for (std::uint64_t k = 0; k < len && g == 1; k += kBlock) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBlock, len - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  return std::none_of(kBases.begin(), kBases.end(),
                      [&](std::uint64_t a) { return miller_rabin_witness(n, a, d, r); });
}

std::uint64_t Factorization::product() const noexcept {
  std::uint64_t result = 1;
  for (const auto& [p, e] : factors) {
    for (unsigned i = 0; i < e; ++i) result *= p;
  }
  return result;
}

unsigned Factorization::exponent_of(std::uint64_t prime) const noexcept {
  for (const auto& [p, e] : factors) {
    if (p == prime) return e;
  }
  return 0;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization result;
  result.n = n;
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p < 1000 && p * p <= rest; ++p) {
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  factor_into(rest, primes);
  std::sort(primes.begin(), primes.end());
  for (std::uint64_t p : primes) {
    if (!result.factors.empty() && result.factors.back().first == p) {
      ++result.factors.back().second;
    } else {
      result.factors.emplace_back(p, 1U);
    }
  }
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> result{1};
  for (const auto& [p, e] : factorize(n).factors) {
    const std::size_t base = result.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) result.push_back(result[i] * pk);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::uint64_t euler_phi(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("euler_phi: x must be positive");
  std::uint64_t phi = x;
  for (const auto& [p, e] : factorize(x).factors) phi = phi / p * (p - 1);
  return phi;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
  std::vector<std::uint64_t> primes;
  if (x < 2) return primes;
  std::vector<bool> composite(x + 1, false);
  for (std::uint64_t i = 2; i <= x; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t prime_count(std::uint64_t x) {
  if (x < 2) throw std::invalid_argument("prime_count: x must be at least 2");
  return primes_up_to(x).size();
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("primitive_root: " + std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto factors = factorize(p - 1).factors;
  for (std::uint64_t g = 2;; ++g) {
    const bool generates = std::all_of(factors.begin(), factors.end(), [&](const auto& pe) {
      return pow_mod(g, (p - 1) / pe.first, p) != 1;
    });
    if (generates) return g;
  }
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("legendre: " + std::to_string(p) + " is not an odd prime");
  }
  const std::uint64_t r = pow_mod(reduce_mod(a, p), (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

std::size_t CosetPartition::coset_of(std::int64_t x) const {
  const std::uint64_t r = reduce_mod(x, p_);
  if (r == 0) throw std::invalid_argument("coset_of: value is 0 mod " + std::to_string(p_));
  const std::uint64_t y = pow_mod(r, (p_ - 1) / f_, p_);
  const auto it = std::find(unity_roots_.begin(), unity_roots_.end(), y);
  return static_cast<std::size_t>(it - unity_roots_.begin());
}

CosetPartition coset_partition(std::uint64_t p, std::uint64_t f) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("coset_partition: " + std::to_string(p) + " is not an odd prime");
  }
  if (f == 0 || (p - 1) % f != 0) {
    throw std::invalid_argument("coset_partition: " + std::to_string(f) + " does not divide " +
                                std::to_string(p - 1));
  }
  CosetPartition part;
  part.p_ = p;
  part.f_ = f;
  part.root_ = primitive_root(p);
  part.cosets_.assign(f, {});
  std::uint64_t x = 1;
  for (std::uint64_t e = 0; e + 1 < p; ++e) {
    part.cosets_[e % f].push_back(x);
    x = mul_mod(x, part.root_, p);
  }
  for (auto& c : part.cosets_) std::sort(c.begin(), c.end());
  const std::uint64_t zeta = pow_mod(part.root_, (p - 1) / f, p);
  std::uint64_t z = 1;
  for (std::uint64_t j = 0; j < f; ++j) {
    part.unity_roots_.push_back(z);
    z = mul_mod(z, zeta, p);
  }
  return part;
}

std::optional<std::string> sdr_defect(std::span<const std::int64_t> values,
                                      const CosetPartition& partition) {
  const std::uint64_t p = partition.prime();
  const std::uint64_t f = partition.index();
  std::vector<std::vector<std::int64_t>> hits(f);
  for (std::int64_t v : values) {
    if (reduce_mod(v, p) == 0) return "value " + std::to_string(v) + " is 0 mod " + std::to_string(p);
    hits[partition.coset_of(v)].push_back(v);
  }
  for (std::uint64_t j = 0; j < f; ++j) {
    if (hits[j].size() == 1) continue;
    std::ostringstream os;
    os << "coset H_" << j << "^" << f << "(" << p << ")";
    if (hits[j].empty()) {
      os << " has no representative";
    } else {
      os << " holds " << hits[j].size() << " representatives {";
      for (std::size_t i = 0; i < hits[j].size(); ++i) os << (i ? "," : "") << hits[j][i];
      os << "}";
    }
    return os.str();
  }
  if (values.size() != f) {
    return "expected " + std::to_string(f) + " representatives, got " + std::to_string(values.size());
  }
  return std::nullopt;
}

bool is_sdr(std::span<const std::int64_t> values, const CosetPartition& partition) {
  for (std::int64_t v : values) {
    if (reduce_mod(v, partition.prime()) == 0) {
      throw std::invalid_argument("is_sdr: value " + std::to_string(v) + " is 0 mod " +
                                  std::to_string(partition.prime()));
    }
  }
  return !sdr_defect(values, partition).has_value();
}

}  // namespace cackit
