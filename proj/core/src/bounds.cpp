#include "cackit/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cackit/number_theory.hpp"

namespace cackit {

namespace {

void check_params(std::uint64_t length, std::uint64_t weight) {
  if (weight < 2 || length < weight) {
    throw std::invalid_argument("bounds need L >= w >= 2 (got L = " + std::to_string(length) +
                                ", w = " + std::to_string(weight) + ")");
  }
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

bool better(std::int64_t value, const std::vector<std::uint64_t>& witness, const FResult& best) {
  return value > best.value || (value == best.value && witness < best.witness);
}

struct CoprimeSearch {
  const std::vector<std::uint64_t>& s;
  const std::vector<std::int64_t>& credit;
  std::vector<std::int64_t> suffix;  // sum of credits from index i on
  std::vector<std::uint64_t> chosen;
  FResult best;

  void run(std::size_t i, std::int64_t value) {
    if (better(value, chosen, best)) best = FResult{value, chosen};
    if (value + suffix[i] < best.value) return;
    for (std::size_t j = i; j < s.size(); ++j) {
      const bool coprime = std::all_of(chosen.begin(), chosen.end(), [&](std::uint64_t c) { return std::gcd(c, s[j]) == 1; });
      if (!coprime) continue;
      chosen.push_back(s[j]);
      run(j + 1, value + credit[j]);
      chosen.pop_back();
    }
  }
};

struct PrimeAssignment {
  const std::vector<std::uint64_t>& primes;
  // options[k] = orders whose smallest prime factor is primes[k]
  std::vector<std::vector<std::pair<std::uint64_t, std::int64_t>>> options;
  std::vector<bool> used;
  std::vector<std::uint64_t> chosen;
  FResult best;

  bool prime_free(std::uint64_t x) const {
    for (std::size_t k = 0; k < primes.size(); ++k) {
      if (x % primes[k] == 0 && used[k]) return false;
    }
    return true;
  }

  void mark(std::uint64_t x, bool value) {
    for (std::size_t k = 0; k < primes.size(); ++k) {
      if (x % primes[k] == 0) used[k] = value;
    }
  }

  void run(std::size_t k, std::int64_t value) {
    if (k == primes.size()) {
      std::vector<std::uint64_t> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      if (better(value, sorted, best)) best = FResult{value, std::move(sorted)};
      return;
    }
    run(k + 1, value);  // prime k unassigned (or already consumed)
    if (used[k]) return;
    for (const auto& [x, c] : options[k]) {
      if (!prime_free(x)) continue;
      mark(x, true);
      chosen.push_back(x);
      run(k + 1, value + c);
      chosen.pop_back();
      mark(x, false);
    }
  }
};

}  // namespace

std::string_view to_string(BoundMethod method) noexcept {
  switch (method) {
    case BoundMethod::theorem4: return "theorem4";
    case BoundMethod::theorem5: return "theorem5";
    case BoundMethod::corollary_w3: return "w3";
    case BoundMethod::corollary_w6: return "w6";
  }
  return "?";
}

BoundMethod parse_bound_method(std::string_view name) {
  if (name == "theorem4") return BoundMethod::theorem4;
  if (name == "theorem5") return BoundMethod::theorem5;
  if (name == "w3" || name == "corollary_w3") return BoundMethod::corollary_w3;
  if (name == "w6" || name == "corollary_w6") return BoundMethod::corollary_w6;
  throw std::invalid_argument("unknown bound method: " + std::string(name));
}

std::int64_t order_credit(std::uint64_t x, std::uint64_t w) {
  return static_cast<std::int64_t>(x) - 1 - 2 * static_cast<std::int64_t>(x * ceil_div(w, x)) +
         2 * static_cast<std::int64_t>(w);
}

std::vector<std::uint64_t> compute_s(std::uint64_t length, std::uint64_t weight) {
  check_params(length, weight);
  std::vector<std::uint64_t> s;
  for (std::uint64_t x = 2; x <= 2 * weight - 2; ++x) {
    if (length % x == 0 && 2 * x * ceil_div(weight, x) - x <= 2 * weight - 2) s.push_back(x);
  }
  return s;
}

FResult compute_f(std::uint64_t length, std::uint64_t weight) {
  const std::vector<std::uint64_t> s = compute_s(length, weight);
  std::vector<std::int64_t> credit;
  for (std::uint64_t x : s) credit.push_back(order_credit(x, weight));
  CoprimeSearch search{s, credit, std::vector<std::int64_t>(s.size() + 1, 0), {}, {}};
  for (std::size_t i = s.size(); i-- > 0;) search.suffix[i] = search.suffix[i + 1] + credit[i];
  search.run(0, 0);
  return search.best;
}

FResult compute_f_lp(std::uint64_t length, std::uint64_t weight) {
  const std::vector<std::uint64_t> s = compute_s(length, weight);
  const std::vector<std::uint64_t> primes = primes_up_to(2 * weight - 2);
  PrimeAssignment ip{primes, std::vector<std::vector<std::pair<std::uint64_t, std::int64_t>>>(primes.size()),
                     std::vector<bool>(primes.size(), false), {}, {}};
  for (std::uint64_t x : s) {
    for (std::size_t k = 0; k < primes.size(); ++k) {
      if (x % primes[k] == 0) {
        ip.options[k].emplace_back(x, order_credit(x, weight));
        break;
      }
    }
  }
  ip.run(0, 0);
  return ip.best;
}

std::uint64_t theorem4_bound(std::uint64_t length, std::uint64_t weight) {
  const std::int64_t f = compute_f(length, weight).value;
  return (length - 1 + static_cast<std::uint64_t>(f)) / (2 * weight - 2);
}

std::uint64_t theorem5_bound(std::uint64_t length, std::uint64_t weight) {
  check_params(length, weight);
  // (L-1)/(2w-2) + pi/2 == (L - 1 + pi*(w-1)) / (2w-2)
  return (length - 1 + prime_count(2 * weight - 2) * (weight - 1)) / (2 * weight - 2);
}

std::uint64_t corollary_w3_bound(std::uint64_t length) {
  if (length < 3) throw std::invalid_argument("corollary_w3_bound needs L >= 3");
  return (length + 1) / 4;
}

std::uint64_t corollary_w6_bound(std::uint64_t length) {
  if (length < 6) throw std::invalid_argument("corollary_w6_bound needs L >= 6");
  const Factorization fac = factorize(length);
  const unsigned p = fac.exponent_of(2), q = fac.exponent_of(3), r = fac.exponent_of(7);
  std::uint64_t shift = 0;  // bound = floor((L - 1 + shift) / 10)
  if (r == 0) {
    if (q == 0) {
      shift = p == 0 ? 0 : (p <= 2 ? 1 : 3);
    } else {
      shift = p == 0 ? 2 : 5;
    }
  } else {
    if (q == 0) {
      shift = p == 0 ? 4 : (p <= 2 ? 5 : 7);
    } else {
      shift = p == 0 ? 6 : 9;
    }
  }
  return (length - 1 + shift) / 10;
}

BoundReport bound_report(std::uint64_t length, std::uint64_t weight, BoundMethod method) {
  BoundReport report;
  report.length = length;
  report.weight = weight;
  report.method = method;
  report.eligible = compute_s(length, weight);
  for (std::uint64_t x : report.eligible) report.credits.push_back(order_credit(x, weight));
  FResult f = compute_f(length, weight);
  report.f = f.value;
  report.witness = std::move(f.witness);
  switch (method) {
    case BoundMethod::theorem4:
      report.bound = (length - 1 + static_cast<std::uint64_t>(report.f)) / (2 * weight - 2);
      break;
    case BoundMethod::theorem5:
      report.bound = theorem5_bound(length, weight);
      break;
    case BoundMethod::corollary_w3:
      if (weight != 3) throw std::invalid_argument("method w3 applies to weight 3 only");
      report.bound = corollary_w3_bound(length);
      break;
    case BoundMethod::corollary_w6:
      if (weight != 6) throw std::invalid_argument("method w6 applies to weight 6 only");
      report.bound = corollary_w6_bound(length);
      break;
  }
  return report;
}

}  // namespace cackit
