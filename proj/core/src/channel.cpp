#include "cackit/channel.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <thread>

#include "json.hpp"

namespace cackit {

namespace {

constexpr std::size_t kMaxActive = 64;  // occupancy masks are one word per slot

// SplitMix64; trial i is seeded from (seed, i) so threads can take any trials.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = -n % n;  // 2^64 mod n
    std::uint64_t r = next();
    while (r < limit) r = next();
    return r % n;
  }

 private:
  std::uint64_t state_;
};

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 mix(seed ^ (trial * 0xd1342543de82ef95ULL));
  mix.next();
  return mix.next();
}

struct Scratch {
  std::vector<std::uint32_t> count;
  std::vector<std::uint64_t> occupancy;
  std::vector<std::uint64_t> touched;

  explicit Scratch(std::uint64_t length) : count(length, 0), occupancy(length, 0) {}
};

SimOutcome simulate(std::uint64_t length, std::span<const Codeword> words, std::span<const std::size_t> active,
                    std::span<const std::uint64_t> offsets, Scratch& s) {
  const std::size_t k = active.size();
  for (std::size_t r = 0; r < k; ++r) {
    for (Residue e : words[active[r]].elements()) {
      const std::uint64_t t = (e + offsets[r]) % length;
      if (s.count[t] == 0) s.touched.push_back(t);
      ++s.count[t];
      s.occupancy[t] |= std::uint64_t{1} << r;
    }
  }

  SimOutcome out;
  out.witness.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (Residue e : words[active[r]].elements()) {
      const std::uint64_t t = (e + offsets[r]) % length;
      if (s.count[t] == 1 && (!out.witness[r] || t < *out.witness[r])) out.witness[r] = t;
    }
  }

  std::uint64_t alone = 0;
  for (std::uint64_t t : s.touched) {
    if (std::popcount(s.occupancy[t]) == 1) alone |= s.occupancy[t];
  }
  const std::uint64_t everyone = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  out.permutation_found = alone == everyone;
  if (!out.consistent()) throw std::logic_error("slot witnesses and permutation check disagree");

  for (std::uint64_t t : s.touched) {
    s.count[t] = 0;
    s.occupancy[t] = 0;
  }
  s.touched.clear();
  return out;
}

void check_active(std::uint64_t length, std::span<const Codeword> words, std::span<const std::size_t> active,
                  std::span<const std::uint64_t> offsets) {
  if (active.size() != offsets.size()) throw std::invalid_argument("active users and offsets differ in number");
  if (active.empty()) throw std::invalid_argument("no active users");
  if (active.size() > kMaxActive) throw std::invalid_argument("at most 64 active users are supported");
  for (std::size_t i : active) {
    if (i >= words.size()) {
      throw std::out_of_range("codeword index " + std::to_string(i) + " out of range (code has " +
                              std::to_string(words.size()) + ")");
    }
    if (words[i].modulus() != length) throw std::invalid_argument("codeword length differs from L");
  }
  for (std::uint64_t o : offsets) {
    if (o >= length) throw std::invalid_argument("offset " + std::to_string(o) + " not in [0, L)");
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t g = std::gcd(r, i);
    r = checked_mul(r / g, (n - k + i) / (i / g));
    if (r == UINT64_MAX) return r;
  }
  return r;
}

Violation make_violation(std::span<const std::size_t> subset, std::span<const std::uint64_t> offsets,
                         const SimOutcome& outcome) {
  return Violation{{subset.begin(), subset.end()}, {offsets.begin(), offsets.end()}, subset[*outcome.blocked_user()]};
}

}  // namespace

BudgetError::BudgetError(std::uint64_t count, std::uint64_t budget)
    : std::runtime_error("exhaustive check needs " + std::to_string(count) + " combinations, budget is " +
                         std::to_string(budget)),
      count_(count) {}

bool SimOutcome::non_blocking() const noexcept {
  return std::all_of(witness.begin(), witness.end(), [](const auto& w) { return w.has_value(); });
}

std::optional<std::size_t> SimOutcome::blocked_user() const noexcept {
  for (std::size_t r = 0; r < witness.size(); ++r) {
    if (!witness[r]) return r;
  }
  return std::nullopt;
}

SimOutcome check_offsets(std::uint64_t length, std::span<const Codeword> words, std::span<const std::size_t> active,
                         std::span<const std::uint64_t> offsets) {
  check_active(length, words, active, offsets);
  Scratch scratch(length);
  return simulate(length, words, active, offsets, scratch);
}

SimOutcome check_offsets(const Cac& code, std::span<const std::size_t> active,
                         std::span<const std::uint64_t> offsets) {
  return check_offsets(code.length(), code.codewords(), active, offsets);
}

ExhaustiveOutcome exhaustive_check(std::uint64_t length, std::span<const Codeword> words, std::size_t k,
                                   std::uint64_t budget) {
  if (k == 0 || k > words.size()) {
    throw std::invalid_argument("k must lie in [1, " + std::to_string(words.size()) + "]");
  }
  if (k > kMaxActive) throw std::invalid_argument("at most 64 active users are supported");
  std::uint64_t count = binomial(words.size(), k);
  for (std::size_t i = 1; i < k; ++i) count = checked_mul(count, length);
  if (count > budget) throw BudgetError(count, budget);

  ExhaustiveOutcome out;
  Scratch scratch(length);
  std::vector<std::size_t> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<std::uint64_t> offsets(k, 0);
  for (const auto& w : words) {
    if (w.modulus() != length) throw std::invalid_argument("codeword length differs from L");
  }
  for (;;) {
    std::fill(offsets.begin(), offsets.end(), 0);
    for (;;) {
      const SimOutcome sim = simulate(length, words, subset, offsets, scratch);
      ++out.checks;
      if (!sim.non_blocking()) {
        out.non_blocking = false;
        out.violation = make_violation(subset, offsets, sim);
        return out;
      }
      // odometer over offsets[1..k-1]
      std::size_t pos = k - 1;
      while (pos >= 1) {
        if (++offsets[pos] < length) break;
        offsets[pos] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == words.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

ExhaustiveOutcome exhaustive_check(const Cac& code, std::size_t k, std::uint64_t budget) {
  return exhaustive_check(code.length(), code.codewords(), k, budget);
}

TrialSummary random_trials(std::uint64_t length, std::span<const Codeword> words, std::size_t k,
                           std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (k == 0 || k > words.size()) {
    throw std::invalid_argument("k must lie in [1, " + std::to_string(words.size()) + "]");
  }
  if (k > kMaxActive) throw std::invalid_argument("at most 64 active users are supported");
  for (const auto& w : words) {
    if (w.modulus() != length) throw std::invalid_argument("codeword length differs from L");
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

  struct Found {
    std::uint64_t trial;
    Violation violation;
  };
  std::mutex merge;
  std::vector<Found> found;
  std::uint64_t total = 0;

  auto worker = [&](unsigned id) {
    Scratch scratch(length);
    std::vector<std::size_t> pool(words.size());
    std::vector<std::size_t> subset(k);
    std::vector<std::uint64_t> offsets(k);
    std::vector<Found> local;
    std::uint64_t local_total = 0;
    for (std::uint64_t t = id; t < trials; t += threads) {
      SplitMix64 rng(trial_seed(seed, t));
      std::iota(pool.begin(), pool.end(), 0);
      for (std::size_t i = 0; i < k; ++i) {
        std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
      }
      std::copy_n(pool.begin(), k, subset.begin());
      std::sort(subset.begin(), subset.end());
      for (auto& o : offsets) o = rng.below(length);
      const SimOutcome sim = simulate(length, words, subset, offsets, scratch);
      if (!sim.non_blocking()) {
        ++local_total;
        if (local.size() < kMaxReportedViolations) local.push_back({t, make_violation(subset, offsets, sim)});
      }
    }
    std::lock_guard lock(merge);
    total += local_total;
    for (auto& f : local) found.push_back(std::move(f));
  };

  {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }

  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.trial < b.trial; });
  TrialSummary summary;
  summary.k = k;
  summary.trials = trials;
  summary.seed = seed;
  summary.violation_count = total;
  for (std::size_t i = 0; i < found.size() && i < kMaxReportedViolations; ++i) {
    summary.violations.push_back(std::move(found[i].violation));
  }
  return summary;
}

TrialSummary random_trials(const Cac& code, std::size_t k, std::uint64_t trials, std::uint64_t seed,
                           unsigned threads) {
  return random_trials(code.length(), code.codewords(), k, trials, seed, threads);
}

std::string report_json(const TrialSummary& summary, int indent) {
  nlohmann::json doc;
  doc["seed"] = summary.seed;
  doc["trials"] = summary.trials;
  doc["verdict"] = summary.non_blocking() ? "non_blocking" : "violated";
  doc["violation_count"] = summary.violation_count;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& v : summary.violations) {
    list.push_back({{"subset", v.subset}, {"offsets", v.offsets}, {"user", v.user}});
  }
  doc["violations"] = std::move(list);
  return doc.dump(indent);
}

}  // namespace cackit
