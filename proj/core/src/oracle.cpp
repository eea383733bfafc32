#include "cackit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cackit/bounds.hpp"

namespace cackit {

namespace {

using Mask = std::uint64_t;

struct Candidate {
  Mask mask = 0;  // bit d-1 set when +-d is a difference, d <= L/2
  unsigned size = 0;
  std::vector<Residue> elements;
};

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r * (n-k+i) is divisible by i here
    if (r > cap) return cap + 1;
  }
  return r;
}

Mask half_bit(std::uint64_t d, std::uint64_t length) {
  const std::uint64_t h = std::min(d, length - d);
  return Mask{1} << (h - 1);
}

std::vector<Candidate> enumerate_candidates(std::uint64_t length, std::size_t weight) {
  std::vector<Candidate> out;
  std::unordered_map<Mask, std::size_t> seen;
  std::vector<Residue> elems{0};
  auto rec = [&](auto&& self, Residue next) -> void {
    if (elems.size() == weight) {
      Mask m = 0;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) m |= half_bit(elems[j] - elems[i], length);
      }
      if (seen.emplace(m, out.size()).second) {
        out.push_back(Candidate{m, static_cast<unsigned>(std::popcount(m)), elems});
      }
      return;
    }
    for (Residue x = next; x + (weight - elems.size()) <= length; ++x) {
      elems.push_back(x);
      self(self, x + 1);
      elems.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

class Search {
 public:
  Search(const SearchConfig& cfg, std::vector<Candidate> candidates)
      : cfg_(cfg), cands_(std::move(candidates)), max_size_(cfg.weight * (cfg.weight - 1)) {}

  void seed_size(std::size_t n) { best_size_ = std::max(best_size_, n); }

  void run(bool symmetry) {
    std::vector<std::uint32_t> all(cands_.size());
    std::iota(all.begin(), all.end(), 0u);
    symmetry_ = symmetry;
    node(all, 0);
  }

  [[nodiscard]] bool aborted() const noexcept { return aborted_; }
  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::size_t best_size() const noexcept { return best_size_; }
  [[nodiscard]] const std::vector<std::uint32_t>& best() const noexcept { return best_; }

 private:
  [[nodiscard]] std::size_t floor_size() const {
    if (cfg_.target == SearchTarget::prove_no_code_of_size && cfg_.target_size > 0) {
      return std::max(best_size_, cfg_.target_size - 1);
    }
    return best_size_;
  }

  [[nodiscard]] bool done() const {
    return aborted_ || (cfg_.target == SearchTarget::prove_no_code_of_size && best_size_ >= cfg_.target_size);
  }

  void record() {
    if (path_.size() > best_size_) {
      best_ = path_;
      best_size_ = path_.size();
    }
  }

  // Largest k such that the k smallest compatible difference sets fit in
  // the still-coverable differences.
  [[nodiscard]] std::size_t capacity(const std::vector<std::uint32_t>& live, Mask coverable) const {
    std::vector<std::size_t> hist(max_size_ + 1, 0);
    for (std::uint32_t i : live) ++hist[cands_[i].size];
    std::size_t room = static_cast<std::size_t>(std::popcount(coverable));
    std::size_t k = 0;
    for (std::size_t s = 1; s <= max_size_; ++s) {
      if (hist[s] == 0) continue;
      const std::size_t take = std::min(hist[s], room / s);
      k += take;
      room -= take * s;
      if (take < hist[s]) break;
    }
    return k;
  }

  static std::vector<std::uint32_t> filter(const std::vector<std::uint32_t>& live, const std::vector<Candidate>& c,
                                           Mask blocked) {
    std::vector<std::uint32_t> out;
    out.reserve(live.size());
    for (std::uint32_t i : live) {
      if ((c[i].mask & blocked) == 0) out.push_back(i);
    }
    return out;
  }

  void node(const std::vector<std::uint32_t>& live, Mask decided) {
    if (done()) return;
    ++nodes_;
    if (cfg_.node_budget && nodes_ > *cfg_.node_budget) {
      aborted_ = true;
      return;
    }
    record();
    if (done() || live.empty()) return;

    Mask coverable = 0;
    for (std::uint32_t i : live) coverable |= cands_[i].mask;
    if (path_.size() + capacity(live, coverable) <= floor_size()) return;

    const int e = std::countr_zero(coverable);
    const Mask bit = Mask{1} << e;
    for (std::uint32_t i : live) {
      if ((cands_[i].mask & bit) == 0) continue;
      const Mask next = decided | cands_[i].mask;
      path_.push_back(i);
      node(filter(live, cands_, next), next);
      path_.pop_back();
      if (done()) return;
    }

    Mask skip = bit;
    if (symmetry_ && decided == 0 && e == 0) {
      // No codeword covers the difference 1. Any code covering a unit u can
      // be multiplied by u^-1, so this branch may also exclude every unit.
      for (std::uint64_t d = 1; d <= cfg_.length / 2; ++d) {
        if (std::gcd(d, cfg_.length) == 1) skip |= Mask{1} << (d - 1);
      }
    }
    node(filter(live, cands_, skip), decided | skip);
  }

  const SearchConfig& cfg_;
  std::vector<Candidate> cands_;
  std::size_t max_size_;
  bool symmetry_ = false;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> path_;
  std::vector<std::uint32_t> best_;
  std::size_t best_size_ = 0;
};

Cac make_code(std::uint64_t length, std::size_t weight, const std::vector<Candidate>& cands,
              const std::vector<std::uint32_t>& chosen) {
  std::vector<Codeword> words;
  for (std::uint32_t i : chosen) {
    ResidueSet set(length, cands[i].elements);
    auto g = find_generator(set);
    words.emplace_back(std::move(set), g);
  }
  return Cac(length, weight, std::move(words));
}

}  // namespace

std::string_view to_string(ProofStatus status) noexcept {
  return status == ProofStatus::exhaustive ? "exhaustive" : "budget_exhausted";
}

std::string_view to_string(Optimality verdict) noexcept {
  switch (verdict) {
    case Optimality::optimal: return "optimal";
    case Optimality::not_optimal: return "not_optimal";
    case Optimality::undetermined: return "undetermined";
  }
  return "?";
}

void check_envelope(std::uint64_t length, std::size_t weight) {
  if (weight < 2 || length < weight) {
    throw std::invalid_argument("search needs L >= w >= 2 (got L = " + std::to_string(length) +
                                ", w = " + std::to_string(weight) + ")");
  }
  if (length > kMaxSearchLength) {
    throw EnvelopeError("L = " + std::to_string(length) + " exceeds the search limit of " +
                        std::to_string(kMaxSearchLength));
  }
  const std::uint64_t pool = binomial_capped(length - 1, weight - 1, kMaxCandidates);
  if (pool > kMaxCandidates) {
    throw EnvelopeError("C(" + std::to_string(length - 1) + ", " + std::to_string(weight - 1) +
                        ") candidate codewords exceed the search limit of " + std::to_string(kMaxCandidates));
  }
}

SearchResult max_cac(const SearchConfig& config) {
  check_envelope(config.length, config.weight);
  if (config.target == SearchTarget::prove_no_code_of_size && config.target_size == 0) {
    throw std::invalid_argument("prove_no_code_of_size needs a positive target size");
  }
  std::vector<Candidate> cands = enumerate_candidates(config.length, config.weight);
  Search search(config, cands);

  if (config.incumbent) {
    const Cac& inc = *config.incumbent;
    if (inc.length() != config.length || inc.weight() != config.weight) {
      throw std::invalid_argument("incumbent code has different parameters");
    }
    if (!verify_cac(inc).ok()) throw std::invalid_argument("incumbent code does not verify");
    search.seed_size(inc.size());
  }

  const bool symmetry = config.symmetry.value_or(config.length > 35);
  search.run(symmetry);

  const bool from_search = search.best_size() > 0 && search.best().size() == search.best_size();
  SearchResult result{search.best_size(),
                      from_search ? make_code(config.length, config.weight, cands, search.best())
                                  : (config.incumbent ? *config.incumbent : Cac(config.length, config.weight, {})),
                      search.aborted() ? ProofStatus::budget_exhausted : ProofStatus::exhaustive, search.nodes()};
  return result;
}

OptimalityResult prove_optimal(const Cac& code, std::optional<std::uint64_t> node_budget) {
  if (auto v = verify_cac(code); !v.ok()) {
    throw std::invalid_argument("code does not verify; codewords " + std::to_string(v.conflict->first) + " and " +
                                std::to_string(v.conflict->second) + " share difference " +
                                std::to_string(v.conflict->difference));
  }
  OptimalityResult out;
  if (code.weight() >= 2 && code.length() >= code.weight() &&
      code.size() == theorem4_bound(code.length(), code.weight())) {
    out.verdict = Optimality::optimal;
    out.by_bound = true;
    return out;
  }
  SearchConfig cfg;
  cfg.length = code.length();
  cfg.weight = code.weight();
  cfg.target = SearchTarget::prove_no_code_of_size;
  cfg.target_size = code.size() + 1;
  cfg.node_budget = node_budget;
  SearchResult r = max_cac(cfg);
  out.nodes = r.nodes;
  if (r.best >= cfg.target_size) {
    out.verdict = Optimality::not_optimal;
    out.larger = std::move(r.witness);
  } else if (r.status == ProofStatus::exhaustive) {
    out.verdict = Optimality::optimal;
  }
  return out;
}

}  // namespace cackit
