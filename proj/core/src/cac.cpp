#include "cackit/cac.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cackit {

namespace {

constexpr std::uint64_t kDenseVerifyLimit = std::uint64_t{1} << 26;

std::optional<Conflict> first_conflict_pairwise(const std::vector<ResidueSet>& diffs) {
  std::vector<Residue> shared;
  for (std::size_t j = 0; j < diffs.size(); ++j) {
    for (std::size_t k = j + 1; k < diffs.size(); ++k) {
      shared.clear();
      std::set_intersection(diffs[j].begin(), diffs[j].end(), diffs[k].begin(), diffs[k].end(),
                            std::back_inserter(shared));
      if (!shared.empty()) return Conflict{j, k, shared.front()};
    }
  }
  return std::nullopt;
}

bool any_shared_dense(std::uint64_t length, const std::vector<ResidueSet>& diffs) {
  std::vector<bool> used(length, false);
  for (const auto& d : diffs) {
    for (Residue x : d) {
      if (used[x]) return true;
    }
    for (Residue x : d) used[x] = true;
  }
  return false;
}

bool any_shared_sorted(const std::vector<ResidueSet>& diffs) {
  std::vector<std::pair<Residue, std::size_t>> all;
  for (std::size_t j = 0; j < diffs.size(); ++j) {
    for (Residue x : diffs[j]) all.emplace_back(x, j);
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].first == all[i - 1].first) return true;
  }
  return false;
}

}  // namespace

Codeword::Codeword(ResidueSet elements, std::optional<Residue> generator)
    : elements_(std::move(elements)), generator_(generator) {
  if (elements_.empty()) throw std::invalid_argument("codeword must be non-empty");
  if (!elements_.contains(0)) throw std::invalid_argument("codeword must contain 0: " + elements_.to_string());
  if (generator_) {
    const std::uint64_t L = elements_.modulus();
    const Residue g = *generator_;
    bool matches = g < L;
    if (matches) {
      std::vector<Residue> multiples;
      Residue x = 0;
      for (std::size_t k = 0; k < elements_.size(); ++k, x = (x + g) % L) multiples.push_back(x);
      matches = ResidueSet(L, std::move(multiples)) == elements_;
    }
    if (!matches) {
      throw std::invalid_argument("generator " + std::to_string(g) + " does not reproduce codeword " +
                                  elements_.to_string());
    }
  }
}

Codeword Codeword::equi_difference(std::uint64_t length, std::size_t weight, Residue generator) {
  if (weight == 0) throw std::invalid_argument("codeword weight must be positive");
  if (generator >= length) throw std::invalid_argument("generator outside Z_L");
  std::vector<Residue> elems;
  elems.reserve(weight);
  Residue x = 0;
  for (std::size_t k = 0; k < weight; ++k, x = (x + generator) % length) elems.push_back(x);
  ResidueSet set(length, std::move(elems));
  if (set.size() != weight) {
    throw std::invalid_argument("generator " + std::to_string(generator) + " yields fewer than " +
                                std::to_string(weight) + " distinct elements in Z_" + std::to_string(length));
  }
  return Codeword(std::move(set), generator);
}

Codeword equi_difference_codeword(std::uint64_t length, std::size_t weight, Residue generator) {
  return Codeword::equi_difference(length, weight, generator);
}

std::vector<Residue> Codeword::translation_key() const {
  std::vector<Residue> best;
  for (Residue a : elements_) {
    const ResidueSet t = elements_.translated(elements_.modulus() - a);
    std::vector<Residue> cand(t.begin(), t.end());
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

std::optional<Residue> find_generator(const ResidueSet& elements) {
  if (elements.empty() || !elements.contains(0)) return std::nullopt;
  if (elements.size() == 1) return Residue{0};
  for (Residue g : elements) {
    if (g == 0) continue;
    try {
      if (Codeword::equi_difference(elements.modulus(), elements.size(), g).elements() == elements) return g;
    } catch (const std::invalid_argument&) {
    }
  }
  return std::nullopt;
}

Cac::Cac(std::uint64_t length, std::size_t weight, std::vector<Codeword> codewords)
    : length_(length), weight_(weight), codewords_(std::move(codewords)) {
  if (length_ == 0 || length_ > kMaxModulus) throw std::invalid_argument("code length out of range");
  if (weight_ == 0 || weight_ > length_) throw std::invalid_argument("code weight must lie in [1, L]");
  for (const auto& c : codewords_) {
    if (c.modulus() != length_) {
      throw std::invalid_argument("codeword " + c.elements().to_string() + " does not live in Z_" +
                                  std::to_string(length_));
    }
    if (c.weight() != weight_) {
      throw std::invalid_argument("codeword " + c.elements().to_string() + " has weight " +
                                  std::to_string(c.weight()) + ", expected " + std::to_string(weight_));
    }
  }
  std::stable_sort(codewords_.begin(), codewords_.end());
}

std::vector<std::optional<Residue>> Cac::generators() const {
  std::vector<std::optional<Residue>> out;
  out.reserve(codewords_.size());
  for (const auto& c : codewords_) out.push_back(c.generator());
  return out;
}

std::vector<Residue> Cac::generator_set() const {
  std::vector<Residue> out;
  out.reserve(codewords_.size());
  for (const auto& c : codewords_) {
    if (!c.generator()) throw std::logic_error("codeword " + c.elements().to_string() + " has no generator tag");
    out.push_back(*c.generator());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Cac::is_equi_difference() const {
  return std::all_of(codewords_.begin(), codewords_.end(), [](const Codeword& c) {
    return c.generator().has_value() || find_generator(c.elements()).has_value();
  });
}

Verdict verify_cac(const Cac& code) {
  std::vector<ResidueSet> diffs;
  diffs.reserve(code.size());
  for (const auto& c : code.codewords()) diffs.push_back(c.nonzero_differences());
  const bool shared =
      code.length() <= kDenseVerifyLimit ? any_shared_dense(code.length(), diffs) : any_shared_sorted(diffs);
  if (!shared) return Verdict{};
  return Verdict{first_conflict_pairwise(diffs)};
}

bool is_exceptional(const Codeword& word) {
  const std::size_t w = word.weight();
  return w >= 2 && word.nonzero_differences().size() < 2 * w - 2;
}

namespace {

CodewordClass classify_one(const Codeword& word, std::size_t index) {
  CodewordClass cls;
  cls.index = index;
  const ResidueSet d = word.differences();
  cls.diff_size = d.size();
  cls.exceptional = is_exceptional(word);
  cls.stabilizer = stabilizer(d);
  cls.completion_size = sumset(word.elements(), expand_subgroup(cls.stabilizer)).size();
  cls.delta = cls.completion_size - word.weight();
  return cls;
}

}  // namespace

bool kneser_identity_holds(const Codeword& word) {
  const CodewordClass cls = classify_one(word, 0);
  return cls.diff_size + cls.stabilizer.order() == 2 * cls.completion_size;
}

std::size_t ExceptionalReport::exceptional_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(codewords.begin(), codewords.end(), [](const CodewordClass& c) { return c.exceptional; }));
}

ExceptionalReport classify(const Cac& code) {
  ExceptionalReport report;
  report.codewords.reserve(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    CodewordClass cls = classify_one(code[i], i);
    if (cls.exceptional) {
      if (cls.stabilizer.trivial()) {
        throw std::logic_error("exceptional codeword " + code[i].elements().to_string() +
                               " has aperiodic difference set");
      }
      if (cls.diff_size + cls.stabilizer.order() != 2 * cls.completion_size) {
        throw std::logic_error("Kneser identity fails for " + code[i].elements().to_string());
      }
    }
    report.codewords.push_back(cls);
  }
  return report;
}

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return Rational{num / (g ? g : 1), den / (g ? g : 1)};
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = numerator / denominator;
  if (numerator % denominator != 0 && numerator < 0) --q;
  return q;
}

Rational theorem2_rhs(const Cac& code, const ExceptionalReport& report) {
  if (code.weight() < 2) throw std::invalid_argument("theorem2_rhs: weight must be at least 2");
  std::int64_t num = static_cast<std::int64_t>(code.length()) - 1;
  for (const auto& cls : report.codewords) {
    if (!cls.exceptional) continue;
    num += static_cast<std::int64_t>(cls.stabilizer.order()) - 1 - 2 * static_cast<std::int64_t>(cls.delta);
  }
  return Rational::of(num, 2 * static_cast<std::int64_t>(code.weight()) - 2);
}

Rational theorem2_rhs(const Cac& code) { return theorem2_rhs(code, classify(code)); }

std::size_t total_nonzero_differences(const Cac& code) {
  std::size_t total = 0;
  for (const auto& c : code.codewords()) total += c.nonzero_differences().size();
  return total;
}

}  // namespace cackit
