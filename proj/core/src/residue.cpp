#include "cackit/residue.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cackit/number_theory.hpp"

namespace cackit {

namespace {

void check_modulus(std::uint64_t modulus) {
  if (modulus == 0 || modulus > kMaxModulus) {
    throw std::invalid_argument("modulus " + std::to_string(modulus) + " outside [1, 2^31-1]");
  }
}

}  // namespace

ResidueSet::ResidueSet(std::uint64_t modulus, std::vector<Residue> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  check_modulus(modulus_);
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!elements_.empty() && elements_.back() >= modulus_) {
    throw std::out_of_range("residue " + std::to_string(elements_.back()) + " not in Z_" +
                            std::to_string(modulus_));
  }
}

ResidueSet::ResidueSet(Trusted, std::uint64_t modulus, std::vector<Residue> sorted_unique)
    : modulus_(modulus), elements_(std::move(sorted_unique)) {}

ResidueSet ResidueSet::reduced(std::uint64_t modulus, std::span<const std::int64_t> values) {
  check_modulus(modulus);
  std::vector<Residue> out;
  out.reserve(values.size());
  for (std::int64_t v : values) out.push_back(reduce_mod(v, modulus));
  return ResidueSet(modulus, std::move(out));
}

bool ResidueSet::contains(Residue x) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

ResidueSet ResidueSet::negated() const {
  std::vector<Residue> out;
  out.reserve(elements_.size());
  for (Residue x : elements_) out.push_back(x == 0 ? 0 : modulus_ - x);
  return ResidueSet(modulus_, std::move(out));
}

ResidueSet ResidueSet::translated(Residue c) const {
  c %= modulus_;
  std::vector<Residue> out;
  out.reserve(elements_.size());
  for (Residue x : elements_) out.push_back((x + c) % modulus_);
  return ResidueSet(modulus_, std::move(out));
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
  if (modulus_ != other.modulus_) throw std::invalid_argument("is_subset_of: modulus mismatch");
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

std::string ResidueSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
  os << "} in Z_" << modulus_;
  return os.str();
}

Subgroup Subgroup::generated_by(std::uint64_t modulus, std::uint64_t generator) {
  check_modulus(modulus);
  if (generator == 0 || modulus % generator != 0) {
    throw std::invalid_argument("subgroup generator " + std::to_string(generator) + " does not divide " +
                                std::to_string(modulus));
  }
  return Subgroup{modulus, generator};
}

ResidueSet diff_set(const ResidueSet& set) {
  if (set.empty()) throw std::invalid_argument("empty set has no difference set");
  const std::uint64_t L = set.modulus();
  std::vector<Residue> out;
  out.reserve(set.size() * set.size());
  for (Residue a : set) {
    for (Residue b : set) out.push_back(a >= b ? a - b : a + L - b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return ResidueSet(ResidueSet::Trusted{}, L, std::move(out));
}

ResidueSet nonzero_diff_set(const ResidueSet& set) {
  const ResidueSet d = diff_set(set);
  std::vector<Residue> out(d.begin() + 1, d.end());  // d always starts with 0
  return ResidueSet(set.modulus(), std::move(out));
}

ResidueSet sumset(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("sumset: modulus mismatch");
  if (a.empty() || b.empty()) throw std::invalid_argument("sumset: operands must be non-empty");
  if (a.size() * b.size() > kMaxMaterializedSize) throw std::length_error("sumset: operands too large");
  const std::uint64_t L = a.modulus();
  std::vector<Residue> out;
  out.reserve(a.size() * b.size());
  for (Residue x : a) {
    for (Residue y : b) out.push_back((x + y) % L);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return ResidueSet(ResidueSet::Trusted{}, L, std::move(out));
}

Subgroup stabilizer(const ResidueSet& set) {
  if (set.empty()) throw std::invalid_argument("stabilizer: set must be non-empty");
  const std::uint64_t L = set.modulus();
  // <a> stabilizes S iff a + S = S; S is then a union of cosets, so the
  // subgroup order L/a must divide |S|. Smallest such divisor a wins.
  for (std::uint64_t a : divisors(L)) {
    if (a == L) break;
    if (set.size() % (L / a) != 0) continue;
    const bool period = std::all_of(set.begin(), set.end(), [&](Residue x) { return set.contains((x + a) % L); });
    if (period) return Subgroup{L, a};
  }
  return Subgroup{L, L};
}

ResidueSet expand_subgroup(const Subgroup& group) {
  if (group.generator == 0 || group.modulus % group.generator != 0) {
    throw std::invalid_argument("expand_subgroup: invalid subgroup");
  }
  if (group.order() > kMaxMaterializedSize) throw std::length_error("expand_subgroup: subgroup too large");
  std::vector<Residue> out;
  out.reserve(group.order());
  for (Residue x = 0; x < group.modulus; x += group.generator) out.push_back(x);
  return ResidueSet(ResidueSet::Trusted{}, group.modulus, std::move(out));
}

}  // namespace cackit
