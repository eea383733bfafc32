#include "cackit/constructions.hpp"

#include <numeric>
#include <sstream>

#include "cackit/number_theory.hpp"

namespace cackit {

ConstructionError::ConstructionError(std::string construction, std::string condition)
    : std::runtime_error(construction + ": " + condition),
      construction_(std::move(construction)),
      condition_(std::move(condition)) {}

namespace {

void require(bool ok, const char* construction, const std::string& condition) {
  if (!ok) throw ConstructionError(construction, condition);
}

void require_length(std::uint64_t length, const char* construction) {
  require(length <= kMaxModulus, construction, "length " + std::to_string(length) + " exceeds 2^31-1");
}

Cac build_equi_difference(const char* construction, std::uint64_t length, std::size_t w,
                          const std::vector<Residue>& generators) {
  std::vector<Codeword> words;
  words.reserve(generators.size());
  for (Residue g : generators) {
    try {
      words.push_back(Codeword::equi_difference(length, w, g));
    } catch (const std::invalid_argument& e) {
      throw ConstructionError(construction, std::string("post-condition: ") + e.what());
    }
  }
  return Cac(length, w, std::move(words));
}

void require_verified(const char* construction, const Cac& code, const char* what) {
  const Verdict v = verify_cac(code);
  if (!v.ok()) {
    std::ostringstream os;
    os << what << " is not a CAC: codewords " << v.conflict->first << " and " << v.conflict->second
       << " share difference " << v.conflict->difference;
    throw ConstructionError(construction, os.str());
  }
}

Residue generator_of(const char* construction, const Codeword& word, const char* which) {
  if (word.generator()) return *word.generator();
  if (auto g = find_generator(word.elements())) return *g;
  throw ConstructionError(construction,
                          std::string(which) + " codeword " + word.elements().to_string() + " is not equi-difference");
}

std::string sdr_label(std::span<const std::int64_t> values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << '}';
  return os.str();
}

void require_cor7_prime(const char* construction, std::uint64_t p) {
  require(is_prime(p), construction, std::to_string(p) + " is not prime");
  require(p % 40 == 31 || p % 40 == 39, construction,
          "p = " + std::to_string(p) + " is " + std::to_string(p % 40) + " mod 40, need 31 or 39");
}

}  // namespace

Cac construct_c1(std::uint64_t p, std::size_t w) {
  constexpr const char* kName = "c1";
  require(w >= 2, kName, "weight must be at least 2");
  require(is_prime(p) && p > 2, kName, std::to_string(p) + " is not an odd prime");
  require((p - 1) % (2 * (w - 1)) == 0, kName,
          "2(w-1) = " + std::to_string(2 * (w - 1)) + " does not divide p-1 = " + std::to_string(p - 1));
  require_length(p, kName);
  const std::uint64_t m = (p - 1) / (2 * (w - 1));

  const CosetPartition part = coset_partition(p, w - 1);
  std::vector<std::int64_t> reps(w - 1);
  std::iota(reps.begin(), reps.end(), 1);
  if (auto defect = sdr_defect(reps, part)) {
    throw ConstructionError(kName, "precondition unsatisfied: " + sdr_label(reps) + " is not an SDR; " + *defect);
  }

  const std::uint64_t g = pow_mod(part.root(), w - 1, p);
  std::vector<Residue> gens;
  gens.reserve(m);
  for (std::uint64_t j = 0, x = 1; j < m; ++j, x = mul_mod(x, g, p)) gens.push_back(x);

  Cac code = build_equi_difference(kName, p, w, gens);
  require_verified(kName, code, "output");
  require(code.size() == m, kName, "post-condition: codeword count");
  return code;
}

Cac construct_c2(std::uint64_t p, std::uint64_t f, std::uint64_t s) {
  constexpr const char* kName = "c2";
  require(f >= 1, kName, "f must be at least 1");
  require(s >= 2, kName, "s must be at least 2");
  require(is_prime(p) && p > 2, kName, std::to_string(p) + " is not an odd prime");
  require((p - 1) % (2 * f) == 0, kName,
          "2f = " + std::to_string(2 * f) + " does not divide p-1 = " + std::to_string(p - 1));
  require_length(s * p, kName);
  const std::uint64_t m = (p - 1) / (2 * f);
  const std::size_t w = static_cast<std::size_t>(s * f + 1);
  const auto si = static_cast<std::int64_t>(s);
  const auto fi = static_cast<std::int64_t>(f);

  const CosetPartition part = coset_partition(p, 2 * f);
  std::vector<std::int64_t> family;
  for (std::int64_t k = 1; k <= fi; ++k) {
    family.push_back(k * si);
    family.push_back(-k * si);
  }
  if (auto defect = sdr_defect(family, part)) {
    throw ConstructionError(kName, "precondition unsatisfied: {+-s,...,+-fs} = " + sdr_label(family) +
                                       " is not an SDR; " + *defect);
  }
  for (std::int64_t i = 1; i < si; ++i) {
    family.clear();
    for (std::int64_t j = -fi; j <= fi - 1; ++j) family.push_back(i + j * si);
    if (auto defect = sdr_defect(family, part)) {
      throw ConstructionError(kName, "precondition unsatisfied: {i+js} for i = " + std::to_string(i) + " = " +
                                         sdr_label(family) + " is not an SDR; " + *defect);
    }
  }

  const std::uint64_t length = s * p;
  std::vector<Residue> gens;
  gens.reserve(m);
  for (std::uint64_t h : part.coset(0)) gens.push_back(crt_pair(h, p, 1, s));

  Cac code = build_equi_difference(kName, length, w, gens);
  require_verified(kName, code, "output");
  require(code.size() == m, kName, "post-condition: codeword count");

  std::vector<Residue> multiples_of_p;
  for (std::uint64_t k = 1; k < s; ++k) multiples_of_p.push_back(k * p);
  require(uncovered_differences(code) == ResidueSet(length, std::move(multiples_of_p)), kName,
          "post-condition: uncovered differences differ from pZ_{sp}");
  return code;
}

Cac construct_c3(const Cac& inner1, std::uint64_t s, const Cac& inner2) {
  constexpr const char* kName = "c3";
  const std::size_t w = inner1.weight();
  require(inner2.weight() == w, kName, "inner codes have different weights");
  require(w >= 3, kName, "weight must be at least 3");
  const std::uint64_t L1 = inner1.length();
  require(s >= 1 && L1 % s == 0, kName, "s = " + std::to_string(s) + " does not divide L1 = " + std::to_string(L1));
  require(inner2.length() % s == 0, kName,
          "second inner length " + std::to_string(inner2.length()) + " is not a multiple of s");
  const std::uint64_t L2 = inner2.length() / s;
  for (std::uint64_t l = 2; l < w; ++l) {
    require(std::gcd(l, L2) == 1, kName, "gcd(" + std::to_string(l) + ", L2 = " + std::to_string(L2) + ") != 1");
  }
  require_length(L1 * L2, kName);
  require_verified(kName, inner1, "first inner code");
  require_verified(kName, inner2, "second inner code");

  const std::uint64_t step = L1 / s;
  const ResidueSet uncovered = uncovered_differences(inner1);
  for (std::uint64_t x = step; x < L1; x += step) {
    require(uncovered.contains(x), kName,
            "first inner code covers difference " + std::to_string(x) + " of (L1/s)Z_L1");
  }

  std::vector<Residue> gamma1;
  for (const auto& c : inner1.codewords()) {
    require(!is_exceptional(c), kName, "first inner codeword " + c.elements().to_string() + " is exceptional");
    gamma1.push_back(generator_of(kName, c, "first inner"));
  }
  std::vector<Residue> gamma2;
  for (const auto& c : inner2.codewords()) gamma2.push_back(generator_of(kName, c, "second inner"));

  const std::uint64_t length = L1 * L2;
  std::vector<Residue> gens;
  gens.reserve(gamma1.size() * L2 + gamma2.size());
  for (Residue i : gamma1) {
    for (std::uint64_t j = 0; j < L2; ++j) gens.push_back(i + j * L1);
  }
  for (Residue k : gamma2) gens.push_back(step * k % length);

  Cac code = build_equi_difference(kName, length, w, gens);
  require_verified(kName, code, "output");
  require(code.size() == gamma1.size() * L2 + gamma2.size(), kName, "post-condition: codeword count");
  return code;
}

Cac corollary7_family(std::uint64_t p) {
  constexpr const char* kName = "cor7";
  require_cor7_prime(kName, p);
  require(legendre(-1, p) == -1, kName, "(-1/p) != -1");
  require(legendre(2, p) == 1 && legendre(5, p) == 1, kName, "(2/p) or (5/p) != 1");
  Cac code = construct_c2(p, 1, 6);
  require(code.size() == (p - 1) / 2, kName, "post-condition: codeword count");
  return code;
}

Cac corollary8_family(std::span<const std::uint64_t> primes) {
  constexpr const char* kName = "cor8";
  require(!primes.empty(), kName, "at least one prime is required");
  for (std::uint64_t p : primes) require_cor7_prime(kName, p);
  if (primes.size() == 1) return corollary7_family(primes.front());
  const Cac tail = corollary8_family(primes.subspan(1));
  Cac code = construct_c3(corollary7_family(primes.front()), 6, tail);
  const std::uint64_t product = code.length() / 6;
  require(code.size() == (product - 1) / 2, kName, "post-condition: codeword count");
  return code;
}

Cac single_codeword_code(std::uint64_t length, std::size_t w) {
  return Cac(length, w, {Codeword::equi_difference(length, w, 1)});
}

Cac theorem8_family(std::uint64_t p, std::size_t w, const Cac& inner) {
  constexpr const char* kName = "thm8";
  require(w >= 3, kName, "weight must be at least 3");
  require(is_prime(p), kName, std::to_string(p) + " is not prime");
  require((p - 1) % (2 * w - 2) == 0, kName, "2w-2 does not divide p-1");
  require(p > 2 * w - 1, kName, "p must exceed 2w-1");
  require(inner.length() == p && inner.weight() == w, kName, "inner code must be a (p, w) code");
  const std::uint64_t m = (p - 1) / (2 * w - 2);
  require(inner.size() == m, kName, "inner code must have (p-1)/(2w-2) = " + std::to_string(m) + " codewords");
  Cac code = construct_c3(single_codeword_code(2 * w - 1, w), 1, inner);
  require(code.size() == p + m, kName, "post-condition: codeword count");
  return code;
}

Cac theorem9_family(std::uint64_t p, std::size_t w) {
  constexpr const char* kName = "thm9";
  require(w >= 3, kName, "weight must be at least 3");
  require(is_prime(p), kName, std::to_string(p) + " is not prime");
  const std::uint64_t phi = euler_phi(2 * w - 1);
  require(w <= p && 2 * p <= 2 * w + phi, kName,
          "need w <= p <= w + phi(2w-1)/2 with phi(" + std::to_string(2 * w - 1) + ") = " + std::to_string(phi));
  Cac code = construct_c3(single_codeword_code(2 * w - 1, w), 1, single_codeword_code(p, w));
  require(code.size() == p + 1, kName, "post-condition: codeword count");
  return code;
}

ResidueSet uncovered_differences(const Cac& code) {
  std::vector<bool> covered(code.length(), false);
  for (const auto& c : code.codewords()) {
    for (Residue d : c.nonzero_differences()) covered[d] = true;
  }
  std::vector<Residue> out;
  for (Residue x = 1; x < code.length(); ++x) {
    if (!covered[x]) out.push_back(x);
  }
  return ResidueSet(code.length(), std::move(out));
}

Cac build(const ConstructionSpec& spec) {
  struct Visitor {
    Cac operator()(const params::C1& c) const { return construct_c1(c.p, c.w); }
    Cac operator()(const params::C2& c) const { return construct_c2(c.p, c.f, c.s); }
    Cac operator()(const params::C3& c) const { return construct_c3(c.inner1, c.s, c.inner2); }
    Cac operator()(const params::Cor7& c) const {
      if (c.more_primes.empty()) return corollary7_family(c.p);
      std::vector<std::uint64_t> all{c.p};
      all.insert(all.end(), c.more_primes.begin(), c.more_primes.end());
      return corollary8_family(all);
    }
    Cac operator()(const params::Thm8& c) const {
      return theorem8_family(c.p, c.w, c.inner ? *c.inner : construct_c1(c.p, c.w));
    }
    Cac operator()(const params::Thm9& c) const { return theorem9_family(c.p, c.w); }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace cackit
