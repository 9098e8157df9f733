#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "expsg/errors.hpp"

namespace expsg {

using Natural = std::int64_t;

enum class SemigroupKind { Trivial, FullN, Numerical, NonNumericalPositive };

inline const char* to_string(SemigroupKind k) {
  switch (k) {
    case SemigroupKind::Trivial: return "trivial";
    case SemigroupKind::FullN: return "full";
    case SemigroupKind::Numerical: return "numerical";
    case SemigroupKind::NonNumericalPositive: return "non_numerical";
  }
  return "?";
}

/// Apéry set of the semigroup generated by `generators` (gcd 1) with respect
/// to the member n: entry r is the least member congruent to r mod n.
/// Shortest paths over residues mod n with generator weights (Dijkstra).
inline std::vector<Natural> apery_set_of_generators(const std::vector<Natural>& generators, Natural n) {
  if (n <= 0) throw PreconditionViolation("apery_set: modulus must be positive");
  constexpr Natural kInf = std::numeric_limits<Natural>::max();
  std::vector<Natural> dist(static_cast<std::size_t>(n), kInf);
  dist[0] = 0;
  using Item = std::pair<Natural, Natural>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    const auto [w, r] = queue.top();
    queue.pop();
    if (w != dist[static_cast<std::size_t>(r)]) continue;
    for (Natural g : generators) {
      const Natural s = (r + g) % n;
      if (w + g < dist[static_cast<std::size_t>(s)]) {
        dist[static_cast<std::size_t>(s)] = w + g;
        queue.emplace(w + g, s);
      }
    }
  }
  for (Natural v : dist) {
    if (v == kInf) throw InvalidSemigroup("apery_set: generators do not have gcd 1");
  }
  return dist;
}

/// Elements of S \ {0} that are not a sum of two nonzero members, read off a
/// membership bit-vector covering [0, frobenius + m + 1]. Scanning up to
/// frobenius + m suffices: any larger s has s - m > frobenius, so s - m is a
/// member and s is decomposable.
inline std::vector<Natural> minimal_generators_from_membership(const std::vector<bool>& bits, Natural frobenius) {
  if (bits.empty() || !bits[0]) throw InvalidSemigroup("membership must contain 0");
  if (frobenius < -1) throw InvalidSemigroup("frobenius must be >= -1");
  const auto len = static_cast<Natural>(bits.size());
  if (frobenius >= len) throw InvalidSemigroup("membership does not cover the Frobenius number");
  if (frobenius >= 0 && bits[static_cast<std::size_t>(frobenius)])
    throw InvalidSemigroup("frobenius number is marked as a member");
  Natural m = 1;
  while (m < len && !bits[static_cast<std::size_t>(m)]) ++m;
  if (m >= len || len < frobenius + m + 2)
    throw InvalidSemigroup("membership must cover [0, frobenius + multiplicity + 1]");
  for (Natural k = frobenius + 1; k < len; ++k) {
    if (!bits[static_cast<std::size_t>(k)]) throw InvalidSemigroup("non-member above the Frobenius number");
  }
  std::vector<Natural> members;
  for (Natural k = 1; k < len; ++k)
    if (bits[static_cast<std::size_t>(k)]) members.push_back(k);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      const Natural s = members[i] + members[j];
      if (s >= len) break;
      if (!bits[static_cast<std::size_t>(s)])
        throw InvalidSemigroup("membership is not additively closed: " + std::to_string(members[i]) + " + " +
                               std::to_string(members[j]) + " missing");
    }
  }
  std::vector<Natural> gens;
  for (Natural s : members) {
    if (s > std::max(frobenius + m, m)) break;
    bool decomposable = false;
    for (Natural a : members) {
      if (2 * a > s) break;
      if (bits[static_cast<std::size_t>(s - a)]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(s);
  }
  return gens;
}

/// Invariants of a numerical semigroup (complement in N finite).
class NumericalData {
 public:
  /// Builds the data from any generating set with gcd 1.
  static NumericalData from_generators(std::vector<Natural> gens) {
    if (gens.empty()) throw InvalidSemigroup("empty generator list");
    Natural g = 0;
    for (Natural x : gens) {
      if (x <= 0) throw InvalidSemigroup("generators must be positive");
      g = std::gcd(g, x);
    }
    if (g != 1) throw InvalidSemigroup("generators must have gcd 1 for a numerical semigroup");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const Natural m = gens.front();
    const std::vector<Natural> apery = apery_set_of_generators(gens, m);
    const Natural frob = *std::max_element(apery.begin(), apery.end()) - m;
    std::vector<bool> bits(static_cast<std::size_t>(frob + m + 2));
    for (std::size_t k = 0; k < bits.size(); ++k) {
      const auto kk = static_cast<Natural>(k);
      bits[k] = kk >= apery[static_cast<std::size_t>(kk % m)];
    }
    return NumericalData(std::move(bits), frob);
  }

  /// Builds the data from a validated membership bit-vector.
  NumericalData(std::vector<bool> bits, Natural frobenius) : frobenius_(frobenius) {
    generators_ = minimal_generators_from_membership(bits, frobenius);
    const Natural m = generators_.front();
    bits.resize(static_cast<std::size_t>(frobenius + m + 2));
    membership_ = std::move(bits);
    for (Natural k = 1; k <= frobenius; ++k)
      if (!membership_[static_cast<std::size_t>(k)]) gaps_.push_back(k);
  }

  const std::vector<Natural>& minimal_generators() const { return generators_; }
  Natural frobenius() const { return frobenius_; }
  const std::vector<Natural>& gaps() const { return gaps_; }
  const std::vector<bool>& membership() const { return membership_; }
  Natural multiplicity() const { return generators_.front(); }
  std::size_t embedding_dimension() const { return generators_.size(); }
  bool is_full() const { return frobenius_ == -1; }

  bool contains(Natural n) const {
    if (n < 0) return false;
    if (n > frobenius_) return true;
    return membership_[static_cast<std::size_t>(n)];
  }

  friend bool operator==(const NumericalData& a, const NumericalData& b) { return a.generators_ == b.generators_; }

 private:
  std::vector<Natural> generators_;
  Natural frobenius_ = -1;
  std::vector<Natural> gaps_;
  std::vector<bool> membership_;
};

/// Canonical description of a subsemigroup S of N: S = content * S' with S'
/// numerical, or S = {0}.
class SubsemigroupDesc {
 public:
  static SubsemigroupDesc trivial() { return SubsemigroupDesc(); }

  /// Any nonempty list of positive integers, not necessarily minimal or sorted.
  static SubsemigroupDesc from_generators(const std::vector<Natural>& gens) {
    if (gens.empty()) throw InvalidSemigroup("empty generator list");
    Natural content = 0;
    for (Natural x : gens) {
      if (x <= 0) throw InvalidSemigroup("generators must be positive, got " + std::to_string(x));
      content = std::gcd(content, x);
    }
    std::vector<Natural> reduced;
    reduced.reserve(gens.size());
    for (Natural x : gens) reduced.push_back(x / content);
    return from_numerical(content, NumericalData::from_generators(std::move(reduced)));
  }

  static SubsemigroupDesc from_numerical(Natural content, NumericalData part) {
    if (content < 1) throw InvalidSemigroup("content must be positive");
    SubsemigroupDesc s;
    s.content_ = content;
    if (content >= 2) {
      s.kind_ = SemigroupKind::NonNumericalPositive;
    } else {
      s.kind_ = part.is_full() ? SemigroupKind::FullN : SemigroupKind::Numerical;
    }
    s.part_ = std::move(part);
    return s;
  }

  SemigroupKind kind() const { return kind_; }
  bool is_trivial() const { return kind_ == SemigroupKind::Trivial; }
  bool is_numerical() const { return kind_ == SemigroupKind::Numerical || kind_ == SemigroupKind::FullN; }
  /// gcd of the nonzero members; 0 for the trivial semigroup.
  Natural content() const { return content_; }
  /// S / content; absent for {0}.
  const std::optional<NumericalData>& numerical_part() const { return part_; }

  const NumericalData& part() const {
    if (!part_) throw PreconditionViolation("trivial semigroup has no numerical part");
    return *part_;
  }

  /// Minimal generators of S itself (content times those of S').
  std::vector<Natural> minimal_generators() const {
    if (!part_) return {};
    std::vector<Natural> g = part_->minimal_generators();
    for (auto& x : g) x *= content_;
    return g;
  }

  bool contains(Natural n) const {
    if (n < 0) return false;
    if (n == 0) return true;
    if (!part_) return false;
    if (n % content_ != 0) return false;
    return part_->contains(n / content_);
  }

  /// "⟨6, 9, 20⟩", "{0}" or "N".
  std::string str() const {
    if (kind_ == SemigroupKind::Trivial) return "{0}";
    if (kind_ == SemigroupKind::FullN) return "N";
    std::ostringstream os;
    os << "⟨";
    const auto g = minimal_generators();
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << g[i];
    os << "⟩";
    return os.str();
  }

  friend bool operator==(const SubsemigroupDesc& a, const SubsemigroupDesc& b) {
    return a.kind_ == b.kind_ && a.content_ == b.content_ && a.minimal_generators() == b.minimal_generators();
  }
  friend bool operator!=(const SubsemigroupDesc& a, const SubsemigroupDesc& b) { return !(a == b); }

 private:
  SubsemigroupDesc() = default;

  SemigroupKind kind_ = SemigroupKind::Trivial;
  Natural content_ = 0;
  std::optional<NumericalData> part_;
};

inline bool contains(const SubsemigroupDesc& s, Natural n) { return s.contains(n); }

/// Frobenius number of ⟨gens⟩; -1 when the semigroup is N.
inline Natural frobenius_number(const std::vector<Natural>& gens) {
  return NumericalData::from_generators(gens).frobenius();
}

/// Apéry set of S with respect to a nonzero member n (S numerical).
inline std::vector<Natural> apery_set(const SubsemigroupDesc& s, Natural n) {
  if (!s.is_numerical()) throw PreconditionViolation("apery_set requires a numerical semigroup");
  if (n <= 0 || !s.contains(n)) throw PreconditionViolation("apery_set: " + std::to_string(n) + " is not a nonzero member");
  return apery_set_of_generators(s.part().minimal_generators(), n);
}

namespace detail {
inline const NumericalData& proper_numerical(const SubsemigroupDesc& s, const char* what) {
  if (!s.is_numerical()) throw PreconditionViolation(std::string(what) + " requires a numerical semigroup");
  if (s.kind() == SemigroupKind::FullN) throw PreconditionViolation(std::string(what) + " is undefined for N");
  return s.part();
}
}  // namespace detail

/// g odd and every gap x has g - x in S. Checking gaps suffices: integers
/// outside [0, g] are either members or negative, and g - x > g for x < 0.
inline bool is_symmetric(const SubsemigroupDesc& s) {
  const NumericalData& d = detail::proper_numerical(s, "is_symmetric");
  const Natural g = d.frobenius();
  if (g % 2 == 0) return false;
  return std::all_of(d.gaps().begin(), d.gaps().end(), [&](Natural x) { return d.contains(g - x); });
}

/// g even and every gap x has g - x in S or x = g/2.
inline bool is_pseudosymmetric(const SubsemigroupDesc& s) {
  const NumericalData& d = detail::proper_numerical(s, "is_pseudosymmetric");
  const Natural g = d.frobenius();
  if (g % 2 != 0) return false;
  const bool pseudo =
      std::all_of(d.gaps().begin(), d.gaps().end(), [&](Natural x) { return x == g / 2 || d.contains(g - x); });
  // Counting identity |N \ S| = (g + 2) / 2 characterizes pseudosymmetry.
  if (pseudo != (static_cast<Natural>(d.gaps().size()) * 2 == g + 2))
    throw InvalidSemigroup("pseudosymmetry check disagrees with the gap count");
  return pseudo;
}

}  // namespace expsg
