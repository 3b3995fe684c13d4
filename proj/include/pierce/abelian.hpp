#pragma once

// Finite subsets of abelian groups: sumsets, restricted sumsets, stabilizers,
// doubling constants and coset recovery.
//
// A group is any type satisfying AbelianGroup: it names an Element type and
// provides identity/add/negate. Elements must be totally ordered so that sets
// can be stored as sorted vectors and compared with ==.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "pierce/errors.hpp"
#include "pierce/rational.hpp"

namespace pierce {

template <class G>
concept AbelianGroup = std::equality_comparable<G> && std::copyable<G> &&
    std::totally_ordered<typename G::Element> &&
    requires(const G& g, const typename G::Element& a, const typename G::Element& b) {
      { g.identity() } -> std::same_as<typename G::Element>;
      { g.add(a, b) } -> std::same_as<typename G::Element>;
      { g.negate(a) } -> std::same_as<typename G::Element>;
    };

template <class G>
concept WithMembership = requires(const G& g, const typename G::Element& a) {
  { g.contains(a) } -> std::convertible_to<bool>;
};

/// Z_{n1} x ... x Z_{nk}; elements are residue tuples.
class FinAbGroup {
 public:
  using Element = std::vector<std::int64_t>;

  explicit FinAbGroup(std::vector<std::int64_t> cyclic_orders);
  static FinAbGroup cyclic(std::int64_t k) { return FinAbGroup({k}); }

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::uint64_t order() const;

  Element identity() const { return Element(orders_.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  bool contains(const Element& a) const;

  /// Residues reduced into range.
  Element element(std::vector<std::int64_t> residues) const;

  /// Mixed-radix index in [0, order()).
  std::uint64_t index_of(const Element& a) const;
  Element at(std::uint64_t index) const;
  std::vector<Element> elements() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::vector<std::int64_t> orders_;
};

/// Number of solutions of x + x = 0; equals the maximum over a of solutions to x + x = a.
std::size_t doubling_constant(const FinAbGroup& g);

/// Element q + c*theta of R/Z, where theta is a formal generic rotation.
///
/// q is kept in [0, 1). Because theta satisfies no rational relation, two
/// elements are equal exactly when both q and c agree.
class AngleElem {
 public:
  AngleElem() = default;
  explicit AngleElem(const Rational& q, std::int64_t theta_coeff = 0)
      : q_(frac_part(q)), c_(theta_coeff) {}
  static AngleElem of(std::int64_t num, std::int64_t den, std::int64_t theta_coeff = 0) {
    return AngleElem(make_rational(num, den), theta_coeff);
  }

  const Rational& q() const { return q_; }
  std::int64_t theta_coeff() const { return c_; }

  AngleElem operator+(const AngleElem& o) const { return AngleElem(q_ + o.q_, c_ + o.c_); }
  AngleElem operator-(const AngleElem& o) const { return AngleElem(q_ - o.q_, c_ - o.c_); }
  AngleElem operator-() const { return AngleElem(-q_, -c_); }

  /// Position in turns for a concrete numeric theta (display and float cross-checks only).
  double turns(double theta_value) const { return to_double(q_) + static_cast<double>(c_) * theta_value; }

  /// e.g. "1/6+1θ" written as "1/6 + 1*theta".
  std::string to_string() const;

  friend bool operator==(const AngleElem& a, const AngleElem& b) { return a.c_ == b.c_ && a.q_ == b.q_; }
  friend bool operator!=(const AngleElem& a, const AngleElem& b) { return !(a == b); }
  friend bool operator<(const AngleElem& a, const AngleElem& b) {
    return a.c_ != b.c_ ? a.c_ < b.c_ : a.q_ < b.q_;
  }
  friend bool operator>(const AngleElem& a, const AngleElem& b) { return b < a; }
  friend bool operator<=(const AngleElem& a, const AngleElem& b) { return !(b < a); }
  friend bool operator>=(const AngleElem& a, const AngleElem& b) { return !(a < b); }

 private:
  Rational q_{0};
  std::int64_t c_ = 0;
};

/// The circle group R/Z extended by the formal rotation theta.
struct AngleGroup {
  using Element = AngleElem;
  Element identity() const { return {}; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element negate(const Element& a) const { return -a; }
  friend bool operator==(const AngleGroup&, const AngleGroup&) = default;
};

/// x + x = a has at most two solutions in R/Z.
inline std::size_t doubling_constant(const AngleGroup&) { return 2; }

/// A finite subset of a group, stored sorted and without repeats.
template <AbelianGroup G>
class GroupSet {
 public:
  using Element = typename G::Element;

  GroupSet(G group, std::vector<Element> elements) : group_(std::move(group)), elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if constexpr (WithMembership<G>) {
      for (const auto& e : elems_)
        if (!group_.contains(e)) throw UsageError("element does not belong to the group");
    }
  }

  const G& group() const { return group_; }
  const std::vector<Element>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const Element& front() const { return elems_.front(); }

  bool contains(const Element& e) const { return std::binary_search(elems_.begin(), elems_.end(), e); }

  friend bool operator==(const GroupSet& a, const GroupSet& b) {
    return a.group_ == b.group_ && a.elems_ == b.elems_;
  }

 private:
  G group_;
  std::vector<Element> elems_;
};

/// Subgroup H together with a coset offset; members are listed when H is finite.
template <AbelianGroup G>
struct SubgroupDescriptor {
  using Element = typename G::Element;

  bool finite = true;
  std::vector<Element> members;  // sorted; empty when infinite
  Element offset;

  std::size_t order() const { return members.size(); }
  bool contains(const Element& e) const {
    return finite && std::binary_search(members.begin(), members.end(), e);
  }
  /// Is e in offset + H?
  bool coset_contains(const G& g, const Element& e) const { return contains(g.add(e, g.negate(offset))); }
};

template <AbelianGroup G>
void require_same_group(const GroupSet<G>& a, const GroupSet<G>& b) {
  if (!(a.group() == b.group())) throw UsageError("sets belong to different groups");
}

template <AbelianGroup G>
bool is_subset(const GroupSet<G>& a, const GroupSet<G>& b) {
  require_same_group(a, b);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <AbelianGroup G>
GroupSet<G> translate(const GroupSet<G>& s, const typename G::Element& x) {
  std::vector<typename G::Element> out;
  out.reserve(s.size());
  for (const auto& e : s) out.push_back(s.group().add(e, x));
  return GroupSet<G>(s.group(), std::move(out));
}

template <AbelianGroup G>
GroupSet<G> negated(const GroupSet<G>& s) {
  std::vector<typename G::Element> out;
  out.reserve(s.size());
  for (const auto& e : s) out.push_back(s.group().negate(e));
  return GroupSet<G>(s.group(), std::move(out));
}

template <AbelianGroup G>
GroupSet<G> sumset(const GroupSet<G>& a, const GroupSet<G>& b) {
  require_same_group(a, b);
  std::vector<typename G::Element> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(a.group().add(x, y));
  return GroupSet<G>(a.group(), std::move(out));
}

/// {a + a' : a, a' in A, a != a'}.
template <AbelianGroup G>
GroupSet<G> restricted_sumset(const GroupSet<G>& a) {
  if (a.size() < 2) throw DegenerateInput("restricted sumset needs at least two elements");
  const auto& el = a.elements();
  std::vector<typename G::Element> out;
  out.reserve(el.size() * (el.size() - 1) / 2);
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j) out.push_back(a.group().add(el[i], el[j]));
  return GroupSet<G>(a.group(), std::move(out));
}

/// {x : x + S = S}. Every such x maps min(S) into S, so the candidates are S - min(S).
template <AbelianGroup G>
SubgroupDescriptor<G> stabilizer(const GroupSet<G>& s) {
  if (s.empty()) throw DegenerateInput("stabilizer of the empty set is the whole group");
  const G& g = s.group();
  SubgroupDescriptor<G> h{true, {}, g.identity()};
  auto minus_s0 = g.negate(s.front());
  for (const auto& e : s) {
    auto x = g.add(e, minus_s0);
    if (translate(s, x) == s) h.members.push_back(x);
  }
  std::sort(h.members.begin(), h.members.end());
  return h;
}

/// Closure of the generators under addition, or nullopt once it exceeds `cap` elements.
/// Groups may veto runaway growth through an `exceeds_guard(element)` hook.
template <AbelianGroup G>
std::optional<std::vector<typename G::Element>> subgroup_closure(const G& g,
                                                                 std::span<const typename G::Element> gens,
                                                                 std::size_t cap = 10000) {
  using E = typename G::Element;
  std::set<E> seen{g.identity()};
  std::vector<E> order{g.identity()};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& gen : gens) {
      E next = g.add(order[i], gen);
      if constexpr (requires { g.exceeds_guard(next); }) {
        if (g.exceeds_guard(next)) return std::nullopt;
      }
      if (seen.insert(next).second) {
        order.push_back(std::move(next));
        if (seen.size() > cap) return std::nullopt;
      }
    }
  }
  return std::vector<E>(seen.begin(), seen.end());
}

namespace detail {

inline SubgroupDescriptor<AngleGroup> angle_common_coset(std::span<const GroupSet<AngleGroup>> sets) {
  SubgroupDescriptor<AngleGroup> h{true, {}, sets.front().front()};
  BigInt k = 1;
  for (const auto& s : sets) {
    const auto& base = s.front();
    for (const auto& e : s) {
      AngleElem d = e - base;
      if (d.theta_coeff() != 0) return {false, {}, h.offset};
      k = boost::multiprecision::lcm(k, denominator_of(d.q()));
    }
  }
  if (k > 1000000) throw Unsupported("circle subgroup of order " + k.str() + " is too large to list");
  auto order = static_cast<std::int64_t>(k);
  for (std::int64_t j = 0; j < order; ++j) h.members.push_back(AngleElem::of(j, order));
  std::sort(h.members.begin(), h.members.end());
  return h;
}

}  // namespace detail

/// Smallest subgroup H such that every set lies in a single coset of H; the
/// offset is the least element of the first set. Reports finite = false when the
/// within-set differences generate an infinite (or over-cap) subgroup.
template <AbelianGroup G>
SubgroupDescriptor<G> minimal_common_coset(std::span<const GroupSet<G>> sets, std::size_t cap = 10000) {
  if (sets.empty()) throw UsageError("minimal_common_coset needs at least one set");
  for (const auto& s : sets) {
    if (s.empty()) throw DegenerateInput("cannot place an empty set in a coset");
    require_same_group(s, sets.front());
  }
  if constexpr (std::is_same_v<G, AngleGroup>) {
    return detail::angle_common_coset(sets);
  } else {
    const G& g = sets.front().group();
    std::vector<typename G::Element> gens;
    for (const auto& s : sets) {
      auto minus_base = g.negate(s.front());
      for (const auto& e : s) {
        auto d = g.add(e, minus_base);
        if (!(d == g.identity())) gens.push_back(d);
      }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    auto closure = subgroup_closure(g, std::span<const typename G::Element>(gens), cap);
    if (!closure) return {false, {}, sets.front().front()};
    return {true, std::move(*closure), sets.front().front()};
  }
}

template <AbelianGroup G>
SubgroupDescriptor<G> minimal_containing_coset(const GroupSet<G>& a, std::size_t cap = 10000) {
  return minimal_common_coset<G>(std::span<const GroupSet<G>>(&a, 1), cap);
}

/// s <= phi*n - (L + 2) with phi the golden ratio, decided in integers:
/// 2(s + L + 2) - n <= sqrt(5) n.
bool lev_inequality(std::uint64_t restricted_size, std::uint64_t doubling, std::uint64_t n);

template <AbelianGroup G>
bool lev_hypothesis_holds(const GroupSet<G>& a) {
  if (a.size() < 2) throw DegenerateInput("Lev's hypothesis needs |A| >= 2");
  return lev_inequality(restricted_sumset(a).size(), doubling_constant(a.group()), a.size());
}

/// Does A+.A equal A+A?
template <AbelianGroup G>
bool check_lev_conclusion(const GroupSet<G>& a) {
  return restricted_sumset(a) == sumset(a, a);
}

enum class LemmaStatus { holds, hypothesis_not_met, counterexample };

std::string lemma_status_name(LemmaStatus s);

/// Which size hypothesis of the A1+A2 coset lemma fails, if any:
/// |A1| >= |A2|, 4|A2| >= 3|A1|, 2|A1+A2| < 3|A1|.
std::optional<std::string> lemma_ab_hypothesis_failure(std::size_t n1, std::size_t n2, std::size_t sum_size);

template <AbelianGroup G>
struct LemmaVerdict {
  LemmaStatus status = LemmaStatus::hypothesis_not_met;
  std::size_t sumset_size = 0;
  std::optional<SubgroupDescriptor<G>> stabilizer;  // set whenever the hypotheses hold
  std::string detail;
};

/// Under the size hypotheses, A1+A2 must be one coset of its stabilizer H and
/// each Ai must sit inside one coset of H.
template <AbelianGroup G>
LemmaVerdict<G> check_lemma_AB(const GroupSet<G>& a1, const GroupSet<G>& a2) {
  require_same_group(a1, a2);
  LemmaVerdict<G> v;
  if (a1.empty() || a2.empty()) {
    v.detail = "empty summand";
    return v;
  }
  auto s = sumset(a1, a2);
  v.sumset_size = s.size();
  if (auto why = lemma_ab_hypothesis_failure(a1.size(), a2.size(), s.size())) {
    v.detail = *why;
    return v;
  }
  const G& g = a1.group();
  auto h = stabilizer(s);
  h.offset = s.front();
  v.stabilizer = h;
  auto in_one_coset = [&](const GroupSet<G>& a) {
    auto minus_base = g.negate(a.front());
    return std::all_of(a.begin(), a.end(), [&](const auto& e) { return h.contains(g.add(e, minus_base)); });
  };
  if (s.size() != h.order() || !in_one_coset(s)) {
    v.status = LemmaStatus::counterexample;
    v.detail = "A1+A2 is not a single coset of its stabilizer";
  } else if (!in_one_coset(a1) || !in_one_coset(a2)) {
    v.status = LemmaStatus::counterexample;
    v.detail = "a summand meets two cosets of the stabilizer";
  } else {
    v.status = LemmaStatus::holds;
  }
  return v;
}

}  // namespace pierce
