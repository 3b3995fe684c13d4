#include "pierce/abelian.hpp"

namespace pierce {

FinAbGroup::FinAbGroup(std::vector<std::int64_t> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  if (orders_.empty()) throw UsageError("a group needs at least one cyclic factor");
  for (auto k : orders_)
    if (k < 1) throw UsageError("cyclic orders must be at least 1");
}

std::uint64_t FinAbGroup::order() const {
  std::uint64_t n = 1;
  for (auto k : orders_) n *= static_cast<std::uint64_t>(k);
  return n;
}

FinAbGroup::Element FinAbGroup::add(const Element& a, const Element& b) const {
  if (a.size() != orders_.size() || b.size() != orders_.size()) throw UsageError("element of a different group");
  Element r(orders_.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto s = a[i] + b[i];
    r[i] = s >= orders_[i] ? s - orders_[i] : s;
  }
  return r;
}

FinAbGroup::Element FinAbGroup::negate(const Element& a) const {
  if (a.size() != orders_.size()) throw UsageError("element of a different group");
  Element r(orders_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
  return r;
}

bool FinAbGroup::contains(const Element& a) const {
  if (a.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0 || a[i] >= orders_[i]) return false;
  return true;
}

FinAbGroup::Element FinAbGroup::element(std::vector<std::int64_t> residues) const {
  if (residues.size() != orders_.size()) throw UsageError("wrong number of residues");
  for (std::size_t i = 0; i < residues.size(); ++i) {
    residues[i] %= orders_[i];
    if (residues[i] < 0) residues[i] += orders_[i];
  }
  return residues;
}

std::uint64_t FinAbGroup::index_of(const Element& a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + static_cast<std::uint64_t>(a[i]);
  return idx;
}

FinAbGroup::Element FinAbGroup::at(std::uint64_t index) const {
  Element r(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    r[i] = static_cast<std::int64_t>(index % orders_[i]);
    index /= orders_[i];
  }
  return r;
}

std::vector<FinAbGroup::Element> FinAbGroup::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (std::uint64_t i = 0; i < order(); ++i) out.push_back(at(i));
  return out;
}

std::size_t doubling_constant(const FinAbGroup& g) {
  std::size_t l = 1;
  for (auto k : g.orders())
    if (k % 2 == 0) l *= 2;
  return l;
}

std::string AngleElem::to_string() const {
  std::string s = pierce::to_string(q_);
  if (c_ != 0) s += (c_ > 0 ? " + " : " - ") + std::to_string(c_ > 0 ? c_ : -c_) + "*theta";
  return s;
}

bool lev_inequality(std::uint64_t restricted_size, std::uint64_t doubling, std::uint64_t n) {
  // s <= (1+sqrt5)/2 n - (L+2)  <=>  2(s+L+2) - n <= sqrt5 n
  __int128 lhs = 2 * static_cast<__int128>(restricted_size + doubling + 2) - static_cast<__int128>(n);
  if (lhs <= 0) return true;
  return lhs * lhs <= 5 * static_cast<__int128>(n) * static_cast<__int128>(n);
}

std::string lemma_status_name(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::holds: return "holds";
    case LemmaStatus::hypothesis_not_met: return "hypothesis_not_met";
    case LemmaStatus::counterexample: return "counterexample";
  }
  return "?";
}

std::optional<std::string> lemma_ab_hypothesis_failure(std::size_t n1, std::size_t n2, std::size_t sum_size) {
  if (n1 < n2) return "|A1| < |A2|";
  if (4 * n2 < 3 * n1) return "|A2| < (3/4)|A1|";
  if (2 * sum_size >= 3 * n1) return "|A1+A2| >= (3/2)|A1|";
  return std::nullopt;
}

}  // namespace pierce
