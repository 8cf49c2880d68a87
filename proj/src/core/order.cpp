#include "dalg/order.hpp"

#include <algorithm>

namespace dalg {

namespace {

struct Slot {
  VarKey var;
  std::uint32_t a;
  std::uint32_t b;
};

// Union of the two supports in descending natural priority.
std::vector<Slot> merge_supports(const Monomial& x, const Monomial& y) {
  std::vector<Slot> out;
  const auto& ex = x.entries();
  const auto& ey = y.entries();
  out.reserve(ex.size() + ey.size());
  auto a = ex.begin(), b = ey.begin();
  while (a != ex.end() && b != ey.end()) {
    if (a->first == b->first) {
      out.push_back({a->first, a->second, b->second});
      ++a, ++b;
    } else if (a->first > b->first) {
      out.push_back({a->first, a->second, 0});
      ++a;
    } else {
      out.push_back({b->first, 0, b->second});
      ++b;
    }
  }
  for (; a != ex.end(); ++a) out.push_back({a->first, a->second, 0});
  for (; b != ey.end(); ++b) out.push_back({b->first, 0, b->second});
  return out;
}

std::strong_ordering lex_slots(const std::vector<Slot>& slots) {
  for (const auto& s : slots)
    if (s.a != s.b) return s.a <=> s.b;
  return std::strong_ordering::equal;
}

// Slots in descending priority; a filter selects the participating block.
template <typename Pred>
std::strong_ordering grevlex_slots(const std::vector<Slot>& slots, Pred keep) {
  std::uint64_t da = 0, db = 0;
  for (const auto& s : slots)
    if (keep(s.var)) da += s.a, db += s.b;
  if (da != db) return da <=> db;
  for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
    if (!keep(it->var) || it->a == it->b) continue;
    return it->b <=> it->a;
  }
  return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder::MonomialOrder(Kind kind, std::vector<VarKey> front, std::vector<VarKey> ranking)
    : kind_(kind), front_(std::move(front)), ranking_(std::move(ranking)) {
  std::sort(front_.begin(), front_.end(), std::greater<>());
  front_.erase(std::unique(front_.begin(), front_.end()), front_.end());
}

MonomialOrder MonomialOrder::lex(std::vector<VarKey> ranking) {
  return MonomialOrder(Kind::lex, {}, std::move(ranking));
}

MonomialOrder MonomialOrder::grevlex(std::vector<VarKey> ranking) {
  return MonomialOrder(Kind::grevlex, {}, std::move(ranking));
}

MonomialOrder MonomialOrder::block(std::vector<VarKey> front, std::vector<VarKey> ranking) {
  return MonomialOrder(Kind::block, std::move(front), std::move(ranking));
}

bool MonomialOrder::in_front(VarKey v) const {
  return std::binary_search(front_.begin(), front_.end(), v, std::greater<>());
}

std::strong_ordering MonomialOrder::compare_vars(VarKey a, VarKey b) const {
  if (a == b) return std::strong_ordering::equal;
  if (!ranking_.empty()) {
    auto pa = std::find(ranking_.begin(), ranking_.end(), a);
    auto pb = std::find(ranking_.begin(), ranking_.end(), b);
    if (pa != ranking_.end() || pb != ranking_.end()) return pb <=> pa;  // earlier = higher
  }
  return a <=> b;
}

std::vector<VarKey> MonomialOrder::sorted_desc(std::vector<VarKey> vars) const {
  std::sort(vars.begin(), vars.end(), [this](VarKey a, VarKey b) { return compare_vars(a, b) > 0; });
  return vars;
}

std::strong_ordering MonomialOrder::compare(const Monomial& x, const Monomial& y) const {
  auto slots = merge_supports(x, y);
  if (!ranking_.empty())
    std::stable_sort(slots.begin(), slots.end(),
                     [this](const Slot& s, const Slot& t) { return compare_vars(s.var, t.var) > 0; });
  switch (kind_) {
    case Kind::lex:
      return lex_slots(slots);
    case Kind::grevlex:
      return grevlex_slots(slots, [](VarKey) { return true; });
    case Kind::block: {
      auto c = grevlex_slots(slots, [this](VarKey v) { return in_front(v); });
      if (c != 0) return c;
      return grevlex_slots(slots, [this](VarKey v) { return !in_front(v); });
    }
  }
  return std::strong_ordering::equal;
}

OrderPtr make_order(MonomialOrder order) { return std::make_shared<const MonomialOrder>(std::move(order)); }

const OrderPtr& default_order() {
  static const OrderPtr order = make_order(MonomialOrder::grevlex());
  return order;
}

const OrderPtr& ranking_order() {
  static const OrderPtr order = make_order(MonomialOrder::lex());
  return order;
}

}  // namespace dalg
