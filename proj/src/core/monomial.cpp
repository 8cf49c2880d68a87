#include "dalg/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace dalg {

namespace {

// Descending natural priority.
bool entry_before(const Monomial::Entry& a, const Monomial::Entry& b) { return a.first > b.first; }

}  // namespace

Monomial::Monomial(VarKey v, std::uint32_t e) {
  if (e > 0) entries_.emplace_back(v, e);
}

Monomial::Monomial(std::initializer_list<Entry> entries)
    : Monomial(from_entries(std::vector<Entry>(entries))) {}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), entry_before);
  Monomial m;
  for (const auto& [v, e] : entries) {
    if (e == 0) continue;
    if (!m.entries_.empty() && m.entries_.back().first == v)
      m.entries_.back().second += e;
    else
      m.entries_.emplace_back(v, e);
  }
  return m;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

std::uint32_t Monomial::degree(VarKey v) const {
  for (const auto& [w, e] : entries_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin(), b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first == b->first) {
      out.entries_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    } else if (a->first > b->first) {
      out.entries_.push_back(*a++);
    } else {
      out.entries_.push_back(*b++);
    }
  }
  out.entries_.insert(out.entries_.end(), a, entries_.end());
  out.entries_.insert(out.entries_.end(), b, other.entries_.end());
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto b = other.entries_.begin();
  for (const auto& [v, e] : entries_) {
    while (b != other.entries_.end() && b->first > v) ++b;
    if (b == other.entries_.end() || b->first != v || b->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  assert(divisor.divides(*this));
  Monomial out;
  auto d = divisor.entries_.begin();
  for (const auto& [v, e] : entries_) {
    if (d != divisor.entries_.end() && d->first == v) {
      if (e > d->second) out.entries_.emplace_back(v, e - d->second);
      ++d;
    } else {
      out.entries_.emplace_back(v, e);
    }
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  auto a = entries_.begin(), b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first == b->first) {
      out.entries_.emplace_back(a->first, std::max(a->second, b->second));
      ++a, ++b;
    } else if (a->first > b->first) {
      out.entries_.push_back(*a++);
    } else {
      out.entries_.push_back(*b++);
    }
  }
  out.entries_.insert(out.entries_.end(), a, entries_.end());
  out.entries_.insert(out.entries_.end(), b, other.entries_.end());
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  auto b = other.entries_.begin();
  for (const auto& [v, e] : entries_) {
    while (b != other.entries_.end() && b->first > v) ++b;
    if (b != other.entries_.end() && b->first == v) return false;
  }
  return true;
}

Monomial Monomial::without(VarKey v) const {
  Monomial out;
  for (const auto& entry : entries_)
    if (entry.first != v) out.entries_.push_back(entry);
  return out;
}

Monomial Monomial::with_degree(VarKey v, std::uint32_t e) const {
  Monomial out = without(v);
  return e == 0 ? out : out * Monomial(v, e);
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& [v, e] : entries_) {
    h ^= std::hash<VarKey>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace dalg
