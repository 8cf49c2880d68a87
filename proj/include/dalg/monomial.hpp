#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

namespace dalg {

/// Parameters rank below every jet variable; auxiliary variables (inverses
/// introduced for saturation) rank above everything.
enum class VarKind : std::uint8_t { parameter = 0, jet = 1, auxiliary = 2 };

/// A polynomial variable: the k-th derivative of a differential indeterminate,
/// a constant parameter (always jet 0), or an auxiliary variable.
struct VarKey {
  VarKind kind = VarKind::jet;
  std::uint32_t symbol = 0;
  std::uint32_t jet = 0;

  static constexpr VarKey of_jet(std::uint32_t symbol, std::uint32_t k) {
    return {VarKind::jet, symbol, k};
  }
  static constexpr VarKey of_parameter(std::uint32_t symbol) {
    return {VarKind::parameter, symbol, 0};
  }
  static constexpr VarKey of_auxiliary(std::uint32_t symbol) {
    return {VarKind::auxiliary, symbol, 0};
  }

  bool is_jet() const { return kind == VarKind::jet; }

  friend constexpr bool operator==(const VarKey&, const VarKey&) = default;

  /// Natural variable priority: kind, then higher derivative, then lower
  /// symbol index. `a > b` means a ranks higher.
  friend constexpr std::strong_ordering operator<=>(const VarKey& a, const VarKey& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    if (a.jet != b.jet) return a.jet <=> b.jet;
    return b.symbol <=> a.symbol;
  }
};

/// Power product with positive exponents, variables stored in descending
/// natural priority. The empty product is the monomial 1.
class Monomial {
 public:
  using Entry = std::pair<VarKey, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(VarKey v, std::uint32_t e = 1);
  /// Accepts entries in any order; merges repeats and drops zero exponents.
  Monomial(std::initializer_list<Entry> entries);
  static Monomial from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  std::uint32_t total_degree() const;
  std::uint32_t degree(VarKey v) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other, *this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Removes v entirely.
  Monomial without(VarKey v) const;
  Monomial with_degree(VarKey v, std::uint32_t e) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::vector<Entry> entries_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace dalg

template <>
struct std::hash<dalg::VarKey> {
  std::size_t operator()(const dalg::VarKey& v) const noexcept {
    return (static_cast<std::size_t>(v.kind) << 60) ^ (static_cast<std::size_t>(v.symbol) << 32) ^ v.jet;
  }
};
