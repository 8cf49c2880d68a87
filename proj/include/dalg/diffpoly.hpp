#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dalg/mpoly.hpp"
#include "dalg/signature.hpp"

namespace dalg {

/// Element of the differential polynomial ring described by a Signature.
/// The body is kept under ranking_order(), so the highest derivative
/// occurring leads.
class DiffPoly {
 public:
  DiffPoly();
  explicit DiffPoly(SignaturePtr sig);
  /// Throws Error(signature_mismatch) if the body uses a variable outside `sig`.
  DiffPoly(SignaturePtr sig, const MPoly& body);

  static DiffPoly constant(SignaturePtr sig, const Rat& c);
  static DiffPoly jet(SignaturePtr sig, std::uint32_t indeterminate, std::uint32_t k);
  static DiffPoly parameter(SignaturePtr sig, std::uint32_t index);

  const MPoly& body() const { return body_; }
  const SignaturePtr& signature() const { return sig_; }

  bool is_zero() const { return body_.is_zero(); }
  /// True when no jet variable occurs (parameters allowed).
  bool is_free_of_jets() const;
  /// Largest jet index of the indeterminate; nullopt encodes order -infinity.
  std::optional<std::uint32_t> order(std::uint32_t indeterminate = 0) const;
  /// Largest jet index over all indeterminates.
  std::optional<std::uint32_t> max_order() const;

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& other);
  DiffPoly& operator-=(const DiffPoly& other);
  DiffPoly& operator*=(const DiffPoly& other);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(DiffPoly a, const DiffPoly& b) { return a *= b; }
  friend DiffPoly operator*(DiffPoly a, const Rat& c);
  friend DiffPoly operator*(const Rat& c, DiffPoly a) { return std::move(a) * c; }
  DiffPoly pow(std::uint32_t e) const;

  friend bool operator==(const DiffPoly& a, const DiffPoly& b);

  /// Canonical text in the signature's names, e.g. "u*u'' - u'".
  std::string to_string() const;

 private:
  SignaturePtr sig_;
  MPoly body_;
};

/// Leader information with respect to one indeterminate. When `order` is
/// empty (order -infinity) the remaining fields are unset.
struct LeaderData {
  std::optional<std::uint32_t> order;
  std::optional<VarKey> leader;
  std::uint32_t degree = 0;
  std::optional<DiffPoly> initial;
  std::optional<DiffPoly> separant;
};

/// The formal derivation: D(u^(k)) = u^(k+1), constants and parameters map to 0.
DiffPoly differentiate(const DiffPoly& p);
DiffPoly differentiate(const DiffPoly& p, std::uint32_t times);
LeaderData leader_data(const DiffPoly& p, std::uint32_t indeterminate = 0);
/// [P, D(P), ..., D^k(P)].
std::vector<DiffPoly> prolong(const DiffPoly& p, std::uint32_t k);

/// Assignment of rationals to jet variables and parameters.
class JetPoint {
 public:
  JetPoint() = default;
  explicit JetPoint(std::map<VarKey, Rat> values) : values_(std::move(values)) {}
  /// Assigns (u, u', ..., u^(n)) for one indeterminate.
  static JetPoint of_jets(const std::vector<Rat>& jets, std::uint32_t indeterminate = 0);

  JetPoint& set(VarKey v, const Rat& value);
  const std::map<VarKey, Rat>& values() const { return values_; }
  /// Jets of every indeterminate are assigned contiguously from order 0.
  bool is_contiguous() const;

 private:
  std::map<VarKey, Rat> values_;
};

/// Exact evaluation; throws Error(unbound_variable) naming the missing variable.
Rat evaluate(const DiffPoly& p, const JetPoint& jet);

}  // namespace dalg
