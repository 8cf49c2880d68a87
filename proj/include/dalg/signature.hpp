#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dalg/monomial.hpp"

namespace dalg {

/// Names of the differential indeterminates and constant parameters of a
/// differential polynomial ring K{U_1, ..., U_m}. Symbol i of kind jet is the
/// i-th indeterminate; symbol i of kind parameter is the i-th parameter.
class Signature {
 public:
  explicit Signature(std::vector<std::string> indeterminates, std::vector<std::string> parameters = {});

  std::size_t indeterminate_count() const { return indeterminates_.size(); }
  std::size_t parameter_count() const { return parameters_.size(); }
  const std::vector<std::string>& indeterminates() const { return indeterminates_; }
  const std::vector<std::string>& parameters() const { return parameters_; }

  std::optional<std::uint32_t> find_indeterminate(const std::string& name) const;
  std::optional<std::uint32_t> find_parameter(const std::string& name) const;

  VarKey jet(std::uint32_t indeterminate, std::uint32_t k) const;
  VarKey parameter(std::uint32_t index) const;
  bool contains(VarKey v) const;

  /// u, u', u'', u''', then u^(k); parameters by name; auxiliaries as _t<i>.
  std::string var_name(VarKey v) const;

  /// Same indeterminates, with `extra` parameters appended (duplicates skipped).
  std::shared_ptr<const Signature> with_parameters(const std::vector<std::string>& extra) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::string> indeterminates_;
  std::vector<std::string> parameters_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<std::string> indeterminates, std::vector<std::string> parameters = {});
/// The ring Q{u}.
const SignaturePtr& default_signature();

inline bool same_signature(const SignaturePtr& a, const SignaturePtr& b) { return a == b || *a == *b; }

}  // namespace dalg
