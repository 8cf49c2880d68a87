#include "dalg/signature.hpp"

#include <algorithm>

#include "dalg/error.hpp"

namespace dalg {

Signature::Signature(std::vector<std::string> indeterminates, std::vector<std::string> parameters)
    : indeterminates_(std::move(indeterminates)), parameters_(std::move(parameters)) {
  std::vector<std::string> all = indeterminates_;
  all.insert(all.end(), parameters_.begin(), parameters_.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw Error(ErrorCode::invalid_argument, "duplicate symbol name in ring signature");
}

std::optional<std::uint32_t> Signature::find_indeterminate(const std::string& name) const {
  auto it = std::find(indeterminates_.begin(), indeterminates_.end(), name);
  if (it == indeterminates_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - indeterminates_.begin());
}

std::optional<std::uint32_t> Signature::find_parameter(const std::string& name) const {
  auto it = std::find(parameters_.begin(), parameters_.end(), name);
  if (it == parameters_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - parameters_.begin());
}

VarKey Signature::jet(std::uint32_t indeterminate, std::uint32_t k) const {
  if (indeterminate >= indeterminates_.size())
    throw Error(ErrorCode::signature_mismatch, "indeterminate index out of range");
  return VarKey::of_jet(indeterminate, k);
}

VarKey Signature::parameter(std::uint32_t index) const {
  if (index >= parameters_.size()) throw Error(ErrorCode::signature_mismatch, "parameter index out of range");
  return VarKey::of_parameter(index);
}

bool Signature::contains(VarKey v) const {
  switch (v.kind) {
    case VarKind::jet: return v.symbol < indeterminates_.size();
    case VarKind::parameter: return v.symbol < parameters_.size() && v.jet == 0;
    case VarKind::auxiliary: return true;
  }
  return false;
}

std::string Signature::var_name(VarKey v) const {
  switch (v.kind) {
    case VarKind::parameter:
      return v.symbol < parameters_.size() ? parameters_[v.symbol] : "_p" + std::to_string(v.symbol);
    case VarKind::auxiliary:
      return "_t" + std::to_string(v.symbol);
    case VarKind::jet:
      break;
  }
  std::string base = v.symbol < indeterminates_.size() ? indeterminates_[v.symbol] : "_u" + std::to_string(v.symbol);
  if (v.jet <= 3) return base + std::string(v.jet, '\'');
  return base + "^(" + std::to_string(v.jet) + ")";
}

SignaturePtr Signature::with_parameters(const std::vector<std::string>& extra) const {
  std::vector<std::string> params = parameters_;
  for (const auto& name : extra)
    if (std::find(params.begin(), params.end(), name) == params.end()) params.push_back(name);
  return make_signature(indeterminates_, std::move(params));
}

SignaturePtr make_signature(std::vector<std::string> indeterminates, std::vector<std::string> parameters) {
  return std::make_shared<const Signature>(std::move(indeterminates), std::move(parameters));
}

const SignaturePtr& default_signature() {
  static const SignaturePtr sig = make_signature({"u"});
  return sig;
}

}  // namespace dalg
