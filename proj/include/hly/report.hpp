#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hly/superspace.hpp"

namespace hly {

enum class IdentityId {
  SLY1, SLY2, SLY3, SLY4, SLY5, SLY6,
  SHLY1, SHLY2, SHLY3, SHLY4, SHLY5, SHLY6, SHLY7, SHLY8,
  SKEW2, SKEW3,
  HOM_JACOBI, HOM_ASSOC,
  STS_I, STS_II,
  NAMBU,
  MULT2, MULT3,
  // Table fidelity audits (cross_check): printed entry minus constructed entry.
  TABLE2, TABLE3,
};

inline constexpr std::array<std::pair<IdentityId, std::string_view>, 25> identity_names{{
    {IdentityId::SLY1, "SLY1"},       {IdentityId::SLY2, "SLY2"},   {IdentityId::SLY3, "SLY3"},
    {IdentityId::SLY4, "SLY4"},       {IdentityId::SLY5, "SLY5"},   {IdentityId::SLY6, "SLY6"},
    {IdentityId::SHLY1, "SHLY1"},     {IdentityId::SHLY2, "SHLY2"}, {IdentityId::SHLY3, "SHLY3"},
    {IdentityId::SHLY4, "SHLY4"},     {IdentityId::SHLY5, "SHLY5"}, {IdentityId::SHLY6, "SHLY6"},
    {IdentityId::SHLY7, "SHLY7"},     {IdentityId::SHLY8, "SHLY8"}, {IdentityId::SKEW2, "SKEW2"},
    {IdentityId::SKEW3, "SKEW3"},     {IdentityId::HOM_JACOBI, "HOM_JACOBI"},
    {IdentityId::HOM_ASSOC, "HOM_ASSOC"}, {IdentityId::STS_I, "STS_I"}, {IdentityId::STS_II, "STS_II"},
    {IdentityId::NAMBU, "NAMBU"},     {IdentityId::MULT2, "MULT2"}, {IdentityId::MULT3, "MULT3"},
    {IdentityId::TABLE2, "TABLE2"},   {IdentityId::TABLE3, "TABLE3"},
}};

constexpr std::string_view to_string(IdentityId id) {
  for (const auto& [k, v] : identity_names)
    if (k == id) return v;
  return "?";
}

inline std::optional<IdentityId> parse_identity(std::string_view s) {
  for (const auto& [k, v] : identity_names)
    if (v == s) return k;
  return std::nullopt;
}

struct Violation {
  IdentityId identity;
  std::vector<std::size_t> tuple;  // basis indices
  Vector residual;                 // nonzero
};

/// Checker output. Violations are grouped by identity in the order checked,
/// and within one identity they are in lexicographic tuple order.
struct Report {
  std::string algebra_name;
  std::string profile;
  std::vector<std::string> basis_names;
  std::vector<IdentityId> identities_checked;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }

  std::size_t count(IdentityId id) const {
    std::size_t n = 0;
    for (const auto& v : violations) n += v.identity == id ? 1 : 0;
    return n;
  }

  const Violation* find(IdentityId id, const std::vector<std::size_t>& tuple) const {
    for (const auto& v : violations)
      if (v.identity == id && v.tuple == tuple) return &v;
    return nullptr;
  }

  void append(Report other) {
    if (basis_names.empty()) basis_names = std::move(other.basis_names);
    for (auto id : other.identities_checked) identities_checked.push_back(id);
    for (auto& v : other.violations) violations.push_back(std::move(v));
  }
};

}  // namespace hly
