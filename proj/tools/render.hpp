#pragma once

// Text and JSON renderings shared by the CLI commands.

#include <string>
#include <vector>

#include "json.hpp"

#include "constaclass/codes.hpp"
#include "constaclass/factorizer.hpp"
#include "constaclass/isometry.hpp"

namespace constaclass::cli {

using nlohmann::json;

/// `1` for the identity, otherwise the canonical element text.
std::string unit_text(const FieldElement& x);

/// `(f1)^m1 (f2)^m2 ...`, omitting `^1`.
std::string factor_list_text(const std::vector<FactorPower>& factors);

/// `unit=1; (X^3 + xi^8)^2; case=ii.b`.
std::string factorization_text(const Factorization& f);

/// Ascending coefficient strings in canonical element form.
json poly_json(const Poly& f);
Poly poly_from_json(const FieldPtr& F, const json& j);

json factors_json(const Factorization& f);

/// q^e written as `q^e`.
std::string power_text(std::uint64_t q, std::uint64_t e);

json class_json(const IsometryClass& c, bool full);
std::string class_text(std::size_t index, const IsometryClass& c, bool full);

/// Member lists longer than this are elided unless `full` is requested.
inline constexpr std::size_t kMemberListLimit = 100;

}  // namespace constaclass::cli
