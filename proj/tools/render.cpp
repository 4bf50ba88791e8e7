#include "render.hpp"

#include <sstream>

namespace constaclass::cli {

std::string unit_text(const FieldElement& x) {
  if (x.is_one()) return "1";
  return format_element(x);
}

std::string factor_list_text(const std::vector<FactorPower>& factors) {
  std::ostringstream out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out << ' ';
    out << '(' << format_poly(factors[i].factor) << ')';
    if (factors[i].multiplicity != 1) out << '^' << factors[i].multiplicity;
  }
  return out.str();
}

std::string factorization_text(const Factorization& f) {
  std::string out = "unit=" + unit_text(f.unit) + "; ";
  out += f.factors.empty() ? "1" : factor_list_text(f.factors);
  out += "; case=";
  out += case_label(f.provenance);
  return out;
}

json poly_json(const Poly& f) {
  json out = json::array();
  for (std::size_t i = 0; i < f.reps().size(); ++i) out.push_back(format_element(f.coeff(i)));
  return out;
}

Poly poly_from_json(const FieldPtr& F, const json& j) {
  std::vector<FieldElement> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_element(*F, c.get<std::string>()));
  return Poly::from_elements(F, coeffs);
}

json factors_json(const Factorization& f) {
  json out = json::array();
  for (const auto& fp : f.factors) out.push_back({{"poly", poly_json(fp.factor)}, {"mult", fp.multiplicity}});
  return out;
}

std::string power_text(std::uint64_t q, std::uint64_t e) {
  return std::to_string(q) + "^" + std::to_string(e);
}

json class_json(const IsometryClass& c, bool full) {
  json members = json::array();
  const bool elide = !full && c.members.size() > kMemberListLimit;
  const std::size_t shown = elide ? kMemberListLimit : c.members.size();
  for (std::size_t i = 0; i < shown; ++i) members.push_back(format_element(c.members[i]));
  json out = {{"representative", format_element(c.representative)},
              {"subgroup_index", c.subgroup_index},
              {"size", c.members.size()},
              {"members", members}};
  if (elide) out["members_elided"] = c.members.size() - shown;
  return out;
}

std::string class_text(std::size_t index, const IsometryClass& c, bool full) {
  std::ostringstream out;
  out << "class " << index << ": representative=" << unit_text(c.representative)
      << "; subgroup_index=" << c.subgroup_index << "; size=" << c.members.size() << "; members=";
  const bool elide = !full && c.members.size() > kMemberListLimit;
  const std::size_t shown = elide ? kMemberListLimit : c.members.size();
  for (std::size_t i = 0; i < shown; ++i) {
    if (i > 0) out << ' ';
    out << format_element(c.members[i]);
  }
  if (elide) out << " ... (" << c.members.size() - shown << " more; use --full)";
  return out.str();
}

}  // namespace constaclass::cli
