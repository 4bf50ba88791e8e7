#include "tables.hpp"

#include <sstream>

#include "constaclass/constafactor.hpp"

namespace constaclass::cli {

namespace {

bool shows_k(const Table& t) { return !t.cls.representative.is_one(); }

std::string family_text(const Factorization& f) {
  std::ostringstream out;
  out << '<';
  bool same_bound = true;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i > 0) out << ' ';
    out << '(' << format_poly(f.factors[i].factor) << ")^j" << i;
    same_bound = same_bound && f.factors[i].multiplicity == f.factors.front().multiplicity;
  }
  out << ">, ";
  if (same_bound) {
    out << "0 <= ";
    for (std::size_t i = 0; i < f.factors.size(); ++i) out << (i > 0 ? "," : "") << 'j' << i;
    out << " <= " << f.factors.front().multiplicity;
  } else {
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      out << (i > 0 ? ", " : "") << "0 <= j" << i << " <= " << f.factors[i].multiplicity;
    }
  }
  return out.str();
}

std::string size_formula(const Factorization& f, std::uint64_t q, std::uint64_t n) {
  std::ostringstream out;
  out << q << "^(" << n;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    out << '-';
    const int d = f.factors[i].factor.degree();
    if (d != 1) out << d;
    out << 'j' << i;
  }
  out << ')';
  return out.str();
}

std::string exponents_text(const std::vector<std::uint64_t>& e) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < e.size(); ++i) out << (i > 0 ? "," : "") << e[i];
  out << ')';
  return out.str();
}

}  // namespace

const std::vector<TableSpec>& example_tables() {
  static const std::vector<TableSpec> tables{
      {1, 2, 4, 6, 0}, {2, 2, 4, 6, 1}, {3, 5, 2, 175, 0},
      {4, 5, 2, 20, 0}, {5, 5, 2, 20, 1}, {6, 5, 2, 20, 2},
  };
  return tables;
}

Table build_table(const TableSpec& spec) {
  Table t;
  t.spec = spec;
  t.field = make_field(spec.p, spec.m);
  auto all = classes(t.field, spec.n);
  if (spec.class_position >= all.size()) throw Error(ErrorCode::kInvalidArgument, "no such class");
  t.cls = std::move(all[spec.class_position]);
  for (const auto& lambda : t.cls.members) {
    TableRow row{lambda, witness(*t.field, spec.n, lambda, t.cls.representative),
                 factor_binomial(t.field, spec.n, lambda)};
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_table_text(std::ostream& out, const Table& t, bool expand) {
  const auto& F = *t.field;
  const std::string n = std::to_string(t.spec.n);
  out << "Table " << t.spec.id << ": " << F.name() << ", n=" << n << ", lambda ~_" << n << ' '
      << unit_text(t.cls.representative) << ", a^" << n << "*lambda = ";
  if (shows_k(t)) {
    out << '(' << unit_text(t.cls.representative) << ")^k";
  } else {
    out << '1';
  }
  out << ", " << t.rows.size() << " rows\n";
  for (const auto& row : t.rows) {
    out << unit_text(row.lambda);
    if (shows_k(t)) out << " | k=" << row.witness.k;
    out << " | a=" << unit_text(row.witness.a) << " | " << family_text(row.factorization) << " | "
        << size_formula(row.factorization, F.q(), t.spec.n) << " | case=" << case_label(row.factorization.provenance)
        << '\n';
    if (expand) {
      for (const auto& code : enumerate_codes(row.factorization, t.spec.n, row.lambda)) {
        out << "  j=" << exponents_text(code.exponents) << " size=" << power_text(F.q(), code.dimension) << '\n';
      }
    }
  }
}

json table_json(const Table& t, bool expand) {
  const auto& F = *t.field;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = {{"lambda", format_element(row.lambda)},
              {"k", row.witness.k},
              {"a", format_element(row.witness.a)},
              {"case", case_label(row.factorization.provenance)},
              {"unit", format_element(row.factorization.unit)},
              {"factors", factors_json(row.factorization)},
              {"size_formula", size_formula(row.factorization, F.q(), t.spec.n)}};
    if (expand) {
      json codes = json::array();
      for (const auto& code : enumerate_codes(row.factorization, t.spec.n, row.lambda)) {
        codes.push_back({{"exponents", code.exponents}, {"dimension", code.dimension}});
      }
      r["codes"] = std::move(codes);
    }
    rows.push_back(std::move(r));
  }
  return {{"table", t.spec.id},
          {"field", F.name()},
          {"n", t.spec.n},
          {"representative", format_element(t.cls.representative)},
          {"subgroup_index", t.cls.subgroup_index},
          {"rows", std::move(rows)}};
}

}  // namespace constaclass::cli
