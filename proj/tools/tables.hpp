#pragma once

// Regeneration of the worked example tables: every lambda of one n-isometry
// class with its witness and the parameterized family of generators.

#include <cstdint>
#include <ostream>
#include <vector>

#include "render.hpp"

namespace constaclass::cli {

struct TableSpec {
  int id = 1;
  std::uint64_t p = 2;
  unsigned m = 1;
  std::uint64_t n = 1;
  /// Position in classes(F, n): 0 is the class of 1.
  std::size_t class_position = 0;
};

/// Tables 1-2: GF(2^4), n = 6. Table 3: GF(5^2), n = 175. Tables 4-6:
/// GF(5^2), n = 20.
const std::vector<TableSpec>& example_tables();

struct TableRow {
  FieldElement lambda;
  IsometryWitness witness;
  Factorization factorization;
};

struct Table {
  TableSpec spec;
  FieldPtr field;
  IsometryClass cls;
  std::vector<TableRow> rows;
};

Table build_table(const TableSpec& spec);

/// With `expand`, every code of every row is listed after the row.
void write_table_text(std::ostream& out, const Table& table, bool expand);
json table_json(const Table& table, bool expand);

}  // namespace constaclass::cli
