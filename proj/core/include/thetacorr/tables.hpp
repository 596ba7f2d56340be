#pragma once

#include <string>
#include <vector>

namespace thetacorr {

// One instantiated row of the lift tables. Table 1 has columns
// (GSO(3,3), GSO(2,2), GSO(4,0)); Tables 2 and 3 have a single GSp4 column.
// A zero lift renders as "0".
struct TableRow {
  int table = 0;
  std::string tag;  // "SC(a)", "NDS(e)", "f", ...
  std::string input;
  std::vector<std::string> columns;
  std::string provenance;  // engine dispatch tag, e.g. "Table1.NDS(e)"
};

// Declarations of the generic symbols the rows are instantiated with.
const std::string& tables_prelude();
std::vector<TableRow> emit_tables();
std::string format(const TableRow& row);
std::string tables_to_json(const std::vector<TableRow>& rows);

}  // namespace thetacorr
