#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "zsprod/congruence.hpp"
#include "zsprod/fpcoset.hpp"
#include "zsprod/pcgroup.hpp"

namespace zsp {

using Json = nlohmann::ordered_json;

// Tuples -------------------------------------------------------------------

inline constexpr const char* kCsvHeaderA = "a,s,t,c";
inline constexpr const char* kCsvHeaderB = "r,a,s,b,t,c";

std::string csv_row(const TupleA& t);
std::string csv_row(const TupleB& t);
std::vector<Residue> parse_tuple(const std::string& text);

Json to_json(const TupleA& t);
Json to_json(const TupleB& t);

// Reports ------------------------------------------------------------------

Json to_json(const Verdict& v);
void write_text(std::ostream& os, const Verdict& v);

Json to_json(const ConsistencyReport& r);
void write_text(std::ostream& os, const ConsistencyReport& r);

Json to_json(const FactorizationReport& r);
void write_text(std::ostream& os, const FactorizationReport& r);

Json to_json(const StructureReport& r);
void write_text(std::ostream& os, const StructureReport& r);

// Group tables ---------------------------------------------------------------
//
//   zsprod-group-table 1
//   n <n>
//   m <m>
//   tuple <values...>
//   order <order>
//   generators w <i> y <i> z <i> x <i>
//   table
//   <order rows of order space-separated indices>
//   end
//
// Element i is the normal form w^a1 y^a2 z^a3 x^a4 with
// i = ((a1*2 + a2)*M + a3)*N + a4.

struct TableFile {
  unsigned n = 0;
  unsigned m = 0;
  std::vector<Residue> tuple;
  GroupTable table;
};

void write_group_table(std::ostream& os, const SdPair& pair,
                       const std::vector<Residue>& tuple, const GroupTable& g);
TableFile read_group_table(std::istream& is);

}  // namespace zsp
