#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "b8p/oracle.hpp"
#include "b8p/tau.hpp"

namespace b8p {

// Rendering and serialization for the count tables. JSON uses ordered_json
// throughout so output is byte-stable; every to_json has a matching parser
// and parse(render(x)) == x.

using Json = nlohmann::ordered_json;

std::string e_label(const std::string& descriptor);  // "4x2" -> "Z_4 x Z_2"
int residue_mod8(Residue r);

// 3x5 grid with row and column margins, markdown table
std::string render_markdown(const BraceTable& t);

Json to_json(const BraceTable& t);
BraceTable brace_table_from_json(const Json& j);

// One (E, iso type, kernel order) bucket of the classification.
struct ReportRow {
  std::string e;  // group descriptor
  IsoType type = IsoType::C8;
  int kernel_order = 8;
  Residue residue = Residue::r1;
  int count = 0;

  bool operator==(const ReportRow&) const = default;
};

std::vector<ReportRow> report_rows(const std::vector<HolomorphAnalysis>& analyses, Residue r);

std::string render_csv(const std::vector<ReportRow>& rows);
Json to_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> rows_from_json(const Json& j);

Json to_json(const CrossCheck& c);
CrossCheck cross_check_from_json(const Json& j);

// dump() with fixed options plus trailing newline, shared by all commands
std::string render_json(const Json& j);

}  // namespace b8p
