#include "b8p/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace b8p {

namespace {

IsoType iso_type_from_string(const std::string& s) {
  for (IsoType t : kIsoTypes)
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown iso type: " + s);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string e_label(const std::string& descriptor) {
  std::string out = "Z_";
  for (char c : descriptor) {
    if (c == 'x' || c == 'X' || c == '*')
      out += " x Z_";
    else
      out += c;
  }
  return out;
}

int residue_mod8(Residue r) {
  switch (r) {
    case Residue::r1: return 1;
    case Residue::r3: return 3;
    case Residue::r5: return 5;
    case Residue::r7: return 7;
  }
  return 0;
}

std::string render_markdown(const BraceTable& t) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"E \\ F"};
  for (IsoType ty : kIsoTypes) header.push_back(to_string(ty));
  header.push_back("total");
  grid.push_back(header);
  for (int e = 0; e < 3; ++e) {
    std::vector<std::string> row{e_label(kGroupDescriptors[e])};
    for (int c = 0; c < 5; ++c) row.push_back(std::to_string(t.cells[e][c]));
    row.push_back(std::to_string(t.row_sums[e]));
    grid.push_back(row);
  }
  std::vector<std::string> sums{"total"};
  for (int c = 0; c < 5; ++c) sums.push_back(std::to_string(t.col_sums[c]));
  sums.push_back(std::to_string(t.total));
  grid.push_back(sums);

  std::vector<size_t> width(grid[0].size(), 0);
  for (const auto& row : grid)
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

  std::ostringstream os;
  os << "p = " << to_string(t.residue) << "\n\n";
  auto emit = [&](const std::vector<std::string>& row) {
    os << "|";
    for (size_t i = 0; i < row.size(); ++i) {
      os << " " << row[i] << std::string(width[i] - row[i].size(), ' ') << " |";
    }
    os << "\n";
  };
  emit(grid[0]);
  os << "|";
  for (size_t i = 0; i < width.size(); ++i) os << std::string(width[i] + 2, '-') << "|";
  os << "\n";
  for (size_t r = 1; r < grid.size(); ++r) emit(grid[r]);
  return os.str();
}

Json to_json(const BraceTable& t) {
  Json j;
  j["residue_class"] = to_string(t.residue);
  j["residue_mod_8"] = residue_mod8(t.residue);
  j["groups"] = Json::array();
  for (const char* d : kGroupDescriptors) j["groups"].push_back(d);
  j["types"] = Json::array();
  for (IsoType ty : kIsoTypes) j["types"].push_back(to_string(ty));
  j["cells"] = Json::array();
  for (int e = 0; e < 3; ++e) {
    Json row = Json::array();
    for (int c = 0; c < 5; ++c) row.push_back(t.cells[e][c]);
    j["cells"].push_back(row);
  }
  j["row_sums"] = t.row_sums;
  j["col_sums"] = t.col_sums;
  j["total"] = t.total;
  return j;
}

BraceTable brace_table_from_json(const Json& j) {
  BraceTable t;
  t.residue = residue_from_int(j.at("residue_mod_8").get<int>());
  for (int e = 0; e < 3; ++e)
    for (int c = 0; c < 5; ++c) t.cells[e][c] = j.at("cells")[e][c].get<int>();
  t.row_sums = j.at("row_sums").get<std::array<int, 3>>();
  t.col_sums = j.at("col_sums").get<std::array<int, 5>>();
  t.total = j.at("total").get<int>();
  return t;
}

std::vector<ReportRow> report_rows(const std::vector<HolomorphAnalysis>& analyses, Residue r) {
  std::vector<ReportRow> rows;
  for (const HolomorphAnalysis& a : analyses) {
    std::string d = a.hol.base().descriptor();
    for (IsoType ty : kIsoTypes) {
      std::array<int, 4> by_kernel{};  // kernel orders 8, 4, 2, 1
      for (const PairClass& c : a.pair_classes) {
        if (c.type != ty || !image_order_allowed(r, c.image_order)) continue;
        int slot = c.kernel_order == 8 ? 0 : c.kernel_order == 4 ? 1 : c.kernel_order == 2 ? 2 : 3;
        ++by_kernel[slot];
      }
      for (int s = 0; s < 4; ++s) {
        if (by_kernel[s] == 0) continue;
        rows.push_back({d, ty, 8 >> s, r, by_kernel[s]});
      }
    }
  }
  return rows;
}

std::string render_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << "E,F_iso_type,kernel_order,residue_class,count\n";
  for (const ReportRow& r : rows)
    os << csv_field(r.e) << "," << to_string(r.type) << "," << r.kernel_order << ","
       << csv_field(to_string(r.residue)) << "," << r.count << "\n";
  return os.str();
}

Json to_json(const std::vector<ReportRow>& rows) {
  Json j = Json::array();
  for (const ReportRow& r : rows) {
    Json o;
    o["E"] = r.e;
    o["F_iso_type"] = to_string(r.type);
    o["kernel_order"] = r.kernel_order;
    o["residue_class"] = to_string(r.residue);
    o["residue_mod_8"] = residue_mod8(r.residue);
    o["count"] = r.count;
    j.push_back(o);
  }
  return j;
}

std::vector<ReportRow> rows_from_json(const Json& j) {
  std::vector<ReportRow> rows;
  for (const Json& o : j) {
    ReportRow r;
    r.e = o.at("E").get<std::string>();
    r.type = iso_type_from_string(o.at("F_iso_type").get<std::string>());
    r.kernel_order = o.at("kernel_order").get<int>();
    r.residue = residue_from_int(o.at("residue_mod_8").get<int>());
    r.count = o.at("count").get<int>();
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const CrossCheck& c) {
  Json j;
  j["p"] = c.p;
  j["match"] = c.match;
  j["results"] = Json::array();
  for (const GroupCheck& g : c.groups) {
    Json o;
    o["E"] = g.descriptor;
    o["oracle_classes"] = g.oracle_classes;
    o["predicted"] = g.predicted;
    o["per_iso_type"] = Json::object();
    for (const CellCheck& cell : g.per_type) {
      Json pc;
      pc["oracle"] = cell.oracle;
      pc["predicted"] = cell.predicted;
      pc["match"] = cell.match;
      o["per_iso_type"][to_string(cell.type)] = pc;
    }
    o["match"] = g.match;
    j["results"].push_back(o);
  }
  return j;
}

CrossCheck cross_check_from_json(const Json& j) {
  CrossCheck c;
  c.p = j.at("p").get<int>();
  c.match = j.at("match").get<bool>();
  for (const Json& o : j.at("results")) {
    GroupCheck g;
    g.descriptor = o.at("E").get<std::string>();
    g.oracle_classes = o.at("oracle_classes").get<int>();
    g.predicted = o.at("predicted").get<int>();
    g.match = o.at("match").get<bool>();
    for (IsoType t : kIsoTypes) {
      const Json& pc = o.at("per_iso_type").at(to_string(t));
      CellCheck cell;
      cell.type = t;
      cell.oracle = pc.at("oracle").get<int>();
      cell.predicted = pc.at("predicted").get<int>();
      cell.match = pc.at("match").get<bool>();
      g.per_type.push_back(cell);
    }
    c.groups.push_back(std::move(g));
  }
  return c;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace b8p
