#pragma once

// JSON, text and CSV renderings of tables, invariants and reports.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codeg/verifiers.hpp"

namespace codeg {

inline json table_json(const std::string& name, const CharacterTable& t) {
  const auto& cc = t.classes();
  json classes = json::array();
  for (std::size_t c = 0; c < cc.size(); ++c) {
    classes.push_back({{"size", cc.class_size(c)},
                       {"element_order", cc.rep_order(c)},
                       {"representative", to_cycle_string(cc.rep(c))}});
  }
  json chars = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    json vals = json::array();
    for (const auto& v : t[i].values) vals.push_back(v.to_string());
    chars.push_back({{"degree", t.degree(i)}, {"values", std::move(vals)}});
  }
  return {{"group", name},   {"order", t.group_order()}, {"classes", std::move(classes)},
          {"characters", std::move(chars)}, {"prime", t.prime()},       {"seed", t.seed()}};
}

inline std::string table_text(const std::string& name, const CharacterTable& t) {
  const auto& cc = t.classes();
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"", "size"});
  cells.push_back({"", "order"});
  for (std::size_t c = 0; c < cc.size(); ++c) {
    cells[0].push_back(std::to_string(cc.class_size(c)));
    cells[1].push_back(std::to_string(cc.rep_order(c)));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> row{"X." + std::to_string(i + 1), ""};
    for (const auto& v : t[i].values) row.push_back(v.to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cc.size() + 2, 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::ostringstream os;
  os << name << ", order " << t.group_order() << ", " << cc.size() << " classes\n";
  for (std::size_t c = 0; c < cc.size(); ++c) {
    os << "  class " << c + 1 << ": " << to_cycle_string(cc.rep(c)) << "\n";
  }
  os << "\n";
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t j = 0; j < cells[r].size(); ++j) {
      os << (j ? "  " : "") << std::setw(static_cast<int>(width[j])) << cells[r][j];
    }
    os << "\n";
    if (r == 1) os << "\n";
  }
  return os.str();
}

inline std::string table_csv(const CharacterTable& t) {
  std::ostringstream os;
  os << "character";
  for (std::size_t c = 0; c < t.size(); ++c) os << ",class" << c + 1;
  os << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << "X." << i + 1;
    for (const auto& v : t[i].values) os << ",\"" << v.to_string() << "\"";
    os << "\n";
  }
  return os.str();
}

inline json invariants_json(GroupAnalysis& a) {
  json out;
  out["group"] = a.name();
  out["order"] = a.table().group_order();
  out["classes"] = a.classes()->size();
  out["solvable"] = a.solvable();
  out["codegrees"] = a.codegrees().values;
  json per = json::array();
  for (const auto& pc : a.codegrees().per_char) {
    per.push_back({{"index", pc.index}, {"degree", pc.degree}, {"kernel_order", pc.kernel.order()},
                   {"codegree", pc.codegree}});
  }
  out["characters"] = std::move(per);
  json lattice = json::array();
  for (const auto& n : a.lattice()) lattice.push_back({{"order", n.order()}, {"classes", n.class_indices()}});
  out["normal_subgroups"] = std::move(lattice);
  out["fitting_subgroup_order"] = a.fitting().order();
  out["solvable_radical_order"] = a.radical().order();
  if (a.solvable()) {
    const auto& fd = a.fitting_data();
    out["fitting"] = {{"series", fd.orders()}, {"height", fd.height}};
  } else {
    out["fitting"] = nullptr;
  }
  return out;
}

inline std::string invariants_text(GroupAnalysis& a) {
  const json j = invariants_json(a);
  std::ostringstream os;
  os << a.name() << ", order " << j["order"] << ", " << j["classes"] << " classes"
     << (a.solvable() ? ", solvable" : ", not solvable") << "\n";
  os << "codegrees: " << j["codegrees"].dump() << "\n";
  os << "characters (degree, |ker|, cod):\n";
  for (const auto& c : j["characters"]) {
    os << "  X." << c["index"].get<std::size_t>() + 1 << "  " << c["degree"] << "  " << c["kernel_order"] << "  "
       << c["codegree"] << "\n";
  }
  os << "normal subgroup orders:";
  for (const auto& n : j["normal_subgroups"]) os << " " << n["order"];
  os << "\n";
  os << "|F(G)| = " << j["fitting_subgroup_order"] << ", |Sol(G)| = " << j["solvable_radical_order"] << "\n";
  if (!j["fitting"].is_null()) {
    os << "Fitting series: " << j["fitting"]["series"].dump() << ", height " << j["fitting"]["height"] << "\n";
  }
  return os.str();
}

inline json reports_json(const std::vector<Report>& reports) {
  const Summary s = summarize(reports);
  return {{"reports", reports}, {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}}}};
}

inline std::string reports_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << std::left << std::setw(18) << r.group << std::setw(11) << r.check << std::setw(8) << to_string(r.status);
    if (!r.lhs.is_null()) os << " lhs=" << r.lhs.dump() << " rhs=" << r.rhs.dump();
    if (!r.reason.empty()) os << "  (" << r.reason << ")";
    if (r.millis) os << "  " << *r.millis << " ms";
    os << "\n";
  }
  const Summary s = summarize(reports);
  os << s.pass << " passed, " << s.fail << " failed, " << s.skipped << " skipped\n";
  return os.str();
}

inline std::string reports_csv(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << "group,check,status,lhs,rhs,reason\n";
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  for (const auto& r : reports) {
    os << quote(r.group) << "," << r.check << "," << to_string(r.status) << "," << (r.lhs.is_null() ? "" : r.lhs.dump())
       << "," << (r.rhs.is_null() ? "" : r.rhs.dump()) << "," << quote(r.reason) << "\n";
  }
  return os.str();
}

}  // namespace codeg
