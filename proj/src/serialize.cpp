#include "bivar/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace bivar {

namespace {

using ordered_json = nlohmann::ordered_json;

bool has_mirror_column(const MultiplicityTable& t) {
  return t.dominant_only && t.spec.family == Family::D;
}

std::string dimension_string(const MultiplicityTable& t) {
  return weyl_dimension(t.spec, t.k, t.l).get_str();
}

BigInt parse_big(const std::string& s) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0 || v < 0) {
    throw Error(ErrorKind::InvalidArgument, "not a non-negative decimal integer: '" + s + "'");
  }
  return v;
}

}  // namespace

std::string to_json(const MultiplicityTable& table) {
  ordered_json doc;
  doc["family"] = std::string(1, family_letter(table.spec.family));
  doc["rank"] = table.spec.rank;
  doc["k"] = table.k;
  doc["l"] = table.l;
  doc["dominant_only"] = table.dominant_only;
  ordered_json rows = ordered_json::array();
  const bool mirror = has_mirror_column(table);
  for (const TableRow& row : table.rows) {
    ordered_json r;
    r["mu"] = row.mu;
    r["mult"] = row.mult.get_str();
    if (mirror) r["mirror"] = row.mirror;
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  doc["dimension"] = dimension_string(table);
  return doc.dump() + "\n";
}

std::string to_csv(const MultiplicityTable& table) {
  std::ostringstream os;
  const int len = table.spec.weight_length();
  for (int i = 1; i <= len; ++i) os << "mu_" << i << ',';
  os << "mult";
  const bool mirror = has_mirror_column(table);
  if (mirror) os << ",mirror";
  os << '\n';
  for (const TableRow& row : table.rows) {
    for (int a : row.mu) os << a << ',';
    os << row.mult.get_str();
    if (mirror) os << ',' << (row.mirror ? 1 : 0);
    os << '\n';
  }
  return os.str();
}

MultiplicityTable table_from_json(const std::string& text) {
  MultiplicityTable t;
  try {
    const ordered_json doc = ordered_json::parse(text);
    t.spec.family = parse_family(doc.at("family").get<std::string>());
    t.spec.rank = doc.at("rank").get<int>();
    t.k = doc.at("k").get<int>();
    t.l = doc.at("l").get<int>();
    t.dominant_only = doc.at("dominant_only").get<bool>();
    for (const auto& r : doc.at("rows")) {
      TableRow row;
      row.mu = r.at("mu").get<Weight>();
      row.mult = parse_big(r.at("mult").get<std::string>());
      if (r.contains("mirror")) row.mirror = r.at("mirror").get<bool>();
      check_length(t.spec, row.mu);
      t.rows.push_back(std::move(row));
    }
    if (doc.at("dimension").get<std::string>() != dimension_string(t)) {
      throw Error(ErrorKind::InvalidArgument, "dimension field does not match the highest weight");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed table JSON: ") + e.what());
  }
  return t;
}

MultiplicityTable table_from_csv(const std::string& text, const MultiplicityTable& shape) {
  MultiplicityTable t;
  t.spec = shape.spec;
  t.k = shape.k;
  t.l = shape.l;
  t.dominant_only = shape.dominant_only;
  const int len = t.spec.weight_length();
  const bool mirror = has_mirror_column(t);
  const std::size_t fields = static_cast<std::size_t>(len) + 1 + (mirror ? 1 : 0);

  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorKind::InvalidArgument, "empty CSV");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != fields) {
      throw Error(ErrorKind::InvalidArgument, "CSV row has " + std::to_string(cells.size()) +
                                                  " fields, expected " + std::to_string(fields));
    }
    TableRow row;
    try {
      for (int i = 0; i < len; ++i) row.mu.push_back(std::stoi(cells[i]));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad coordinate in CSV row: " + line);
    }
    row.mult = parse_big(cells[len]);
    if (mirror) row.mirror = cells[len + 1] == "1";
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace bivar
