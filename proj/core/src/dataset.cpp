#include "fockfit/dataset.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fockfit {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kColumnCount = 12;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_cell(const std::string& cell, std::string& error) {
  const std::string t = trim(cell);
  if (t.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) {
    error = "not a number: '" + t + "'";
    return std::nullopt;
  }
  return v;
}

// Applies the record-level validity rules; returns an error message or "".
std::string validate_record(const MembershipRecord& r) {
  if (r.item.empty()) return "missing item label";
  const std::pair<const char*, const std::optional<double>*> weights[] = {
      {"mu_a", &r.mu_a},           {"mu_b", &r.mu_b},
      {"mu_a_neg", &r.mu_a_neg},   {"mu_b_neg", &r.mu_b_neg},
      {"mu_and", &r.mu_and},       {"mu_or", &r.mu_or},
      {"mu_a_bneg", &r.mu_a_bneg}, {"mu_aneg_b", &r.mu_aneg_b},
      {"mu_aneg_bneg", &r.mu_aneg_bneg}};
  for (const auto& [name, value] : weights) {
    if (*value && !(**value >= 0.0 && **value <= 1.0)) {
      return std::string(name) + " outside [0,1]";
    }
  }
  if (!r.mu_a || !r.mu_b) return "mu_a and mu_b are required";
  if (!r.mu_and && !r.mu_or && !r.mu_a_bneg && !r.mu_aneg_b && !r.mu_aneg_bneg) {
    return "at least one combination weight is required";
  }
  return {};
}

void assign_field(MembershipRecord& r, std::size_t column,
                  const std::string& cell, std::string& error) {
  switch (column) {
    case 0: r.item = trim(cell); return;
    case 1: r.concept_a = trim(cell); return;
    case 2: r.concept_b = trim(cell); return;
    case 3: r.mu_a = parse_cell(cell, error); return;
    case 4: r.mu_b = parse_cell(cell, error); return;
    case 5: r.mu_a_neg = parse_cell(cell, error); return;
    case 6: r.mu_b_neg = parse_cell(cell, error); return;
    case 7: r.mu_and = parse_cell(cell, error); return;
    case 8: r.mu_or = parse_cell(cell, error); return;
    case 9: r.mu_a_bneg = parse_cell(cell, error); return;
    case 10: r.mu_aneg_b = parse_cell(cell, error); return;
    case 11: r.mu_aneg_bneg = parse_cell(cell, error); return;
    default: error = "too many columns"; return;
  }
}

}  // namespace

const char* const kCsvHeader =
    "item,concept_a,concept_b,mu_a,mu_b,mu_a_neg,mu_b_neg,mu_and,mu_or,"
    "mu_a_bneg,mu_aneg_b,mu_aneg_bneg";

PairWeights MembershipRecord::and_pair() const {
  return {*mu_a, *mu_b, *mu_and, Connective::And};
}

PairWeights MembershipRecord::or_pair() const {
  return {*mu_a, *mu_b, *mu_or, Connective::Or};
}

NegationRecord MembershipRecord::negation() const {
  NegationRecord rec;
  rec.mu_a = *mu_a;
  rec.mu_b = *mu_b;
  rec.mu_a_neg = *mu_a_neg;
  rec.mu_b_neg = *mu_b_neg;
  rec.mu_ab = *mu_and;
  rec.mu_ab_neg = *mu_a_bneg;
  rec.mu_aneg_b = *mu_aneg_b;
  rec.mu_aneg_bneg = *mu_aneg_bneg;
  rec.item = item;
  rec.concept_a = concept_a;
  rec.concept_b = concept_b;
  return rec;
}

Dataset parse_csv(std::istream& in, std::string provenance) {
  Dataset ds;
  ds.provenance = std::move(provenance);
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      // Leading comments double as file provenance.
      if (!saw_header && ds.provenance.empty()) {
        ds.provenance = trim(t.substr(1));
      }
      continue;
    }
    if (!saw_header) {
      if (t != kCsvHeader) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": expected header '" + kCsvHeader + "'");
      }
      saw_header = true;
      continue;
    }
    MembershipRecord rec;
    std::string error;
    std::size_t column = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string cell = comma == std::string::npos
                                   ? line.substr(start)
                                   : line.substr(start, comma - start);
      assign_field(rec, column, cell, error);
      ++column;
      if (!error.empty() || comma == std::string::npos) break;
      start = comma + 1;
    }
    if (error.empty() && column > kColumnCount) error = "too many columns";
    if (error.empty()) error = validate_record(rec);
    if (!error.empty()) {
      ds.issues.push_back({line_no, error});
      continue;
    }
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

Dataset parse_json(const std::string& text) {
  Dataset ds;
  if (trim(text).empty()) return ds;
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("JSON parse failure: ") + e.what());
  }
  ordered_json records;
  if (doc.is_array()) {
    records = doc;
  } else if (doc.is_object()) {
    ds.provenance = doc.value("provenance", std::string{});
    records = doc.value("records", ordered_json::array());
  } else {
    throw std::runtime_error("JSON dataset must be an array or object");
  }
  std::size_t index = 0;
  for (const auto& entry : records) {
    ++index;
    if (!entry.is_object()) {
      ds.issues.push_back({index, "record is not an object"});
      continue;
    }
    MembershipRecord rec;
    std::string error;
    rec.item = entry.value("item", std::string{});
    rec.concept_a = entry.value("concept_a", std::string{});
    rec.concept_b = entry.value("concept_b", std::string{});
    const auto read = [&](const char* key, std::optional<double>& slot) {
      if (!entry.contains(key) || entry[key].is_null()) return;
      if (!entry[key].is_number()) {
        error = std::string(key) + " is not a number";
        return;
      }
      slot = entry[key].get<double>();
    };
    read("mu_a", rec.mu_a);
    read("mu_b", rec.mu_b);
    read("mu_a_neg", rec.mu_a_neg);
    read("mu_b_neg", rec.mu_b_neg);
    read("mu_and", rec.mu_and);
    read("mu_or", rec.mu_or);
    read("mu_a_bneg", rec.mu_a_bneg);
    read("mu_aneg_b", rec.mu_aneg_b);
    read("mu_aneg_bneg", rec.mu_aneg_bneg);
    if (error.empty()) error = validate_record(rec);
    if (!error.empty()) {
      ds.issues.push_back({index, error});
      continue;
    }
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

Dataset load_dataset(const std::string& path, DataFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open dataset file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (format == DataFormat::Json) {
    return parse_json(buffer.str());
  }
  std::istringstream stream(buffer.str());
  return parse_csv(stream);
}

std::string format_weight(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string emit_dataset(const Dataset& dataset, DataFormat format) {
  if (format == DataFormat::Csv) {
    std::ostringstream out;
    if (!dataset.provenance.empty()) out << "# " << dataset.provenance << "\n";
    out << kCsvHeader << "\n";
    for (const MembershipRecord& r : dataset.records) {
      const std::optional<double>* weights[] = {
          &r.mu_a,      &r.mu_b,      &r.mu_a_neg, &r.mu_b_neg, &r.mu_and,
          &r.mu_or, &r.mu_a_bneg, &r.mu_aneg_b, &r.mu_aneg_bneg};
      out << r.item << ',' << r.concept_a << ',' << r.concept_b;
      for (const auto* w : weights) {
        out << ',';
        if (*w) out << format_weight(**w);
      }
      out << "\n";
    }
    return out.str();
  }
  ordered_json doc;
  doc["provenance"] = dataset.provenance;
  doc["records"] = ordered_json::array();
  for (const MembershipRecord& r : dataset.records) {
    ordered_json entry;
    entry["item"] = r.item;
    if (!r.concept_a.empty()) entry["concept_a"] = r.concept_a;
    if (!r.concept_b.empty()) entry["concept_b"] = r.concept_b;
    const auto write = [&](const char* key, const std::optional<double>& w) {
      if (w) entry[key] = *w;
    };
    write("mu_a", r.mu_a);
    write("mu_b", r.mu_b);
    write("mu_a_neg", r.mu_a_neg);
    write("mu_b_neg", r.mu_b_neg);
    write("mu_and", r.mu_and);
    write("mu_or", r.mu_or);
    write("mu_a_bneg", r.mu_a_bneg);
    write("mu_aneg_b", r.mu_aneg_b);
    write("mu_aneg_bneg", r.mu_aneg_bneg);
    doc["records"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace fockfit
