#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fockfit/combination.hpp"
#include "fockfit/negation.hpp"

// Dataset ingestion and emission. One row schema covers both experiment
// shapes: a pair row carries (mu_a, mu_b) plus mu_and and/or mu_or; a
// negation row additionally carries the negated marginals and the three
// remaining quadrant weights. Blank cells mean "not measured".

namespace fockfit {

struct MembershipRecord {
  std::string item;
  std::string concept_a;
  std::string concept_b;
  std::optional<double> mu_a, mu_b;
  std::optional<double> mu_a_neg, mu_b_neg;
  std::optional<double> mu_and, mu_or;
  std::optional<double> mu_a_bneg, mu_aneg_b, mu_aneg_bneg;

  bool has_and_pair() const { return mu_a && mu_b && mu_and; }
  bool has_or_pair() const { return mu_a && mu_b && mu_or; }
  bool has_negation() const {
    return mu_a && mu_b && mu_a_neg && mu_b_neg && mu_and && mu_a_bneg &&
           mu_aneg_b && mu_aneg_bneg;
  }

  PairWeights and_pair() const;
  PairWeights or_pair() const;
  NegationRecord negation() const;
};

struct RowIssue {
  std::size_t line = 0;  // 1-based line (CSV) or record index + 1 (JSON)
  std::string message;
};

struct Dataset {
  std::vector<MembershipRecord> records;
  std::string provenance;
  std::vector<RowIssue> issues;  // rejected rows, kept for diagnostics
};

enum class DataFormat { Csv, Json };

// Fixed CSV column order; the header row must match exactly.
extern const char* const kCsvHeader;

// Throws std::runtime_error when the file cannot be opened or the payload
// cannot be parsed at all (bad header, malformed JSON). Individual bad rows
// (missing item, weight outside [0,1], non-numeric cell, too few of
// mu_a/mu_b/combination weights) are rejected per row into `issues`.
// An empty file yields an empty dataset.
Dataset load_dataset(const std::string& path, DataFormat format);

Dataset parse_csv(std::istream& in, std::string provenance = {});
Dataset parse_json(const std::string& text);

std::string emit_dataset(const Dataset& dataset, DataFormat format);

// Decimal rendering with at most six fractional digits, trailing zeros
// trimmed; parsing the result reproduces the double bit-for-bit for any
// weight that originated from such a string.
std::string format_weight(double value);

}  // namespace fockfit
