#pragma once

#include <string>
#include <vector>

namespace effdual {

enum class Status { pass, fail, error };
enum class Format { human, machine };

const char* status_name(Status s);

struct ResultRow {
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

struct Report {
  std::string command;
  std::string signature;  // summary like "i:2, j:3"
  std::vector<ResultRow> results;

  // pass iff every row passes; error beats fail.
  Status overall() const;
};

// Human format is line-oriented; machine format is a single JSON
// document with byte-deterministic output for a given report.
std::string emit_report(const Report& report, Format format);

}  // namespace effdual
