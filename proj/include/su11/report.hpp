#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace su11 {

// A closed form that the oracle (or a finite-difference check) does
// not reproduce. Both values and the tolerance are kept.
struct Discrepancy {
  std::string quantity;
  double formula;
  double reference;
  double tolerance;
  std::string note;
};

struct RunReport {
  std::string command;
  std::vector<std::string> assumptions;
  std::vector<std::pair<std::string, std::string>> headline;
  std::vector<std::filesystem::path> files;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void add(const std::string& name, double value);
  void add(const std::string& name, const std::string& value);

  // 1 on any hard failure, 2 when only formula discrepancies remain, else 0.
  int exit_status() const;
  std::string render() const;
};

}  // namespace su11
