#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lwood {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string expected;
  std::string computed;
  double seconds = 0;
};

struct CriterionInfo {
  int id;
  const char* name;
  const char* summary;
};

const std::vector<CriterionInfo>& acceptance_criteria();

/// Accepts the numeric id ("3") or the name ("e6-cone"). Throws
/// std::invalid_argument for anything else.
int resolve_criterion(std::string_view id_or_name);

CriterionResult run_criterion(int id);

/// Runs the criteria on worker threads; results are ordered by id.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids);

/// "PASS  3 e6-cone  expected: ...  computed: ...  (0.01 s)"
std::string format_result(const CriterionResult& r);

}  // namespace lwood
