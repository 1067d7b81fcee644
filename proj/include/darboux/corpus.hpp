#pragma once

#include <functional>
#include <string>
#include <vector>

#include "darboux/spec_io.hpp"

namespace darboux {

struct CorpusOutcome {
  bool pass = false;
  Json facts;
};

struct CorpusExample {
  std::string name;
  std::string citation;
  std::function<CorpusOutcome()> run;
};

const std::vector<CorpusExample>& corpus();

// Runs every example whose name contains `filter`; the report lists each
// outcome and "all_pass".
Json run_corpus(const std::string& filter = {});

}  // namespace darboux
