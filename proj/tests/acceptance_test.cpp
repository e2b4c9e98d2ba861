#include <cstdlib>
#include <iostream>
#include <string>

#include "omn/reproduce.hpp"

int main(int argc, char** argv) {
  omn::ReproduceOptions options;
  if (argc > 1) options.seed = std::stoull(argv[1]);
  bool all = true;
  for (int id = 1; id <= omn::criterion_count; ++id) {
    const omn::CriterionResult r = omn::run_criterion(id, options);
    std::cout << omn::format_result(r) << std::endl;
    all = all && r.pass;
  }
  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << std::endl;
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
