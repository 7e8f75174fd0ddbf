// Runs the fourteen acceptance criteria, one verdict line each, and writes the
// JSON suite report next to the binary. Exit status is 0 only if all pass.

#include <fstream>
#include <iostream>

#include "effalg/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace effalg::acceptance;
  SuiteOptions o;
  o.data_dir = EFFALG_DATA_DIR;
  o.corpus_dir = EFFALG_CORPUS_DIR;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));
  try {
    const SuiteContext ctx = load_context(o);
    const auto rs = run_suite(ctx, only, [](const CriterionResult& r) { std::cout << verdict_line(r) << std::endl; });
    std::ofstream("acceptance_report.json") << effalg::canonical_dump(suite_report(rs));
    std::size_t passed = 0;
    for (const auto& r : rs) passed += r.ok();
    std::cout << passed << "/" << rs.size() << " criteria passed" << std::endl;
    return passed == rs.size() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 3;
  }
}
