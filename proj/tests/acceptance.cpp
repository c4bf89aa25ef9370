#include <cstdlib>
#include <iostream>

#include "superlie/suite.hpp"

// Prints one line per acceptance criterion. A FAIL line is a finding and does
// not change the exit code; a malformed report or an exception does.
int main(int argc, char** argv) {
  using namespace superlie;
  SuiteOptions opt;
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
  try {
    auto reports = run_suite("all", opt);
    bool well_formed = reports.size() == 10;
    int k = 0;
    for (const auto& r : reports) {
      ++k;
      std::string status = status_name(r.status);
      for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      std::cout << "criterion " << k << ": " << status << "  " << r.claim << "  [" << r.seconds << " s]\n";
      if (r.status != Status::Pass) std::cout << "    bound: " << r.bound << "\n";
      if (r.witness) std::cout << "    witness: " << *r.witness << "\n";
      well_formed = well_formed && r.id == "C" + std::string(k < 10 ? "0" : "") + std::to_string(k);
      well_formed = well_formed && (r.status != Status::Fail || r.witness);
      well_formed = well_formed && (r.status != Status::Partial || !r.bound.empty());
    }
    if (!well_formed) {
      std::cout << "malformed report list\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
