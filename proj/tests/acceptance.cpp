// Acceptance suite: one pass/fail line per criterion.

#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

#include "skeinlab/acceptance.hpp"

int main(int argc, char** argv) {
  skeinlab::AcceptanceOptions opts;
  opts.progress = &std::cerr;
  std::string report_path;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) {
      opts.extended = true;
    } else if (std::strcmp(argv[i], "--report") == 0 && i + 1 < argc) {
      report_path = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--extended] [--report FILE]\n";
      return 2;
    }
  }
  skeinlab::AcceptanceReport rep = skeinlab::run_acceptance(opts);
  std::cout << rep.table();
  for (const auto& c : rep.criteria)
    if (!c.pass)
      for (const auto& d : c.details) std::cout << "  [" << c.id << "] " << d << "\n";
  if (!report_path.empty()) std::ofstream(report_path) << rep.to_json().dump(2) << "\n";
  return rep.pass() ? 0 : 1;
}
