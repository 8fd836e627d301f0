// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <cstring>
#include <iostream>

#include "octet/acceptance.hpp"

int main(int argc, char** argv) {
  octet::AcceptanceOptions opt;
  opt.jobs = 2;
  for (int i = 1; i < argc; i++) {
    if (!std::strcmp(argv[i], "--quick")) opt.quick = true;
    if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) opt.jobs = std::atoi(argv[++i]);
  }
  opt.log = [](const std::string& s) { std::cout << s << "\n" << std::flush; };
  auto res = octet::run_acceptance(opt);
  int failed = 0;
  for (auto& r : res) failed += !r.pass;
  std::cout << "----\n"
            << (res.size() - failed) << "/" << res.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
