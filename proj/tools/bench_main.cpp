// Benchmark: serial reference vs OpenMP-parallel kernels (atlas enumeration
// and batch pencil analysis), with a byte-identity check on the outputs.

#include <chrono>
#include <iostream>

#include "octet/atlas.hpp"
#include "octet/json_io.hpp"
#include "octet/pencil.hpp"

using namespace octet;
using Clock = std::chrono::steady_clock;

static double run_atlas(int jobs, std::string* dump) {
  auto t0 = Clock::now();
  BuildOptions bo;
  bo.jobs = jobs;
  Atlas a = build_atlas(default_seeds(), bo);
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (dump) *dump = atlas_to_json(a);
  std::cout << "  atlas jobs=" << jobs << ": " << a.nodes.size() << " lists in " << secs
            << "s\n";
  return secs;
}

int main(int argc, char** argv) {
  int jobs = argc > 1 ? std::atoi(argv[1]) : 2;
  std::cout << "atlas enumeration\n";
  std::string serial_dump, parallel_dump;
  double s1 = run_atlas(1, &serial_dump);
  double sj = run_atlas(jobs, &parallel_dump);
  std::cout << "  speedup x" << s1 / sj << ", outputs "
            << (serial_dump == parallel_dump ? "byte-identical" : "DIFFER!") << "\n";

  std::cout << "pencil batch (12 extremal seeds)\n";
  auto seeds = default_seeds();
  seeds.resize(12);
  auto t0 = Clock::now();
  for (auto& c : seeds) analyze_pencil(c.pts);
  double p1 = std::chrono::duration<double>(Clock::now() - t0).count();
  std::cout << "  serial: " << p1 << "s\n";
  t0 = Clock::now();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (int i = 0; i < (int)seeds.size(); i++) analyze_pencil(seeds[i].pts);
  double pj = std::chrono::duration<double>(Clock::now() - t0).count();
  std::cout << "  jobs=" << jobs << ": " << pj << "s, speedup x" << p1 / pj << "\n";
  return serial_dump == parallel_dump ? 0 : 1;
}
