#ifndef GROUPOIDAL_DRIVER_HPP_
#define GROUPOIDAL_DRIVER_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "groupoidal/semigroup.hpp"

namespace groupoidal {

// One CLI invocation: input, requested computation and knobs.
struct JobSpec {
  std::string command;  // analyze | cosets | groupoid | actions | reps | export-dot
  std::string input_path;  // file input, or
  std::string builtin;     // "inverse_symmetric:3", "chain:4", "brandt:c2,2"
  std::string field = "q";  // "q" or "gf:p"
  long max_cosets = 100000;
  long max_dim = 4096;
  std::vector<uint32_t> verify_primes = {5, 7};
  std::string out_dir = ".";
  bool no_cache = false;
  std::string cache_dir;  // empty: GROUPOIDAL_CACHE_DIR or a default
  std::size_t element_cap = 1000000;
};

struct RunResult {
  std::map<std::string, std::string> files;  // name -> contents, as written
  bool cache_hit = false;
};

FiniteInverseSemigroup ingest(const JobSpec& job);

// Computes the requested reports, writes them atomically under out_dir, and
// maintains the on-disk cache. Byte-deterministic for identical jobs.
RunResult run(const JobSpec& job);

// Exit codes for the CLI: 0 ok, 2 validation, 3 cap, 4 parse/io, 1 other.
int exit_code_for_current_exception();

}  // namespace groupoidal

#endif  // GROUPOIDAL_DRIVER_HPP_
