#include "groupoidal/driver.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "groupoidal/builtins.hpp"
#include "json.hpp"
#include "groupoidal/errors.hpp"
#include "groupoidal/groupoid.hpp"
#include "groupoidal/json_io.hpp"
#include "groupoidal/reps.hpp"

namespace groupoidal {

namespace fs = std::filesystem;

namespace {

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open input file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const fs::path& target, const std::string& contents) {
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ParseError("cannot write " + tmp.string());
    }
    out << contents;
  }
  fs::rename(tmp, target);
}

FiniteInverseSemigroup builtin_semigroup(const std::string& spec,
                                         std::size_t element_cap) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto int_arg = [&](int lo, int hi) {
    int v;
    try {
      v = std::stoi(arg);
    } catch (...) {
      throw ParseError("builtin " + name + " needs an integer argument");
    }
    if (v < lo || v > hi) {
      throw ValidationError("builtin " + name + " argument out of range [" +
                            std::to_string(lo) + "," + std::to_string(hi) + "]");
    }
    return v;
  };
  if (name == "inverse_symmetric") {
    (void)element_cap;
    return inverse_symmetric(int_arg(1, 4));
  }
  if (name == "chain") {
    return chain_semilattice(int_arg(1, 64));
  }
  if (name == "brandt") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) {
      throw ParseError("brandt needs group,n (e.g. brandt:c2,2)");
    }
    const std::string group = arg.substr(0, comma);
    int n;
    try {
      n = std::stoi(arg.substr(comma + 1));
    } catch (...) {
      throw ParseError("brandt needs an integer n");
    }
    if (n < 1 || n > 3) {
      throw ValidationError("brandt supports 1 <= n <= 3");
    }
    GroupTable g;
    if (group.size() >= 2 && group[0] == 'c') {
      const int k = std::stoi(group.substr(1));
      if (k < 1 || k > 6) {
        throw ValidationError("brandt cyclic group order must be in [1,6]");
      }
      g = cyclic_group(k);
    } else if (group == "s3") {
      g = symmetric_group(3);
    } else {
      throw ParseError("brandt group must be cN or s3");
    }
    return brandt(g, n);
  }
  throw ParseError("unknown builtin: " + name);
}

}  // namespace

FiniteInverseSemigroup ingest(const JobSpec& job) {
  if (!job.builtin.empty()) {
    return builtin_semigroup(job.builtin, job.element_cap);
  }
  if (job.input_path.empty()) {
    throw ParseError("no input: use --input PATH or --builtin NAME:ARG");
  }
  const std::string text = read_file(job.input_path);
  // JSON object, or a plain list of partial perm literals (one per line)
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return semigroup_from_json(text);
  }
  std::vector<PartialPerm> gens;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    try {
      gens.push_back(PartialPerm::parse(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (gens.empty()) {
    throw ParseError("no generators found in " + job.input_path);
  }
  return FiniteInverseSemigroup::from_generators(gens, job.element_cap);
}

namespace {

uint32_t parse_field_prime(const std::string& field) {
  if (field.rfind("gf:", 0) != 0) {
    throw ParseError("field must be q or gf:p");
  }
  uint32_t p;
  try {
    p = static_cast<uint32_t>(std::stoul(field.substr(3)));
  } catch (...) {
    throw ParseError("field must be q or gf:p");
  }
  if (!is_prime(p)) {
    throw ValidationError("gf modulus " + std::to_string(p) + " is not prime");
  }
  return p;
}

std::map<std::string, std::string> compute(const JobSpec& job,
                                           const FiniteInverseSemigroup& s) {
  std::map<std::string, std::string> files;
  if (job.command == "analyze") {
    files["analyze.json"] = analyze_report_json(s);
  } else if (job.command == "cosets") {
    auto ks = CosetSemigroup::full(s, job.max_cosets);
    auto ls = CosetSemigroup::directed(s, job.max_cosets);
    files["cosets.json"] = cosets_report_json(s, ks, ls);
  } else if (job.command == "groupoid") {
    auto pg = paterson_groupoid(s, job.max_cosets);
    files["groupoid.json"] = groupoid_report_json(pg);
    files["groupoid.dot"] = export_dot(pg.groupoid);
  } else if (job.command == "actions") {
    files["actions.json"] = actions_report_json(s);
  } else if (job.command == "reps") {
    if (job.field == "q") {
      auto irr = irreducible_representations_q(s, job.verify_primes, job.max_dim);
      files["reps.json"] = reps_report_json(s, irr, job.verify_primes);
    } else {
      const uint32_t p = parse_field_prime(job.field);
      auto irr = irreducible_representations_p(s, p, job.max_dim);
      files["reps.json"] = reps_report_json(s, irr, p);
    }
  } else if (job.command == "export-dot") {
    auto pg = paterson_groupoid(s, job.max_cosets);
    files["paterson_groupoid.dot"] = export_dot(pg.groupoid);
    for (int e : s.idempotents()) {
      auto x = schutzenberger_action(s, e);
      files["schutzenberger_" + std::to_string(e) + ".dot"] =
          export_dot(action_graph(x), s);
    }
  } else {
    throw ParseError("unknown command: " + job.command);
  }
  return files;
}

fs::path cache_directory(const JobSpec& job) {
  if (!job.cache_dir.empty()) return job.cache_dir;
  if (const char* env = std::getenv("GROUPOIDAL_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME")) {
    return fs::path(home) / ".cache" / "groupoidal";
  }
  return fs::path(".groupoidal-cache");
}

std::string job_fingerprint(const JobSpec& job, const FiniteInverseSemigroup& s) {
  std::ostringstream key;
  key << "v1|" << job.command << "|" << job.field << "|" << job.max_cosets << "|"
      << job.max_dim << "|";
  for (uint32_t p : job.verify_primes) key << p << ",";
  key << "|" << semigroup_canonical_json(s);
  std::ostringstream hex;
  hex << std::hex << fnv1a64(key.str());
  return hex.str();
}

}  // namespace

RunResult run(const JobSpec& job) {
  auto s = ingest(job);
  RunResult result;
  const fs::path out_dir = job.out_dir;
  fs::create_directories(out_dir);

  fs::path cache_file;
  if (!job.no_cache) {
    const fs::path dir = cache_directory(job);
    fs::create_directories(dir);
    cache_file = dir / (job_fingerprint(job, s) + "-" + job.command + ".json");
    if (fs::exists(cache_file)) {
      // cached artifact bundle: {"files": {name: contents}}
      const std::string text = read_file(cache_file.string());
      auto j = nlohmann::json::parse(text);
      for (auto& [name, contents] : j.at("files").items()) {
        result.files[name] = contents.get<std::string>();
      }
      result.cache_hit = true;
    }
  }
  if (!result.cache_hit) {
    result.files = compute(job, s);
    if (!job.no_cache) {
      nlohmann::json bundle;
      bundle["files"] = result.files;
      write_atomic(cache_file, bundle.dump(2) + "\n");
    }
  }
  for (const auto& [name, contents] : result.files) {
    write_atomic(out_dir / name, contents);
  }
  return result;
}

int exit_code_for_current_exception() {
  try {
    throw;
  } catch (const CapExceededError&) {
    return 3;
  } catch (const ValidationError&) {
    return 2;
  } catch (const ParseError&) {
    return 4;
  } catch (...) {
    return 1;
  }
}

}  // namespace groupoidal
