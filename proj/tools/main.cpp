#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "groupoidal/driver.hpp"
#include "groupoidal/errors.hpp"
#include "groupoidal/json_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"groupoidal: filters, cosets, groupoids and representations of "
               "finite inverse semigroups"};
  app.require_subcommand(1);

  groupoidal::JobSpec job;
  std::string primes_csv;

  auto add_common = [&](CLI::App* cmd) {
    auto* input = cmd->add_option("--input", job.input_path,
                                  "semigroup file (JSON schema or one partial "
                                  "perm literal per line)");
    auto* builtin = cmd->add_option(
        "--builtin", job.builtin,
        "builtin family: inverse_symmetric:n, chain:n, brandt:GROUP,n");
    input->excludes(builtin);
    cmd->add_option("--max-cosets", job.max_cosets, "coset enumeration cap");
    cmd->add_option("--out", job.out_dir, "output directory");
    cmd->add_flag("--no-cache", job.no_cache, "bypass the on-disk cache");
    cmd->add_option("--element-cap", job.element_cap, "closure element cap");
  };

  for (const char* name : {"analyze", "cosets", "groupoid", "actions", "reps",
                           "export-dot"}) {
    auto* cmd = app.add_subcommand(name);
    add_common(cmd);
    if (std::string(name) == "reps") {
      cmd->add_option("--field", job.field, "q or gf:p");
      cmd->add_option("--max-dim", job.max_dim, "induced dimension cap");
      cmd->add_option("--verify-primes", primes_csv,
                      "comma-separated verification primes (default 5,7)");
    }
    cmd->callback([&, name] { job.command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  if (!primes_csv.empty()) {
    job.verify_primes.clear();
    std::string cur;
    for (char c : primes_csv + ",") {
      if (c == ',') {
        if (!cur.empty()) job.verify_primes.push_back(std::stoul(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
  }

  try {
    auto result = groupoidal::run(job);
    std::cout << "wrote " << result.files.size() << " file(s) to " << job.out_dir
              << (result.cache_hit ? " (cache hit)" : "") << "\n";
    for (const auto& [name, contents] : result.files) {
      std::cout << "  " << name << " (" << contents.size() << " bytes)\n";
    }
    return 0;
  } catch (const std::exception& e) {
    const int code = groupoidal::exit_code_for_current_exception();
    std::string kind = code == 3   ? "cap_exceeded"
                       : code == 2 ? "validation"
                       : code == 4 ? "parse"
                                   : "error";
    std::cerr << groupoidal::error_json(kind, e.what());
    return code;
  }
}
