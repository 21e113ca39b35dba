#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cc/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ccprove: proof-producing congruence closure for dependent "
               "type theory"};
  std::string file;
  bool trace = false, no_check = false, no_subsingleton = false,
       emit_partition = false, check_invariants = false;
  app.add_option("file", file, "problem file (default: stdin)");
  app.add_flag("--trace", trace, "print each merge as it happens");
  app.add_flag("--no-check", no_check, "skip the certificate check");
  app.add_flag("--no-subsingleton", no_subsingleton,
               "ignore subsingleton declarations");
  app.add_flag("--emit-partition", emit_partition,
               "print the final equivalence classes");
  app.add_flag("--check-invariants", check_invariants,
               "verify engine invariants after every merge (slow)");
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (file.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: cannot open `" << file << "`\n";
      return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  cc::DriverOptions opts;
  opts.use_subsingletons = !no_subsingleton;
  opts.check = !no_check;
  opts.check_invariants = check_invariants;
  opts.emit_partition = emit_partition;
  if (trace) opts.trace = &std::cerr;

  cc::DriverResult res = cc::run_text(text, opts);
  if (res.status == cc::DriverStatus::InputError ||
      res.status == cc::DriverStatus::Rejected)
    std::cerr << res.report;
  else
    std::cout << res.report;
  return static_cast<int>(res.status);
}
