// tmreg: regularity and unit-regularity in monoids of transformations.

#include <iostream>  // for cout, cerr
#include <optional>  // for optional

#include "CLI11.hpp"

#include "tmreg/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Decide (unit-)regularity of transformations and check the "
               "deciders against brute force"};
  app.require_subcommand(1);

  std::optional<std::size_t> cap;
  auto add_cap = [&cap](CLI::App* sub) {
    sub->add_option("--cap-override", cap, "Raise or lower the degree cap of exhaustive scans");
  };

  tmreg::AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Analyze one instance file");
  a->add_option("instance", analyze.instance_path, "Instance file (JSON)")->required();
  a->add_option("--monoid", analyze.monoid,
                "full, txp, sigma, gamma-xp, te-star, omega-xp, sxp, symmetric");
  a->add_flag("--oracle", analyze.oracle, "Also run the brute-force oracle");
  a->add_flag("--json", analyze.json, "Emit a JSON document");
  add_cap(a);

  tmreg::VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Sweep every member of a monoid");
  v->add_option("--n", verify.n, "Degree")->required();
  v->add_option("--monoid", verify.monoid, "Monoid to sweep")->required();
  v->add_option("--partition", verify.partition, "Partition as JSON, e.g. [[0,1],[2,3]]");
  v->add_flag("--all-partitions", verify.all_partitions, "Sweep every partition of n");
  v->add_flag("--oracle", verify.oracle, "Compare every decision with the oracle");
  v->add_flag("--json", verify.json, "Emit a JSON document");
  add_cap(v);

  tmreg::CountUnitsOptions units;
  auto* c = app.add_subcommand("count-units", "Count the unit inner inverses of an element");
  c->add_option("instance", units.instance_path, "Instance file (JSON)")->required();
  c->add_flag("--oracle", units.oracle, "Also count by brute force");
  c->add_flag("--json", units.json, "Emit a JSON document");
  add_cap(c);

  tmreg::EnumerateOptions enumerate;
  auto* e = app.add_subcommand("enumerate", "List the members of a monoid");
  e->add_option("--n", enumerate.n, "Degree")->required();
  e->add_option("--monoid", enumerate.monoid, "Monoid to list")->required();
  e->add_option("--partition", enumerate.partition, "Partition as JSON");
  e->add_flag("--json", enumerate.json, "Emit a JSON document");
  add_cap(e);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& err) {
    return app.exit(err) == 0 ? 0 : tmreg::exit_code::parse_error;
  }

  if (*a) {
    analyze.cap = cap;
    return tmreg::cmd_analyze(analyze, std::cout, std::cerr);
  }
  if (*v) {
    verify.cap = cap;
    return tmreg::cmd_verify(verify, std::cout, std::cerr);
  }
  if (*c) {
    units.cap = cap;
    return tmreg::cmd_count_units(units, std::cout, std::cerr);
  }
  enumerate.cap = cap;
  return tmreg::cmd_enumerate(enumerate, std::cout, std::cerr);
}
