// Command line front end: folcoh orbits|compute|check --config job.json

#include "job.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Overrides {
  std::string config;
  std::string format;
  std::optional<long> max_n;
  std::optional<long> window;
  bool per_orbit = false;
};

void add_options(CLI::App *cmd, Overrides &o) {
  cmd->add_option("--config", o.config, "job description (json)")->required();
  cmd->add_option("--format", o.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--max-n", o.max_n, "largest truncation radius")->check(CLI::NonNegativeNumber);
  cmd->add_option("--window", o.window, "stabilization window")->check(CLI::PositiveNumber);
  cmd->add_flag("--per-orbit", o.per_orbit, "also dump per-orbit dimensions");
}

folcoh::job::JobConfig load(const Overrides &o) {
  auto c = folcoh::job::load_config(o.config);
  if (!o.format.empty())
    c.format = *folcoh::job::parse_format(o.format);
  if (o.max_n)
    c.max_n = *o.max_n;
  if (o.window)
    c.window = static_cast<std::size_t>(*o.window);
  if (o.per_orbit)
    c.per_orbit = true;
  return c;
}

} // namespace

int main(int argc, char **argv) {
  namespace job = folcoh::job;
  CLI::App app{"Exact basic cohomology of torus suspension foliations"};
  app.require_subcommand(1);
  Overrides o;
  auto *orbits = app.add_subcommand("orbits", "list finite orbits of the dual action with fiber dimensions");
  auto *compute = app.add_subcommand("compute", "dimension profiles and verdicts per theory");
  auto *check = app.add_subcommand("check", "identities, inequalities, dualities, Lefschetz and oracle checks");
  for (auto *cmd : {orbits, compute, check})
    add_options(cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : job::exit_code::invalid_input;
  }

  try {
    const job::Job prepared = job::prepare(load(o));
    job::Outcome out;
    if (orbits->parsed())
      out = job::cmd_orbits(prepared);
    else if (compute->parsed())
      out = job::cmd_compute(prepared);
    else
      out = job::cmd_check(prepared);
    std::cout << out.text;
    if (out.exit_code == job::exit_code::property_violation)
      std::cerr << "folcoh: property check failed\n";
    return out.exit_code;
  } catch (const folcoh::Error &e) {
    std::cerr << "folcoh: " << folcoh::to_string(e.kind()) << ": " << e.what() << "\n";
    return job::exit_code_for(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "folcoh: internal error: " << e.what() << "\n";
    return job::exit_code::property_violation;
  }
}
