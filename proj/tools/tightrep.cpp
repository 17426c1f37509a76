#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tightrep/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Decide tightness and cover-to-join for finite semilattice and inverse semigroup representations"};
  app.require_subcommand(1);

  std::string path, rep, view = "full", out_path;
  std::size_t size = 1;
  bool up_to_iso = false;
  tightrep::UniverseSpec spec;
  spec.atom_counts.clear();

  auto* validate = app.add_subcommand("validate", "parse and validate a structure file");
  validate->add_option("file", path, "structure file")->required();

  auto* check = app.add_subcommand("check", "report cover-to-join, tight and non-degenerate verdicts");
  check->add_option("file", path, "structure file")->required();
  check->add_option("--rep", rep, "representation or homomorphism name")->required();
  check->add_option("--view", view, "full, generated-ideal or tightened")->check(
      CLI::IsMember({"full", "generated-ideal", "tightened"}));

  auto* tighten = app.add_subcommand("tighten", "write the corner on which a cover-to-join map is tight");
  tighten->add_option("file", path, "structure file")->required();
  tighten->add_option("--rep", rep, "representation or homomorphism name")->required();
  tighten->add_option("--out", out_path, "output structure file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list meet-semilattices with zero on N elements");
  enumerate->add_option("--size", size, "number of elements")->required();
  enumerate->add_flag("--up-to-iso", up_to_iso, "one member per isomorphism class");

  auto add_universe = [&](CLI::App* cmd) {
    cmd->add_option("--max-e", spec.max_semilattice_size, "largest semilattice size")->required();
    cmd->add_option("--atoms", spec.atom_counts, "powerset atom counts (repeatable)")->required()->delimiter(',');
    cmd->add_flag("--up-to-iso", spec.up_to_iso, "semilattices up to isomorphism");
  };
  auto* search = app.add_subcommand("search-gap", "list cover-to-join representations that are not tight");
  add_universe(search);
  auto* verify = app.add_subcommand("verify", "check the representation theorems over a universe");
  add_universe(verify);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (validate->parsed()) return tightrep::cmd_validate(path, std::cout, std::cerr);
  if (check->parsed()) return tightrep::cmd_check(path, rep, view, std::cout, std::cerr);
  if (tighten->parsed()) return tightrep::cmd_tighten(path, rep, out_path, std::cout, std::cerr);
  if (enumerate->parsed()) return tightrep::cmd_enumerate(size, up_to_iso, std::cout, std::cerr);
  if (search->parsed()) return tightrep::cmd_search_gap(spec, std::cout, std::cerr);
  if (verify->parsed()) return tightrep::cmd_verify(spec, std::cout, std::cerr);
  return 1;
}
