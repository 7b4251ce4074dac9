// eqpush: equivariant push-forwards over LG(n), OG(n,2n) and OG(n,2n+1).

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqpush/commands.hpp"

namespace {

struct RawFlags {
  std::vector<std::string> spaces;
  std::size_t n = 0;
  std::string lambda = "0";
  std::string method = "residue";
  std::string t;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t n_max = 3;
  int weight_min = 0;
  int weight_max = 6;
  std::size_t trials = 3;
  std::string construction = "bialternant";
  bool inject_fault = false;
};

eqpush::Request to_request(const RawFlags& f) {
  eqpush::Request req;
  for (const auto& s : f.spaces) req.spaces.push_back(eqpush::parse_space_kind(s));
  req.n = f.n;
  req.lambda = eqpush::parse_partition(f.lambda);
  req.method = eqpush::parse_method(f.method);
  if (!f.t.empty()) req.t = eqpush::parse_point(f.t);
  req.format = eqpush::parse_format(f.format);
  req.seed = f.seed;
  req.n_max = f.n_max;
  req.weight_min = f.weight_min;
  req.weight_max = f.weight_max;
  req.trials = f.trials;
  req.construction = eqpush::parse_construction(f.construction);
  req.inject_fault = f.inject_fault;
  return req;
}

void add_common(CLI::App* cmd, RawFlags& f) {
  cmd->add_option("--format", f.format, "Output format: text or json");
  cmd->add_option("--seed", f.seed, "Seed for generic evaluation points");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant push-forwards of Schur classes over isotropic Grassmannians"};
  app.require_subcommand(1);
  RawFlags f;

  auto* push = app.add_subcommand("pushforward", "Push a Schur class forward to a point");
  push->add_option("--space", f.spaces, "lg, og-even or og-odd")->required()->expected(1);
  push->add_option("--n", f.n, "Rank n")->required();
  push->add_option("--lambda", f.lambda, "Partition, e.g. 4,3,1")->required();
  push->add_option("--method", f.method, "residue, closed, abbv or all");
  push->add_option("--t", f.t, "Evaluation point for abbv, e.g. 1,2/3");
  push->add_option("--trials", f.trials, "Seeded points checked by --method all");
  add_common(push, f);

  auto* schur = app.add_subcommand("schur", "Print a Schur polynomial");
  schur->add_option("--lambda", f.lambda, "Partition")->required();
  schur->add_option("--n", f.n, "Number of variables")->required();
  schur->add_option("--construction", f.construction, "bialternant, tableaux or jacobi-trudi");
  add_common(schur, f);

  auto* verify = app.add_subcommand("verify", "Cross-check residue, closed form and localization");
  verify->add_option("--space", f.spaces, "Restrict to a space kind (repeatable)");
  verify->add_option("--n-max", f.n_max, "Largest rank");
  verify->add_option("--weight-max", f.weight_max, "Largest |lambda|");
  verify->add_option("--trials", f.trials, "Seeded points per case, besides (1,...,n)");
  verify->add_flag("--inject-fault", f.inject_fault, "Corrupt one residue value (test mode)");
  add_common(verify, f);

  auto* table = app.add_subcommand("table", "Tabulate push-forwards of Schur classes");
  table->add_option("--space", f.spaces, "Restrict to a space kind (repeatable)");
  table->add_option("--n", f.n, "Single rank");
  table->add_option("--n-max", f.n_max, "Largest rank when --n is absent");
  table->add_option("--weight-min", f.weight_min, "Smallest |lambda|");
  table->add_option("--weight-max", f.weight_max, "Largest |lambda|");
  add_common(table, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : eqpush::kExitUsage;
  }

  eqpush::Request req;
  try {
    req = to_request(f);
  } catch (const eqpush::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return eqpush::kExitUsage;
  }

  if (push->parsed()) return eqpush::cmd_pushforward(req, std::cout);
  if (schur->parsed()) return eqpush::cmd_schur(req, std::cout);
  if (verify->parsed()) return eqpush::cmd_verify(req, std::cout);
  return eqpush::cmd_table(req, std::cout);
}
