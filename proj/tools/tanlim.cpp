#include <iostream>

#include "CLI11.hpp"
#include "tanlim/cli.hpp"

int main(int argc, char** argv) {
  using namespace tanlim::cli;
  CLI::App app{"Limits of tangents to surface singularities"};
  app.require_subcommand(1);

  Request req;
  std::string point, divisor;
  for (const auto& name : commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("surface", req.surface, "polynomial in x, y, z")->required();
    sub->add_option("--point", point, "base point a,b,c (default origin)");
    sub->add_option("--divisor", divisor, "coordinate planes of the divisor, e.g. x or xy");
    sub->add_option("--max-depth", req.max_depth, "blow-up depth bound")->check(CLI::PositiveNumber);
    sub->add_flag("--json", req.json, "JSON output");
    sub->add_flag("--verbose", req.verbose, "print the trace");
    sub->callback([&req, name] { req.command = name; });
  }
  CLI11_PARSE(app, argc, argv);

  Response res;
  try {
    if (!point.empty()) req.point = parse_point(point);
    req.divisor = parse_divisor(divisor);
    res = run(req);
  } catch (const std::exception& e) {
    res = {1, "", std::string("error: ") + e.what() + "\n"};
  }
  std::cout << res.out;
  std::cerr << res.err;
  return res.status;
}
