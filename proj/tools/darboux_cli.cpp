#include <iostream>

#include "CLI11.hpp"
#include "darboux/cli.hpp"

int main(int argc, char** argv) {
  using darboux::OutputFormat;
  CLI::App app{"Exact Darboux normal forms and structure checks"};
  app.require_subcommand(1);
  darboux::CliOptions opts;
  std::string format = "machine";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Run every structure checker on a linear spec");
  classify->add_option("file", opts.path)->required();
  auto* nf = app.add_subcommand("normalform", "Compute a certified Darboux frame");
  nf->add_option("file", opts.path)->required();
  nf->add_option("--seed", opts.seed, "Scramble the input by a random invertible matrix first");
  auto* chart = app.add_subcommand("chart-check", "Closedness, rank profile and involutivity on a chart");
  chart->add_option("file", opts.path)->required();
  chart->add_option("--points", opts.points, "Sample points, e.g. \"0,0;1,1/2\"");
  auto* conn = app.add_subcommand("connection-check", "Torsion, curvature and parallel forms");
  conn->add_option("file", opts.path)->required();
  auto* corpus = app.add_subcommand("corpus", "Run the embedded example suite");
  corpus->add_option("--filter", opts.filter, "Substring of example names");
  for (auto* sc : {classify, nf, chart, conn, corpus}) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opts.command = app.get_subcommands().front()->get_name();
  opts.format = format == "human" ? OutputFormat::human : OutputFormat::machine;

  const darboux::CliResult result = darboux::run(opts);
  std::cout << darboux::render(result, opts.format);
  return result.exit_code;
}
