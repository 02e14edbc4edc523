// Writes the two alpha sweeps (z = 0 Xi-integral corollary, z = 3/4 lambda-series
// integral) as CSV and SVG into the directory given on the command line.

#include <cstdio>
#include <fstream>
#include <string>

#include "../tools/cli/cli_support.hpp"

using namespace koshliakov;

namespace {

void write(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
  std::printf("wrote %s\n", path.c_str());
}

void sweep(const std::string& dir, const std::string& id, cd z, const std::string& stem) {
  cli::SweepConfig cfg;
  cfg.identity_id = id;
  cfg.base.z = z;
  cfg.base.terms = 10;
  auto rows = cli::run_sweep(cfg);
  write(dir + "/" + stem + ".csv", cli::sweep_csv(rows));
  write(dir + "/" + stem + ".svg", cli::sweep_svg(rows, id + ", z = " + cli::format_complex_literal(z, 6)));
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : ".";
  sweep(dir, "rg-corollary", 0.0, "xi_corollary_z0");
  sweep(dir, "hurwitz-corollary", 0.75, "lambda_series_z075");
}
