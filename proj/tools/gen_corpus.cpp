// gen_corpus: canonical graph6 corpora of connected graphs or trees.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qgiso/error.hpp"
#include "qgiso/generate.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Write all connected graphs or all trees on n vertices as graph6, one per line"};
  std::string kind;
  std::size_t n = 0, jobs = 1;
  std::string out;
  app.add_option("kind", kind, "connected or trees")->required()->check(CLI::IsMember({"connected", "trees"}));
  app.add_option("n", n, "Vertex count")->required()->check(CLI::PositiveNumber);
  app.add_option("--out", out, "Output file (default standard output)");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }
  try {
    auto graphs = kind == "connected" ? qg::connected_graphs(n, jobs) : qg::trees(n);
    std::ofstream file;
    if (!out.empty()) {
      file.open(out);
      if (!file) throw qg::Error("cannot write '" + out + "'");
    }
    std::ostream& os = out.empty() ? std::cout : file;
    for (const auto& g : graphs) os << g << "\n";
    std::cerr << graphs.size() << " graphs\n";
  } catch (const qg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
