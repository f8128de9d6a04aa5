#include <gtest/gtest.h>

#include <filesystem>

#include "cfq/io.hpp"
#include "support.hpp"

using namespace cfq;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> golden_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(CFQ_GOLDEN_DIR)) {
    if (e.path().extension() == ".json") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Golden, TwelveFilesPresent) { EXPECT_EQ(golden_files().size(), 12u); }

// Stored eigenvalues must agree with the test-side Fock construction, and the
// compact encoding restricted to its codespace must reproduce them.
TEST(Golden, SpectraMatch) {
  for (const auto& path : golden_files()) {
    SCOPED_TRACE(path.filename().string());
    const auto j = io::read_json_file(path.string());
    const auto lattice = std::get<SquareLattice>(io::parse_lattice(j["lattice"]));
    const auto ham = io::parse_hamiltonian(j["hamiltonian"]);
    const auto stored = j["eigenvalues"].get<std::vector<double>>();
    const Graph g = lattice.graph();

    const auto h = cfq::testing::fock_hamiltonian(ham, g.num_vertices(),
                                                  [&](const Vertex& v) { return g.index_of(v); });
    const bool even = j["reference_sector"] == "even-parity";
    const auto fock = cfq::testing::eigenvalues(even ? cfq::testing::even_block(h) : h);
    EXPECT_LE(cfq::testing::max_gap(stored, fock), 1e-10);

    const auto enc = encode(lattice);
    const auto got = encoded_spectrum(ham, enc);
    const auto expect = j["encoded_relation"] == "doubled" ? doubled(stored) : stored;
    EXPECT_LE(cfq::testing::max_gap(got.eigenvalues, expect), 1e-10);
  }
}
