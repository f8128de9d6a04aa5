// cfq: compile fermionic lattice Hamiltonians to Pauli sums and check the
// compact encoding against brute force.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include "cfq/encoder.hpp"
#include "cfq/hamiltonian.hpp"
#include "cfq/hex_encoder.hpp"
#include "cfq/io.hpp"
#include "cfq/jordan_wigner.hpp"
#include "cfq/oracle.hpp"

namespace {

using namespace cfq;
using io::json;

constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;
constexpr int kExitSizeCap = 3;

struct RunConfig {
  std::string command;
  std::string lattice_path;
  std::string hamiltonian_path;
  std::string encoding = "compact";
  std::string output;
  double tol = 1e-10;
  std::optional<int> phase;
};

void emit(const RunConfig& cfg, const json& j) {
  const std::string text = io::dump(j);
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    io::write_text_file(cfg.output, text);
  }
}

EncodedOperators encoding_for(const io::LatticeSpec& lattice, EncodingKind kind) {
  if (kind == EncodingKind::Compact) return io::encode_lattice(lattice);
  if (const auto* sq = std::get_if<SquareLattice>(&lattice)) return jw_encode(*sq);
  return jw_encode(io::lattice_graph(lattice), ModeOrder::row_major(io::lattice_graph(lattice)));
}

std::vector<EncodingKind> requested(const std::string& encoding) {
  if (encoding == "both") return {EncodingKind::Compact, EncodingKind::JordanWigner};
  return {encoding_from_string(encoding)};
}

FermionicHamiltonian hamiltonian_or_hubbard(const RunConfig& cfg, const Graph& graph) {
  if (cfg.hamiltonian_path.empty()) return hubbard(graph, 1.0, 2.0);
  return io::parse_hamiltonian(io::read_json_file(cfg.hamiltonian_path));
}

int run_compile(const RunConfig& cfg, const io::LatticeSpec& lattice) {
  if (cfg.hamiltonian_path.empty()) throw io::InputError("compile needs --hamiltonian");
  if (cfg.encoding == "both") throw io::InputError("compile takes a single --encoding");
  const auto kind = encoding_from_string(cfg.encoding);
  const auto ham = io::parse_hamiltonian(io::read_json_file(cfg.hamiltonian_path));
  const auto enc = encoding_for(lattice, kind);
  emit(cfg, io::compiled_to_json(compile_hamiltonian(ham, enc, kind)));
  return 0;
}

int run_verify(const RunConfig& cfg, const io::LatticeSpec& lattice) {
  const RelationReport relations = std::visit(
      [](const auto& l) { return verify_relations(l); }, lattice);
  bool passed = relations.all_passed();

  json j;
  j["format"] = io::kFormat;
  j["lattice"] = io::lattice_to_json(lattice);
  j["relations"] = io::report_to_json(relations);

  const EncodedOperators enc = io::encode_lattice(lattice);
  json oracle;
  if (enc.num_qubits() > kMaxOracleQubits) {
    oracle["skipped"] = "more than " + std::to_string(kMaxOracleQubits) + " qubits";
  } else {
    std::size_t expected_log = enc.num_modes();
    if (const auto* sq = std::get_if<SquareLattice>(&lattice)) {
      const CaseInfo info = sq->classify();
      expected_log = static_cast<std::size_t>(info.modes + info.odd_faces - info.even_faces);
    }
    const GroundspaceReport ground = groundspace_check(enc, cfg.tol);
    const bool rank_ok = ground.codespace_rank == (std::size_t{1} << expected_log);
    oracle["codespace_rank"] = ground.codespace_rank;
    oracle["expected_rank"] = std::size_t{1} << expected_log;
    oracle["rank_formula_passed"] = rank_ok;
    oracle["ground_energy"] = ground.ground_energy;
    oracle["ground_dimension"] = ground.ground_dimension;
    oracle["groundspace_passed"] = ground.passed;
    passed = passed && rank_ok && ground.passed;
    if (enc.num_modes() <= kMaxOracleModes) {
      const auto ham = hamiltonian_or_hubbard(cfg, enc.graph);
      const SpectrumComparison cmp = compare_spectra(ham, enc);
      const bool ok = cmp.max_discrepancy <= cfg.tol;
      oracle["spectrum_sector"] = to_string(cmp.encoded.sector);
      oracle["spectrum_max_discrepancy"] = cmp.max_discrepancy;
      oracle["spectrum_passed"] = ok;
      passed = passed && ok;
    } else {
      oracle["spectrum_skipped"] = "more than " + std::to_string(kMaxOracleModes) + " modes";
    }
  }
  j["oracle"] = oracle;
  j["passed"] = passed;
  emit(cfg, j);
  if (!passed) {
    std::cerr << "verification failed for " << io::describe(lattice) << "\n";
    return kExitVerification;
  }
  return 0;
}

int run_stats(const RunConfig& cfg, const io::LatticeSpec& lattice) {
  json j;
  j["format"] = io::kFormat;
  j["lattice"] = io::lattice_to_json(lattice);
  json stats = json::array();
  for (const auto kind : requested(cfg.encoding)) {
    if (const auto* sq = std::get_if<SquareLattice>(&lattice)) {
      json s = io::stats_to_json(weight_stats(*sq, kind));
      if (kind == EncodingKind::Compact) {
        // Table-style numbers for both checkerboard phases of this size.
        json by_phase = json::array();
        for (int phase : {0, 1}) {
          const SquareLattice other(sq->width(), sq->height(), phase);
          json p = io::stats_to_json(weight_stats(other, kind));
          p["checkerboard_phase"] = phase;
          p["case"] = to_string(other.classify().tag);
          by_phase.push_back(p);
        }
        s["by_phase"] = by_phase;
      }
      stats.push_back(s);
    } else {
      stats.push_back(io::stats_to_json(weight_stats(encoding_for(lattice, kind), kind, "Full")));
    }
  }
  j["stats"] = stats;
  emit(cfg, j);
  return 0;
}

int run_spectrum(const RunConfig& cfg, const io::LatticeSpec& lattice) {
  if (cfg.encoding == "both") throw io::InputError("spectrum takes a single --encoding");
  const auto enc = encoding_for(lattice, encoding_from_string(cfg.encoding));
  if (enc.num_qubits() > kMaxOracleQubits) {
    throw SizeCapError(std::to_string(enc.num_qubits()) + " qubits exceeds the oracle cap of " +
                       std::to_string(kMaxOracleQubits));
  }
  const auto ham = hamiltonian_or_hubbard(cfg, enc.graph);
  const SpectrumComparison cmp = compare_spectra(ham, enc);
  json j;
  j["format"] = io::kFormat;
  j["lattice"] = io::lattice_to_json(lattice);
  j["encoding"] = cfg.encoding;
  j["encoded"] = io::spectrum_to_json(cmp.encoded);
  j["reference"] = io::spectrum_to_json(cmp.reference);
  j["max_discrepancy"] = cmp.max_discrepancy;
  j["passed"] = cmp.max_discrepancy <= cfg.tol;
  emit(cfg, j);
  if (cmp.max_discrepancy > cfg.tol) {
    std::cerr << "spectra differ by " << cmp.max_discrepancy << "\n";
    return kExitVerification;
  }
  return 0;
}

int run_dump(const RunConfig& cfg, const io::LatticeSpec& lattice) {
  if (cfg.encoding == "both") throw io::InputError("dump-operators takes a single --encoding");
  const auto kind = encoding_from_string(cfg.encoding);
  const auto enc = encoding_for(lattice, kind);
  std::optional<LogicalQubit> logical;
  const auto* sq = std::get_if<SquareLattice>(&lattice);
  if (kind == EncodingKind::Compact && sq && sq->classify().tag == LatticeCase::III) {
    logical = logical_paulis(*sq, enc);
  }
  emit(cfg, io::operators_to_json(enc, logical));
  return 0;
}

int run(const RunConfig& cfg) {
  const auto lattice = io::parse_lattice(io::read_json_file(cfg.lattice_path), cfg.phase);
  if (cfg.command == "compile") return run_compile(cfg, lattice);
  if (cfg.command == "verify") return run_verify(cfg, lattice);
  if (cfg.command == "stats") return run_stats(cfg, lattice);
  if (cfg.command == "spectrum") return run_spectrum(cfg, lattice);
  return run_dump(cfg, lattice);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compact fermion-to-qubit encoder"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::pair<const char*, const char*> commands[] = {
      {"compile", "Compile a fermionic Hamiltonian to a Pauli sum"},
      {"verify", "Check operator relations and, when small enough, the exact oracle"},
      {"stats", "Qubit counts and maximum Pauli weights"},
      {"spectrum", "Compare encoded and fermionic spectra"},
      {"dump-operators", "Write every encoded edge, vertex, stabilizer and logical operator"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--lattice", cfg.lattice_path, "Lattice JSON")->required();
    sub->add_option("--hamiltonian", cfg.hamiltonian_path, "Hamiltonian JSON");
    sub->add_option("--encoding", cfg.encoding, "compact, jw or both")
        ->check(CLI::IsMember({"compact", "jw", "both"}));
    sub->add_option("-o,--output", cfg.output, "Output path (default stdout)");
    sub->add_option("--tol", cfg.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--checkerboard-phase", cfg.phase, "Override the lattice phase")
        ->check(CLI::IsMember({0, 1}));
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    return run(cfg);
  } catch (const SizeCapError& e) {
    std::cerr << "size cap exceeded: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
