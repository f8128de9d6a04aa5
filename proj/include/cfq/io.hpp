#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "cfq/encoder.hpp"
#include "cfq/hamiltonian.hpp"
#include "cfq/hex_encoder.hpp"
#include "cfq/oracle.hpp"

namespace cfq::io {

// Insertion-ordered so that output is byte-stable.
using json = nlohmann::ordered_json;

constexpr int kFormat = 1;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using LatticeSpec = std::variant<SquareLattice, HexLattice>;

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// Two-space indent plus trailing newline.
std::string dump(const json& j);

/// `phase_override` replaces the checkerboard phase of a square lattice.
LatticeSpec parse_lattice(const json& j, std::optional<int> phase_override = std::nullopt);
json lattice_to_json(const LatticeSpec& lattice);
Graph lattice_graph(const LatticeSpec& lattice);
EncodedOperators encode_lattice(const LatticeSpec& lattice);
std::string describe(const LatticeSpec& lattice);

FermionicHamiltonian parse_hamiltonian(const json& j);
json hamiltonian_to_json(const FermionicHamiltonian& ham);

json vertex_to_json(const Vertex& v);
Vertex vertex_from_json(const json& j);

json pauli_sum_to_json(const PauliSum& s);
json compiled_to_json(const CompiledHamiltonian& c);
json report_to_json(const RelationReport& r);
json stats_to_json(const WeightStats& s);
json spectrum_to_json(const SpectrumReport& s);
json operators_to_json(const EncodedOperators& enc, const std::optional<LogicalQubit>& logical);

}  // namespace cfq::io
