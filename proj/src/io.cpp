#include "cfq/io.hpp"

#include <fstream>
#include <sstream>

namespace cfq::io {

namespace {

template <typename T>
T require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

int require_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw InputError(std::string("field '") + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

LatticeSpec parse_lattice(const json& j, std::optional<int> phase_override) {
  const auto type = require<std::string>(j, "type");
  try {
    if (type == "square") {
      int phase = j.contains("checkerboard_phase") ? require_int(j, "checkerboard_phase") : 0;
      if (phase_override) phase = *phase_override;
      return SquareLattice(require_int(j, "width"), require_int(j, "height"), phase);
    }
    if (type == "hex") {
      return HexLattice(require_int(j, "face_columns"), require_int(j, "face_rows"));
    }
  } catch (const LatticeError& e) {
    throw InputError(e.what());
  }
  throw InputError("unknown lattice type '" + type + "'");
}

json lattice_to_json(const LatticeSpec& lattice) {
  json j;
  if (const auto* sq = std::get_if<SquareLattice>(&lattice)) {
    j["type"] = "square";
    j["width"] = sq->width();
    j["height"] = sq->height();
    j["checkerboard_phase"] = sq->checkerboard_phase();
  } else {
    const auto& hex = std::get<HexLattice>(lattice);
    j["type"] = "hex";
    j["face_columns"] = hex.face_columns();
    j["face_rows"] = hex.face_rows();
  }
  return j;
}

Graph lattice_graph(const LatticeSpec& lattice) {
  return std::visit([](const auto& l) { return l.graph(); }, lattice);
}

EncodedOperators encode_lattice(const LatticeSpec& lattice) {
  return std::visit([](const auto& l) { return encode(l); }, lattice);
}

std::string describe(const LatticeSpec& lattice) {
  if (const auto* sq = std::get_if<SquareLattice>(&lattice)) {
    return "square " + std::to_string(sq->width()) + "x" + std::to_string(sq->height()) +
           " phase " + std::to_string(sq->checkerboard_phase());
  }
  const auto& hex = std::get<HexLattice>(lattice);
  return "hex " + std::to_string(hex.face_columns()) + "x" + std::to_string(hex.face_rows());
}

json vertex_to_json(const Vertex& v) { return json::array({v.x, v.y}); }

Vertex vertex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw InputError("site must be an [x, y] integer pair");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

FermionicHamiltonian parse_hamiltonian(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw InputError("hamiltonian needs a 'terms' array");
  }
  FermionicHamiltonian ham;
  for (const auto& t : j["terms"]) {
    const auto kind_name = require<std::string>(t, "kind");
    TermKind kind;
    try {
      kind = term_kind_from_string(kind_name);
    } catch (const HamiltonianError& e) {
      throw InputError(e.what());
    }
    if (!t.contains("coeff") || !t["coeff"].is_number()) throw InputError("term needs a numeric 'coeff'");
    if (!t.contains("i")) throw InputError("term needs site 'i'");
    const Vertex i = vertex_from_json(t["i"]);
    const double c = t["coeff"].get<double>();
    if (kind == TermKind::Number) {
      ham.terms.push_back(FermionicTerm::number(i, c));
      continue;
    }
    if (!t.contains("j")) throw InputError("two-site term needs site 'j'");
    ham.terms.push_back({kind, i, vertex_from_json(t["j"]), c});
  }
  return ham;
}

json hamiltonian_to_json(const FermionicHamiltonian& ham) {
  json terms = json::array();
  for (const auto& t : ham.terms) {
    json jt;
    jt["kind"] = to_string(t.kind);
    jt["i"] = vertex_to_json(t.i);
    if (t.kind != TermKind::Number) jt["j"] = vertex_to_json(t.j);
    jt["coeff"] = t.coeff;
    terms.push_back(jt);
  }
  json j;
  j["format"] = kFormat;
  j["terms"] = terms;
  return j;
}

json pauli_sum_to_json(const PauliSum& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) {
    json jt;
    jt["re"] = t.coeff.real();
    jt["im"] = t.coeff.imag();
    jt["pauli"] = t.word.letters();
    terms.push_back(jt);
  }
  return terms;
}

namespace {

json layout_to_json(const QubitLayout& layout) {
  json qubits = json::array();
  for (const auto& v : layout.vertices) {
    qubits.push_back({{"vertex", vertex_to_json(v)}});
  }
  std::vector<std::pair<std::size_t, Face>> faces;
  for (const auto& [f, q] : layout.face_qubit) faces.emplace_back(q, f);
  std::sort(faces.begin(), faces.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [q, f] : faces) qubits.push_back({{"face", json::array({f.x, f.y})}});
  return qubits;
}

}  // namespace

json compiled_to_json(const CompiledHamiltonian& c) {
  json j;
  j["format"] = kFormat;
  j["encoding"] = to_string(c.encoding);
  j["n_qubits"] = c.pauli_sum.num_qubits();
  j["qubits"] = layout_to_json(c.layout);
  j["terms"] = pauli_sum_to_json(c.pauli_sum);
  return j;
}

json report_to_json(const RelationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["checked"] = c.checked;
    if (!c.passed) jc["counterexamples"] = c.counterexamples;
    checks.push_back(jc);
  }
  json j;
  j["lattice"] = r.lattice;
  j["passed"] = r.all_passed();
  j["checks"] = checks;
  return j;
}

json stats_to_json(const WeightStats& s) {
  json j;
  j["encoding"] = to_string(s.encoding);
  j["modes"] = s.modes;
  j["qubit_total"] = s.qubit_total;
  j["qubit_to_mode_ratio"] = s.qubit_to_mode_ratio;
  j["max_hopping_weight"] = s.max_hopping_weight;
  j["max_coulomb_weight"] = s.max_coulomb_weight;
  j["encoded_space"] = s.encoded_space;
  return j;
}

json spectrum_to_json(const SpectrumReport& s) {
  json mult = json::array();
  for (const auto& [value, count] : s.multiplicities) mult.push_back({value, count});
  json j;
  j["sector"] = to_string(s.sector);
  j["eigenvalues"] = s.eigenvalues;
  j["multiplicities"] = mult;
  return j;
}

json operators_to_json(const EncodedOperators& enc, const std::optional<LogicalQubit>& logical) {
  json j;
  j["format"] = kFormat;
  j["lattice_kind"] = enc.lattice_kind;
  j["n_qubits"] = enc.num_qubits();
  j["qubits"] = layout_to_json(enc.layout);
  json edges;
  for (const auto& e : enc.graph.edges()) edges[to_string(e)] = enc.edge_ops.at(e).str();
  json vertices;
  for (const auto& v : enc.graph.vertices()) vertices[to_string(v)] = enc.vertex(v).str();
  json stabs = json::array();
  for (std::size_t k = 0; k < enc.stabilizers.generators().size(); ++k) {
    json s;
    if (k < enc.stabilizer_faces.size()) s["face"] = to_string(enc.stabilizer_faces[k]);
    s["pauli"] = enc.stabilizers.generators()[k].str();
    stabs.push_back(s);
  }
  j["edges"] = edges;
  j["vertices"] = vertices;
  j["stabilizers"] = stabs;
  if (logical) {
    json l;
    l["site"] = vertex_to_json(logical->site);
    json species = json::array();
    for (const auto& c : logical->species) species.push_back(vertex_to_json(c.corner));
    l["species_corners"] = species;
    l["X"] = logical->x.str();
    l["Y"] = logical->y.str();
    l["Z"] = logical->z.str();
    j["logical"] = l;
  }
  return j;
}

}  // namespace cfq::io
