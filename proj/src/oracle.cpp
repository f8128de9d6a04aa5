#include "cfq/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <array>
#include <set>

#include "cfq/jordan_wigner.hpp"

namespace cfq {

namespace {

using cd = std::complex<double>;
const cd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// P|b> = amplitude(b) |b ^ flip>.
struct BasisAction {
  std::uint64_t flip;
  std::uint64_t zmask;
  int base;  // phase exponent before the Z signs

  explicit BasisAction(const PauliString& p)
      : flip(p.x_mask()),
        zmask(p.z_mask()),
        base((p.phase() + std::popcount(p.x_mask() & p.z_mask())) % 4) {}

  cd amplitude(std::uint64_t b) const {
    const int sign = std::popcount(zmask & b) & 1;
    return kIPow[(base + 2 * sign) % 4];
  }
};

void require_cap(std::size_t n_qubits) {
  if (n_qubits > kMaxOracleQubits) {
    throw SizeCapError("dense oracle is capped at " + std::to_string(kMaxOracleQubits) +
                       " qubits, got " + std::to_string(n_qubits));
  }
}

std::vector<double> hermitian_eigenvalues(const DenseOperator& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

using SparseColumn = std::vector<std::pair<std::uint64_t, cd>>;

std::vector<BasisAction> group_elements(const StabilizerGroup& stabs) {
  const auto& gens = stabs.generators();
  if (gens.size() > 20) throw SizeCapError("too many stabilizer generators to enumerate");
  std::vector<BasisAction> out;
  const std::uint64_t count = std::uint64_t{1} << gens.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    PauliString s(stabs.num_qubits());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if ((mask >> k) & 1u) s *= gens[k];
    }
    out.emplace_back(s);
  }
  return out;
}

std::vector<SparseColumn> codespace_columns(const StabilizerGroup& stabs) {
  require_cap(stabs.num_qubits());
  const std::uint64_t dim = std::uint64_t{1} << stabs.num_qubits();
  const auto elements = group_elements(stabs);
  std::vector<bool> visited(dim, false);
  std::vector<cd> acc(dim, 0.0);
  std::vector<SparseColumn> columns;
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (visited[b]) continue;
    std::vector<std::uint64_t> touched;
    for (const auto& s : elements) {
      const std::uint64_t t = b ^ s.flip;
      if (!visited[t]) {
        visited[t] = true;
        touched.push_back(t);
      }
      acc[t] += s.amplitude(b);
    }
    double norm2 = 0.0;
    for (auto t : touched) norm2 += std::norm(acc[t]);
    if (norm2 > 1e-18) {
      const double inv = 1.0 / std::sqrt(norm2);
      SparseColumn col;
      for (auto t : touched) {
        if (std::abs(acc[t]) > 1e-15) col.emplace_back(t, acc[t] * inv);
      }
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      columns.push_back(std::move(col));
    }
    for (auto t : touched) acc[t] = 0.0;
  }
  return columns;
}

}  // namespace

DenseOperator to_matrix(const PauliString& p) {
  require_cap(p.num_qubits());
  const std::uint64_t dim = std::uint64_t{1} << p.num_qubits();
  DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  const BasisAction a(p);
  for (std::uint64_t b = 0; b < dim; ++b) {
    m(static_cast<Eigen::Index>(b ^ a.flip), static_cast<Eigen::Index>(b)) = a.amplitude(b);
  }
  return m;
}

DenseOperator to_matrix(const PauliSum& s) {
  require_cap(s.num_qubits());
  const std::uint64_t dim = std::uint64_t{1} << s.num_qubits();
  DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  for (const auto& t : s.terms()) {
    const BasisAction a(t.word);
    for (std::uint64_t b = 0; b < dim; ++b) {
      m(static_cast<Eigen::Index>(b ^ a.flip), static_cast<Eigen::Index>(b)) +=
          t.coeff * a.amplitude(b);
    }
  }
  return m;
}

void apply_left(const PauliString& p, DenseOperator& m) {
  require_cap(p.num_qubits());
  const BasisAction a(p);
  DenseOperator out(m.rows(), m.cols());
  for (Eigen::Index b = 0; b < m.rows(); ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    out.row(static_cast<Eigen::Index>(ub ^ a.flip)) = a.amplitude(ub) * m.row(b);
  }
  m = std::move(out);
}

DenseOperator codespace_projector(const StabilizerGroup& stabs) {
  require_cap(stabs.num_qubits());
  const auto& gens = stabs.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (!commutes(gens[a], gens[b])) throw StabilizerError("generators do not commute");
    }
  }
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << stabs.num_qubits());
  DenseOperator p = DenseOperator::Identity(dim, dim);
  for (const auto& g : gens) {
    DenseOperator gp = p;
    apply_left(g, gp);
    p = 0.5 * (p + gp);
  }
  return p;
}

// Eigenvalues block by block: basis states linked by a nonzero entry form a
// block, and a permutation similarity does not move the spectrum.
std::size_t projector_rank(const DenseOperator& projector) {
  const Eigen::Index dim = projector.rows();
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(dim));
  for (Eigen::Index k = 0; k < dim; ++k) parent[k] = k;
  auto root = [&](Eigen::Index k) {
    while (parent[k] != k) k = parent[k] = parent[parent[k]];
    return k;
  };
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (projector(r, c) != cd(0)) parent[root(r)] = root(c);
    }
  }
  std::map<Eigen::Index, std::vector<Eigen::Index>> blocks;
  for (Eigen::Index k = 0; k < dim; ++k) blocks[root(k)].push_back(k);
  std::size_t rank = 0;
  for (const auto& [_, idx] : blocks) {
    const auto n = static_cast<Eigen::Index>(idx.size());
    DenseOperator block(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) block(r, c) = projector(idx[r], idx[c]);
    const auto ev = hermitian_eigenvalues(block);
    rank += static_cast<std::size_t>(std::count_if(ev.begin(), ev.end(), [](double x) { return x > 0.5; }));
  }
  return rank;
}

DenseOperator codespace_basis(const StabilizerGroup& stabs) {
  const auto columns = codespace_columns(stabs);
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << stabs.num_qubits());
  DenseOperator q = DenseOperator::Zero(dim, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [idx, amp] : columns[c]) {
      q(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(c)) = amp;
    }
  }
  return q;
}

std::string to_string(Sector s) {
  switch (s) {
    case Sector::Full: return "full";
    case Sector::EvenParity: return "even-parity";
    case Sector::Doubled: return "doubled";
  }
  return "?";
}

std::vector<std::pair<double, std::size_t>> cluster(const std::vector<double>& sorted,
                                                    double tol) {
  std::vector<std::pair<double, std::size_t>> out;
  for (double x : sorted) {
    if (!out.empty() && std::abs(x - out.back().first) <= tol) {
      ++out.back().second;
    } else {
      out.emplace_back(x, 1);
    }
  }
  return out;
}

std::vector<double> pauli_sum_eigenvalues(const PauliSum& h) {
  require_cap(h.num_qubits());
  const std::uint64_t dim = std::uint64_t{1} << h.num_qubits();
  std::vector<BasisAction> actions;
  std::vector<cd> coeffs;
  std::uint64_t free = 0;
  for (const auto& t : h.terms()) {
    actions.emplace_back(t.word);
    coeffs.push_back(t.coeff);
    free |= actions.back().flip;
  }
  const std::uint64_t fixed = (dim - 1) & ~free;
  const auto block = static_cast<Eigen::Index>(std::uint64_t{1} << std::popcount(free));

  std::vector<std::uint32_t> local(dim, 0);
  std::vector<double> eigenvalues;
  eigenvalues.reserve(dim);
  std::vector<std::uint64_t> states;
  // Enumerate every assignment of the fixed bits, then every free pattern.
  std::uint64_t key = 0;
  do {
    states.clear();
    std::uint64_t sub = 0;
    do {
      local[key | sub] = static_cast<std::uint32_t>(states.size());
      states.push_back(key | sub);
      sub = (sub - free) & free;
    } while (sub != 0);
    DenseOperator m = DenseOperator::Zero(block, block);
    for (std::size_t k = 0; k < actions.size(); ++k) {
      for (std::size_t c = 0; c < states.size(); ++c) {
        const std::uint64_t b = states[c];
        m(local[b ^ actions[k].flip], static_cast<Eigen::Index>(c)) +=
            coeffs[k] * actions[k].amplitude(b);
      }
    }
    const auto ev = hermitian_eigenvalues(m);
    eigenvalues.insert(eigenvalues.end(), ev.begin(), ev.end());
    key = (key - fixed) & fixed;
  } while (key != 0);
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

SpectrumReport fermionic_spectrum(const FermionicHamiltonian& ham, const Graph& graph,
                                  Sector sector) {
  const std::size_t m = graph.num_vertices();
  if (m > kMaxOracleModes) {
    throw SizeCapError("fermionic oracle is capped at " + std::to_string(kMaxOracleModes) +
                       " modes, got " + std::to_string(m));
  }
  if (sector == Sector::Doubled) throw std::invalid_argument("doubled is not a fermionic sector");
  ham.validate(graph);
  const ModeOrder order = ModeOrder::row_major(graph);
  auto create = [&](const Vertex& v) { return jw_ladder(m, order.mode(v), true); };
  auto annihilate = [&](const Vertex& v) { return jw_ladder(m, order.mode(v), false); };
  auto number = [&](const Vertex& v) { return create(v) * annihilate(v); };

  PauliSum h(m);
  for (const auto& t : ham.terms) {
    switch (t.kind) {
      case TermKind::Hopping:
        h += (create(t.i) * annihilate(t.j) + create(t.j) * annihilate(t.i)) * t.coeff;
        break;
      case TermKind::Coulomb:
        h += number(t.i) * number(t.j) * t.coeff;
        break;
      case TermKind::Number:
        h += number(t.i) * t.coeff;
        break;
    }
  }
  const DenseOperator full = to_matrix(simplify(h));

  SpectrumReport report;
  report.sector = sector;
  if (sector == Sector::Full) {
    report.eigenvalues = hermitian_eigenvalues(full);
  } else {
    std::vector<Eigen::Index> even;
    for (Eigen::Index b = 0; b < full.rows(); ++b) {
      if (std::popcount(static_cast<std::uint64_t>(b)) % 2 == 0) even.push_back(b);
    }
    const auto k = static_cast<Eigen::Index>(even.size());
    DenseOperator sub(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = full(even[r], even[c]);
    report.eigenvalues = hermitian_eigenvalues(sub);
  }
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end());
  report.multiplicities = cluster(report.eigenvalues);
  return report;
}

SpectrumReport encoded_spectrum(const FermionicHamiltonian& ham, const EncodedOperators& enc) {
  require_cap(enc.num_qubits());
  const PauliSum h = compile_hamiltonian(ham, enc, EncodingKind::Compact).pauli_sum;
  const auto columns = codespace_columns(enc.stabilizers);
  const std::uint64_t dim = std::uint64_t{1} << enc.num_qubits();
  const auto r = static_cast<Eigen::Index>(columns.size());

  std::vector<BasisAction> actions;
  for (const auto& t : h.terms()) actions.emplace_back(t.word);

  DenseOperator code = DenseOperator::Zero(r, r);
  std::vector<cd> hq(dim, 0.0);
  for (Eigen::Index c = 0; c < r; ++c) {
    std::vector<std::uint64_t> touched;
    for (std::size_t k = 0; k < actions.size(); ++k) {
      const cd coeff = h.terms()[k].coeff;
      for (const auto& [idx, amp] : columns[static_cast<std::size_t>(c)]) {
        const std::uint64_t t = idx ^ actions[k].flip;
        if (hq[t] == cd(0.0)) touched.push_back(t);
        hq[t] += coeff * actions[k].amplitude(idx) * amp;
      }
    }
    for (Eigen::Index a = 0; a < r; ++a) {
      cd sum = 0.0;
      for (const auto& [idx, amp] : columns[static_cast<std::size_t>(a)]) {
        sum += std::conj(amp) * hq[idx];
      }
      code(a, c) = sum;
    }
    for (auto t : touched) hq[t] = 0.0;
  }

  SpectrumReport report;
  report.eigenvalues = hermitian_eigenvalues(code);
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end());
  report.multiplicities = cluster(report.eigenvalues);
  const std::uint64_t fock = std::uint64_t{1} << enc.num_modes();
  const auto rank = static_cast<std::uint64_t>(r);
  if (rank == fock) {
    report.sector = Sector::Full;
  } else if (2 * rank == fock) {
    report.sector = Sector::EvenParity;
  } else if (rank == 2 * fock) {
    report.sector = Sector::Doubled;
  } else {
    throw EncodingError("codespace dimension " + std::to_string(rank) +
                        " does not match any fermionic sector");
  }
  return report;
}

double spectrum_discrepancy(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<double> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double worst = 0.0;
  for (std::size_t k = 0; k < sa.size(); ++k) worst = std::max(worst, std::abs(sa[k] - sb[k]));
  return worst;
}

std::vector<double> doubled(const std::vector<double>& values) {
  std::vector<double> out;
  out.reserve(2 * values.size());
  for (double v : values) {
    out.push_back(v);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpectrumComparison compare_spectra(const FermionicHamiltonian& ham, const EncodedOperators& enc) {
  SpectrumComparison cmp;
  cmp.encoded = encoded_spectrum(ham, enc);
  const Sector ref_sector =
      cmp.encoded.sector == Sector::EvenParity ? Sector::EvenParity : Sector::Full;
  cmp.reference = fermionic_spectrum(ham, enc.graph, ref_sector);
  if (cmp.encoded.sector == Sector::Doubled) {
    cmp.max_discrepancy =
        spectrum_discrepancy(cmp.encoded.eigenvalues, doubled(cmp.reference.eigenvalues));
    // Every encoded multiplicity must split evenly into the reference one.
    for (const auto& [value, mult] : cmp.encoded.multiplicities) {
      if (mult % 2 != 0) cmp.max_discrepancy = std::numeric_limits<double>::infinity();
    }
  } else {
    cmp.max_discrepancy = spectrum_discrepancy(cmp.encoded.eigenvalues, cmp.reference.eigenvalues);
  }
  return cmp;
}

// ---------------------------------------------------------------------------

void CheckResult::record(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  passed = false;
  if (counterexamples.size() < 5) counterexamples.push_back(what);
}

bool RelationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const CheckResult* RelationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::string label(const DirectedEdge& e, const PauliString& op) {
  return "E" + to_string(e) + "=" + op.str();
}

std::string label(const Vertex& v, const PauliString& op) {
  return "V" + to_string(v) + "=" + op.str();
}

// A single Majorana at `site`: anticommutes with V_site and the incident
// edges, commutes with every other edge/vertex operator and stabilizer.
void check_majorana_like(const EncodedOperators& enc, const Vertex& site,
                         const PauliString& op, const std::string& name, CheckResult& check,
                         bool hermitian = true) {
  const std::string who = name + "@" + to_string(site) + "=" + op.str();
  // gamma * prod(V) anticommutes with its own V, so holes are anti-hermitian.
  check.record(op.is_hermitian() == hermitian, who + (hermitian ? " not hermitian" : " hermitian"));
  for (const auto& v : enc.graph.vertices()) {
    const bool expect_anti = v == site;
    check.record(anticommutes(op, enc.vertex(v)) == expect_anti,
                 who + " vs " + label(v, enc.vertex(v)));
  }
  for (const auto& [e, eop] : enc.edge_ops) {
    const bool expect_anti = e.touches(site);
    check.record(anticommutes(op, eop) == expect_anti, who + " vs " + label(e, eop));
  }
  for (const auto& g : enc.stabilizers.generators()) {
    check.record(commutes(op, g), who + " vs stabilizer " + g.str());
  }
}

std::vector<Vertex> vertical_first_path(const Vertex& from, const Vertex& to) {
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur.y != to.y) {
    cur.y += to.y > cur.y ? 1 : -1;
    path.push_back(cur);
  }
  while (cur.x != to.x) {
    cur.x += to.x > cur.x ? 1 : -1;
    path.push_back(cur);
  }
  return path;
}

// Boundary of a w x h block of faces with top-left face (fx, fy), clockwise.
std::vector<Vertex> block_boundary(int fx, int fy, int w, int h) {
  std::vector<Vertex> cyc;
  for (int x = fx; x < fx + w; ++x) cyc.push_back({x, fy});
  for (int y = fy; y < fy + h; ++y) cyc.push_back({fx + w, y});
  for (int x = fx + w; x > fx; --x) cyc.push_back({x, fy + h});
  for (int y = fy + h; y > fy; --y) cyc.push_back({fx, y});
  return cyc;
}

}  // namespace

void verify_common(const EncodedOperators& enc, RelationReport& report) {
  const auto& vertices = enc.graph.vertices();
  const auto& edges = enc.graph.edges();

  CheckResult hermitian{"operators_hermitian"};
  for (const auto& [e, op] : enc.edge_ops) hermitian.record(op.is_hermitian(), label(e, op));
  for (const auto& v : vertices) hermitian.record(enc.vertex(v).is_hermitian(), label(v, enc.vertex(v)));
  report.checks.push_back(hermitian);

  CheckResult antisym{"edge_antisymmetry"};
  for (const auto& e : edges) {
    antisym.record(enc.edge(e.head, e.tail) == -enc.edge(e.tail, e.head), to_string(e));
  }
  report.checks.push_back(antisym);

  CheckResult ev{"edge_vertex_relations"};
  for (const auto& e : edges) {
    const PauliString& eop = enc.edge_ops.at(e);
    for (const auto& v : vertices) {
      const bool expect_anti = e.touches(v);
      ev.record(anticommutes(eop, enc.vertex(v)) == expect_anti,
                label(e, eop) + (expect_anti ? " should anticommute with " : " should commute with ") +
                    label(v, enc.vertex(v)));
    }
  }
  report.checks.push_back(ev);

  CheckResult ee{"edge_edge_relations"};
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const bool expect_anti = edges[a].shares_vertex(edges[b]);
      const auto& oa = enc.edge_ops.at(edges[a]);
      const auto& ob = enc.edge_ops.at(edges[b]);
      ee.record(anticommutes(oa, ob) == expect_anti,
                label(edges[a], oa) + (expect_anti ? " should anticommute with " : " should commute with ") +
                    label(edges[b], ob));
    }
  }
  report.checks.push_back(ee);

  CheckResult vv{"vertex_vertex_commute"};
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      vv.record(commutes(enc.vertex_ops[a], enc.vertex_ops[b]),
                label(vertices[a], enc.vertex_ops[a]) + " vs " + label(vertices[b], enc.vertex_ops[b]));
    }
  }
  report.checks.push_back(vv);

  CheckResult stab{"stabilizers_commute_with_operators"};
  const auto& gens = enc.stabilizers.generators();
  for (const auto& g : gens) {
    for (const auto& [e, op] : enc.edge_ops) stab.record(commutes(g, op), g.str() + " vs " + label(e, op));
    for (const auto& v : vertices) stab.record(commutes(g, enc.vertex(v)), g.str() + " vs " + label(v, enc.vertex(v)));
  }
  report.checks.push_back(stab);

  CheckResult indep{"stabilizer_generators_independent"};
  indep.record(enc.stabilizers.independent(),
               std::to_string(enc.stabilizers.n_nontrivial()) + " independent of " +
                   std::to_string(gens.size()));
  report.checks.push_back(indep);
}

RelationReport verify_relations(const SquareLattice& lattice, const SignConvention& signs) {
  const EncodedOperators enc = encode(lattice, signs);
  const CaseInfo info = lattice.classify();
  RelationReport report;
  report.lattice = "square " + std::to_string(lattice.width()) + "x" +
                   std::to_string(lattice.height()) + " phase " +
                   std::to_string(lattice.checkerboard_phase()) + " case " + to_string(info.tag);
  verify_common(enc, report);

  CheckResult odd{"odd_face_loops_identity"};
  CheckResult even{"even_face_loops_are_generators"};
  for (const Face& f : lattice.faces()) {
    const auto corners = lattice.corners_of(f);
    const PauliString loop = loop_operator(enc, corners);
    if (lattice.is_odd(f)) {
      odd.record(loop.is_identity(), to_string(f) + " loop=" + loop.str());
    } else {
      const std::vector<Vertex> reversed(corners.rbegin(), corners.rend());
      const std::vector<Vertex> rotated{corners[2], corners[3], corners[0], corners[1]};
      const bool ok = enc.stabilizers.contains(loop) && loop.weight() > 0 &&
                      loop_operator(enc, reversed) == loop && loop_operator(enc, rotated) == loop;
      even.record(ok, to_string(f) + " loop=" + loop.str());
    }
  }
  report.checks.push_back(odd);
  report.checks.push_back(even);

  CheckResult larger{"larger_loops_in_stabilizer_group"};
  for (int h = 1; h <= 2; ++h) {
    for (int w = 1; w <= 2; ++w) {
      if (w * h == 1) continue;
      for (int fy = 0; fy + h < lattice.height(); ++fy) {
        for (int fx = 0; fx + w < lattice.width(); ++fx) {
          const auto cyc = block_boundary(fx, fy, w, h);
          const PauliString loop = loop_operator(enc, cyc);
          larger.record(enc.stabilizers.contains(loop),
                        std::to_string(cyc.size()) + "-cycle at " + to_string(Face{fx, fy}) +
                            " loop=" + loop.str());
        }
      }
    }
  }
  report.checks.push_back(larger);

  CheckResult count{"stabilizer_count_matches_even_faces"};
  count.record(enc.stabilizers.n_nontrivial() == static_cast<std::size_t>(info.even_faces),
               std::to_string(enc.stabilizers.n_nontrivial()) + " generators vs " +
                   std::to_string(info.even_faces) + " even faces");
  report.checks.push_back(count);

  CheckResult dim{"codespace_dimension"};
  const long log_dim = static_cast<long>(enc.num_qubits()) - static_cast<long>(enc.stabilizers.n_nontrivial());
  dim.record(log_dim == info.modes + info.odd_faces - info.even_faces,
             "log2 dim " + std::to_string(log_dim));
  report.checks.push_back(dim);

  const auto corners = majorana_corners(enc);
  CheckResult corner_count{"majorana_corner_count"};
  const std::size_t expected_corners =
      info.tag == LatticeCase::I ? 2 : (info.tag == LatticeCase::II ? 0 : 4);
  corner_count.record(corners.size() == expected_corners,
                      std::to_string(corners.size()) + " corners, expected " +
                          std::to_string(expected_corners));
  for (const auto& c : corners) corner_count.record(lattice.is_corner(c.corner), to_string(c.corner));
  report.checks.push_back(corner_count);

  if (info.tag == LatticeCase::II) {
    CheckResult parity{"parity_in_stabilizer_group"};
    parity.record(enc.stabilizers.contains(enc.parity()), "prod V = " + enc.parity().str());
    report.checks.push_back(parity);
    return report;
  }

  CheckResult majorana{"majorana_contract"};
  for (const auto& c : corners) check_majorana_like(enc, c.corner, c.op, "gamma", majorana);
  report.checks.push_back(majorana);

  const CornerMajorana gamma = corners.front();
  CheckResult hole{"hole_contract"};
  CheckResult independence{"transport_path_independence"};
  for (const auto& v : enc.graph.vertices()) {
    const auto path = staircase_path(gamma.corner, v);
    check_majorana_like(enc, v, hole_operator(enc, gamma, path), "hole", hole, false);
    const PauliString a = transport(enc, gamma.op, path);
    const PauliString b = transport(enc, gamma.op, vertical_first_path(gamma.corner, v));
    independence.record(enc.stabilizers.contains(a * b.inverse()),
                        "paths to " + to_string(v) + " give " + a.str() + " and " + b.str());
  }
  report.checks.push_back(hole);
  report.checks.push_back(independence);

  if (info.tag == LatticeCase::I) {
    // The local operator at the other corner is the hole (of gamma or
    // gamma-bar) at that corner, up to phase and stabilizers.
    CheckResult other{"second_corner_is_hole"};
    const CornerMajorana& second = corners.back();
    const auto path = staircase_path(gamma.corner, second.corner);
    const PauliString h = hole_operator(enc, gamma, path);
    const PauliString ratio = second.op * h.inverse();
    other.record(enc.stabilizers.contains_up_to_phase(ratio) ||
                     enc.stabilizers.contains_up_to_phase(ratio * enc.vertex(second.corner)),
                 second.op.str() + " vs hole " + h.str());
    report.checks.push_back(other);
    return report;
  }

  // Case III.
  const LogicalQubit lq = logical_paulis(lattice, enc);
  CheckResult logical{"logical_qubit_contract"};
  const std::pair<const char*, const PauliString*> named[] = {{"X", &lq.x}, {"Y", &lq.y}, {"Z", &lq.z}};
  for (const auto& [name, op] : named) {
    logical.record(op->is_hermitian(), std::string(name) + " not hermitian: " + op->str());
    for (const auto& [e, eop] : enc.edge_ops) logical.record(commutes(*op, eop), std::string(name) + " vs " + label(e, eop));
    for (const auto& v : enc.graph.vertices()) logical.record(commutes(*op, enc.vertex(v)), std::string(name) + " vs " + label(v, enc.vertex(v)));
    logical.record(enc.stabilizers.commutes_with(*op), std::string(name) + " vs stabilizers");
    logical.record(!enc.stabilizers.contains_up_to_phase(*op), std::string(name) + " is a stabilizer");
  }
  logical.record(anticommutes(lq.x, lq.y) && anticommutes(lq.y, lq.z) && anticommutes(lq.z, lq.x),
                 "logical Paulis do not pairwise anticommute");
  logical.record(lq.x * lq.y == PauliString(lq.z).mul_phase(1), "X*Y != iZ");
  report.checks.push_back(logical);

  CheckResult species{"species_relations"};
  const auto verts = enc.graph.vertices();
  const Vertex sites[2] = {verts.front(), verts[verts.size() / 2]};
  std::array<std::array<PauliString, 4>, 2> at;
  for (int s = 0; s < 2; ++s)
    for (int k = 0; k < 4; ++k)
      at[s][k] = transport(enc, lq.species[k].op, staircase_path(lq.species[k].corner, sites[s]));
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) {
      if (k != l) species.record(anticommutes(at[0][k], at[0][l]), "same-site species must anticommute");
      if (k != l) species.record(commutes(at[0][k], at[1][l]), "different species at different sites must commute");
    }
    species.record(anticommutes(at[0][k], at[1][k]), "same species at different sites must anticommute");
  }
  report.checks.push_back(species);
  return report;
}

RelationReport verify_relations(const HexLattice& lattice) {
  const EncodedOperators enc = encode(lattice);
  RelationReport report;
  report.lattice = "hex " + std::to_string(lattice.face_columns()) + "x" +
                   std::to_string(lattice.face_rows());
  verify_common(enc, report);

  CheckResult deg{"vertex_degree_at_most_3"};
  for (const auto& v : enc.graph.vertices()) deg.record(enc.graph.degree(v) <= 3, to_string(v));
  report.checks.push_back(deg);

  CheckResult weights{"edge_weight_at_most_3"};
  for (const auto& [e, op] : enc.edge_ops) weights.record(op.weight() <= 3, label(e, op));
  report.checks.push_back(weights);

  CheckResult full{"codespace_is_full_fock_space"};
  const std::size_t expected_generators =
      static_cast<std::size_t>(lattice.num_faces()) + lattice.partial_faces().size();
  full.record(enc.stabilizers.n_nontrivial() == expected_generators &&
                  enc.num_qubits() - enc.stabilizers.n_nontrivial() == enc.num_modes(),
              std::to_string(enc.stabilizers.n_nontrivial()) + " independent generators");
  report.checks.push_back(full);

  CheckResult qubits{"fewer_than_1.5_qubits_per_mode"};
  qubits.record(2 * enc.num_qubits() < 3 * enc.num_modes(),
                std::to_string(enc.num_qubits()) + " qubits for " + std::to_string(enc.num_modes()) + " modes");
  report.checks.push_back(qubits);

  const auto corners = majorana_corners(enc);
  CheckResult majorana{"majorana_contract"};
  majorana.record(!corners.empty(), "no Majorana corner");
  // Other corners get the Majorana carried over from the first one; with
  // partial faces their bare single-qubit operator is not logical.
  if (!corners.empty()) {
    const auto& first = corners.front();
    for (const auto& c : corners) {
      const auto path = shortest_path(enc.graph, first.corner, c.corner);
      check_majorana_like(enc, c.corner, transport(enc, first.op, path), "gamma", majorana);
    }
    for (const auto& v : enc.graph.vertices()) {
      const auto path = shortest_path(enc.graph, first.corner, v);
      check_majorana_like(enc, v, hole_operator(enc, first, path), "hole", majorana,
                          false);
    }
  }
  report.checks.push_back(majorana);
  return report;
}

GroundspaceReport groundspace_check(const EncodedOperators& enc, double tol) {
  require_cap(enc.num_qubits());
  const auto& gens = enc.stabilizers.generators();
  PauliSum h_map(enc.num_qubits());
  for (const auto& g : gens) h_map.add(g, -1.0);
  h_map = simplify(h_map);

  std::vector<double> ev;
  if (h_map.empty()) {
    ev.assign(std::size_t{1} << enc.num_qubits(), 0.0);
  } else {
    ev = pauli_sum_eigenvalues(h_map);
  }
  GroundspaceReport r{};
  r.ground_energy = ev.front();
  r.ground_dimension = static_cast<std::size_t>(std::count_if(
      ev.begin(), ev.end(), [&](double x) { return std::abs(x - ev.front()) <= tol; }));

  const auto columns = codespace_columns(enc.stabilizers);
  r.codespace_rank = columns.size();

  // Every codespace vector must sit at energy -#generators.
  double residual = 0.0;
  const double target = -static_cast<double>(gens.size());
  for (const auto& col : columns) {
    std::map<std::uint64_t, cd> out;
    for (const auto& [idx, amp] : col) out[idx] -= target * amp;
    for (const auto& t : h_map.terms()) {
      const BasisAction a(t.word);
      for (const auto& [idx, amp] : col) out[idx ^ a.flip] += t.coeff * a.amplitude(idx) * amp;
    }
    for (const auto& [idx, v] : out) residual = std::max(residual, std::abs(v));
  }
  r.passed = std::abs(r.ground_energy - target) <= tol && residual <= tol &&
             r.ground_dimension == r.codespace_rank;
  return r;
}

}  // namespace cfq
