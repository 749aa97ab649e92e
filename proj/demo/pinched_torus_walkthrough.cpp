// Walks the pinched torus through the pipeline: ordinary homology, the
// singular stratum, intersection homology, the IP test and duality.

#include <iostream>

#include "ihsig/complex.hpp"
#include "ihsig/ih.hpp"
#include "ihsig/io/complex_io.hpp"
#include "ihsig/ipwitt.hpp"
#include "ihsig/signature.hpp"

using namespace ihsig;

static std::string show(const std::vector<HomologyGroup>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    out += "  H" + std::to_string(i) + " = ";
    std::string g = t[i].betti == 1 ? "Z" : t[i].betti ? "Z^" + std::to_string(t[i].betti) : "";
    for (const auto& x : t[i].torsion) g += (g.empty() ? "" : " + ") + std::string("Z/") + x.get_str();
    out += (g.empty() ? "0" : g) + "\n";
  }
  return out;
}

int main(int argc, char** argv) {
  std::string path = argc > 1 ? argv[1] : std::string(IHSIG_ZOO_DIR) + "/pinched_torus.json";
  auto doc = load_complex_file(path);
  const auto& k = doc.complex;
  auto f = k.f_vector();
  std::cout << k.name() << ": f = (" << f[0] << ", " << f[1] << ", " << f[2] << ")\n";

  std::cout << "ordinary homology\n" << show(simplicial_homology(k));

  auto st = skeletal_stratification(k, doc.stratification);
  for (auto id : st.singular_ids()) {
    const auto& s = st.strata[id];
    std::cout << "singular stratum " << id << ": dimension " << s.dimension << ", codimension "
              << s.codimension << ", vertices";
    for (Vertex v : s.closure_vertices) std::cout << " " << k.label(v);
    std::cout << "\n";
  }

  for (auto p : {PerversityName::Zero, PerversityName::LowerMiddle}) {
    auto r = ih(k, st, Perversity::classical(p), Field::Z);
    std::cout << "IH with perversity " << perversity_cli_name(p) << "\n" << show(r.table());
  }

  auto ip = check_ip(k);
  std::cout << "IP: " << (*ip.ip ? "yes" : "no") << ", Witt: " << (ip.witt ? "yes" : "no") << "\n";
  for (const auto& e : ip.evidence)
    std::cout << "  link of " << e.simplex.to_string() << " (" << condition_name(e.condition)
              << " in degree " << e.degree << "): betti " << e.group.betti << "\n";

  auto o = doc.orientation ? orientation_from_document(k, *doc.orientation) : orient(k);
  auto s = symmetric_complex(k, fundamental_cycle(k, o), doc.stratification);
  auto c = verify_symmetric_conditions(s);
  std::cout << "chain-map identity on " << c.chain_map_pairs << " generator pairs: "
            << (c.chain_map ? "holds" : "fails") << "\n";
  std::cout << "rank H_2(D; Q) = " << c.kunneth_rank.value_or(0) << ", expected "
            << c.kunneth_expected << "\n";
  for (const auto& [i, m] : c.duality.matrices) {
    std::cout << "M_" << i << " =";
    for (std::size_t r = 0; r < m.rows; ++r) {
      std::cout << " [";
      for (std::size_t col = 0; col < m.cols; ++col) std::cout << (col ? " " : "") << m(r, col);
      std::cout << "]";
    }
    std::cout << (m.rows ? "" : " (empty)") << "\n";
  }
  return 0;
}
