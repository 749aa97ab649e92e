// Regenerates the shipped example zoo.  Usage: ihsig_make_zoo <output dir>
#include <filesystem>
#include <iostream>

#include "ihsig/complex.hpp"
#include "ihsig/io/complex_io.hpp"
#include "ihsig/pseudomanifold.hpp"

using namespace ihsig;

namespace {

SimplicialComplex from_lists(const std::vector<std::vector<Vertex>>& rows, const std::string& name) {
  std::vector<Simplex> facets;
  for (const auto& r : rows) facets.push_back(Simplex::from_unsorted(r));
  return SimplicialComplex::from_facets(std::move(facets), name);
}

SimplicialComplex simplex_boundary(int n, const std::string& name) {
  std::vector<std::vector<Vertex>> rows;
  for (int skip = n + 1; skip >= 0; --skip) {
    std::vector<Vertex> f;
    for (int v = 0; v <= n + 1; ++v)
      if (v != skip) f.push_back(static_cast<Vertex>(v));
    rows.push_back(f);
  }
  std::sort(rows.begin(), rows.end());
  return from_lists(rows, name);
}

SimplicialComplex torus7() {
  std::vector<std::vector<Vertex>> rows;
  for (Vertex i = 0; i < 7; ++i) {
    rows.push_back({i, (i + 1) % 7, (i + 3) % 7});
    rows.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return from_lists(rows, "torus_7");
}

SimplicialComplex rp2_6() {
  return from_lists({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                     {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}},
                    "rp2_6");
}

// Vertex-reduced barycentric subdivision of the cross-polytope quotient.
SimplicialComplex rp3_11() {
  return from_lists(
      {{0, 1, 2, 3},  {0, 1, 2, 7},  {0, 1, 3, 4},  {0, 1, 4, 8},  {0, 1, 6, 7},  {0, 1, 6, 8},
       {0, 2, 3, 9},  {0, 2, 7, 9},  {0, 3, 4, 10}, {0, 3, 9, 10}, {0, 4, 8, 10}, {0, 5, 6, 7},
       {0, 5, 6, 8},  {0, 5, 7, 9},  {0, 5, 8, 10}, {0, 5, 9, 10}, {1, 2, 3, 5},  {1, 2, 5, 10},
       {1, 2, 7, 10}, {1, 3, 4, 5}, {1, 4, 5, 9}, {1, 4, 8, 9}, {1, 5, 9, 10}, {1, 6, 7, 10},
       {1, 6, 8, 9}, {1, 6, 9, 10}, {2, 3, 5, 8}, {2, 3, 8, 9}, {2, 4, 7, 9}, {2, 4, 7, 10},
       {2, 4, 8, 9}, {2, 4, 8, 10}, {2, 5, 8, 10}, {3, 4, 5, 6}, {3, 4, 6, 10}, {3, 5, 6, 8},
       {3, 6, 8, 9}, {3, 6, 9, 10}, {4, 5, 6, 7}, {4, 5, 7, 9}, {4, 6, 7, 10}},
      "rp3_11");
}

SimplicialComplex cp2_9() {
  return from_lists({{0, 1, 2, 3, 6}, {0, 1, 2, 3, 8}, {0, 1, 2, 4, 6}, {0, 1, 2, 4, 7},
                     {0, 1, 2, 5, 7}, {0, 1, 2, 5, 8}, {0, 1, 3, 6, 8}, {0, 1, 4, 5, 6},
                     {0, 1, 4, 5, 7}, {0, 1, 5, 6, 8}, {0, 2, 3, 4, 6}, {0, 2, 3, 4, 8},
                     {0, 2, 4, 7, 8}, {0, 2, 5, 7, 8}, {0, 3, 4, 5, 6}, {0, 3, 4, 5, 7},
                     {0, 3, 4, 7, 8}, {0, 3, 5, 6, 7}, {0, 3, 6, 7, 8}, {0, 5, 6, 7, 8},
                     {1, 2, 3, 5, 7}, {1, 2, 3, 5, 8}, {1, 2, 3, 6, 7}, {1, 2, 4, 6, 7},
                     {1, 3, 4, 5, 7}, {1, 3, 4, 5, 8}, {1, 3, 4, 7, 8}, {1, 3, 6, 7, 8},
                     {1, 4, 5, 6, 8}, {1, 4, 6, 7, 8}, {2, 3, 4, 5, 6}, {2, 3, 4, 5, 8},
                     {2, 3, 5, 6, 7}, {2, 4, 5, 6, 8}, {2, 4, 6, 7, 8}, {2, 5, 6, 7, 8}}, "cp2_9");
}

// Cylinder of three triangles rings a, b, c with both end rings coned off to
// one point p: a torus with a meridian circle collapsed.
SimplicialComplex pinched_torus() {
  auto a = [](Vertex i) { return i % 3; };
  auto b = [](Vertex i) { return 3 + i % 3; };
  auto c = [](Vertex i) { return 6 + i % 3; };
  const Vertex p = 9;
  std::vector<std::vector<Vertex>> rows;
  for (Vertex i = 0; i < 3; ++i) {
    rows.push_back({a(i), a(i + 1), b(i)});
    rows.push_back({a(i + 1), b(i), b(i + 1)});
    rows.push_back({b(i), b(i + 1), c(i)});
    rows.push_back({b(i + 1), c(i), c(i + 1)});
    rows.push_back({p, a(i), a(i + 1)});
    rows.push_back({p, c(i), c(i + 1)});
  }
  return from_lists(rows, "pinched_torus");
}

ComplexDocument with_orientation(SimplicialComplex k, bool reverse = false) {
  ComplexDocument d{std::move(k), std::nullopt, std::nullopt};
  Orientation o = orient(d.complex);
  d.orientation = orientation_to_document(d.complex, reverse ? o.reversed() : o);
  return d;
}

ComplexDocument plain(SimplicialComplex k) { return {std::move(k), std::nullopt, std::nullopt}; }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: ihsig_make_zoo <output dir>\n";
    return 2;
  }
  std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  auto put = [&](const std::string& file, const ComplexDocument& d) {
    save_complex_file(d, (dir / (file + ".json")).string());
  };

  put("boundary_delta3", with_orientation(simplex_boundary(2, "boundary_delta3")));
  put("boundary_delta4", with_orientation(simplex_boundary(3, "boundary_delta4")));
  put("rp2", plain(rp2_6()));
  put("torus", with_orientation(torus7()));
  put("rp3", with_orientation(rp3_11()));
  put("cp2", with_orientation(cp2_9(), true));

  SimplicialComplex pt = pinched_torus();
  put("pinched_torus", with_orientation(pt));
  ComplexDocument ptu = with_orientation(pt);
  ptu.complex.set_name("pinched_torus_user");
  ptu.stratification = std::vector<StratificationLevel>{
      {0, {Simplex{3}, Simplex{9}}}};
  put("pinched_torus_user", ptu);

  SimplicialComplex st2 = build_suspension(torus7());
  st2.set_name("sigma_t2");
  put("sigma_t2", with_orientation(st2));
  SimplicialComplex srp3 = build_suspension(rp3_11());
  srp3.set_name("sigma_rp3");
  put("sigma_rp3", with_orientation(srp3));

  ProductComplex s2s2 = product_staircase(simplex_boundary(2, "s2"), simplex_boundary(2, "s2"));
  s2s2.product.set_name("s2xs2");
  put("s2xs2", with_orientation(s2s2.product));

  ProductComplex ptd = product_staircase(pt, from_lists({{0, 1}}, "delta1"));
  ptd.product.set_name("pinched_torus_x_interval");
  put("pinched_torus_x_interval", with_orientation(ptd.product));

  put("wedge_of_triangles", plain(from_lists({{0, 1, 2}, {0, 3, 4}}, "wedge_of_triangles")));
  return 0;
}
