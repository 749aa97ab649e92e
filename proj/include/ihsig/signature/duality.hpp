#pragma once

#include <map>

#include "ihsig/ipwitt/ip_witt.hpp"
#include "ihsig/signature/symmetric_complex.hpp"
#include "ihsig/zlinalg/dense.hpp"
#include "ihsig/zlinalg/solve.hpp"

namespace ihsig {

// Quotient: express [phi] directly modulo the boundaries of D.
// Cocycle: for a manifold X, D is the full chain complex of X x X and [phi]
// is located by evaluating cross products of cocycles of X on phi and on the
// beta(z x z') classes; the Gram matrix of those pairings must be invertible.
enum class DualityBackend { Auto, Quotient, Cocycle };

inline const char* backend_name(DualityBackend b) {
  switch (b) {
    case DualityBackend::Quotient: return "quotient";
    case DualityBackend::Cocycle: return "cocycle";
    default: return "auto";
  }
}

struct DualityOptions {
  Field field = Field::Q;
  DualityBackend backend = DualityBackend::Auto;
  std::size_t quotient_limit = 500000;  // Auto picks Cocycle above this many n-simplices
  bool verify_cocycles = true;
};

struct DualityReport {
  Field field = Field::Q;
  DualityBackend backend = DualityBackend::Quotient;
  int dim = 0;
  std::vector<std::size_t> betti;
  std::map<int, DenseMatrix> matrices;  // rows: degree-i factor
  bool nondegenerate = false;
  std::string failure;
  std::optional<bool> integral_unimodular;
  bool koszul_symmetric = false;
  long long signature = 0;
  std::optional<bool> cocycles_verified;
};

namespace detail {

struct PairIndex {
  int degree;
  std::size_t a, b;
};

inline std::vector<PairIndex> kunneth_pairs(const std::vector<std::vector<IntVector>>& z, int n) {
  std::vector<PairIndex> out;
  for (int i = 0; i <= n; ++i)
    for (std::size_t a = 0; a < z[i].size(); ++a)
      for (std::size_t b = 0; b < z[n - i].size(); ++b) out.push_back({i, a, b});
  return out;
}

// Representative integral cocycles spanning H^i(X;Q), i = 0..n.
inline std::vector<std::vector<std::vector<Integer>>> cohomology_basis(const SimplicialComplex& x) {
  const int n = x.dim();
  std::vector<std::vector<std::vector<Integer>>> out(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<IntVector> cocycles;
    if (i == n) {
      for (std::size_t j = 0; j < x.count(n); ++j)
        cocycles.push_back(IntVector::unit(static_cast<Index>(j)));
    } else {
      cocycles = kernel_basis(x.boundary_matrix(i + 1).transpose());
    }
    EchelonBasis<Rational> cob;
    if (i > 0) {
      IntMatrix delta = x.boundary_matrix(i).transpose();
      for (const auto& col : delta.columns()) cob.insert(col.cast<Rational>());
    }
    for (const auto& z : cocycles)
      if (!cob.insert(z.cast<Rational>())) {
        std::vector<Integer> dense(x.count(i), Integer(0));
        for (const auto& e : z) dense[e.index] = e.value;
        out[i].push_back(std::move(dense));
      }
  }
  return out;
}

// (u x v)(s) = u(front i-face of p1 s) * v(back face of p2 s), zero when a
// projection degenerates.
struct CrossCocycle {
  int degree;
  const std::vector<Integer>* u;
  const std::vector<Integer>* v;
};

class CocycleEvaluator {
 public:
  CocycleEvaluator(const SimplicialComplex& x, const ProductComplex& pc) : x_(x), pc_(pc) {}

  Integer eval(const CrossCocycle& w, VertexSpan s) const {
    const int n = static_cast<int>(s.size()) - 1;
    front_.clear();
    back_.clear();
    for (int t = 0; t <= w.degree; ++t) front_.push_back(pc_.left_of(s[t]));
    for (int t = w.degree; t <= n; ++t) back_.push_back(pc_.right_of(s[t]));
    if (!strictly_increasing(front_) || !strictly_increasing(back_)) return 0;
    const Integer& a = (*w.u)[*x_.index_of(front_)];
    if (a == 0) return 0;
    return a * (*w.v)[*x_.index_of(back_)];
  }

  Rational eval(const CrossCocycle& w, const Chain& c) const {
    Rational total = 0;
    for (const auto& [s, coeff] : c.terms()) total += coeff * eval(w, s.span());
    return total;
  }

 private:
  static bool strictly_increasing(const std::vector<Vertex>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i - 1] >= v[i]) return false;
    return true;
  }

  const SimplicialComplex& x_;
  const ProductComplex& pc_;
  mutable std::vector<Vertex> front_, back_;
};

inline std::vector<Rational> solve_by_quotient(SymmetricComplexData& s,
                                               const std::vector<std::vector<IntVector>>& z,
                                               const std::vector<PairIndex>& pairs, Field field) {
  const int n = s.dim();
  const SimplicialComplex& p = s.square();
  auto cycle_chain = [&](int k, const IntVector& v) { return vector_to_chain(*s.x, k, v); };
  std::vector<IntVector> gens;
  for (const auto& pr : pairs)
    gens.push_back(chain_to_vector(
        p, s.beta(cycle_chain(pr.degree, z[pr.degree][pr.a]),
                  cycle_chain(n - pr.degree, z[n - pr.degree][pr.b]))));
  IntVector target = chain_to_vector(p, s.phi);

  IntMatrix b(p.count(n), 0);
  if (n + 1 <= p.dim()) {
    IntMatrix full = p.boundary_matrix(n + 1);
    for (const auto& g : s.d->basis(n + 1)) b.append_column(full.apply(g));
  }
  QuotientSolver<Rational> q(b.cast<Rational>());
  for (const auto& g : gens) q.add_generator(g.cast<Rational>());
  if (!q.independent())
    throw UnsolvableDecomposition("cross products of IH cycles are dependent in H_n(D)");
  if (field == Field::Q) {
    auto c = q.solve(target.cast<Rational>());
    if (!c) throw UnsolvableDecomposition("the diagonal class is not in the image of beta");
    return *c;
  }
  auto c = solve_modulo_saturation(target, gens, b);
  if (!c) throw UnsolvableDecomposition("no integral decomposition of the diagonal class");
  return std::vector<Rational>(c->begin(), c->end());
}

inline std::vector<Rational> solve_by_cocycles(SymmetricComplexData& s,
                                               const std::vector<std::vector<IntVector>>& z,
                                               const std::vector<PairIndex>& pairs, bool verify,
                                               std::optional<bool>& verified) {
  const int n = s.dim();
  auto h = cohomology_basis(*s.x);
  for (int i = 0; i <= n; ++i)
    if (h[i].size() != z[i].size())
      throw UnsolvableDecomposition("cohomology and intersection homology ranks differ in degree " +
                                    std::to_string(i));
  CocycleEvaluator ev(*s.x, *s.product);
  auto cycle_chain = [&](int k, const IntVector& v) { return vector_to_chain(*s.x, k, v); };

  std::vector<Rational> coeffs(pairs.size(), Rational(0));
  std::vector<CrossCocycle> all;
  std::size_t offset = 0;
  for (int i = 0; i <= n; ++i) {
    const std::size_t m = z[i].size() * z[n - i].size();
    if (m == 0) continue;
    std::vector<CrossCocycle> w;
    for (const auto& u : h[i])
      for (const auto& v : h[n - i]) w.push_back({i, &u, &v});
    DenseMatrix gram(m, m);
    std::vector<Rational> rhs(m);
    for (std::size_t r = 0; r < m; ++r) rhs[r] = ev.eval(w[r], s.phi);
    for (std::size_t col = 0; col < m; ++col) {
      const auto& pr = pairs[offset + col];
      Chain cross = s.beta(cycle_chain(i, z[i][pr.a]), cycle_chain(n - i, z[n - i][pr.b]));
      for (std::size_t r = 0; r < m; ++r) gram(r, col) = ev.eval(w[r], cross);
    }
    auto sol = solve_dense(gram, rhs);
    if (!sol)
      throw UnsolvableDecomposition("cross-product cocycles do not separate degree " +
                                    std::to_string(i) + " cross products");
    for (std::size_t col = 0; col < m; ++col) coeffs[offset + col] = (*sol)[col];
    offset += m;
    all.insert(all.end(), w.begin(), w.end());
  }
  if (verify && n + 1 <= s.square().dim()) {
    const SimplicialComplex& p = s.square();
    bool ok = true;
    std::vector<Vertex> face(n + 1);
    for (std::size_t t = 0; t < p.count(n + 1) && ok; ++t) {
      auto tau = p.simplex(n + 1, t);
      for (const auto& w : all) {
        Integer total = 0;
        for (int drop = 0; drop <= n + 1; ++drop) {
          face.clear();
          for (int v = 0; v <= n + 1; ++v)
            if (v != drop) face.push_back(tau[v]);
          Integer x = ev.eval(w, face);
          if (drop % 2) total -= x; else total += x;
        }
        if (total != 0) {
          ok = false;
          break;
        }
      }
    }
    verified = ok;
    if (!ok) throw UnsolvableDecomposition("a cross-product cochain failed the cocycle identity");
  }
  return coeffs;
}

}  // namespace detail

inline DualityReport duality_matrices(SymmetricComplexData& s, const DualityOptions& opt = {}) {
  const int n = s.dim();
  DualityReport r;
  r.field = opt.field;
  r.dim = n;
  std::vector<std::vector<IntVector>> z(n + 1);
  for (int i = 0; i <= n; ++i) {
    z[i] = cycle_basis(*s.c, i, opt.field).free;
    r.betti.push_back(z[i].size());
  }
  auto pairs = detail::kunneth_pairs(z, n);

  r.backend = opt.backend;
  if (r.backend == DualityBackend::Auto)
    r.backend = (s.d->constraints().empty() && s.square().count(n) > opt.quotient_limit)
                    ? DualityBackend::Cocycle
                    : DualityBackend::Quotient;
  if (r.backend == DualityBackend::Cocycle && !s.d->constraints().empty())
    throw UnsolvableDecomposition("the cocycle backend needs a space without singular strata");

  std::vector<Rational> coeffs =
      r.backend == DualityBackend::Cocycle
          ? detail::solve_by_cocycles(s, z, pairs, opt.verify_cocycles, r.cocycles_verified)
          : detail::solve_by_quotient(s, z, pairs, opt.field);

  for (int i = 0; i <= n; ++i) r.matrices[i] = DenseMatrix(z[i].size(), z[n - i].size());
  for (std::size_t g = 0; g < pairs.size(); ++g)
    r.matrices[pairs[g].degree](pairs[g].a, pairs[g].b) = coeffs[g];

  r.nondegenerate = true;
  for (const auto& [i, m] : r.matrices) {
    if (!m.square()) {
      r.nondegenerate = false;
      r.failure = "M_" + std::to_string(i) + " is " + std::to_string(m.rows) + "x" +
                  std::to_string(m.cols) + ": IH ranks in degrees " + std::to_string(i) +
                  " and " + std::to_string(n - i) + " differ";
      break;
    }
    if (determinant(m) == 0) {
      r.nondegenerate = false;
      r.failure = "M_" + std::to_string(i) + " is singular";
      break;
    }
  }
  if (opt.field == Field::Z) {
    bool uni = r.nondegenerate;
    for (const auto& [i, m] : r.matrices)
      if (uni && (!m.integral() || abs(determinant(m)) != 1)) uni = false;
    r.integral_unimodular = uni;
  }
  r.koszul_symmetric = true;
  for (int i = 0; i <= n; ++i) {
    DenseMatrix t = r.matrices[i].transpose();
    if ((i * (n - i)) % 2)
      for (auto& x : t.data) x = -x;
    if (!(t == r.matrices[n - i])) r.koszul_symmetric = false;
  }
  if (n % 4 == 0 && r.koszul_symmetric) r.signature = symmetric_inertia(r.matrices[n / 2]).signature();
  return r;
}

struct ConditionReport {
  bool closed = false;
  bool phi_allowable = false;
  bool phi_invariant = false;
  bool beta_in_d = false;
  bool chain_map = false;
  std::size_t chain_map_pairs = 0;
  bool well_behaved = true;  // IC_k is a kernel inside a coordinate subgroup, hence a summand
  bool finite = true;
  std::optional<std::size_t> kunneth_rank;
  std::size_t kunneth_expected = 0;
  std::optional<bool> kunneth_holds;
  DualityReport duality;
  bool nondegenerate() const { return duality.nondegenerate; }
};

struct ConditionOptions {
  bool chain_map = true;
  bool kunneth = true;
  DualityOptions duality;
};

inline ConditionReport verify_symmetric_conditions(SymmetricComplexData& s,
                                                   const ConditionOptions& opt = {}) {
  ConditionReport r;
  const int n = s.dim();
  r.closed = s.phi.boundary().empty();
  r.phi_allowable = true;
  for (const auto& [simplex, coeff] : s.phi.terms())
    if (!is_allowable(simplex.span(), s.d->constraints())) r.phi_allowable = false;
  r.phi_invariant = s.transpose(s.phi) == s.phi;

  if (opt.chain_map) {
    r.chain_map = true;
    r.beta_in_d = true;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        for (std::size_t a = 0; a < s.c->basis(i).size(); ++a) {
          Chain ca = s.generator(i, a);
          Chain da = ca.boundary();
          for (std::size_t b = 0; b < s.c->basis(j).size(); ++b) {
            Chain cb = s.generator(j, b);
            Chain cross = s.beta(ca, cb);
            for (const auto& [simplex, coeff] : cross.terms())
              if (!is_allowable(simplex.span(), s.d->constraints())) r.beta_in_d = false;
            Chain rhs = s.beta(da, cb);
            rhs.add_scaled(i % 2 ? -1 : 1, s.beta(ca, cb.boundary()));
            if (!(cross.boundary() == rhs)) r.chain_map = false;
            ++r.chain_map_pairs;
          }
        }
  }

  r.duality = duality_matrices(s, opt.duality);
  for (int i = 0; i <= n; ++i) r.kunneth_expected += r.duality.betti[i] * r.duality.betti[n - i];
  if (opt.kunneth) {
    r.kunneth_rank = homology_q(s.d->boundary_map(n), s.d->boundary_map(n + 1)).betti;
    r.kunneth_holds = *r.kunneth_rank == r.kunneth_expected;
  }
  return r;
}

struct SignatureReport {
  long long signature = 0;
  bool dimension_rule = false;  // 4 does not divide n, no pairing was built
  IPReport ip;
  std::optional<DualityReport> duality;
};

inline SignatureReport signature_report(
    const SimplicialComplex& k, const Orientation& o,
    const std::optional<std::vector<StratificationLevel>>& levels = std::nullopt,
    const DualityOptions& opt = {}) {
  SignatureReport r;
  IPOptions ipo;
  ipo.stratification = levels;
  r.ip = check_ip(k, ipo);
  if (!*r.ip.ip) throw NotIP("signature needs an IP-space");
  FundamentalCycle xi = fundamental_cycle(k, o, levels);
  if (xi.relative) throw NotClosed("signature needs a closed space");
  if (k.dim() % 4 != 0) {
    r.dimension_rule = true;
    return r;
  }
  SymmetricComplexData s = symmetric_complex(k, xi, levels);
  DualityReport d = duality_matrices(s, opt);
  if (!d.koszul_symmetric)
    throw AsymmetricPairing("the middle pairing matrix is not symmetric");
  if (!d.nondegenerate) throw UnsolvableDecomposition("pairing is degenerate: " + d.failure);
  r.signature = d.signature;
  r.duality = std::move(d);
  return r;
}

inline long long signature(const SimplicialComplex& k, const Orientation& o) {
  return signature_report(k, o).signature;
}

inline long long signature(const SimplicialComplex& k) { return signature(k, orient(k)); }

}  // namespace ihsig
