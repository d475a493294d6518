#include "chevkit/cocycle.hpp"

#include <array>
#include <chrono>
#include <random>

#include "chevkit/errors.hpp"

namespace chevkit {

Cocycle::Cocycle(const RootSystem& rs, std::vector<std::vector<int>> gen) : rank_(rs.rank()) {
  exp_.assign(rank_ * rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      if (gen[i][j] != 1 && gen[i][j] != -1)
        throw CocycleError("generator matrix entries must be +-1");
      exp_[i * rank_ + j] = gen[i][j] == -1 ? 1 : 0;
    }
}

int Cocycle::value(const Coeffs& alpha, const Coeffs& beta) const {
  // Exponents only matter mod 2.
  int parity = 0;
  for (int i = 0; i < rank_; ++i) {
    if ((alpha[i] & 1) == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (beta[j] & 1) parity ^= exp_[i * rank_ + j];
  }
  return parity ? -1 : 1;
}

namespace {

void require_simply_laced(const RootSystem& rs) {
  if (!rs.simply_laced())
    throw NotSimplyLacedError("cocycles are defined on simply laced systems only; " +
                              rs.type().str() + " is handled through the folding module");
}

}  // namespace

Cocycle epsilon0(const RootSystem& rs, const SignAssignment& signs) {
  require_simply_laced(rs);
  if (!signs.valid_for(rs)) throw Error("sign assignment is not a sink/source orientation");
  const int r = rs.rank();
  std::vector<std::vector<int>> gen(r, std::vector<int>(r, 1));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int a = rs.cartan()[i][j];
      gen[i][j] = (a % 2 == 0) ? 1 : signs.c[i];  // c_i^(a_ij)
    }
  return Cocycle(rs, std::move(gen));
}

Cocycle epsilon_kac(const RootSystem& rs, const OrientedEdges& edges) {
  require_simply_laced(rs);
  const int r = rs.rank();
  // One direction per adjacent pair.
  std::vector<std::vector<bool>> arrow(r, std::vector<bool>(r, false));
  for (auto [i, j] : edges.pairs) {
    if (i == j || rs.cartan()[i][j] == 0) throw Error("edge list contains a non-edge");
    if (arrow[i][j] || arrow[j][i]) throw Error("edge list orients an edge twice");
    arrow[i][j] = true;
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (rs.cartan()[i][j] != 0 && !arrow[i][j] && !arrow[j][i])
        throw Error("edge list leaves an edge unoriented");
  std::vector<std::vector<int>> gen(r, std::vector<int>(r, 1));
  for (int i = 0; i < r; ++i) {
    gen[i][i] = -1;
    for (int j = 0; j < r; ++j)
      if (arrow[i][j]) gen[i][j] = -1;
  }
  return Cocycle(rs, std::move(gen));
}

VerificationReport check_flm(const Cocycle& c, const RootSystem& rs, int random_triples,
                             unsigned seed) {
  require_simply_laced(rs);
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.suite = "flm";
  const int r = rs.rank();

  auto render = [&](const Coeffs& v) { return rs.render(v); };

  // FLM3 exactly on all pairs of roots.
  for (int a = 0; a < rs.num_roots(); ++a)
    for (int b = 0; b < rs.num_roots(); ++b) {
      const Coeffs &va = rs.root(a), &vb = rs.root(b);
      int lhs = c.value(va, vb) * c.value(vb, va);
      int rhs = (rs.inner(va, vb) & 1) ? -1 : 1;
      ++rep.checks;
      if (lhs != rhs)
        rep.add_failure("FLM3 at (" + render(va) + ", " + render(vb) + ")", std::to_string(rhs),
                        std::to_string(lhs));
    }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_vec = [&] {
    Coeffs v(r);
    for (int i = 0; i < r; ++i) v[i] = coeff(rng);
    return v;
  };

  std::vector<std::array<Coeffs, 3>> triples;
  // Generator-spanning sample first, then seeded random lattice triples.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        Coeffs a(r, 0), b(r, 0), g(r, 0);
        a[i] = 1;
        b[j] = 1;
        g[k] = 1;
        triples.push_back({a, b, g});
      }
  for (int t = 0; t < random_triples; ++t) triples.push_back({random_vec(), random_vec(), random_vec()});

  const Coeffs zero(r, 0);
  for (const auto& [a, b, g] : triples) {
    Coeffs ab(r), bg(r);
    for (int i = 0; i < r; ++i) {
      ab[i] = a[i] + b[i];
      bg[i] = b[i] + g[i];
    }
    int lhs = c.value(a, b) * c.value(ab, g);
    int rhs = c.value(b, g) * c.value(a, bg);
    ++rep.checks;
    if (lhs != rhs)
      rep.add_failure("FLM1 at (" + render(a) + ", " + render(b) + ", " + render(g) + ")",
                      std::to_string(rhs), std::to_string(lhs));
    ++rep.checks;
    if (c.value(a, zero) != 1 || c.value(zero, a) != 1)
      rep.add_failure("FLM2 at " + render(a), "1", "-1");
  }

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

VerificationReport check_flm3_star(const Cocycle& c, const RootSystem& rs, int random_vectors,
                                   unsigned seed) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.suite = "flm3*";
  const int r = rs.rank();
  auto check_one = [&](const Coeffs& v) {
    int lhs = c.value(v, v);
    int rhs = ((rs.inner(v, v) / 2) & 1) ? -1 : 1;
    ++rep.checks;
    if (lhs != rhs)
      rep.add_failure("FLM3* at " + rs.render(v), std::to_string(rhs), std::to_string(lhs));
  };
  for (int a = 0; a < rs.num_roots(); ++a) check_one(rs.root(a));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < random_vectors; ++t) {
    Coeffs v(r);
    for (int i = 0; i < r; ++i) v[i] = coeff(rng);
    check_one(v);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace chevkit
