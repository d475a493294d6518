#include "chevkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chevkit/errors.hpp"
#include "chevkit/folding.hpp"
#include "chevkit/table_io.hpp"

namespace chevkit {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Flattened bracket table over the basis {h_i} u {e_alpha}: basis index
/// i < rank is h_{i+1}, rank + k is e_{root k}. Every bracket of two basis
/// elements is a short list of (basis index, coefficient) terms.
struct BasisTable {
  int rank = 0;
  int nroots = 0;
  int n = 0;
  std::vector<std::int32_t> start;                       // n*n + 1 offsets
  std::vector<std::pair<std::int32_t, std::int64_t>> terms;
  const LieAlgebra* L = nullptr;

  explicit BasisTable(const LieAlgebra& algebra) : L(&algebra) {
    const RootSystem& R = algebra.roots();
    rank = R.rank();
    nroots = R.num_roots();
    n = rank + nroots;
    start.assign(static_cast<std::size_t>(n) * n + 1, 0);
    terms.reserve(static_cast<std::size_t>(n) * 8);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a >= rank || b >= rank) emit(a, b, R, algebra);
        start[static_cast<std::size_t>(a) * n + b + 1] = static_cast<std::int32_t>(terms.size());
      }
    }
  }

  void emit(int a, int b, const RootSystem& R, const LieAlgebra& algebra) {
    if (a < rank) {  // [h_i, e_beta]
      long long k = R.pairing(a, R.root(b - rank));
      if (k) terms.emplace_back(b, k);
      return;
    }
    if (b < rank) {  // [e_alpha, h_j]
      long long k = R.pairing(b, R.root(a - rank));
      if (k) terms.emplace_back(a, -k);
      return;
    }
    int ra = a - rank, rb = b - rank;
    int s = R.sum_index(ra, rb);
    if (s == -2) {
      Coeffs co = R.coroot(ra);
      for (int i = 0; i < rank; ++i)
        if (co[i]) terms.emplace_back(i, static_cast<long long>(algebra.zeta(ra)) * co[i]);
    } else if (s >= 0) {
      terms.emplace_back(rank + s, algebra.structure_constant(ra, rb));
    }
  }

  std::string name(int idx) const {
    if (idx < rank) return "h" + std::to_string(idx + 1);
    return "e[" + L->roots().render(idx - rank) + "]";
  }
};

/// Per-thread workspace: a dense accumulator over the basis plus the list of
/// indices touched since the last reset.
struct Scratch {
  std::vector<std::int64_t> acc;
  std::vector<std::int32_t> touched;

  explicit Scratch(int n) : acc(n, 0) { touched.reserve(64); }

  void add(std::int32_t idx, std::int64_t v) {
    acc[idx] += v;
    touched.push_back(idx);
  }

  bool all_zero() const {
    for (std::int32_t i : touched)
      if (acc[i]) return false;
    return true;
  }

  std::string residual(const BasisTable& t) {
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::string out;
    for (std::int32_t i : touched) {
      if (!acc[i]) continue;
      if (!out.empty()) out += " + ";
      out += std::to_string(acc[i]) + "*" + t.name(i);
    }
    return out.empty() ? "0" : out;
  }

  void reset() {
    for (std::int32_t i : touched) acc[i] = 0;
    touched.clear();
  }
};

// scratch += [[a,b],c]
void double_bracket(const BasisTable& t, int a, int b, int c, Scratch& s) {
  const std::size_t ab = static_cast<std::size_t>(a) * t.n + b;
  for (std::int32_t k = t.start[ab]; k < t.start[ab + 1]; ++k) {
    const auto [d, coef] = t.terms[k];
    const std::size_t dc = static_cast<std::size_t>(d) * t.n + c;
    for (std::int32_t m = t.start[dc]; m < t.start[dc + 1]; ++m) {
      const auto [f, coef2] = t.terms[m];
      s.add(f, coef * coef2);
    }
  }
}

void jacobi_rows(const BasisTable& t, int x_begin, int x_end, VerificationReport& rep) {
  Scratch s(t.n);
  for (int x = x_begin; x < x_end; ++x) {
    // Antisymmetry along the row, then the Jacobi sum over triples above it.
    for (int y = x; y < t.n; ++y) {
      const std::size_t xy = static_cast<std::size_t>(x) * t.n + y;
      const std::size_t yx = static_cast<std::size_t>(y) * t.n + x;
      for (std::int32_t k = t.start[xy]; k < t.start[xy + 1]; ++k) s.add(t.terms[k].first, t.terms[k].second);
      for (std::int32_t k = t.start[yx]; k < t.start[yx + 1]; ++k) s.add(t.terms[k].first, t.terms[k].second);
      ++rep.checks;
      if (!s.all_zero())
        rep.add_failure("antisymmetry at (" + t.name(x) + ", " + t.name(y) + ")", "0", s.residual(t));
      s.reset();
    }
    for (int y = x + 1; y < t.n; ++y) {
      for (int z = y + 1; z < t.n; ++z) {
        double_bracket(t, x, y, z, s);
        double_bracket(t, y, z, x, s);
        double_bracket(t, z, x, y, s);
        ++rep.checks;
        if (!s.all_zero())
          rep.add_failure(
              "jacobi at (" + t.name(x) + ", " + t.name(y) + ", " + t.name(z) + ")", "0",
              s.residual(t));
        s.reset();
      }
    }
  }
}

int parity_sign(long long k) { return (k % 2 != 0) ? -1 : 1; }

}  // namespace

int verification_threads() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* env = std::getenv("CHEVKIT_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

VerificationReport check_jacobi(const LieAlgebra& L, ExecPolicy policy) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.suite = "jacobi";
  BasisTable table(L);

#ifdef _OPENMP
  if (policy == ExecPolicy::parallel) {
    const int nthreads = verification_threads();
    std::vector<VerificationReport> parts(nthreads);
#pragma omp parallel num_threads(nthreads)
    {
      VerificationReport& mine = parts[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 2)
      for (int x = 0; x < table.n; ++x) jacobi_rows(table, x, x + 1, mine);
    }
    for (const auto& part : parts) rep.merge(part);
    rep.seconds = elapsed(t0);
    return rep;
  }
#else
  (void)policy;
#endif
  jacobi_rows(table, 0, table.n, rep);
  rep.seconds = elapsed(t0);
  return rep;
}

VerificationReport check_jacobi_reference(const LieAlgebra& L) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.suite = "jacobi-reference";
  const RootSystem& R = L.roots();
  const int n = R.rank() + R.num_roots();
  std::vector<Element> basis;
  basis.reserve(n);
  for (int i = 0; i < R.rank(); ++i) basis.push_back(L.h_element(i));
  for (int k = 0; k < R.num_roots(); ++k) basis.push_back(L.e_element(k));
  auto name = [&](int idx) {
    return idx < R.rank() ? "h" + std::to_string(idx + 1) : "e[" + R.render(idx - R.rank()) + "]";
  };
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      Element anti = L.bracket(basis[x], basis[y]) + L.bracket(basis[y], basis[x]);
      ++rep.checks;
      if (!anti.is_zero())
        rep.add_failure("antisymmetry at (" + name(x) + ", " + name(y) + ")", "0", anti.str());
      if (y == x) continue;
      for (int z = y + 1; z < n; ++z) {
        Element sum = L.bracket(L.bracket(basis[x], basis[y]), basis[z]);
        sum += L.bracket(L.bracket(basis[y], basis[z]), basis[x]);
        sum += L.bracket(L.bracket(basis[z], basis[x]), basis[y]);
        ++rep.checks;
        if (!sum.is_zero())
          rep.add_failure("jacobi at (" + name(x) + ", " + name(y) + ", " + name(z) + ")", "0",
                          sum.str());
      }
    }
  rep.seconds = elapsed(t0);
  return rep;
}

VerificationReport oracle_iterated_brackets(const LieAlgebra& L) {
  if (!L.simple_signs()) throw Error("iterated-bracket oracle needs the simple-root signs");
  return oracle_iterated_brackets(L, *L.simple_signs());
}

VerificationReport oracle_iterated_brackets(const LieAlgebra& L, const SignAssignment& signs) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.suite = "iterated-brackets";
  const RootSystem& R = L.roots();

  // Greedy chain: peel the lowest-index simple root that keeps the partial
  // sums inside Phi+.
  auto chain_of = [&](int root_idx) {
    std::vector<int> chain;
    Coeffs v = R.root(root_idx);
    int ht = R.height(root_idx);
    while (ht > 1) {
      bool found = false;
      for (int i = 0; i < R.rank(); ++i) {
        if (v[i] == 0) continue;
        Coeffs w = v;
        w[i] -= 1;
        if (R.is_root(w)) {
          chain.push_back(i);
          v = std::move(w);
          found = true;
          break;
        }
      }
      if (!found) throw Error("no descending chain from " + R.render(root_idx));
      --ht;
    }
    for (int i = 0; i < R.rank(); ++i)
      if (v[i] == 1) chain.push_back(i);
    std::reverse(chain.begin(), chain.end());
    return chain;  // i_1 .. i_r, partial sums all roots
  };

  for (int a = 0; a < R.num_positive(); ++a) {
    std::vector<int> chain = chain_of(a);
    Element plus = L.e_element(R.simple_root_index(chain[0]));
    plus *= signs.c[chain[0]];
    Element minus = L.e_element(R.negate(R.simple_root_index(chain[0])));
    minus *= signs.c[chain[0]];
    long long m_plus = signs.c[chain[0]];
    long long m_minus = signs.c[chain[0]];
    Coeffs partial(R.rank(), 0);
    partial[chain[0]] = 1;
    for (std::size_t j = 1; j < chain.size(); ++j) {
      int i = chain[j];
      int si = R.simple_root_index(i);
      int beta_idx = R.index_of(partial);
      PQPair up = R.pq(si, beta_idx);
      PQPair down = R.pq(si, R.negate(beta_idx));
      Element ei = L.e_element(si);
      ei *= signs.c[i];
      Element fi = L.e_element(R.negate(si));
      fi *= signs.c[i];
      plus = L.bracket(ei, plus);
      minus = L.bracket(fi, minus);
      m_plus *= signs.c[i] * (up.q + 1);
      m_minus *= signs.c[i] * (down.p + 1);
      partial[i] += 1;
    }
    ++rep.checks;
    if (m_plus != m_minus)
      rep.add_failure("divisors at " + R.render(a), std::to_string(m_plus), std::to_string(m_minus));
    Element want_plus = L.e_element(a);
    want_plus *= m_plus;
    ++rep.checks;
    if (!(plus == want_plus))
      rep.add_failure("rebuilt e at " + R.render(a), want_plus.str(), plus.str());
    Element want_minus = L.e_element(R.negate(a));
    want_minus *= m_minus;
    ++rep.checks;
    if (!(minus == want_minus))
      rep.add_failure("rebuilt e at " + R.render(R.negate(a)), want_minus.str(), minus.str());
  }
  rep.seconds = elapsed(t0);
  return rep;
}

VerificationReport check_L123(const LieAlgebra& L) {
  if (!L.simple_signs()) throw Error("L123 check needs the simple-root signs");
  return check_L123(L, *L.simple_signs());
}

VerificationReport check_L123(const LieAlgebra& L, const SignAssignment& signs) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.suite = "L123";
  const RootSystem& R = L.roots();

  auto E = [&](int idx) {
    Element out = L.e_element(idx);
    if (!R.is_positive(idx)) out *= -1;
    return out;
  };
  for (int i = 0; i < R.rank(); ++i) {
    int si = R.simple_root_index(i);
    Element ei = L.e_element(si);
    ei *= signs.c[i];
    Element fi = L.e_element(R.negate(si));
    fi *= signs.c[i];

    Element lhs = L.bracket(fi, E(si));
    Element rhs = L.bracket(ei, E(R.negate(si)));
    ++rep.checks;
    if (!(lhs == rhs))
      rep.add_failure("(L1) at i=" + std::to_string(i + 1), rhs.str(), lhs.str());

    for (int a = 0; a < R.num_roots(); ++a) {
      int up = R.sum_index(si, a);
      if (up >= 0) {
        PQPair pq = R.pq(si, a);
        Element got = L.bracket(ei, E(a));
        Element want = E(up);
        want *= pq.q + 1;
        ++rep.checks;
        if (!(got == want))
          rep.add_failure("(L2) at (i=" + std::to_string(i + 1) + ", " + R.render(a) + ")",
                          want.str(), got.str());
      }
      int down = R.sum_index(R.negate(si), a);
      if (down >= 0) {
        PQPair pq = R.pq(si, a);
        Element got = L.bracket(fi, E(a));
        Element want = E(down);
        want *= pq.p + 1;
        ++rep.checks;
        if (!(got == want))
          rep.add_failure("(L3) at (i=" + std::to_string(i + 1) + ", " + R.render(a) + ")",
                          want.str(), got.str());
      }
    }
  }
  rep.seconds = elapsed(t0);
  return rep;
}

VerificationReport check_sign_identities(const LieAlgebra& L) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.suite = "sign-identities";
  const RootSystem& R = L.roots();

  for (int a = 0; a < R.num_roots(); ++a) {
    ++rep.checks;
    int want = -parity_sign(R.height(a));
    if (L.zeta(a) != want)
      rep.add_failure("zeta at " + R.render(a), std::to_string(want), std::to_string(L.zeta(a)));
  }

  const bool g2 = R.type().letter == TypeLetter::G;
  for (int a = 0; a < R.num_roots(); ++a) {
    for (int b = 0; b < R.num_roots(); ++b) {
      int s = R.sum_index(a, b);
      if (s < 0) continue;
      int eps = L.epsilon(a, b);
      long long n = L.structure_constant(a, b);
      PQPair pq = R.pq(a, b);
      ++rep.checks;
      if (std::llabs(n) != pq.q + 1 || pq.q + 1 > (g2 ? 3 : 2))
        rep.add_failure("magnitude |N| at (" + R.render(a) + ", " + R.render(b) + ")",
                        "q+1 = " + std::to_string(pq.q + 1) + (g2 ? " (<= 3)" : " (<= 2)"),
                        std::to_string(std::llabs(n)));
      ++rep.checks;
      if (eps != L.epsilon(R.negate(a), R.negate(b)))
        rep.add_failure("eps(a,b) = eps(-a,-b) at (" + R.render(a) + ", " + R.render(b) + ")",
                        std::to_string(eps), std::to_string(L.epsilon(R.negate(a), R.negate(b))));
      int nab = R.negate(s);
      int rot1 = parity_sign(R.height(b)) * L.epsilon(b, nab);
      int rot2 = parity_sign(R.height(a)) * L.epsilon(nab, a);
      ++rep.checks;
      if (eps != rot1 || eps != rot2)
        rep.add_failure("rotation identities at (" + R.render(a) + ", " + R.render(b) + ")",
                        std::to_string(eps),
                        std::to_string(rot1) + " / " + std::to_string(rot2));
      // Zero-sum triple: g1 = a, g2 = b, g3 = -(a+b).
      long long t1 = static_cast<long long>(L.zeta(nab)) * L.epsilon(a, b);
      long long t2 = static_cast<long long>(L.zeta(a)) * L.epsilon(b, nab);
      long long t3 = static_cast<long long>(L.zeta(b)) * L.epsilon(nab, a);
      ++rep.checks;
      if (t1 != t2 || t1 != t3)
        rep.add_failure("zero-sum triple identity at (" + R.render(a) + ", " + R.render(b) + ")",
                        std::to_string(t1),
                        std::to_string(t2) + " / " + std::to_string(t3));
    }
  }

  // Rebuilding over the negated orientation must negate every sign.
  if (L.simple_signs()) {
    LieAlgebra flipped = LieAlgebra::special(L.roots_ptr(), L.simple_signs()->negated());
    for (int a = 0; a < R.num_roots(); ++a)
      for (int b = 0; b < R.num_roots(); ++b) {
        if (R.sum_index(a, b) < 0) continue;
        ++rep.checks;
        if (L.epsilon(a, b) != -flipped.epsilon(a, b))
          rep.add_failure("orientation flip at (" + R.render(a) + ", " + R.render(b) + ")",
                          std::to_string(-L.epsilon(a, b)),
                          std::to_string(flipped.epsilon(a, b)));
      }
  }
  rep.seconds = elapsed(t0);
  return rep;
}

VerificationReport check_three_way(CartanType type, const SignAssignment& signs,
                                   ExecPolicy policy) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.suite = "three-way";
  RootSystemPtr rs = build_root_system(type);
  LieAlgebra L = LieAlgebra::special(rs, signs);
  FoldingData fd = FoldingData::build(rs, signs);
  const RootSystem& R = *rs;
  const int nr = R.num_roots();

  auto run_rows = [&](int a_begin, int a_end, VerificationReport& out) {
    for (int a = a_begin; a < a_end; ++a)
      for (int b = 0; b < nr; ++b) {
        if (R.sum_index(a, b) < 0) continue;
        int built = L.epsilon(a, b);
        int folded = fd.folded_sign(a, b);
        int closed = closed_form_sign(R, signs, a, b);
        ++out.checks;
        if (built != folded || built != closed)
          out.add_failure("routes at (" + R.render(a) + ", " + R.render(b) + ")",
                          "built = folded = closed",
                          std::to_string(built) + " / " + std::to_string(folded) + " / " +
                              std::to_string(closed));
      }
  };

#ifdef _OPENMP
  if (policy == ExecPolicy::parallel) {
    const int nthreads = verification_threads();
    std::vector<VerificationReport> parts(nthreads);
#pragma omp parallel num_threads(nthreads)
    {
      VerificationReport& mine = parts[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 4)
      for (int a = 0; a < nr; ++a) run_rows(a, a + 1, mine);
    }
    for (const auto& part : parts) rep.merge(part);
    rep.seconds = elapsed(t0);
    return rep;
  }
#else
  (void)policy;
#endif
  run_rows(0, nr, rep);
  rep.seconds = elapsed(t0);
  return rep;
}

VerificationReport check_rho_parity(const RootSystem& rs, const SignAssignment& signs) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.suite = "rho-parity";
  if (rs.type().letter != TypeLetter::B) throw Error("rho parity is a B-type property");
  OrientedEdges edges = oriented_edges(rs, signs);
  for (int a = 0; a < rs.num_roots(); ++a)
    for (int b = 0; b < rs.num_roots(); ++b) {
      ++rep.checks;
      long long v = rho(rs, edges, rs.root(a), rs.root(b));
      if (v % 2 != 0)
        rep.add_failure("rho parity at (" + rs.render(a) + ", " + rs.render(b) + ")", "even",
                        std::to_string(v));
    }
  rep.seconds = elapsed(t0);
  return rep;
}

namespace {

struct GoldenRow {
  const char* alpha;
  const char* beta;
  long long rho_ab;
  long long rho_ba;
  long long n;
};

// The published 68-row F4 ledger at c1 = c3 = -1, c2 = c4 = +1.
constexpr GoldenRow kF4Golden[] = {
    {"1000", "0100", -2, 0, -1},   {"1000", "0110", -2, 0, -1},   {"1000", "0120", -2, 0, -1},
    {"1000", "0111", -2, 0, -1},   {"1000", "0121", -2, 0, -1},   {"1000", "0122", -2, 0, -1},
    {"1000", "1342", -6, 0, -1},   {"0100", "0010", 0, -2, 1},    {"0100", "0011", 0, -2, 1},
    {"0100", "1120", 0, -6, 1},    {"0100", "1121", 0, -6, 1},    {"0100", "1122", 0, -6, 1},
    {"0100", "1242", 0, -10, 1},   {"0010", "0001", -1, 0, -1},   {"0010", "1100", -2, 0, -1},
    {"0010", "0110", -2, 0, -2},   {"0010", "1110", -2, 0, -2},   {"0010", "0111", -3, 0, -1},
    {"0010", "1111", -3, 0, -1},   {"0010", "1221", -5, 0, -1},   {"0010", "1222", -6, 0, -1},
    {"0010", "1232", -6, 0, -2},   {"0001", "0110", 0, -1, 1},    {"0001", "1110", 0, -1, 1},
    {"0001", "0120", 0, -2, 1},    {"0001", "1120", 0, -2, 1},    {"0001", "0121", 0, -2, 2},
    {"0001", "1220", 0, -2, 1},    {"0001", "1121", 0, -2, 2},    {"0001", "1221", 0, -2, 2},
    {"0001", "1231", 0, -3, 1},    {"1100", "0011", 0, -2, 1},    {"1100", "0120", -2, -4, -1},
    {"1100", "0121", -2, -4, -1},  {"1100", "0122", -2, -4, -1},  {"1100", "1242", -4, -10, 1},
    {"0110", "0011", -1, -2, 1},   {"0110", "1110", -2, -4, -2},  {"0110", "1111", -3, -4, -1},
    {"0110", "1121", -3, -6, 1},   {"0110", "1122", -4, -6, 1},   {"0110", "1232", -6, -8, -2},
    {"0011", "1110", -2, -1, -1},  {"0011", "0111", -3, -1, -2},  {"0011", "1111", -3, -1, -2},
    {"0011", "1220", -4, -2, 1},   {"0011", "1221", -5, -2, 1},   {"0011", "1231", -5, -3, 2},
    {"1110", "0111", -5, -2, 1},   {"1110", "0121", -5, -4, -1},  {"1110", "0122", -6, -4, -1},
    {"1110", "1232", -10, -8, -2}, {"0120", "1111", -6, -4, -1},  {"0120", "1122", -8, -6, 1},
    {"0120", "1222", -12, -6, 1},  {"0111", "1120", -2, -8, -1},  {"0111", "1111", -3, -5, -2},
    {"0111", "1121", -3, -8, -1},  {"0111", "1231", -5, -11, 2},  {"1120", "0122", -10, -4, -1},
    {"1120", "1222", -16, -6, 1},  {"1111", "0121", -5, -6, 1},   {"1111", "1231", -9, -11, 2},
    {"0121", "1121", -6, -8, -2},  {"0121", "1221", -10, -8, -2}, {"1220", "0122", -10, -8, -1},
    {"1220", "1122", -10, -12, -1}, {"1121", "1221", -14, -8, -2},
};

// The six published C4 sample rows, at the orientation with c1 = +1.
constexpr GoldenRow kC4Golden[] = {
    {"1000", "0100", 0, -1, 1},   {"0100", "0121", -2, 0, -2},  {"0100", "1121", -3, 0, -1},
    {"1100", "0121", -2, -1, -1}, {"1110", "0111", -1, -4, 1},  {"1110", "1111", -2, -4, 2},
};

void compare_golden(const Ledger& ledger, const GoldenRow* rows, std::size_t count,
                    bool require_exact_count, const std::string& label,
                    VerificationReport& rep) {
  const RootSystem& R = *ledger.rs;
  if (require_exact_count) {
    ++rep.checks;
    if (ledger.rows.size() != count)
      rep.add_failure(label + " row count", std::to_string(count),
                      std::to_string(ledger.rows.size()));
  }
  for (std::size_t k = 0; k < count; ++k) {
    const GoldenRow& want = rows[k];
    ++rep.checks;
    bool found = false;
    for (const LedgerRow& row : ledger.rows) {
      if (R.render(row.alpha) != want.alpha || R.render(row.beta) != want.beta) continue;
      found = true;
      if (row.rho_ab != want.rho_ab || row.rho_ba != want.rho_ba || row.n != want.n)
        rep.add_failure(label + " row (" + want.alpha + ", " + want.beta + ")",
                        std::to_string(want.rho_ab) + "," + std::to_string(want.rho_ba) + "," +
                            std::to_string(want.n),
                        std::to_string(row.rho_ab) + "," + std::to_string(row.rho_ba) + "," +
                            std::to_string(row.n));
      break;
    }
    if (!found) rep.add_failure(label + " row (" + std::string(want.alpha) + ", " + want.beta + ")",
                                "present", "missing");
  }
  // The published tables also fix the row order; enforce it when exhaustive.
  if (require_exact_count && rep.failure_count == 0) {
    for (std::size_t k = 0; k < count; ++k) {
      ++rep.checks;
      if (R.render(ledger.rows[k].alpha) != rows[k].alpha ||
          R.render(ledger.rows[k].beta) != rows[k].beta) {
        rep.add_failure(label + " row order at index " + std::to_string(k),
                        std::string(rows[k].alpha) + "," + rows[k].beta,
                        R.render(ledger.rows[k].alpha) + "," + R.render(ledger.rows[k].beta));
        break;
      }
    }
  }
}

}  // namespace

VerificationReport check_golden_tables() {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.suite = "golden-tables";

  RootSystemPtr f4 = build_root_system({TypeLetter::F, 4});
  SignAssignment f4_signs = special_orientation(*f4, Orientation::minus);
  LieAlgebra Lf4 = LieAlgebra::special(f4, f4_signs);
  Ledger f4_ledger = make_ledger(Lf4, f4_signs, Orientation::minus, /*all_roots=*/false);
  compare_golden(f4_ledger, kF4Golden, std::size(kF4Golden), /*require_exact_count=*/true,
                 "F4", rep);

  RootSystemPtr c4 = build_root_system({TypeLetter::C, 4});
  SignAssignment c4_signs = special_orientation(*c4, Orientation::plus);
  LieAlgebra Lc4 = LieAlgebra::special(c4, c4_signs);
  Ledger c4_ledger = make_ledger(Lc4, c4_signs, Orientation::plus, /*all_roots=*/false);
  compare_golden(c4_ledger, kC4Golden, std::size(kC4Golden), /*require_exact_count=*/false,
                 "C4", rep);

  rep.seconds = elapsed(t0);
  return rep;
}

}  // namespace chevkit
