#include "chevkit/lie_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "chevkit/errors.hpp"
#include "chevkit/folding.hpp"

namespace chevkit {

bool Element::is_zero() const {
  for (long long v : h)
    if (v) return false;
  return e.empty();
}

Element& Element::operator+=(const Element& rhs) {
  if (owner != rhs.owner) throw MismatchError("elements belong to different algebras");
  for (std::size_t i = 0; i < h.size(); ++i) h[i] += rhs.h[i];
  for (auto [idx, c] : rhs.e) {
    long long v = (e[idx] += c);
    if (v == 0) e.erase(idx);
  }
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  if (owner != rhs.owner) throw MismatchError("elements belong to different algebras");
  for (std::size_t i = 0; i < h.size(); ++i) h[i] -= rhs.h[i];
  for (auto [idx, c] : rhs.e) {
    long long v = (e[idx] -= c);
    if (v == 0) e.erase(idx);
  }
  return *this;
}

Element& Element::operator*=(long long k) {
  if (k == 0) {
    std::fill(h.begin(), h.end(), 0);
    e.clear();
    return *this;
  }
  for (long long& v : h) v *= k;
  for (auto& [idx, c] : e) c *= k;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  if (a.owner != b.owner) throw MismatchError("elements belong to different algebras");
  return a.h == b.h && a.e == b.e;
}

std::string Element::str() const {
  if (is_zero()) return "0";
  std::string out;
  auto term = [&](long long c, const std::string& name) {
    if (c == 0) return;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    long long a = std::llabs(c);
    if (a != 1) out += std::to_string(a) + "*";
    out += name;
  };
  for (std::size_t i = 0; i < h.size(); ++i) term(h[i], "h" + std::to_string(i + 1));
  for (auto [idx, c] : e)
    term(c, owner ? "e[" + owner->roots().render(idx) + "]" : "e[" + std::to_string(idx) + "]");
  return out;
}

LieAlgebra LieAlgebra::from_cocycle(RootSystemPtr rs, const Cocycle& c) {
  VerificationReport flm = check_flm(c, *rs);
  if (!flm.ok()) {
    const Failure& f = flm.failures.front();
    throw CocycleError("cocycle fails " + f.context + ": expected " + f.expected + ", got " +
                       f.actual);
  }
  LieAlgebra L;
  L.rs_ = std::move(rs);
  const RootSystem& R = *L.rs_;
  const int nr = R.num_roots();
  L.n_.assign(static_cast<std::size_t>(nr) * nr, 0);
  L.zeta_.resize(nr);
  for (int a = 0; a < nr; ++a) {
    L.zeta_[a] = static_cast<std::int8_t>(c.value(R.root(a), R.root(a)));
    for (int b = 0; b < nr; ++b)
      if (R.sum_index(a, b) >= 0)
        L.n_[static_cast<std::size_t>(a) * nr + b] =
            static_cast<std::int8_t>(c.value(R.root(a), R.root(b)));
  }
  L.normalization_ = "cocycle";
  return L;
}

LieAlgebra LieAlgebra::special(CartanType type, const SignAssignment& signs) {
  return special(build_root_system(type), signs);
}

LieAlgebra LieAlgebra::special(RootSystemPtr rs, const SignAssignment& signs) {
  if (!signs.valid_for(*rs)) throw Error("sign assignment is not a sink/source orientation");
  FoldingData fd = FoldingData::build(rs, signs);
  LieAlgebra L;
  L.rs_ = std::move(rs);
  const RootSystem& R = *L.rs_;
  const int nr = R.num_roots();
  L.n_.assign(static_cast<std::size_t>(nr) * nr, 0);
  L.zeta_.resize(nr);
  for (int a = 0; a < nr; ++a) {
    L.zeta_[a] = (R.height(a) & 1) ? 1 : -1;  // -(-1)^ht
    for (int b = 0; b < nr; ++b) {
      if (R.sum_index(a, b) < 0) continue;
      int q = R.pq(a, b).q;
      L.n_[static_cast<std::size_t>(a) * nr + b] =
          static_cast<std::int8_t>(fd.folded_sign(a, b) * (q + 1));
    }
  }
  L.signs_ = signs;
  L.normalization_ = "special";
  return L;
}

long long LieAlgebra::structure_constant(int a, int b) const {
  int s = rs_->sum_index(a, b);
  if (s < 0)
    throw NotComposableError(rs_->render(a) + " + " + rs_->render(b) + " is not a root");
  return n_[static_cast<std::size_t>(a) * rs_->num_roots() + b];
}

int LieAlgebra::epsilon(int a, int b) const {
  long long n = structure_constant(a, b);
  return n > 0 ? 1 : -1;
}

Element LieAlgebra::zero() const {
  Element out;
  out.owner = this;
  out.h.assign(rs_->rank(), 0);
  return out;
}

Element LieAlgebra::h_element(int i) const {
  Element out = zero();
  out.h[i] = 1;
  return out;
}

Element LieAlgebra::e_element(int root_idx) const {
  Element out = zero();
  out.e[root_idx] = 1;
  return out;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.owner != this || y.owner != this)
    throw MismatchError("bracket of elements from a different algebra");
  const RootSystem& R = *rs_;
  Element out = zero();
  // [h, e] = <alpha_i^vee, alpha> e, extended linearly; [h, h] = 0.
  for (auto [b, cb] : y.e) {
    long long k = 0;
    for (int i = 0; i < R.rank(); ++i)
      if (x.h[i]) k += x.h[i] * R.pairing(i, R.root(b));
    if (k) {
      long long v = (out.e[b] += cb * k);
      if (v == 0) out.e.erase(b);
    }
  }
  for (auto [a, ca] : x.e) {
    long long k = 0;
    for (int i = 0; i < R.rank(); ++i)
      if (y.h[i]) k += y.h[i] * R.pairing(i, R.root(a));
    if (k) {
      long long v = (out.e[a] -= ca * k);
      if (v == 0) out.e.erase(a);
    }
  }
  for (auto [a, ca] : x.e) {
    for (auto [b, cb] : y.e) {
      int s = R.sum_index(a, b);
      if (s == -2) {
        Coeffs co = R.coroot(a);
        long long k = ca * cb * zeta_[a];
        for (int i = 0; i < R.rank(); ++i) out.h[i] += k * co[i];
      } else if (s >= 0) {
        long long v = (out.e[s] += ca * cb * n_[static_cast<std::size_t>(a) * R.num_roots() + b]);
        if (v == 0) out.e.erase(s);
      }
    }
  }
  return out;
}

LieAlgebra LieAlgebra::rescaled(const std::vector<int>& s, const std::string& tag) const {
  const RootSystem& R = *rs_;
  const int nr = R.num_roots();
  LieAlgebra out;
  out.rs_ = rs_;
  out.n_.assign(static_cast<std::size_t>(nr) * nr, 0);
  out.zeta_.resize(nr);
  for (int a = 0; a < nr; ++a) {
    out.zeta_[a] = static_cast<std::int8_t>(s[a] * s[R.negate(a)] * zeta_[a]);
    for (int b = 0; b < nr; ++b) {
      int sum = R.sum_index(a, b);
      if (sum >= 0)
        out.n_[static_cast<std::size_t>(a) * nr + b] = static_cast<std::int8_t>(
            s[a] * s[b] * s[sum] * n_[static_cast<std::size_t>(a) * nr + b]);
    }
  }
  out.normalization_ = tag;
  return out;
}

LieAlgebra LieAlgebra::breve(int eps) const {
  if (eps != 1 && eps != -1) throw Error("breve normalisation sign must be +-1");
  const RootSystem& R = *rs_;
  for (int a = 0; a < R.num_roots(); ++a)
    if (zeta_[a] != ((R.height(a) & 1) ? 1 : -1))
      throw Error("breve transform requires a special table (zeta = -(-1)^ht)");
  std::vector<int> s(R.num_roots(), 1);
  for (int a = R.num_positive(); a < R.num_roots(); ++a)
    s[a] = -eps * ((R.height(a) & 1) ? -1 : 1);
  return rescaled(s, eps == 1 ? "breve(+1)" : "breve(-1)");
}

LieAlgebra LieAlgebra::hat() const {
  const RootSystem& R = *rs_;
  for (int a = 0; a < R.num_roots(); ++a)
    if (zeta_[a] != -1)
      throw Error("hat transform requires [e_a, e_-a] = -h_a throughout (Kac normalisation)");
  std::vector<int> s(R.num_roots(), 1);
  for (int a = R.num_positive(); a < R.num_roots(); ++a) s[a] = -1;
  return rescaled(s, "hat");
}

LieAlgebra LieAlgebra::negated() const {
  std::vector<int> s(rs_->num_roots(), -1);
  LieAlgebra out = rescaled(s, "negated");
  if (signs_) out.signs_ = signs_->negated();
  return out;
}

SpecialityReport is_special(const LieAlgebra& L) {
  const RootSystem& R = L.roots();
  SpecialityReport rep;
  rep.recovered_signs.assign(R.rank(), 0);
  for (int i = 0; i < R.rank(); ++i) {
    int si = R.simple_root_index(i);
    if (L.zeta(si) != 1) {
      rep.violation = "[e_" + R.render(si) + ", e_" + R.render(R.negate(si)) +
                      "] = " + std::to_string(L.zeta(si)) + " h_" + std::to_string(i + 1) +
                      ", expected +h";
      return rep;
    }
  }
  for (int i = 0; i < R.rank(); ++i) {
    int si = R.simple_root_index(i);
    int nsi = R.negate(si);
    int& ci = rep.recovered_signs[i];
    for (int a = 0; a < R.num_roots(); ++a) {
      // [e_{alpha_i}, e_alpha] = c_i (q+1) e_{alpha+alpha_i}
      if (R.sum_index(si, a) >= 0) {
        PQPair pq = R.pq(si, a);
        long long n = L.structure_constant(si, a);
        long long want = pq.q + 1;
        if (std::llabs(n) != want) {
          rep.violation = "|N(" + R.render(si) + ", " + R.render(a) + ")| = " +
                          std::to_string(std::llabs(n)) + ", expected q+1 = " + std::to_string(want);
          return rep;
        }
        int c = n > 0 ? 1 : -1;
        if (ci == 0) ci = c;
        if (c != ci) {
          rep.violation = "sign of N(" + R.render(si) + ", " + R.render(a) +
                          ") conflicts with earlier c_" + std::to_string(i + 1);
          return rep;
        }
      }
      // [e_{-alpha_i}, e_alpha] = c_i (p+1) e_{alpha-alpha_i}
      if (R.sum_index(nsi, a) >= 0) {
        PQPair pq = R.pq(si, a);
        long long n = L.structure_constant(nsi, a);
        long long want = pq.p + 1;
        if (std::llabs(n) != want) {
          rep.violation = "|N(" + R.render(nsi) + ", " + R.render(a) + ")| = " +
                          std::to_string(std::llabs(n)) + ", expected p+1 = " + std::to_string(want);
          return rep;
        }
        int c = n > 0 ? 1 : -1;
        if (ci == 0) ci = c;
        if (c != ci) {
          rep.violation = "sign of N(" + R.render(nsi) + ", " + R.render(a) +
                          ") conflicts with earlier c_" + std::to_string(i + 1);
          return rep;
        }
      }
    }
  }
  rep.ok = true;
  return rep;
}

std::map<RootPair, int> extend_signs_from_positive(const RootSystem& rs,
                                                   const std::map<RootPair, int>& positive) {
  const int P = rs.num_positive();
  auto pos_at = [&](int a, int b) {
    auto it = positive.find({a, b});
    if (it == positive.end())
      throw SignConsistencyError("missing positive pair (" + rs.render(a) + ", " + rs.render(b) + ")");
    if (it->second != 1 && it->second != -1)
      throw SignConsistencyError("sign at (" + rs.render(a) + ", " + rs.render(b) + ") is not +-1");
    return it->second;
  };

  // Antisymmetry is the one constraint the identities place on the positive
  // table itself; everything mixed is derived from it by rotation.
  for (const auto& [key, val] : positive) {
    auto [a, b] = key;
    if (rs.sum_index(a, b) < 0 || a >= P || b >= P)
      throw SignConsistencyError("input is not a positive composable pair (" + rs.render(a) + ", " +
                                 rs.render(b) + ")");
    (void)val;
    if (pos_at(a, b) != -pos_at(b, a))
      throw SignConsistencyError("antisymmetry clash at (" + rs.render(a) + ", " + rs.render(b) + ")");
  }

  auto value = [&](int a, int b) {
    int factor = 1;
    for (int step = 0; step < 3; ++step) {
      bool a_pos = a < P, b_pos = b < P;
      if (a_pos && b_pos) return factor * pos_at(a, b);
      if (!a_pos && !b_pos) return factor * pos_at(rs.negate(a), rs.negate(b));
      // eps(a,b) = (-1)^ht(b) eps(b, -a-b)
      factor *= (rs.height(b) & 1) ? -1 : 1;
      int nab = rs.negate(rs.sum_index(a, b));
      a = std::exchange(b, nab);
    }
    throw SignConsistencyError("rotation failed to reach a pure-sign pair");
  };

  std::map<RootPair, int> out;
  for (int a = 0; a < rs.num_roots(); ++a)
    for (int b = 0; b < rs.num_roots(); ++b)
      if (rs.sum_index(a, b) >= 0) out[{a, b}] = value(a, b);

  // The extension must satisfy the defining identities everywhere; a clash
  // here means the positive table was not a special sign function.
  for (const auto& [key, eps] : out) {
    auto [a, b] = key;
    int nab = rs.negate(rs.sum_index(a, b));
    int ida = out.at({rs.negate(a), rs.negate(b)});
    if (eps != ida)
      throw SignConsistencyError("identity eps(a,b)=eps(-a,-b) clashes at (" + rs.render(a) + ", " +
                                 rs.render(b) + ")");
    int rot = ((rs.height(b) & 1) ? -1 : 1) * out.at({b, nab});
    if (eps != rot)
      throw SignConsistencyError("rotation identity clashes at (" + rs.render(a) + ", " +
                                 rs.render(b) + ")");
  }
  return out;
}

}  // namespace chevkit
