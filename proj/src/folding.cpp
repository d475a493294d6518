#include "chevkit/folding.hpp"

#include <algorithm>
#include <set>

#include "chevkit/errors.hpp"

namespace chevkit {

namespace {

std::vector<std::vector<int>> simply_laced_cartan(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) A[i][i] = 2;
  for (auto [i, j] : edges) A[i][j] = A[j][i] = -1;
  return A;
}

}  // namespace

FoldingData FoldingData::build(CartanType type, const SignAssignment& target_signs) {
  return build(build_root_system(type), target_signs);
}

FoldingData FoldingData::build(RootSystemPtr target, const SignAssignment& target_signs) {
  if (!target_signs.valid_for(*target))
    throw Error("sign assignment is not a sink/source orientation of " + target->type().str());
  FoldingData fd;
  fd.target_ = std::move(target);
  fd.target_signs_ = target_signs;
  const CartanType t = fd.target_->type();
  fd.e_ = t.length_ratio();
  const int r = t.rank;

  switch (t.letter) {
    case TypeLetter::A:
    case TypeLetter::D:
    case TypeLetter::E: {
      fd.cover_ = fd.target_;
      fd.eta_simple_.resize(r);
      fd.tau_simple_.resize(r);
      for (int i = 0; i < r; ++i) fd.eta_simple_[i] = fd.tau_simple_[i] = i;
      break;
    }
    case TypeLetter::B: {
      // Cover D_{r+1}, fork vertices 0 and 1 both projecting onto the short
      // simple root; tau swaps the fork.
      std::vector<std::pair<int, int>> edges = {{0, 2}, {1, 2}};
      for (int i = 2; i < r; ++i) edges.emplace_back(i, i + 1);
      fd.cover_ = std::make_shared<RootSystem>(CartanType{TypeLetter::D, r + 1},
                                               simply_laced_cartan(r + 1, edges),
                                               std::vector<int>(r + 1, 1));
      fd.eta_simple_.resize(r + 1);
      fd.tau_simple_.resize(r + 1);
      fd.eta_simple_[0] = fd.eta_simple_[1] = 0;
      for (int i = 2; i <= r; ++i) fd.eta_simple_[i] = i - 1;
      fd.tau_simple_[0] = 1;
      fd.tau_simple_[1] = 0;
      for (int i = 2; i <= r; ++i) fd.tau_simple_[i] = i;
      break;
    }
    case TypeLetter::C: {
      // Cover A_{2r-1}; tau flips the chain, fixing the middle vertex that
      // projects onto the long simple root.
      const int n = 2 * r - 1;
      fd.cover_ = build_root_system({TypeLetter::A, n});
      fd.eta_simple_.resize(n);
      fd.tau_simple_.resize(n);
      for (int i = 0; i < n; ++i) {
        fd.eta_simple_[i] = std::min(i, n - 1 - i);
        fd.tau_simple_[i] = n - 1 - i;
      }
      break;
    }
    case TypeLetter::F: {
      // Cover E6 with the order-2 diagram flip 1<->6, 3<->5.
      fd.cover_ = build_root_system({TypeLetter::E, 6});
      fd.eta_simple_ = {3, 0, 2, 1, 2, 3};
      fd.tau_simple_ = {5, 1, 4, 3, 2, 0};
      break;
    }
    case TypeLetter::G: {
      // Cover D4 with triality rotating the three outer vertices around the
      // centre, which projects onto the long simple root.
      fd.cover_ = build_root_system({TypeLetter::D, 4});
      fd.eta_simple_ = {1, 0, 1, 1};
      fd.tau_simple_ = {2, 1, 3, 0};
      break;
    }
  }
  fd.finish_build();
  return fd;
}

void FoldingData::finish_build() {
  const RootSystem& cov = *cover_;
  const RootSystem& tgt = *target_;

  // Transported signs: constant on fibres, equal to the target sign there.
  cover_signs_.c.resize(cov.rank());
  for (int j = 0; j < cov.rank(); ++j) cover_signs_.c[j] = target_signs_.c[eta_simple_[j]];
  if (!cover_signs_.valid_for(cov))
    throw FoldingError("transported signs are not a sink/source orientation of the cover");
  for (int j = 0; j < cov.rank(); ++j)
    if (cover_signs_.c[tau_simple_[j]] != cover_signs_.c[j])
      throw FoldingError("transported signs are not tau-invariant");
  cover_edges_ = oriented_edges(cov, cover_signs_);

  // (F1) eta maps the cover roots onto the target roots; fibres recorded.
  fibres_.assign(tgt.num_roots(), {});
  for (int k = 0; k < cov.num_roots(); ++k) {
    Coeffs image = eta(cov.root(k));
    int idx = tgt.index_of(image);
    if (idx < 0) throw FoldingError("eta maps a cover root outside the target root set");
    fibres_[idx].push_back(k);
  }
  for (int idx = 0; idx < tgt.num_roots(); ++idx) {
    if (fibres_[idx].empty()) throw FoldingError("eta is not onto the target root set");
    std::sort(fibres_[idx].begin(), fibres_[idx].end());
    // (F2) each fibre is a single tau-orbit.
    std::set<int> orbit;
    int cur = fibres_[idx].front();
    for (int step = 0; step < e_; ++step) {
      orbit.insert(cur);
      cur = tau_root(cur);
    }
    if (orbit != std::set<int>(fibres_[idx].begin(), fibres_[idx].end()))
      throw FoldingError("fibre over " + tgt.render(idx) + " is not a tau-orbit");
  }
  // (F3) the fibres over simple roots consist of cover simple roots.
  for (int i = 0; i < tgt.rank(); ++i)
    for (int k : fibres_[tgt.simple_root_index(i)])
      if (cov.height(k) != 1)
        throw FoldingError("fibre over a simple root contains a non-simple cover root");
}

int FoldingData::tau_root(int cover_idx) const {
  const Coeffs& v = cover_->root(cover_idx);
  Coeffs out(cover_->rank(), 0);
  for (int j = 0; j < cover_->rank(); ++j) out[tau_simple_[j]] += v[j];
  int idx = cover_->index_of(out);
  if (idx < 0) throw FoldingError("tau does not permute the cover roots");
  return idx;
}

Coeffs FoldingData::eta(const Coeffs& cover_vec) const {
  Coeffs out(target_->rank(), 0);
  for (int j = 0; j < cover_->rank(); ++j) out[eta_simple_[j]] += cover_vec[j];
  return out;
}

long long FoldingData::cover_rho(const Coeffs& alpha, const Coeffs& beta) const {
  return rho(*cover_, cover_edges_, alpha, beta);
}

int FoldingData::cover_sign(const Coeffs& alpha, const Coeffs& beta) const {
  return (cover_rho(alpha, beta) % 2) ? -1 : 1;
}

FoldingData::LiftedPair FoldingData::lift_pair(int a, int b) const {
  if (target_->sum_index(a, b) < 0)
    throw NotComposableError(target_->render(a) + " + " + target_->render(b) + " is not a root");
  LiftedPair first{-1, -1};
  int sign = 0;
  for (int ka : fibres_[a]) {
    for (int kb : fibres_[b]) {
      Coeffs sum = cover_->root(ka);
      const Coeffs& vb = cover_->root(kb);
      for (int j = 0; j < cover_->rank(); ++j) sum[j] += vb[j];
      if (!cover_->is_root(sum)) continue;
      int s = cover_sign(cover_->root(ka), cover_->root(kb));
      if (first.alpha < 0) {
        first = {ka, kb};
        sign = s;
      } else if (s != sign) {
        throw FoldingError("transported sign is not constant on the lift set of (" +
                           target_->render(a) + ", " + target_->render(b) + ")");
      }
    }
  }
  if (first.alpha < 0)
    throw FoldingError("no composable lift for (" + target_->render(a) + ", " +
                       target_->render(b) + ")");
  return first;
}

int FoldingData::folded_sign(int a, int b) const {
  LiftedPair lift = lift_pair(a, b);  // also asserts invariance
  return cover_sign(cover_->root(lift.alpha), cover_->root(lift.beta));
}

int delta4(long long n) {
  long long k = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
  return (k % 2 != 0) ? -1 : 1;
}

int closed_form_sign(const RootSystem& rs, const SignAssignment& signs, int a, int b) {
  if (rs.sum_index(a, b) < 0)
    throw NotComposableError(rs.render(a) + " + " + rs.render(b) + " is not a root");
  OrientedEdges edges = oriented_edges(rs, signs);
  long long rab = rho(rs, edges, rs.root(a), rs.root(b));
  switch (rs.type().letter) {
    case TypeLetter::A:
    case TypeLetter::D:
    case TypeLetter::E:
    case TypeLetter::G:
      return (rab % 2 != 0) ? -1 : 1;
    case TypeLetter::B: {
      if (rab % 2 != 0) throw Error("rho is odd on a pair of B-type roots");
      return ((rab / 2) % 2 != 0) ? -1 : 1;
    }
    case TypeLetter::F: {
      long long rba = rho(rs, edges, rs.root(b), rs.root(a));
      return (rab % 2 == 0) ? delta4(rab) : -delta4(rba);
    }
    case TypeLetter::C: {
      long long rba = rho(rs, edges, rs.root(b), rs.root(a));
      int mu = rab >= rba ? 1 : -1;
      int sa = rs.is_positive(a) ? 1 : -1;
      int sb = rs.is_positive(b) ? 1 : -1;
      int ssum = rs.is_positive(rs.sum_index(a, b)) ? 1 : -1;
      if (sa == sb) return mu;
      int ht_parity;
      if (sb == ssum)
        ht_parity = rs.height(a);  // sgn(a) is the odd one out
      else
        ht_parity = rs.height(b);
      return (ht_parity % 2 != 0) ? -mu : mu;
    }
  }
  throw Error("unreachable");
}

}  // namespace chevkit
