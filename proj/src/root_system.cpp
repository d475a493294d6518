#include "chevkit/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>

#include "chevkit/errors.hpp"

namespace chevkit {

namespace {

// Height ascending, ties by descending lex on the coefficient tuple. This is
// the order the published F4 ledger uses, so golden files reproduce verbatim.
bool enum_less(const Coeffs& a, const Coeffs& b) {
  int ha = std::accumulate(a.begin(), a.end(), 0);
  int hb = std::accumulate(b.begin(), b.end(), 0);
  if (ha != hb) return ha < hb;
  return b < a;
}

std::vector<std::vector<int>> cartan_from_edges(int r, const std::vector<std::pair<int, int>>& singles,
                                                const std::vector<std::pair<int, int>>& doubles = {}) {
  std::vector<std::vector<int>> A(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) A[i][i] = 2;
  for (auto [i, j] : singles) A[i][j] = A[j][i] = -1;
  for (auto [i, j] : doubles) {  // a_ij = -2, a_ji = -1
    A[i][j] = -2;
    A[j][i] = -1;
  }
  return A;
}

}  // namespace

RootSystem::RootSystem(CartanType tag, std::vector<std::vector<int>> cartan, std::vector<int> d)
    : type_(tag), rank_(static_cast<int>(cartan.size())), cartan_(std::move(cartan)), d_(std::move(d)) {
  // Basic Cartan sanity: a_ii = 2, off-diagonal <= 0, symmetrisable by d.
  for (int i = 0; i < rank_; ++i) {
    if (cartan_[i][i] != 2) throw Error("invalid Cartan matrix: a_ii != 2");
    for (int j = 0; j < rank_; ++j) {
      if (i != j && cartan_[i][j] > 0) throw Error("invalid Cartan matrix: positive off-diagonal");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0)) throw Error("invalid Cartan matrix: asymmetric zeros");
      if (static_cast<long long>(d_[i]) * cartan_[i][j] != static_cast<long long>(cartan_[j][i]) * d_[j])
        throw Error("invalid weights: d_i a_ij != a_ji d_j");
    }
  }
  gram_.assign(rank_, std::vector<long long>(rank_, 0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) gram_[i][j] = static_cast<long long>(d_[i]) * cartan_[i][j];

  // Positive roots by closure over the root strings: alpha + alpha_i is a
  // root iff p = q - <alpha_i^vee, alpha> is positive, and q only involves
  // lower roots, so a height-by-height sweep terminates with the full set.
  std::set<Coeffs> pos;
  std::vector<Coeffs> frontier;
  for (int i = 0; i < rank_; ++i) {
    Coeffs e(rank_, 0);
    e[i] = 1;
    pos.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<Coeffs> next;
    for (const Coeffs& alpha : frontier) {
      for (int i = 0; i < rank_; ++i) {
        int q = 0;
        Coeffs down = alpha;
        down[i] -= 1;
        while (pos.count(down)) {
          ++q;
          down[i] -= 1;
        }
        long long pair = 0;
        for (int j = 0; j < rank_; ++j) pair += static_cast<long long>(cartan_[i][j]) * alpha[j];
        long long p = q - pair;
        if (p >= 1) {
          Coeffs up = alpha;
          up[i] += 1;
          if (pos.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Coeffs> ordered(pos.begin(), pos.end());
  std::sort(ordered.begin(), ordered.end(), enum_less);
  num_positive_ = static_cast<int>(ordered.size());
  roots_ = ordered;
  roots_.reserve(2 * num_positive_);
  for (const Coeffs& alpha : ordered) {
    Coeffs neg(rank_);
    for (int i = 0; i < rank_; ++i) neg[i] = -alpha[i];
    roots_.push_back(std::move(neg));
  }
  heights_.resize(roots_.size());
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    heights_[k] = std::accumulate(roots_[k].begin(), roots_[k].end(), 0);
    index_[roots_[k]] = static_cast<int>(k);
  }
  simple_index_.resize(rank_);
  for (int i = 0; i < rank_; ++i) {
    Coeffs e(rank_, 0);
    e[i] = 1;
    simple_index_[i] = index_.at(e);
  }
}

int RootSystem::index_of(const Coeffs& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::sum_index(int a, int b) const {
  Coeffs s(rank_);
  bool zero = true;
  for (int i = 0; i < rank_; ++i) {
    s[i] = roots_[a][i] + roots_[b][i];
    zero = zero && s[i] == 0;
  }
  if (zero) return -2;
  return index_of(s);
}

long long RootSystem::inner(const Coeffs& a, const Coeffs& b) const {
  long long out = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) out += a[i] * gram_[i][j] * b[j];
  }
  return out;
}

long long RootSystem::pairing(int i, const Coeffs& v) const {
  long long out = 0;
  for (int j = 0; j < rank_; ++j) out += static_cast<long long>(cartan_[i][j]) * v[j];
  return out;
}

int RootSystem::d_of_root(int idx) const {
  long long n2 = inner(roots_[idx], roots_[idx]);
  return static_cast<int>(n2 / 2);
}

Coeffs RootSystem::coroot(int idx) const {
  int da = d_of_root(idx);
  const Coeffs& alpha = roots_[idx];
  Coeffs out(rank_);
  for (int i = 0; i < rank_; ++i) {
    int v = d_[i] * alpha[i];
    // Integral for every root of every crystallographic system.
    if (v % da != 0) throw Error("non-integral coroot expansion");
    out[i] = v / da;
  }
  return out;
}

PQPair RootSystem::pq(int alpha_idx, int beta_idx) const {
  if (alpha_idx == beta_idx || negate(alpha_idx) == beta_idx)
    throw RootStringError("p/q undefined for alpha = +-beta (" + render(alpha_idx) + ")");
  const Coeffs& alpha = roots_[alpha_idx];
  PQPair out;
  Coeffs v = roots_[beta_idx];
  for (int i = 0; i < rank_; ++i) v[i] -= alpha[i];
  while (index_of(v) >= 0) {
    ++out.q;
    for (int i = 0; i < rank_; ++i) v[i] -= alpha[i];
  }
  v = roots_[beta_idx];
  for (int i = 0; i < rank_; ++i) v[i] += alpha[i];
  while (index_of(v) >= 0) {
    ++out.p;
    for (int i = 0; i < rank_; ++i) v[i] += alpha[i];
  }
  return out;
}

std::string RootSystem::render(const Coeffs& v) const {
  bool compact = rank_ <= 9;
  bool nonneg = true, nonpos = true;
  for (int x : v) {
    if (std::abs(x) > 9) compact = false;
    if (x < 0) nonneg = false;
    if (x > 0) nonpos = false;
  }
  compact = compact && (nonneg || nonpos);
  if (compact) {
    std::string out;
    if (!nonneg) out += '-';
    for (int x : v) out += static_cast<char>('0' + std::abs(x));
    return out;
  }
  std::string out = "[";
  for (int i = 0; i < rank_; ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string RootSystem::render(int idx) const { return render(roots_[idx]); }

int RootSystem::parse_root(const std::string& text) const {
  if (text.empty()) throw ParseError("empty root literal");
  Coeffs v;
  if (text[0] == '[') {
    if (text.back() != ']') throw ParseError("unterminated root literal '" + text + "'");
    std::string body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw ParseError("malformed root literal '" + text + "'");
      try {
        v.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError("malformed root literal '" + text + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    int sign = 1;
    std::size_t start = 0;
    if (text[0] == '-') {
      sign = -1;
      start = 1;
    }
    for (std::size_t i = start; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("malformed root literal '" + text + "'");
      v.push_back(sign * (text[i] - '0'));
    }
  }
  if (static_cast<int>(v.size()) != rank_)
    throw ParseError("root literal '" + text + "' has " + std::to_string(v.size()) +
                     " coefficients, expected " + std::to_string(rank_));
  int idx = index_of(v);
  if (idx < 0) throw Error("'" + text + "' is not a root of " + type_.str());
  return idx;
}

RootSystemPtr build_root_system(CartanType type) {
  type.validate();
  const int r = type.rank;
  std::vector<std::pair<int, int>> chain;
  for (int i = 0; i + 1 < r; ++i) chain.emplace_back(i, i + 1);
  std::vector<std::vector<int>> A;
  std::vector<int> d(r, 1);
  switch (type.letter) {
    case TypeLetter::A:
      A = cartan_from_edges(r, chain);
      break;
    case TypeLetter::B: {
      // alpha_1 short; double bond between 1 and 2 (a_12 = -2).
      std::vector<std::pair<int, int>> singles(chain.begin() + 1, chain.end());
      A = cartan_from_edges(r, singles, {{0, 1}});
      for (int i = 1; i < r; ++i) d[i] = 2;
      break;
    }
    case TypeLetter::C: {
      // alpha_r long; a_{r-1,r} = -2.
      std::vector<std::pair<int, int>> singles(chain.begin(), chain.end() - 1);
      A = cartan_from_edges(r, singles, {{r - 2, r - 1}});
      d[r - 1] = 2;
      break;
    }
    case TypeLetter::D: {
      std::vector<std::pair<int, int>> singles(chain.begin(), chain.end() - 1);
      singles.emplace_back(r - 3, r - 1);
      A = cartan_from_edges(r, singles);
      break;
    }
    case TypeLetter::E: {
      // Bourbaki: chain 1-3-4-5-...-r with 2 attached to 4.
      std::vector<std::pair<int, int>> singles = {{0, 2}, {1, 3}};
      for (int i = 2; i + 1 < r; ++i) singles.emplace_back(i, i + 1);
      A = cartan_from_edges(r, singles);
      break;
    }
    case TypeLetter::F:
      // alpha_1, alpha_2 long; a_32 = -2.
      A = cartan_from_edges(4, {{0, 1}, {2, 3}}, {{2, 1}});
      d = {2, 2, 1, 1};
      break;
    case TypeLetter::G:
      // alpha_1 long; a_21 = -3.
      A = {{2, -1}, {-3, 2}};
      d = {3, 1};
      break;
  }
  auto rs = std::make_shared<RootSystem>(type, std::move(A), std::move(d));
  if (rs->num_roots() != type.root_count())
    throw Error("root count mismatch for " + type.str());
  return rs;
}

}  // namespace chevkit
