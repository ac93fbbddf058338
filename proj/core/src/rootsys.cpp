#include "rwg/rootsys.hpp"

#include "rwg/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rwg {

namespace {

// Minimal positive integer diagonal d with d_j * c[i][j] == d_i * c[j][i];
// propagates ratios along the Dynkin graph, then clears denominators.
std::vector<std::int64_t> symmetrizer(const std::vector<std::vector<int>>& c) {
  int n = static_cast<int>(c.size());
  std::vector<Rat> d(n, 0);
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0 || d[j] != 0) continue;
        d[j] = d[i] * c[j][i] / c[i][j];
        stack.push_back(j);
      }
    }
  }
  Int lcm_den = 1;
  for (const auto& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  Int gcd_num = 0;
  std::vector<Int> scaled(n);
  for (int i = 0; i < n; ++i) {
    scaled[i] = numerator(Rat(d[i] * lcm_den));
    gcd_num = boost::multiprecision::gcd(gcd_num, scaled[i]);
  }
  std::vector<std::int64_t> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = static_cast<std::int64_t>(scaled[i] / gcd_num);
  return out;
}

int height(const std::vector<int>& r) {
  return std::accumulate(r.begin(), r.end(), 0);
}

}  // namespace

RootSystem RootSystem::build(const CartanType& type) {
  require_valid_type(type);
  RootSystem rs;
  rs.type_ = type;
  rs.cartan_ = cartan_matrix(type);
  rs.rank_ = type.rank;
  const int n = rs.rank_;
  rs.symmetrizer_ = symmetrizer(rs.cartan_);

  rs.form_.assign(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rs.form_[i][j] = rs.symmetrizer_[j] * rs.cartan_[i][j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.form_[i][j] != rs.form_[j][i])
        throw invariant_violation("form_symmetric", "symmetrizer failed for " + type.str());

  // Positive definiteness via leading principal minors.
  {
    RatMat f(n, RatVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) f[i][j] = rs.form_[i][j];
    for (int k = 1; k <= n; ++k) {
      RatMat minor(k, RatVec(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor[i][j] = f[i][j];
      // determinant by fraction-free elimination
      Rat det = 1;
      for (int col = 0; col < k; ++col) {
        int p = col;
        while (p < k && minor[p][col] == 0) ++p;
        if (p == k) { det = 0; break; }
        if (p != col) { std::swap(minor[p], minor[col]); det = -det; }
        det *= minor[col][col];
        for (int r = col + 1; r < k; ++r) {
          Rat fclr = minor[r][col] / minor[col][col];
          for (int cc = col; cc < k; ++cc) minor[r][cc] -= fclr * minor[col][cc];
        }
      }
      if (det <= 0)
        throw invariant_violation("form_positive_definite",
                                  "nonpositive minor for " + type.str());
    }
  }

  // Orbit of the simple roots under the simple reflections.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    work.push_back(std::move(e));
  }
  while (!work.empty()) {
    std::vector<int> r = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < n; ++i) {
      int k = 0;
      for (int j = 0; j < n; ++j) k += r[j] * rs.cartan_[j][i];
      std::vector<int> img = r;
      img[i] -= k;
      if (seen.insert(img).second) work.push_back(img);
    }
  }

  std::vector<std::vector<int>> positives;
  for (const auto& r : seen) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(r.begin(), r.end(), [](int x) { return x <= 0; });
    bool zero = std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
    if (zero || (!nonneg && !nonpos))
      throw invariant_violation("roots_signed", "mixed-sign root generated for " + type.str());
    if (nonneg) positives.push_back(r);
  }
  if (2 * positives.size() != seen.size())
    throw invariant_violation("roots_paired", "negation closure failed for " + type.str());

  std::sort(positives.begin(), positives.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int ha = height(a), hb = height(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  rs.roots_ = positives;
  for (const auto& r : positives) {
    std::vector<int> neg(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    rs.roots_.push_back(std::move(neg));
  }
  for (int i = 0; i < static_cast<int>(rs.roots_.size()); ++i)
    rs.index_[rs.roots_[i]] = i;

  const int total = static_cast<int>(rs.roots_.size());
  rs.root_form_.assign(total, std::vector<std::int64_t>(total));
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      std::int64_t v = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          v += static_cast<std::int64_t>(rs.roots_[i][a]) * rs.form_[a][b] * rs.roots_[j][b];
      rs.root_form_[i][j] = v;
    }

  rs.two_rho_.assign(n, 0);
  for (int i = 0; i < rs.num_positive(); ++i)
    for (int a = 0; a < n; ++a) rs.two_rho_[a] += rs.roots_[i][a];

  rs.weight_basis_.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.weight_basis_[i][j] = rs.cartan_[j][i];
  {
    RatMat wb(n, RatVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) wb[i][j] = rs.weight_basis_[i][j];
    rs.weight_basis_inv_ = rat_inverse(wb);
  }
  return rs;
}

int RootSystem::index_of(const std::vector<int>& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

std::int64_t RootSystem::form_iv(int i, const std::vector<std::int64_t>& v) const {
  std::int64_t out = 0;
  for (int a = 0; a < rank_; ++a) {
    if (roots_[i][a] == 0) continue;
    std::int64_t row = 0;
    for (int b = 0; b < rank_; ++b) row += form_[a][b] * v[b];
    out += roots_[i][a] * row;
  }
  return out;
}

Rat RootSystem::form_rr(const RatVec& u, const RatVec& v) const {
  Rat out = 0;
  for (int a = 0; a < rank_; ++a) {
    if (u[a] == 0) continue;
    Rat row = 0;
    for (int b = 0; b < rank_; ++b)
      if (v[b] != 0) row += Rat(form_[a][b]) * v[b];
    out += u[a] * row;
  }
  return out;
}

Rat RootSystem::pairing(const RatVec& mu, int beta) const {
  RatVec b(rank_);
  for (int a = 0; a < rank_; ++a) b[a] = roots_[beta][a];
  return 2 * form_rr(mu, b) / Rat(root_form_[beta][beta]);
}

Int RootSystem::pairing_weight(const std::vector<Int>& mu_weight, int beta) const {
  // <mu, beta^vee> = 2/(beta,beta) * sum_j m_j a_j d_j  where beta = sum a_j alpha_j,
  // using (omega_j, alpha_i) = delta_ij d_i.
  Int acc = 0;
  for (int j = 0; j < rank_; ++j)
    acc += mu_weight[j] * roots_[beta][j] * symmetrizer_[j];
  acc *= 2;
  Int q, r;
  boost::multiprecision::divide_qr(acc, Int(root_form_[beta][beta]), q, r);
  if (r != 0)
    throw invariant_violation("weight_pairing_integral",
                              "non-integral coroot pairing on the weight lattice");
  return q;
}

RatVec RootSystem::weyl_vector(const std::vector<int>& positive_subset) const {
  RatVec v(rank_, 0);
  for (int i : positive_subset)
    for (int a = 0; a < rank_; ++a) v[a] += Rat(roots_[i][a]) / 2;
  return v;
}

RatVec RootSystem::reflect(int alpha, const RatVec& mu) const {
  Rat k = pairing(mu, alpha);
  RatVec out = mu;
  for (int a = 0; a < rank_; ++a) out[a] -= k * roots_[alpha][a];
  return out;
}

std::vector<int> RootSystem::reflection_perm(int alpha) const {
  const int total = size();
  std::vector<int> perm(total);
  for (int i = 0; i < total; ++i) {
    std::int64_t num = 2 * root_form_[i][alpha];
    std::int64_t den = root_form_[alpha][alpha];
    std::int64_t k = num / den;
    if (k * den != num)
      throw invariant_violation("cartan_integrality", "non-integer coroot pairing");
    std::vector<int> img = roots_[i];
    for (int a = 0; a < rank_; ++a) img[a] -= static_cast<int>(k) * roots_[alpha][a];
    int idx = index_of(img);
    if (idx < 0)
      throw invariant_violation("reflection_closure", "reflection left the root set");
    perm[i] = idx;
  }
  return perm;
}

std::vector<int> RootSystem::root_permutation(const RatMat& linear_map) const {
  const int total = size();
  std::vector<int> perm(total, -1);
  std::vector<bool> hit(total, false);
  for (int i = 0; i < total; ++i) {
    std::vector<int> img(rank_);
    for (int a = 0; a < rank_; ++a) {
      Rat v = 0;
      for (int b = 0; b < rank_; ++b)
        if (linear_map[a][b] != 0) v += linear_map[a][b] * roots_[i][b];
      if (!is_integral(v))
        throw validation_error(errc::theta_not_root_map,
                               "image of a root has non-integral coordinates");
      img[a] = static_cast<int>(numerator(v));
    }
    int idx = index_of(img);
    if (idx < 0)
      throw validation_error(errc::theta_not_root_map,
                             "linear map does not preserve the root set");
    if (hit[idx])
      throw validation_error(errc::theta_not_root_map,
                             "linear map is not injective on the root set");
    hit[idx] = true;
    perm[i] = idx;
  }
  return perm;
}

std::vector<int> RootSystem::root_permutation(
    const std::vector<std::vector<int>>& map) const {
  RatMat m(rank_, RatVec(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[i][j] = map[i][j];
  return root_permutation(m);
}

std::vector<std::vector<int>> RootSystem::matrix_of_perm(
    const std::vector<int>& perm) const {
  std::vector<std::vector<int>> m(rank_, std::vector<int>(rank_, 0));
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    int idx = index_of(e);
    const auto& img = roots_[perm[idx]];
    for (int a = 0; a < rank_; ++a) m[a][i] = img[a];
  }
  return m;
}

RatVec RootSystem::to_weight_coords(const RatVec& simple_coords) const {
  RatVec out(rank_, 0);
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i)
      if (weight_basis_[j][i] != 0) out[j] += Rat(weight_basis_[j][i]) * simple_coords[i];
  return out;
}

RatVec RootSystem::from_weight_coords(const RatVec& weight_coords) const {
  return rat_mul_vec(weight_basis_inv_, weight_coords);
}

}  // namespace rwg
