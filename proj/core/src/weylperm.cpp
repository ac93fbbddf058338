#include "rwg/weylperm.hpp"

#include "rwg/error.hpp"

#include <algorithm>
#include <sstream>

namespace rwg {

Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

bool perm_commute(const Perm& a, const Perm& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[b[i]] != b[a[i]]) return false;
  return true;
}

std::string perm_cycles(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    do {
      seen[x] = true;
      if (!first) os << ' ';
      os << x;
      first = false;
      x = static_cast<std::size_t>(p[x]);
    } while (x != start);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : p) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

bool is_weyl_permutation(const RootSystem& rs, const Perm& p) {
  if (static_cast<int>(p.size()) != rs.size()) return false;
  std::vector<bool> hit(p.size(), false);
  for (int img : p) {
    if (img < 0 || img >= rs.size() || hit[img]) return false;
    hit[img] = true;
  }
  for (int i = 0; i < rs.size(); ++i)
    if (p[rs.negative_of(i)] != rs.negative_of(p[i])) return false;
  // Form preservation; linearity follows because the roots span and the
  // images respect all pairings.
  for (int i = 0; i < rs.size(); ++i)
    for (int j = i; j < rs.size(); ++j)
      if (rs.form(p[i], p[j]) != rs.form(i, j)) return false;
  return true;
}

PermGroup PermGroup::generate(int degree, const std::vector<Perm>& gens) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree)
      throw invariant_violation("perm_degree", "generator of wrong degree");
    g.input_gens_.push_back(p);
  }
  for (const auto& p : g.input_gens_) {
    auto [residue, level] = g.strip(p, 0);
    if (!perm_is_identity(residue)) {
      g.add_strong(residue, level);
      g.process_all();
    }
  }
  return g;
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    int image = g[lv.base];
    int position = lv.pos[image];
    if (position < 0) return {std::move(g), i};
    g = perm_compose(lv.transversal_inv[position], g);
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::add_strong(const Perm& h, std::size_t level) {
  if (level == levels_.size()) {
    // h fixes every existing base point; open a new level at its first
    // moved point.
    int moved = -1;
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] != static_cast<int>(i)) {
        moved = static_cast<int>(i);
        break;
      }
    if (moved < 0) return;
    Level lv;
    lv.base = moved;
    lv.pos.assign(degree_, -1);
    lv.orbit.push_back(moved);
    lv.pos[moved] = 0;
    lv.transversal.push_back(perm_identity(degree_));
    lv.transversal_inv.push_back(perm_identity(degree_));
    levels_.push_back(std::move(lv));
  }
  int idx = static_cast<int>(strong_.size());
  strong_.push_back(h);
  // h fixes base[0..level-1], so it is a strong generator for every level
  // up to `level`.
  for (std::size_t k = 0; k <= level && k < levels_.size(); ++k) {
    Level& lv = levels_[k];
    int local = static_cast<int>(lv.gens.size());
    lv.gens.push_back(idx);
    for (std::size_t p = 0; p < lv.orbit.size(); ++p)
      lv.pending.emplace_back(static_cast<int>(p), local);
    grow_orbit(k, static_cast<std::size_t>(local));
  }
}

void PermGroup::grow_orbit(std::size_t level, std::size_t new_gen_local) {
  Level& lv = levels_[level];
  std::vector<int> fresh;
  auto visit = [&](const Perm& gen, int position) {
    int image = gen[lv.orbit[position]];
    if (lv.pos[image] >= 0) return;
    lv.pos[image] = static_cast<int>(lv.orbit.size());
    lv.orbit.push_back(image);
    lv.transversal.push_back(perm_compose(gen, lv.transversal[position]));
    lv.transversal_inv.push_back(perm_inverse(lv.transversal.back()));
    for (std::size_t g = 0; g < lv.gens.size(); ++g)
      lv.pending.emplace_back(lv.pos[image], static_cast<int>(g));
    fresh.push_back(lv.pos[image]);
  };
  const std::size_t existing = lv.orbit.size();
  for (std::size_t p = 0; p < existing; ++p)
    visit(strong_[lv.gens[new_gen_local]], static_cast<int>(p));
  for (std::size_t qi = 0; qi < fresh.size(); ++qi)
    for (std::size_t g = 0; g < lv.gens.size(); ++g)
      visit(strong_[lv.gens[g]], fresh[qi]);
}

void PermGroup::process_all() {
  while (true) {
    int deepest = -1;
    for (std::size_t i = 0; i < levels_.size(); ++i)
      if (!levels_[i].pending.empty()) deepest = static_cast<int>(i);
    if (deepest < 0) break;
    Level& lv = levels_[deepest];
    auto [position, local_gen] = lv.pending.back();
    lv.pending.pop_back();
    const Perm& gen = strong_[lv.gens[local_gen]];
    int point = lv.orbit[position];
    int image_pos = lv.pos[gen[point]];
    Perm schreier = perm_compose(
        lv.transversal_inv[image_pos],
        perm_compose(gen, lv.transversal[position]));
    if (perm_is_identity(schreier)) continue;
    auto [residue, level] = strip(std::move(schreier),
                                  static_cast<std::size_t>(deepest) + 1);
    if (!perm_is_identity(residue))
      add_strong(residue, level);
  }
}

std::uint64_t PermGroup::order() const {
  std::uint64_t n = 1;
  for (const auto& lv : levels_) n *= static_cast<std::uint64_t>(lv.orbit.size());
  return n;
}

bool PermGroup::contains(const Perm& p) const {
  if (static_cast<int>(p.size()) != degree_) return false;
  auto [residue, level] = strip(p, 0);
  (void)level;
  return perm_is_identity(residue);
}

ThetaFixedGenerators theta_fixed_subgroup_decomposition(
    const RootSystem& rs, const RootClassification& cl,
    const ThetaSwapSplit& split) {
  ThetaFixedGenerators out;
  if (!split.psi1.empty()) {
    auto simples = simple_roots_of(rs, split.psi1,
                                   std::optional<RatVec>(split.regular_vector));
    for (int s : simples)
      out.c_theta.push_back(perm_compose(rs.reflection_perm(s),
                                         rs.reflection_perm(cl.theta_perm[s])));
  }
  if (!cl.real_roots.empty())
    for (int s : simple_roots_of(rs, cl.real_roots, std::nullopt))
      out.re.push_back(rs.reflection_perm(s));
  if (!cl.imaginary_roots.empty())
    for (int s : simple_roots_of(rs, cl.imaginary_roots, std::nullopt))
      out.im.push_back(rs.reflection_perm(s));
  return out;
}

std::vector<Perm> compact_imaginary_generators(const RootSystem& rs,
                                               const RootClassification& cl) {
  std::vector<Perm> gens;
  if (!cl.compact_imaginary.empty())
    for (int s : simple_roots_of(rs, cl.compact_imaginary, std::nullopt))
      gens.push_back(rs.reflection_perm(s));
  return gens;
}

bool w_im2_membership(const RootSystem& rs, const Perm& w,
                      const RootClassification& cl) {
  (void)rs;
  for (int i : cl.compact_imaginary)
    if (!(cl.kind[w[i]] == RootKind::imaginary && cl.sign[w[i]] > 0)) return false;
  return true;
}

bool q_membership(const RootSystem& rs, const Perm& w,
                  const std::vector<std::int64_t>& two_rho_im_c) {
  auto m = rs.matrix_of_perm(w);
  for (int a = 0; a < rs.rank(); ++a) {
    std::int64_t v = 0;
    for (int b = 0; b < rs.rank(); ++b)
      v += static_cast<std::int64_t>(m[a][b]) * two_rho_im_c[b];
    if (v != two_rho_im_c[a]) return false;
  }
  return true;
}

}  // namespace rwg
