#include "rwg/cartan.hpp"

#include "rwg/error.hpp"

#include <algorithm>
#include <cctype>

namespace rwg {

std::string CartanType::str() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

CartanType CartanType::parse(const std::string& label) {
  if (label.size() < 2)
    throw validation_error(errc::invalid_cartan_type,
                           "type label too short: '" + label + "'");
  char s = static_cast<char>(std::toupper(label[0]));
  if (s < 'A' || s > 'G')
    throw validation_error(errc::invalid_cartan_type,
                           "unknown series in '" + label + "'");
  int rank = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i])))
      throw validation_error(errc::invalid_cartan_type,
                             "bad rank in '" + label + "'");
    rank = rank * 10 + (label[i] - '0');
    // group orders beyond rank 16 overflow 64-bit counters
    if (rank > 16)
      throw validation_error(errc::invalid_cartan_type,
                             "rank out of range in '" + label + "'");
  }
  CartanType t{static_cast<Series>(s), rank};
  require_valid_type(t);
  return t;
}

bool is_valid_type(const CartanType& t) {
  switch (t.series) {
    case Series::A:
    case Series::B:
    case Series::C: return t.rank >= 1;
    case Series::D: return t.rank >= 2;
    case Series::E: return t.rank >= 6 && t.rank <= 8;
    case Series::F: return t.rank == 4;
    case Series::G: return t.rank == 2;
  }
  return false;
}

void require_valid_type(const CartanType& t) {
  if (!is_valid_type(t))
    throw validation_error(errc::invalid_cartan_type,
                           "invalid simple type " + t.str());
}

std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  require_valid_type(t);
  int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::B:
      // last simple root short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) { c[n - 2][n - 1] = -2; c[n - 1][n - 2] = -1; }
      break;
    case Series::C:
      // last simple root long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) { c[n - 2][n - 1] = -1; c[n - 1][n - 2] = -2; }
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      if (n >= 3) link(n - 3, n - 1);
      break;
    case Series::E:
      // chain 0-2-3-4-...-(n-1), node 1 attached to node 3
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::F:
      link(0, 1);
      c[1][2] = -2; c[2][1] = -1;  // 0,1 long; 2,3 short
      link(2, 3);
      break;
    case Series::G:
      c[0][1] = -1; c[1][0] = -3;  // 0 short, 1 long
      break;
  }
  return c;
}

std::uint64_t weyl_order(const CartanType& t) {
  require_valid_type(t);
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  int n = t.rank;
  switch (t.series) {
    case Series::A: return factorial(n + 1);
    case Series::B:
    case Series::C: return factorial(n) << n;
    case Series::D:
      return n == 2 ? 4 : (factorial(n) << (n - 1));
    case Series::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  return 0;
}

std::vector<std::vector<int>> diagram_automorphisms(
    const std::vector<std::vector<int>>& cartan) {
  int n = static_cast<int>(cartan.size());
  std::vector<std::vector<int>> result;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](int i, int img) {
    for (int j = 0; j < n; ++j) {
      if (perm[j] < 0) continue;
      if (cartan[i][j] != cartan[img][perm[j]]) return false;
      if (cartan[j][i] != cartan[perm[j]][img]) return false;
    }
    return cartan[i][i] == cartan[img][img];
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      result.push_back(perm);
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (used[img] || !consistent(i, img)) continue;
      perm[i] = img;
      used[img] = true;
      self(self, i + 1);
      used[img] = false;
      perm[i] = -1;
    }
  };
  rec(rec, 0);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::vector<int>> diagram_automorphisms(const CartanType& t) {
  return diagram_automorphisms(cartan_matrix(t));
}

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_cartan_type: return "invalid_cartan_type";
    case errc::theta_not_integral: return "theta_not_integral";
    case errc::theta_not_involution: return "theta_not_involution";
    case errc::theta_not_root_map: return "theta_not_root_map";
    case errc::theta_not_isometry: return "theta_not_isometry";
    case errc::seed_root_invalid: return "seed_root_invalid";
    case errc::seed_root_not_imaginary: return "seed_root_not_imaginary";
    case errc::grading_inconsistent: return "grading_inconsistent";
    case errc::grading_underdetermined: return "grading_underdetermined";
    case errc::positivity_degenerate: return "positivity_degenerate";
    case errc::descriptor_malformed: return "descriptor_malformed";
    case errc::unknown_catalog_id: return "unknown_catalog_id";
  }
  return "unknown";
}

}  // namespace rwg
