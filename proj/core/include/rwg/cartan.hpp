#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rwg {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Series series;
  int rank;

  std::string str() const;
  /// Parse labels like "A3", "E8", "G2". Throws validation_error on bad input.
  static CartanType parse(const std::string& label);

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// (series, rank) is a valid irreducible simple type: A,B,C >= 1, D >= 2,
/// E in {6,7,8}, F = 4, G = 2. (B1 and C1 are accepted as labels for A1-shaped
/// systems, D2 and D3 for A1xA1 / A3.)
bool is_valid_type(const CartanType& t);

/// Throws validation_error(errc::invalid_cartan_type) when invalid.
void require_valid_type(const CartanType& t);

/// Cartan matrix with the convention c[i][j] = <alpha_i, alpha_j^vee>
///                                           = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
std::vector<std::vector<int>> cartan_matrix(const CartanType& t);

/// Order of the Weyl group by the classical formulas.
std::uint64_t weyl_order(const CartanType& t);

/// All Dynkin diagram automorphisms (node permutations preserving the Cartan
/// matrix), identity included, in lexicographic order.
std::vector<std::vector<int>> diagram_automorphisms(const CartanType& t);
std::vector<std::vector<int>> diagram_automorphisms(
    const std::vector<std::vector<int>>& cartan);

}  // namespace rwg
