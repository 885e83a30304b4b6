#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "racklab/rack.hpp"

namespace racklab {

// Affine rack (F_p^t, T) with T the companion matrix of a monic polynomial.
// coefficients holds c_0 .. c_t of c_0 + c_1 X + ... + c_t X^t, so c_t = 1.
struct AffineSpec {
  int p = 2;
  int t = 1;
  std::vector<int> coefficients;

  // Prime p, monic of degree t, irreducible, and neither X nor X - 1.
  void validate() const;

  // "affine:p:t:c0,...,ct"
  std::string to_string() const;
  static AffineSpec parse(std::string_view text);
};

// Monic polynomial over F_p, coefficients ascending.
bool is_irreducible(const std::vector<int>& coefficients, int p);

// Every monic irreducible polynomial of degree t over F_p other than X and X - 1.
std::vector<AffineSpec> affine_specs(int p, int t);

// x |> y = x + g(y - x) with g multiplication by X in F_p[X]/(poly). Vectors
// are indexed by their base-p digits, coordinate 0 least significant.
FiniteRack affine_rack(const AffineSpec& spec);

}  // namespace racklab
