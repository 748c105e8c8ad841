#pragma once

#include <vector>

#include "orbsym/linalg.hpp"

namespace orbsym::catalog {

// Generator sets for the built-in groups used by the demo, tests and
// benchmarks. Orders refer to the closed group.

CMatrix rotation90();               // [[0,-1],[1,0]]
CMatrix rotation2d(double theta);
CMatrix coordinate_cycle(Eigen::Index n);  // e_j -> e_{j+1 mod n}
CMatrix coordinate_swap01(Eigen::Index n);

std::vector<CMatrix> trivial(Eigen::Index n);   // order 1
std::vector<CMatrix> cyclic_u1(int k);          // <e^{2 pi i/k}> in U(1)
std::vector<CMatrix> cyclic_rotation(int k);    // plane rotation by 2 pi/k
std::vector<CMatrix> negation(Eigen::Index n);  // {-I}, order 2
std::vector<CMatrix> quaternion8();             // {diag(i,-i), [[0,1],[-1,0]]}, order 8
std::vector<CMatrix> dihedral8();               // {rotation90, diag(1,-1)}, order 8
std::vector<CMatrix> symmetric_permutations(Eigen::Index n);  // S_n, order n!

}  // namespace orbsym::catalog
