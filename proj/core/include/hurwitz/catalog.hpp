// catalog.hpp -- the built-in groups and central covers.
//
// Every catalog group is a concrete permutation group; every cover carries a
// projection table validated at construction (homomorphism on all pairs,
// central kernel of prime order generated by kernel_generator).

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/group.hpp"

namespace hurwitz::catalog {

// Natural actions, 3 <= n <= 8.
FiniteGroup alternating(int n);
FiniteGroup symmetric(int n);

// Degree-m dihedral group of order 2m, m odd >= 3.  Letters are residues
// mod m shifted to 1..m; rotations i -> i+k, reflections i -> c-i.
FiniteGroup dihedral(int m);

// (Z/l)^2 semidirect Z/3, order 3*l^2, acting on the l^2 points (x,y) by
// affine maps; the Z/3 factor acts through the order-3 matrix
// A = [[0,-1],[1,-1]].  l must be prime and not 3; l = 2 gives the
// alternating group on 4 letters.
FiniteGroup metacyclic_l2_3(int ell);

struct CentralCover {
    FiniteGroup total;
    FiniteGroup base;
    // total element id -> base element id (ids index the sorted element
    // lists of the respective groups).
    std::vector<std::uint32_t> projection;
    int kernel_order = 0;            // prime
    Permutation kernel_generator;    // generates the kernel, central in total

    std::string name;

    const Permutation& project(const Permutation& h) const;
};

// Double cover of the alternating group on 4 letters: the 2x2 determinant-1
// matrices over F_3 acting on the 8 nonzero vectors; base is the induced
// action on the 4 lines through the origin.
CentralCover spin_cover_a4();

// Double cover of the alternating group on 5 letters: determinant-1 matrices
// over F_5 on the 24 nonzero vectors; base is the action on the 5 cosets of
// an order-24 subgroup, which realizes the quotient as the alternating group
// in its natural degree-5 action.
CentralCover spin_cover_a5();

// Heisenberg cover of metacyclic_l2_3(l) for prime l > 3: upper unitriangular
// 3x3 matrices over Z/l extended by the same Z/3, total order 3*l^3, acting
// on the l^3 matrix entries (x,y,z).  The Z/3 action on the Heisenberg group
// needs a quadratic correction on the center coordinate; it is solved for and
// verified at construction.
CentralCover heisenberg_cover(int ell);

// CLI names.  Groups: A4 A5 S4 D5 D7 D25 M5, or "perm:<cycles>;<cycles>;..."
// for an ad-hoc group closed from the given generators.
FiniteGroup group_by_name(std::string_view name, std::size_t element_cap = 100000);
bool is_cover_name(std::string_view name);
CentralCover cover_by_name(std::string_view name);  // spinA4 spinA5 heis5
std::vector<std::string> catalog_group_names();
std::vector<std::string> catalog_cover_names();

// Normalizer of dihedral(m) in the symmetric group on m letters for odd
// prime powers m: the affine maps x -> a*x + b with a invertible mod m.
// Used to form absolute classes at degrees past the brute-force bound.
FiniteGroup dihedral_affine_normalizer(int m);

}  // namespace hurwitz::catalog
