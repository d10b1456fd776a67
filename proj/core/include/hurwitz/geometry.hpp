// geometry.hpp -- the reduced orbits as covers of the j-line: cusps,
// sh-incidence, genus, and fine-moduli tests.
//
// For a reduced r = 4 orbit O the three words gamma0, gamma1, gamma_inf
// permute O with gamma0^3 = gamma0 gamma1 gamma_inf = id; the orbit genus g
// solves 2(|O| + g - 1) = ind(gamma0) + ind(gamma1) + ind(gamma_inf) where
// ind is (points moved) - (cycles).  Cusps are the gamma_inf cycles; their
// lengths are the cusp widths.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/analysis.hpp"

namespace hurwitz {

struct CuspOrbit {
    std::string label;               // "O(b,c)^w": orbit b, cusp c, width w
    int orbit_index = 0;             // 1-based
    int cusp_index = 0;              // 1-based within the orbit
    int width = 0;
    std::vector<int> member_positions;  // positions into BraidOrbit::members
    int least_node = 0;                 // least class id in the cusp
};

// Cusps of one braid orbit.  Within an orbit, the widest cusp comes first and
// the rest follow in ascending width, ties under either rule going to the
// cusp holding the least class id; this is the deterministic labeling the
// reports use.  orbit_index arguments throughout are 0-based positions into
// Analysis::orbits; the 1-based values appear only in labels and report
// fields.
std::vector<CuspOrbit> cusp_orbits(const Analysis& an, int orbit_index);

struct GenusReport {
    int orbit_size = 0;
    int ind_gamma0 = 0, ind_gamma1 = 0, ind_gamma_inf = 0;
    int genus = 0;
    std::vector<int> cusp_widths;  // in cusp label order
};

GenusReport component_genus(const Analysis& an, int orbit_index);

// Riemann-Hurwitz genus of the cover defined by a product-one tuple acting
// on the letters of its group: 2(n + g - 1) = sum of entry indices.  Throws
// input_error when the entries do not act transitively or the count does not
// yield a nonnegative integer genus.
int cover_genus(const std::vector<Permutation>& tuple);

struct ShIncidence {
    std::vector<CuspOrbit> cusps;            // all orbits, block by block
    std::vector<std::vector<int>> matrix;    // |cusps| x |cusps|
    std::vector<std::pair<int, int>> blocks; // [begin, end) cusp ranges per orbit
};

// Entry (i, j) counts members of cusp i whose sh image lies in cusp j.
// Blocks coincide with the braid orbit partition.
ShIncidence sh_incidence(const Analysis& an);

struct FineModuliFlags {
    bool inner_fine = false;    // trivial center (inner mode)
    bool b_fine = false;        // reduction group acts regularly upstairs
    bool reduced_fine = false;  // b_fine and gamma0, gamma1 fixed-point-free
    int gamma0_fixed_points = 0;
    int gamma1_fixed_points = 0;
};

FineModuliFlags fine_moduli_report(const Analysis& an, int orbit_index);

// The dihedral involution classes seen as covers of the j-line.  Runs the
// degree-l^(k+1) dihedral group with four involution entries through the
// absolute-reduced and inner-reduced pipelines and reports, per mode, the
// orbit sizes, cusp widths, and genus of the (expected single) orbit.
struct ModularSide {
    std::vector<int> orbit_sizes;
    std::vector<int> cusp_widths;  // of the largest orbit, sorted ascending
    int genus = 0;
    int gamma0_fixed = 0;  // elliptic points of period 3 on the largest orbit
    int gamma1_fixed = 0;  // elliptic points of period 2
};

struct DihedralModularReport {
    int ell = 0, k = 0, level = 0;  // level = l^(k+1)
    ModularSide absolute;           // compare with Gamma_0(level)
    ModularSide inner;              // compare with Gamma_1(level)
};

DihedralModularReport dihedral_modular_report(int ell, int k,
                                              std::uint64_t tuple_budget = 10000000);

}  // namespace hurwitz
