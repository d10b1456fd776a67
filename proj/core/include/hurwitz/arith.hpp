// arith.hpp -- cyclotomic action on class vectors and l-perfectness.
//
// Units m mod N_C (N_C = lcm of the entry orders) act on a class vector by
// raising representatives to the m-th power classwise.  The stabilizer of the
// multiset is a subgroup of (Z/N_C)*; with a normalizer present, conjugation
// is allowed before comparing.  The class vector is a rational union exactly
// when the plain stabilizer is all of (Z/N_C)*.

#pragma once

#include <vector>

#include "hurwitz/nielsen.hpp"

namespace hurwitz {

struct BclData {
    long long n_c = 1;
    std::vector<long long> inner_subgroup;     // sorted units fixing C classwise
    std::vector<long long> absolute_subgroup;  // units fixing C up to normalizer conjugation
    bool rational_union = false;
    bool normalizer_supplied = false;
};

BclData bcl_data(const GroupData& gd,
                 const ClassVector& cv,
                 const FiniteGroup* normalizer = nullptr);

// True when the subgroup generated by all commutators and all l-th powers
// has index prime to l; equivalently the group has no surjection onto Z/l.
bool is_ell_perfect(const FiniteGroup& G, int ell);

// True when every entry class has order prime to l.
bool ell_prime_classes(const GroupData& gd, const ClassVector& cv, int ell);

}  // namespace hurwitz
