// braid.hpp -- the braid twists, the shift, and braid orbits.
//
// q_i replaces (g_i, g_{i+1}) by (g_i g_{i+1} g_i^-1, g_i); sh rotates the
// tuple left by one.  Both preserve product-one, generation, and the class
// multiset.  Words act on the right: apply_word(t, {1, 2}) applies q_1 first.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hurwitz/nielsen.hpp"

namespace hurwitz {

// Id-level moves; i is 1-based, 1 <= i <= r-1.
void apply_qi(const GroupOps& ops, std::span<std::uint32_t> t, int i);
void apply_qi_inv(const GroupOps& ops, std::span<std::uint32_t> t, int i);
void apply_sh(std::span<std::uint32_t> t);
void apply_sh_inv(std::span<std::uint32_t> t);

// Word letters: +i applies q_i, -i applies q_i^-1, SH/SH_INV the shift.
inline constexpr int SH = 1000;
inline constexpr int SH_INV = -1000;
void apply_word(const GroupOps& ops, std::span<std::uint32_t> t, std::span<const int> word);

// Permutation-level convenience wrappers.
std::vector<Permutation> apply_qi(std::vector<Permutation> t, int i);
std::vector<Permutation> apply_sh(std::vector<Permutation> t);

// True for tuples of even length pairing consecutive inverse entries exactly
// as written: (g_1, g_1^-1, g_2, g_2^-1, ...).
bool is_hm_tuple(const GroupOps& ops, std::span<const std::uint32_t> t);
bool is_hm_tuple(const std::vector<Permutation>& t);

// True when two adjacent positions carry equal entries.
bool is_double_identity_tuple(std::span<const std::uint32_t> t);
bool is_double_identity_tuple(const std::vector<Permutation>& t);

// A braid orbit on equivalence classes (reduced when built over a
// ReducedTable).  members holds class ids ascending; for reduced r = 4
// orbits the three elliptic words
//   gamma0 = q1 q2,  gamma1 = q1 q2 q1,  gamma_inf = q2
// are attached as permutations of the member positions.
struct BraidOrbit {
    std::vector<int> members;
    bool reduced = false;
    Equivalence mode = Equivalence::inner;

    std::vector<int> gamma0, gamma1, gamma_inf;  // member position -> member position

    bool hm = false;               // some underlying tuple is an HM tuple
    bool double_identity = false;  // some underlying tuple repeats adjacently

    int size() const { return static_cast<int>(members.size()); }
};

// Partition of the classes (reduced classes when red != nullptr) into orbits
// under all q_i and sh, sorted by size descending, then by least member.
// Flags are filled by scanning every raw tuple of the Nielsen class.
std::vector<BraidOrbit> braid_orbits(const NielsenClass& ni,
                                     const EquivalenceTable& eq,
                                     const ReducedTable* red = nullptr,
                                     std::uint64_t shuffle_seed = 0);

}  // namespace hurwitz
