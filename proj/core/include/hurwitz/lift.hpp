// lift.hpp -- lift invariants through central covers.
//
// For a cover R -> G with central kernel <z> of prime order l and g in G of
// order prime to l, exactly one preimage of g has the same order; the lift
// invariant of a product-one tuple is the exponent a with
// lift(g_1) ... lift(g_r) = z^a.  It is constant on braid orbits and zero on
// HM tuples.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hurwitz/analysis.hpp"
#include "hurwitz/catalog.hpp"

namespace hurwitz {

// Throws input_error when the kernel order divides the order of g or g is
// not in the base group.
Permutation same_order_lift(const catalog::CentralCover& cover, const Permutation& g);

struct LiftInvariant {
    int value = 0;    // in Z/modulus; 0 means unobstructed
    int modulus = 0;  // kernel order
};

LiftInvariant lift_invariant(const catalog::CentralCover& cover,
                             const std::vector<Permutation>& tuple);

// Lift values of every node of an analysis, plus (budget permitting) the
// surjectivity route: enumerate the cover's own Nielsen class, project every
// tuple down, and record which nodes are hit.  A node is unobstructed exactly
// when its value is 0, and the two routes must agree.
struct LiftAnalysis {
    int modulus = 0;
    std::vector<int> value_of_node;
    bool surjectivity_checked = false;
    std::vector<char> node_hit;  // filled when surjectivity_checked
};

LiftAnalysis lift_analysis(const catalog::CentralCover& cover,
                           const Analysis& an,
                           std::uint64_t cover_tuple_budget);

struct ObstructionReport {
    bool obstructed = false;
    LiftInvariant invariant;
    bool surjectivity_checked = false;
    bool routes_agree = true;  // meaningful when surjectivity_checked
};

ObstructionReport orbit_obstruction(const catalog::CentralCover& cover,
                                    const Analysis& an,
                                    const LiftAnalysis& la,
                                    int orbit_index);

// Reduced classes of a cover-level analysis projected onto base-level nodes,
// one entry per cover node.  The spin comparisons use this to check that the
// unobstructed component is hit bijectively.
std::vector<int> project_nodes(const catalog::CentralCover& cover,
                               const Analysis& cover_an,
                               const Analysis& base_an);

// Braid orbits of the metacyclic group's two order-3 classes (two of each),
// inner-reduced, with lift values through the Heisenberg cover.  l in
// {5, 7, 11, 13}; 11 and 13 need a raised tuple budget.
struct HeisenbergCensus {
    int ell = 0;
    int k_ell = 0;  // (l -+ 1)/6, the predicted number of unobstructed orbits
    struct Row {
        int orbit_index = 0;  // 1-based, matching Analysis::orbits order
        int size = 0;
        int lift_value = 0;
        bool hm = false;
        bool double_identity = false;
    };
    std::vector<Row> rows;
    Analysis analysis;

    int trivial_count = 0;
    bool trivial_all_hm = false;
    bool nontrivial_all_double_identity = false;
    bool nontrivial_values_distinct = false;
};

HeisenbergCensus heisenberg_orbit_census(int ell,
                                         std::uint64_t tuple_budget = 10000000,
                                         std::uint64_t cover_tuple_budget = 10000000);

}  // namespace hurwitz
