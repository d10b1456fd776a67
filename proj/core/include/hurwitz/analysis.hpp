// analysis.hpp -- the full pipeline from a group and class labels to braid
// orbits, bundled so the geometry and lift layers can reference classes by a
// single id space ("nodes": reduced classes when reduction is on, otherwise
// equivalence classes).

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/braid.hpp"
#include "hurwitz/nielsen.hpp"

namespace hurwitz {

struct AnalysisConfig {
    FiniteGroup group;
    std::vector<std::string> class_labels;
    Equivalence mode = Equivalence::inner;
    bool reduce = false;  // requires r = 4

    std::uint64_t element_cap = 100000;
    std::uint64_t tuple_budget = 10000000;
    std::uint64_t shuffle_seed = 0;  // nonzero: randomize internal visitation

    // Absolute mode: used when set, otherwise computed by brute force
    // (degree <= normalizer_degree_bound).
    std::optional<FiniteGroup> normalizer;
    int normalizer_degree_bound = 8;
};

struct Analysis {
    std::shared_ptr<const GroupData> gd;
    ClassVector cv;
    std::unique_ptr<NielsenClass> ni;
    std::optional<FiniteGroup> normalizer;
    std::unique_ptr<EquivalenceTable> eq;
    std::unique_ptr<ReducedTable> red;  // null when not reducing
    std::vector<BraidOrbit> orbits;

    bool reduced() const { return red != nullptr; }
    Equivalence mode() const { return eq->mode(); }
    int node_count() const { return red ? red->count() : eq->count(); }

    // Lexicographically least tuple of the node's full equivalence orbit.
    std::size_t canonical_tuple_index(int node) const;
    std::vector<Permutation> canonical_tuple(int node) const;

    // Node of a raw tuple (by its index in the Nielsen storage).
    int node_of_tuple(std::size_t tuple_idx) const;

    // Equivalence classes making up a node (the node itself when unreduced).
    std::vector<int> node_eq_classes(int node) const;
};

Analysis run_analysis(const AnalysisConfig& config);

}  // namespace hurwitz
