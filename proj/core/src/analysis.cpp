#include "hurwitz/analysis.hpp"

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::size_t Analysis::canonical_tuple_index(int node) const {
    if (node < 0 || node >= node_count())
        throw input_error("node index out of range");
    return eq->canonical(red ? red->canonical_class(node) : node);
}

std::vector<Permutation> Analysis::canonical_tuple(int node) const {
    return ni->materialize(canonical_tuple_index(node));
}

int Analysis::node_of_tuple(std::size_t tuple_idx) const {
    int c = eq->class_of(tuple_idx);
    return red ? red->reduced_of(c) : c;
}

std::vector<int> Analysis::node_eq_classes(int node) const {
    if (node < 0 || node >= node_count())
        throw input_error("node index out of range");
    return red ? red->members(node) : std::vector<int>{node};
}

Analysis run_analysis(const AnalysisConfig& config) {
    Analysis an;
    an.gd = GroupData::make(config.group);
    an.cv = resolve_class_vector(*an.gd, config.class_labels);
    an.ni = std::make_unique<NielsenClass>(
        NielsenClass::enumerate(an.gd, an.cv, config.tuple_budget));

    if (config.mode == Equivalence::inner) {
        an.eq = std::make_unique<EquivalenceTable>(
            EquivalenceTable::build_inner(*an.ni, config.shuffle_seed));
    } else {
        const std::vector<Permutation>* supplied =
            config.normalizer ? &config.normalizer->generators : nullptr;
        an.normalizer = normalizer_in_symmetric(an.gd->group, an.gd->classes, an.cv.entries,
                                                config.normalizer_degree_bound, supplied,
                                                config.element_cap);
        an.eq = std::make_unique<EquivalenceTable>(
            EquivalenceTable::build_absolute(*an.ni, *an.normalizer, config.shuffle_seed));
    }

    if (config.reduce)
        an.red = std::make_unique<ReducedTable>(
            ReducedTable::build(*an.ni, *an.eq, config.shuffle_seed));

    an.orbits = braid_orbits(*an.ni, *an.eq, an.red.get(), config.shuffle_seed);
    return an;
}

}  // namespace hurwitz
