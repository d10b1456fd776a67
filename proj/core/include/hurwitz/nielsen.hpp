// nielsen.hpp -- Nielsen class enumeration and equivalence tables.
//
// A Nielsen class Ni(G, C) is the set of r-tuples from G that fill the class
// multiset C, multiply to the identity left to right, and generate G.  Tuples
// are stored as element ids (positions in the sorted element list), so the
// lexicographic order on id tuples coincides with the lexicographic order on
// concatenated image arrays.  Storage is a single flat array sorted in that
// order; a tuple is found by binary search and identified by its index.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/group.hpp"

namespace hurwitz {

enum class Equivalence { inner, absolute };

struct ClassVector {
    std::vector<int> entries;  // class indices into GroupData::classes, ascending
    long long n_c = 1;         // lcm of the entry orders

    int r() const { return static_cast<int>(entries.size()); }
};

// Resolves labels like "+3", "-3", "2", "2.1" against the group's classes.
// A bare "k" that is not itself an assigned label resolves to the first
// order-k class in representative order.  Unknown labels throw input_error.
ClassVector resolve_class_vector(const GroupData& gd, const std::vector<std::string>& labels);

std::vector<std::string> class_vector_labels(const GroupData& gd, const ClassVector& cv);

// True when the union of the entry classes generates the group.
bool class_vector_generates(const GroupData& gd, const ClassVector& cv);

class NielsenClass {
public:
    // Chooses g1..g_{r-1} from the class union, sets g_r to the inverse of
    // the running product, and keeps tuples that match the class multiset
    // and generate.  Throws budget_error when |union|^(r-1) exceeds
    // tuple_budget, input_error when r = 0 or C does not generate.
    static NielsenClass enumerate(std::shared_ptr<const GroupData> gd,
                                  ClassVector cv,
                                  std::uint64_t tuple_budget);

    const GroupData& data() const { return *gd_; }
    std::shared_ptr<const GroupData> data_ptr() const { return gd_; }
    const ClassVector& class_vector() const { return cv_; }
    int r() const { return cv_.r(); }

    std::size_t count() const { return count_; }
    std::span<const std::uint32_t> tuple(std::size_t idx) const {
        return {flat_.data() + idx * static_cast<std::size_t>(cv_.r()),
                static_cast<std::size_t>(cv_.r())};
    }
    // Index of the tuple in the sorted storage, or nullopt if absent.
    std::optional<std::size_t> find(std::span<const std::uint32_t> t) const;

    std::vector<Permutation> materialize(std::size_t idx) const;

private:
    std::shared_ptr<const GroupData> gd_;
    ClassVector cv_;
    std::vector<std::uint32_t> flat_;
    std::size_t count_ = 0;
};

// One canonical representative per orbit of entrywise conjugation: by the
// group itself (inner) or by a supplied normalizer (absolute).  Classes are
// numbered so that canonical tuple indices increase with the class id.
class EquivalenceTable {
public:
    static EquivalenceTable build_inner(const NielsenClass& ni,
                                        std::uint64_t shuffle_seed = 0);
    // normalizer must normalize G and permute the classes of C (validated).
    static EquivalenceTable build_absolute(const NielsenClass& ni,
                                           const FiniteGroup& normalizer,
                                           std::uint64_t shuffle_seed = 0);

    Equivalence mode() const { return mode_; }
    int count() const { return count_; }
    int class_of(std::size_t tuple_idx) const { return class_of_tuple_[tuple_idx]; }
    // Tuple index of the lexicographically least member.
    std::size_t canonical(int cls) const { return canonical_[cls]; }

private:
    Equivalence mode_ = Equivalence::inner;
    int count_ = 0;
    std::vector<std::int32_t> class_of_tuple_;
    std::vector<std::size_t> canonical_;
};

// Orbits of the reduction subgroup generated by q1*q3^-1 and sh^2 acting on
// equivalence classes; defined for r = 4 only.
class ReducedTable {
public:
    static ReducedTable build(const NielsenClass& ni,
                              const EquivalenceTable& eq,
                              std::uint64_t shuffle_seed = 0);

    int count() const { return count_; }
    int reduced_of(int eq_class) const { return red_of_class_[eq_class]; }
    // Least equivalence class in the orbit; its canonical tuple is the
    // orbit's lexicographic minimum.
    int canonical_class(int red) const { return canonical_class_[red]; }
    const std::vector<int>& members(int red) const { return members_[red]; }

    // Action of the two reduction generators on equivalence classes.
    int q1q3inv_of(int eq_class) const { return q1q3inv_[eq_class]; }
    int sh2_of(int eq_class) const { return sh2_[eq_class]; }

private:
    int count_ = 0;
    std::vector<std::int32_t> red_of_class_;
    std::vector<int> canonical_class_;
    std::vector<std::vector<int>> members_;
    std::vector<int> q1q3inv_, sh2_;
};

}  // namespace hurwitz
