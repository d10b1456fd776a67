// group.hpp -- materialized finite permutation groups and their class data.
//
// Groups are stored with their full element list, sorted lexicographically by
// image array.  All deterministic orderings in the library derive from that
// sort: element ids are positions in the sorted list, so comparing ids is the
// same as comparing image arrays.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

struct FiniteGroup {
    int degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;  // sorted, unique
    std::string name;

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(const Permutation& p) const;  // binary search
    bool is_transitive() const;
};

// Closes the generators under multiplication.  Throws budget_error if the
// group would exceed cap elements.
FiniteGroup group_closure(std::vector<Permutation> generators,
                          std::size_t cap,
                          std::string name = "");

struct ConjClass {
    Permutation representative;         // lexicographically least member
    std::vector<Permutation> members;   // sorted
    std::string label;
    int element_order = 0;
};

// Classes sorted by (element order, representative).  Labels: "k" when the
// order-k class is unique; "+k"/"-k" when there are exactly two order-k
// classes and they are each other's inverse class (the one with the lesser
// representative gets "+"); otherwise "k.1", "k.2", ... in representative
// order.
std::vector<ConjClass> conjugacy_classes(const FiniteGroup& G);

std::vector<Permutation> center(const FiniteGroup& G);

// Normalizer of G inside the symmetric group on G.degree letters, restricted
// to elements whose conjugation action preserves the class multiset given by
// class_multiset (indices into classes).  Degrees above brute_force_bound
// require supplied_generators (these are validated, then closed).
FiniteGroup normalizer_in_symmetric(const FiniteGroup& G,
                                    const std::vector<ConjClass>& classes,
                                    const std::vector<int>& class_multiset,
                                    int brute_force_bound = 8,
                                    const std::vector<Permutation>* supplied_generators = nullptr,
                                    std::size_t cap = 100000);

// Id-level multiplication over a group's sorted element list.  Builds a full
// multiplication table when |G|^2 is small enough, otherwise composes on the
// fly and hashes the result back to an id.
class GroupOps {
public:
    explicit GroupOps(const FiniteGroup& G, std::size_t table_limit = std::size_t{1} << 24);

    std::uint32_t size() const { return n_; }
    std::uint32_t identity() const { return identity_; }
    std::uint32_t id_of(const Permutation& p) const;       // throws input_error if absent
    const Permutation& perm(std::uint32_t id) const { return G_->elements[id]; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;  // a then b
    std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
    // h g h^-1
    std::uint32_t conj(std::uint32_t g, std::uint32_t h) const {
        return mul(mul(h, g), inv_[h]);
    }
    std::uint32_t power(std::uint32_t a, long long e) const;
    int order(std::uint32_t a) const { return order_[a]; }

    const FiniteGroup& group() const { return *G_; }

private:
    const FiniteGroup* G_;
    std::uint32_t n_ = 0;
    std::uint32_t identity_ = 0;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<std::uint32_t> inv_;
    std::vector<int> order_;
    std::vector<std::uint32_t> table_;  // n*n when built
    bool has_table_ = false;

    static std::string key(const Permutation& p);
};

// Subgroup generated by the given element ids, as sorted ids.
std::vector<std::uint32_t> subgroup_closure_ids(const GroupOps& ops,
                                                std::span<const std::uint32_t> gens);

// True when the ids generate the whole group.  Exits early once the closure
// passes half the group order, since a proper subgroup cannot.
bool generates_group(const GroupOps& ops, std::span<const std::uint32_t> gens);

// A group bundled with its conjugacy classes and id-level tables; the unit
// everything downstream works from.
struct GroupData {
    FiniteGroup group;
    std::vector<ConjClass> classes;
    std::vector<int> class_of;  // element id -> class index
    std::unique_ptr<GroupOps> ops;

    static std::shared_ptr<const GroupData> make(FiniteGroup G);

    int class_index_of_label(const std::string& label) const;  // -1 if absent
};

}  // namespace hurwitz
