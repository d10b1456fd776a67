#include "hurwitz/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "hurwitz/errors.hpp"

namespace hurwitz {

bool FiniteGroup::contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

bool FiniteGroup::is_transitive() const {
    if (degree == 0) return true;
    std::vector<char> seen(degree, 0);
    std::vector<Letter> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Letter v = stack.back();
        stack.pop_back();
        for (const auto& g : generators) {
            Letter w = g(v);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == degree;
}

FiniteGroup group_closure(std::vector<Permutation> generators, std::size_t cap, std::string name) {
    if (generators.empty())
        throw input_error("group_closure: no generators");
    int degree = generators[0].degree();
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw input_error("group_closure: generator degree mismatch");

    // Multiplying by generators and their inverses from the identity reaches
    // every element of the generated group.
    std::vector<Permutation> muls = generators;
    for (const auto& g : generators) muls.push_back(g.inverse());

    std::map<Permutation, char> seen;
    std::queue<Permutation> frontier;
    Permutation id(degree);
    seen.emplace(id, 1);
    frontier.push(id);
    while (!frontier.empty()) {
        Permutation cur = std::move(frontier.front());
        frontier.pop();
        for (const auto& m : muls) {
            Permutation next = compose(cur, m);
            if (seen.emplace(next, 1).second) {
                if (seen.size() > cap)
                    throw budget_error("group_closure: element cap exceeded");
                frontier.push(std::move(next));
            }
        }
    }

    FiniteGroup G;
    G.degree = degree;
    G.generators = std::move(generators);
    G.elements.reserve(seen.size());
    for (auto& [p, _] : seen) G.elements.push_back(p);
    // std::map iterates in sorted order already.
    G.name = std::move(name);
    return G;
}

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& G) {
    std::vector<char> assigned(G.elements.size(), 0);
    std::vector<ConjClass> classes;

    auto index_of = [&](const Permutation& p) {
        auto it = std::lower_bound(G.elements.begin(), G.elements.end(), p);
        if (it == G.elements.end() || *it != p)
            throw internal_error("conjugacy_classes: conjugate left the group");
        return static_cast<std::size_t>(it - G.elements.begin());
    };

    // Scanning elements in sorted order makes each class representative its
    // lexicographically least member: any lesser member would already have
    // pulled the whole class in.  Classes are orbits under conjugation by the
    // generators alone, since a finite set closed under every generator is
    // closed under the group.
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        if (assigned[i]) continue;
        ConjClass cls;
        cls.representative = G.elements[i];
        cls.element_order = G.elements[i].order();
        std::vector<std::size_t> member_ids{i};
        assigned[i] = 1;
        for (std::size_t next = 0; next < member_ids.size(); ++next) {
            for (const auto& h : G.generators) {
                std::size_t idx = index_of(conjugate(G.elements[member_ids[next]], h));
                if (!assigned[idx]) {
                    assigned[idx] = 1;
                    member_ids.push_back(idx);
                }
            }
        }
        std::sort(member_ids.begin(), member_ids.end());
        for (std::size_t idx : member_ids) cls.members.push_back(G.elements[idx]);
        classes.push_back(std::move(cls));
    }

    std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
        if (a.element_order != b.element_order) return a.element_order < b.element_order;
        return a.representative < b.representative;
    });

    // Label assignment; see the declaration for the scheme.
    for (std::size_t i = 0; i < classes.size();) {
        std::size_t j = i;
        while (j < classes.size() && classes[j].element_order == classes[i].element_order) ++j;
        std::size_t count = j - i;
        const std::string k = std::to_string(classes[i].element_order);
        if (count == 1) {
            classes[i].label = k;
        } else if (count == 2) {
            Permutation inv_rep = classes[i].representative.inverse();
            bool mutual = std::binary_search(classes[i + 1].members.begin(),
                                             classes[i + 1].members.end(), inv_rep);
            if (mutual) {
                classes[i].label = "+" + k;
                classes[i + 1].label = "-" + k;
            } else {
                classes[i].label = k + ".1";
                classes[i + 1].label = k + ".2";
            }
        } else {
            for (std::size_t t = 0; t < count; ++t)
                classes[i + t].label = k + "." + std::to_string(t + 1);
        }
        i = j;
    }
    return classes;
}

std::vector<Permutation> center(const FiniteGroup& G) {
    std::vector<Permutation> result;
    for (const auto& z : G.elements) {
        bool central = true;
        for (const auto& g : G.generators) {
            if (compose(z, g) != compose(g, z)) {
                central = false;
                break;
            }
        }
        if (central) result.push_back(z);
    }
    return result;
}

namespace {

bool normalizes(const Permutation& s, const FiniteGroup& G) {
    for (const auto& g : G.generators)
        if (!G.contains(conjugate(g, s))) return false;
    return true;
}

// Index of the class containing p, assuming s-conjugation kept it in G.
int class_of_perm(const std::vector<ConjClass>& classes, const Permutation& p) {
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (std::binary_search(classes[c].members.begin(), classes[c].members.end(), p))
            return static_cast<int>(c);
    return -1;
}

bool preserves_class_multiset(const Permutation& s,
                              const std::vector<ConjClass>& classes,
                              const std::vector<int>& multiset) {
    std::vector<int> image;
    image.reserve(multiset.size());
    for (int c : multiset) {
        int ic = class_of_perm(classes, conjugate(classes[c].representative, s));
        if (ic < 0) return false;
        image.push_back(ic);
    }
    std::sort(image.begin(), image.end());
    std::vector<int> want = multiset;
    std::sort(want.begin(), want.end());
    return image == want;
}

std::vector<Permutation> minimal_generators(const std::vector<Permutation>& elements,
                                            std::size_t cap) {
    std::vector<Permutation> gens;
    std::size_t have = 1;  // the identity
    for (const auto& e : elements) {
        if (e.is_identity()) continue;
        if (have == elements.size()) break;
        std::vector<Permutation> trial = gens;
        trial.push_back(e);
        FiniteGroup closed = group_closure(trial, cap);
        if (closed.elements.size() > have) {
            gens.push_back(e);
            have = closed.elements.size();
        }
    }
    if (gens.empty()) gens.push_back(Permutation(elements[0].degree()));
    return gens;
}

}  // namespace

FiniteGroup normalizer_in_symmetric(const FiniteGroup& G,
                                    const std::vector<ConjClass>& classes,
                                    const std::vector<int>& class_multiset,
                                    int brute_force_bound,
                                    const std::vector<Permutation>* supplied_generators,
                                    std::size_t cap) {
    for (int c : class_multiset)
        if (c < 0 || c >= static_cast<int>(classes.size()))
            throw input_error("normalizer_in_symmetric: class index out of range");

    if (supplied_generators != nullptr) {
        FiniteGroup N = group_closure(*supplied_generators, cap, "N");
        if (N.degree != G.degree)
            throw input_error("normalizer_in_symmetric: supplied generator degree mismatch");
        for (const auto& s : N.elements) {
            if (!normalizes(s, G))
                throw input_error("normalizer_in_symmetric: supplied group does not normalize");
            if (!preserves_class_multiset(s, classes, class_multiset))
                throw input_error("normalizer_in_symmetric: supplied group moves the class vector");
        }
        return N;
    }

    if (G.degree > brute_force_bound)
        throw input_error("normalizer_in_symmetric: degree above brute-force bound; "
                          "supply normalizer generators");

    std::vector<Letter> images(G.degree);
    std::iota(images.begin(), images.end(), Letter{0});
    std::vector<Permutation> found;
    do {
        Permutation s = Permutation::from_images(images);
        if (normalizes(s, G) && preserves_class_multiset(s, classes, class_multiset))
            found.push_back(s);
    } while (std::next_permutation(images.begin(), images.end()));
    std::sort(found.begin(), found.end());

    FiniteGroup N;
    N.degree = G.degree;
    N.elements = std::move(found);
    N.generators = minimal_generators(N.elements, cap);
    N.name = "N(" + (G.name.empty() ? std::string("G") : G.name) + ")";
    return N;
}

std::string GroupOps::key(const Permutation& p) {
    return std::string(reinterpret_cast<const char*>(p.images().data()),
                       p.images().size() * sizeof(Letter));
}

GroupOps::GroupOps(const FiniteGroup& G, std::size_t table_limit) : G_(&G) {
    n_ = static_cast<std::uint32_t>(G.elements.size());
    index_.reserve(n_ * 2);
    for (std::uint32_t i = 0; i < n_; ++i)
        index_.emplace(key(G.elements[i]), i);

    inv_.resize(n_);
    order_.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        inv_[i] = id_of(G.elements[i].inverse());
        order_[i] = G.elements[i].order();
        if (G.elements[i].is_identity()) identity_ = i;
    }

    if (static_cast<std::size_t>(n_) * n_ <= table_limit) {
        table_.resize(static_cast<std::size_t>(n_) * n_);
        for (std::uint32_t a = 0; a < n_; ++a)
            for (std::uint32_t b = 0; b < n_; ++b)
                table_[static_cast<std::size_t>(a) * n_ + b] =
                    id_of(compose(G.elements[a], G.elements[b]));
        has_table_ = true;
    }
}

std::uint32_t GroupOps::id_of(const Permutation& p) const {
    auto it = index_.find(key(p));
    if (it == index_.end())
        throw input_error("GroupOps: permutation not in group");
    return it->second;
}

std::uint32_t GroupOps::mul(std::uint32_t a, std::uint32_t b) const {
    if (has_table_)
        return table_[static_cast<std::size_t>(a) * n_ + b];
    return id_of(compose(G_->elements[a], G_->elements[b]));
}

std::uint32_t GroupOps::power(std::uint32_t a, long long e) const {
    int ord = order_[a];
    long long r = e % ord;
    if (r < 0) r += ord;
    std::uint32_t acc = identity_;
    for (long long i = 0; i < r; ++i) acc = mul(acc, a);
    return acc;
}

std::vector<std::uint32_t> subgroup_closure_ids(const GroupOps& ops,
                                                std::span<const std::uint32_t> gens) {
    std::vector<char> in(ops.size(), 0);
    std::vector<std::uint32_t> stack, members;
    auto push = [&](std::uint32_t v) {
        if (!in[v]) {
            in[v] = 1;
            stack.push_back(v);
            members.push_back(v);
        }
    };
    push(ops.identity());
    for (std::uint32_t g : gens) push(g);
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t g : gens) {
            push(ops.mul(v, g));
            push(ops.mul(v, ops.inv(g)));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool generates_group(const GroupOps& ops, std::span<const std::uint32_t> gens) {
    const std::size_t half = ops.size() / 2;
    std::vector<char> in(ops.size(), 0);
    std::vector<std::uint32_t> stack;
    std::size_t count = 0;
    auto push = [&](std::uint32_t v) {
        if (!in[v]) {
            in[v] = 1;
            ++count;
            stack.push_back(v);
        }
    };
    push(ops.identity());
    for (std::uint32_t g : gens) push(g);
    while (!stack.empty()) {
        if (count > half) return true;
        std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t g : gens) {
            push(ops.mul(v, g));
            push(ops.mul(v, ops.inv(g)));
        }
    }
    return count == ops.size();
}

std::shared_ptr<const GroupData> GroupData::make(FiniteGroup G) {
    auto gd = std::make_shared<GroupData>();
    gd->group = std::move(G);
    gd->classes = conjugacy_classes(gd->group);
    gd->ops = std::make_unique<GroupOps>(gd->group);
    gd->class_of.assign(gd->group.elements.size(), -1);
    for (std::size_t c = 0; c < gd->classes.size(); ++c)
        for (const auto& m : gd->classes[c].members)
            gd->class_of[gd->ops->id_of(m)] = static_cast<int>(c);
    return gd;
}

int GroupData::class_index_of_label(const std::string& label) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (classes[c].label == label) return static_cast<int>(c);
    return -1;
}

}  // namespace hurwitz
