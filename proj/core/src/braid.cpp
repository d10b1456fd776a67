#include "hurwitz/braid.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

void check_index(std::size_t r, int i) {
    if (i < 1 || static_cast<std::size_t>(i) >= r)
        throw input_error("braid twist index out of range");
}

}  // namespace

void apply_qi(const GroupOps& ops, std::span<std::uint32_t> t, int i) {
    check_index(t.size(), i);
    std::uint32_t a = t[i - 1], b = t[i];
    t[i - 1] = ops.conj(b, a);  // a b a^-1
    t[i] = a;
}

void apply_qi_inv(const GroupOps& ops, std::span<std::uint32_t> t, int i) {
    check_index(t.size(), i);
    std::uint32_t a = t[i - 1], b = t[i];
    t[i - 1] = b;
    t[i] = ops.conj(a, ops.inv(b));  // b^-1 a b
}

void apply_sh(std::span<std::uint32_t> t) {
    if (t.empty()) return;
    std::rotate(t.begin(), t.begin() + 1, t.end());
}

void apply_sh_inv(std::span<std::uint32_t> t) {
    if (t.empty()) return;
    std::rotate(t.begin(), t.end() - 1, t.end());
}

void apply_word(const GroupOps& ops, std::span<std::uint32_t> t, std::span<const int> word) {
    for (int letter : word) {
        if (letter == SH)
            apply_sh(t);
        else if (letter == SH_INV)
            apply_sh_inv(t);
        else if (letter > 0)
            apply_qi(ops, t, letter);
        else if (letter < 0)
            apply_qi_inv(ops, t, -letter);
        else
            throw input_error("braid word letter 0");
    }
}

std::vector<Permutation> apply_qi(std::vector<Permutation> t, int i) {
    check_index(t.size(), i);
    Permutation a = t[i - 1], b = std::move(t[i]);
    t[i - 1] = conjugate(b, a);
    t[i] = std::move(a);
    return t;
}

std::vector<Permutation> apply_sh(std::vector<Permutation> t) {
    if (!t.empty()) std::rotate(t.begin(), t.begin() + 1, t.end());
    return t;
}

bool is_hm_tuple(const GroupOps& ops, std::span<const std::uint32_t> t) {
    if (t.empty() || t.size() % 2 != 0) return false;
    for (std::size_t k = 0; k + 1 < t.size(); k += 2)
        if (t[k + 1] != ops.inv(t[k])) return false;
    return true;
}

bool is_hm_tuple(const std::vector<Permutation>& t) {
    if (t.empty() || t.size() % 2 != 0) return false;
    for (std::size_t k = 0; k + 1 < t.size(); k += 2)
        if (t[k + 1] != t[k].inverse()) return false;
    return true;
}

bool is_double_identity_tuple(std::span<const std::uint32_t> t) {
    for (std::size_t k = 0; k + 1 < t.size(); ++k)
        if (t[k] == t[k + 1]) return true;
    return false;
}

bool is_double_identity_tuple(const std::vector<Permutation>& t) {
    for (std::size_t k = 0; k + 1 < t.size(); ++k)
        if (t[k] == t[k + 1]) return true;
    return false;
}

namespace {

// node = reduced class when red is given, else the equivalence class itself.
int node_of(const EquivalenceTable& eq, const ReducedTable* red, std::size_t tuple_idx) {
    int c = eq.class_of(tuple_idx);
    return red ? red->reduced_of(c) : c;
}

// The image of each node under a braid word, computed on canonical tuples.
// When reducing, every equivalence class of the node must land in the same
// reduced class, which doubles as a check that reduction commutes with the
// braid action.
std::vector<int> node_word_map(const NielsenClass& ni,
                               const EquivalenceTable& eq,
                               const ReducedTable* red,
                               int node_count,
                               std::span<const int> word) {
    std::vector<int> map(node_count, -1);
    const GroupOps& ops = *ni.data().ops;
    std::vector<std::uint32_t> t(ni.r());
    for (int c = 0; c < eq.count(); ++c) {
        auto src = ni.tuple(eq.canonical(c));
        std::copy(src.begin(), src.end(), t.begin());
        apply_word(ops, t, word);
        auto found = ni.find(t);
        if (!found)
            throw internal_error("braid image missing from the Nielsen class");
        int from = red ? red->reduced_of(c) : c;
        int to = node_of(eq, red, *found);
        if (map[from] >= 0 && map[from] != to)
            throw internal_error("braid word is not well defined on reduced classes");
        map[from] = to;
    }
    return map;
}

}  // namespace

std::vector<BraidOrbit> braid_orbits(const NielsenClass& ni,
                                     const EquivalenceTable& eq,
                                     const ReducedTable* red,
                                     std::uint64_t shuffle_seed) {
    const int r = ni.r();
    const int nodes = red ? red->count() : eq.count();

    // Node-level maps for each twist and the shift.
    std::vector<std::vector<int>> moves;
    for (int i = 1; i < r; ++i) {
        int word[] = {i};
        moves.push_back(node_word_map(ni, eq, red, nodes, word));
    }
    {
        int word[] = {SH};
        moves.push_back(node_word_map(ni, eq, red, nodes, word));
    }

    std::vector<int> orbit_of(nodes, -1);
    std::vector<std::vector<int>> orbit_members;
    std::vector<int> order(nodes);
    std::iota(order.begin(), order.end(), 0);
    if (shuffle_seed != 0) {
        std::mt19937_64 rng(shuffle_seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    std::vector<int> stack;
    for (int seed : order) {
        if (orbit_of[seed] >= 0) continue;
        int id = static_cast<int>(orbit_members.size());
        orbit_of[seed] = id;
        orbit_members.push_back({seed});
        stack.assign(1, seed);
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (const auto& m : moves) {
                int next = m[cur];
                if (orbit_of[next] < 0) {
                    orbit_of[next] = id;
                    orbit_members[id].push_back(next);
                    stack.push_back(next);
                }
            }
        }
    }
    for (auto& members : orbit_members) std::sort(members.begin(), members.end());
    std::sort(orbit_members.begin(), orbit_members.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a[0] < b[0];
              });

    std::vector<BraidOrbit> orbits;
    orbits.reserve(orbit_members.size());
    for (auto& members : orbit_members) {
        BraidOrbit orb;
        orb.members = std::move(members);
        orb.reduced = red != nullptr;
        orb.mode = eq.mode();
        orbits.push_back(std::move(orb));
    }

    // gamma0 = q1 q2, gamma1 = q1 q2 q1, gamma_inf = q2 on reduced classes.
    if (red != nullptr && r == 4) {
        static constexpr int kG0[] = {1, 2}, kG1[] = {1, 2, 1}, kGInf[] = {2};
        auto g0 = node_word_map(ni, eq, red, nodes, kG0);
        auto g1 = node_word_map(ni, eq, red, nodes, kG1);
        auto gi = node_word_map(ni, eq, red, nodes, kGInf);
        for (auto& orb : orbits) {
            std::vector<int> pos(nodes, -1);
            for (std::size_t p = 0; p < orb.members.size(); ++p) pos[orb.members[p]] = static_cast<int>(p);
            auto attach = [&](const std::vector<int>& m, std::vector<int>& out) {
                out.resize(orb.members.size());
                for (std::size_t p = 0; p < orb.members.size(); ++p) {
                    int target = m[orb.members[p]];
                    if (target < 0 || pos[target] < 0)
                        throw internal_error("elliptic word leaves the braid orbit");
                    out[p] = pos[target];
                }
            };
            attach(g0, orb.gamma0);
            attach(g1, orb.gamma1);
            attach(gi, orb.gamma_inf);
            // gamma0^3 = id and gamma0 gamma1 gamma_inf = id on every orbit.
            for (std::size_t p = 0; p < orb.members.size(); ++p) {
                if (orb.gamma0[orb.gamma0[orb.gamma0[p]]] != static_cast<int>(p))
                    throw internal_error("gamma0 does not have order dividing 3");
                if (orb.gamma_inf[orb.gamma1[orb.gamma0[p]]] != static_cast<int>(p))
                    throw internal_error("gamma0 gamma1 gamma_inf is not the identity");
            }
        }
    }

    // HM and double-identity flags come from scanning every raw tuple.
    std::vector<int> node_orbit(nodes, -1);
    for (std::size_t b = 0; b < orbits.size(); ++b)
        for (int node : orbits[b].members) node_orbit[node] = static_cast<int>(b);
    const GroupOps& ops = *ni.data().ops;
    for (std::size_t idx = 0; idx < ni.count(); ++idx) {
        auto t = ni.tuple(idx);
        bool hm = is_hm_tuple(ops, t);
        bool di = is_double_identity_tuple(t);
        if (!hm && !di) continue;
        BraidOrbit& orb = orbits[node_orbit[node_of(eq, red, idx)]];
        orb.hm = orb.hm || hm;
        orb.double_identity = orb.double_identity || di;
    }
    return orbits;
}

}  // namespace hurwitz
