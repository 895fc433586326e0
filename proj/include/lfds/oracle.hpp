#pragma once

// Brute-force state-space enumeration for desk-scale systems. States are
// indexed in mixed radix, coordinate 0 least significant. Cycle vertices are
// found by a visited-marking walk; heights come from one reverse BFS seeded
// at the cycle set, so the whole graph costs O(states).
//
// The verify_* checkers replay the structural facts the algebraic engine
// relies on (Fitting split, primary decomposition, quotient/fiber relations)
// directly on the enumerated graph and report counterexamples instead of
// throwing.

#include "lfds/errors.hpp"
#include "lfds/system.hpp"

#include <cstdint>
#include <deque>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace lfds {

inline constexpr uint64_t kDefaultStateCap = 1'000'000;

struct StateGraph {
    uint64_t modulus;
    size_t dim;
    size_t size; // n^m
    std::vector<uint32_t> successor;
    std::vector<uint32_t> height_of;
    std::vector<uint32_t> period_of; // 0 for non-cycle vertices
    std::vector<uint8_t> is_leaf;

    std::vector<uint64_t> coords(size_t index) const {
        std::vector<uint64_t> x(dim);
        for (size_t i = 0; i < dim; ++i) {
            x[i] = index % modulus;
            index /= modulus;
        }
        return x;
    }

    size_t index_of(const std::vector<uint64_t>& x) const {
        size_t idx = 0;
        for (size_t i = dim; i-- > 0;) idx = idx * modulus + x[i];
        return idx;
    }
};

namespace detail {

inline std::string state_label(const StateGraph& g, size_t index) {
    std::ostringstream os;
    os << '(';
    const auto x = g.coords(index);
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) os << ',';
        os << x[i];
    }
    os << ')';
    return os.str();
}

} // namespace detail

inline StateGraph enumerate(const SystemSpec& sys, uint64_t cap = kDefaultStateCap) {
    const uint64_t n = sys.modulus();
    const size_t m = sys.dim();
    const uint64_t limit = std::min<uint64_t>(cap, std::numeric_limits<uint32_t>::max());
    const auto size = pow_within(n, m, limit);
    if (!size)
        throw CapacityError("state space " + std::to_string(n) + "^" + std::to_string(m) +
                            " exceeds the cap of " + std::to_string(limit) + " states");

    StateGraph g;
    g.modulus = n;
    g.dim = m;
    g.size = static_cast<size_t>(*size);
    g.successor.resize(g.size);

    std::vector<uint64_t> stride(m);
    stride[0] = 1;
    for (size_t i = 1; i < m; ++i) stride[i] = stride[i - 1] * n;

    std::vector<uint64_t> x(m, 0);
    for (size_t idx = 0; idx < g.size; ++idx) {
        uint64_t image = 0;
        for (size_t i = 0; i < m; ++i) {
            u128 acc = 0;
            for (size_t j = 0; j < m; ++j) acc += static_cast<u128>(sys.a(i, j)) * x[j] % n;
            image += static_cast<uint64_t>(acc % n) * stride[i];
        }
        g.successor[idx] = static_cast<uint32_t>(image);
        for (size_t i = 0; i < m; ++i) {
            if (++x[i] < n) break;
            x[i] = 0;
        }
    }

    // Cycle detection: walk unvisited chains, marking the current path; a
    // revisit inside the path closes a new cycle.
    g.period_of.assign(g.size, 0);
    std::vector<uint8_t> color(g.size, 0);
    std::vector<uint32_t> pos(g.size, 0);
    std::vector<uint32_t> path;
    for (size_t v = 0; v < g.size; ++v) {
        if (color[v]) continue;
        path.clear();
        uint32_t u = static_cast<uint32_t>(v);
        while (color[u] == 0) {
            color[u] = 1;
            pos[u] = static_cast<uint32_t>(path.size());
            path.push_back(u);
            u = g.successor[u];
        }
        if (color[u] == 1) {
            const uint32_t len = static_cast<uint32_t>(path.size()) - pos[u];
            for (size_t k = pos[u]; k < path.size(); ++k) g.period_of[path[k]] = len;
        }
        for (uint32_t node : path) color[node] = 2;
    }

    // Reverse adjacency in CSR form doubles as the leaf test (indegree 0).
    std::vector<uint32_t> offset(g.size + 1, 0);
    for (size_t idx = 0; idx < g.size; ++idx) ++offset[g.successor[idx] + 1];
    for (size_t idx = 0; idx < g.size; ++idx) offset[idx + 1] += offset[idx];
    std::vector<uint32_t> preimage(g.size);
    {
        std::vector<uint32_t> cursor(offset.begin(), offset.end() - 1);
        for (size_t idx = 0; idx < g.size; ++idx)
            preimage[cursor[g.successor[idx]]++] = static_cast<uint32_t>(idx);
    }
    g.is_leaf.resize(g.size);
    for (size_t idx = 0; idx < g.size; ++idx)
        g.is_leaf[idx] = (offset[idx + 1] == offset[idx]) ? 1 : 0;

    g.height_of.assign(g.size, 0);
    std::deque<uint32_t> queue;
    std::vector<uint8_t> reached(g.size, 0);
    for (size_t idx = 0; idx < g.size; ++idx) {
        if (g.period_of[idx] >= 1) {
            queue.push_back(static_cast<uint32_t>(idx));
            reached[idx] = 1;
        }
    }
    while (!queue.empty()) {
        const uint32_t u = queue.front();
        queue.pop_front();
        for (uint32_t k = offset[u]; k < offset[u + 1]; ++k) {
            const uint32_t x0 = preimage[k];
            if (reached[x0]) continue;
            reached[x0] = 1;
            g.height_of[x0] = g.height_of[u] + 1;
            queue.push_back(x0);
        }
    }
    return g;
}

inline uint64_t brute_height(const StateGraph& g) {
    uint64_t best = 0;
    for (uint32_t h : g.height_of) best = std::max<uint64_t>(best, h);
    return best;
}

/// successor composed with itself e times, as a table.
inline std::vector<uint32_t> iterate_map(const std::vector<uint32_t>& successor, uint64_t e) {
    std::vector<uint32_t> result(successor.size());
    for (size_t i = 0; i < result.size(); ++i) result[i] = static_cast<uint32_t>(i);
    std::vector<uint32_t> base = successor;
    while (e) {
        if (e & 1) {
            for (size_t i = 0; i < result.size(); ++i) result[i] = base[result[i]];
        }
        std::vector<uint32_t> squared(base.size());
        for (size_t i = 0; i < base.size(); ++i) squared[i] = base[base[i]];
        base = std::move(squared);
        e >>= 1;
    }
    return result;
}

struct CheckReport {
    std::string name;
    bool pass = true;
    std::string counterexample;

    explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

    void fail(const std::string& detail) {
        if (pass) {
            pass = false;
            counterexample = detail;
        }
    }
};

/// Fitting split on the enumerated graph: N = im f^s is closed under f with
/// f bijective on it, T = preimage of 0 under f^s is closed under f, the two
/// meet only in 0, and |N|*|T| equals the state count.
inline CheckReport verify_fitting_split(const SystemSpec& sys, const StateGraph& g) {
    if (g.modulus != sys.modulus() || g.dim != sys.dim())
        throw std::invalid_argument("verify_fitting_split: graph does not match the system");
    CheckReport report{"fitting-split"};
    const uint64_t s = brute_height(g);
    const std::vector<uint32_t> fs = iterate_map(g.successor, s);

    std::vector<uint8_t> in_stable(g.size, 0);
    for (size_t x = 0; x < g.size; ++x) in_stable[fs[x]] = 1;
    std::vector<uint8_t> hit(g.size, 0);
    size_t stable_count = 0;
    for (size_t x = 0; x < g.size; ++x) {
        if (!in_stable[x]) continue;
        ++stable_count;
        const uint32_t y = g.successor[x];
        if (!in_stable[y]) {
            report.fail("f maps " + detail::state_label(g, x) + " out of the stable image");
            return report;
        }
        if (hit[y]) {
            report.fail("f is not injective on the stable image at " + detail::state_label(g, y));
            return report;
        }
        hit[y] = 1;
    }

    size_t nilpotent_count = 0;
    bool zero_in_both = false;
    for (size_t x = 0; x < g.size; ++x) {
        if (fs[x] != 0) continue;
        ++nilpotent_count;
        if (fs[g.successor[x]] != 0) {
            report.fail("f maps " + detail::state_label(g, x) + " out of the nilpotent part");
            return report;
        }
        if (in_stable[x]) {
            if (x != 0) {
                report.fail("stable and nilpotent parts share " + detail::state_label(g, x));
                return report;
            }
            zero_in_both = true;
        }
    }
    if (!zero_in_both) {
        report.fail("state (0,...) missing from the stable/nilpotent intersection");
        return report;
    }
    if (stable_count * nilpotent_count != g.size) {
        report.fail("|N| * |T| = " + std::to_string(stable_count) + " * " +
                    std::to_string(nilpotent_count) + " != " + std::to_string(g.size));
    }
    return report;
}

/// Relations between a component over Z_{p^alpha} and its mod-p quotient
/// model, checked fiber by fiber:
///   quotient-cycle-fibers      a coset is a cycle vertex iff its fiber holds one
///   quotient-height-floor      fiber heights dominate the coset height
///   quotient-leaf-fibers       fibers of quotient leaves hold only leaves
///   quotient-nilpotent-leaves  nilpotent quotient leaves lift to nilpotent leaves
inline std::vector<CheckReport> verify_quotient_structure(const PrimaryComponent& comp,
                                                          uint64_t cap = kDefaultStateCap) {
    if (comp.alpha < 2)
        throw std::invalid_argument("verify_quotient_structure requires alpha >= 2");
    const StateGraph big = enumerate(comp.sys, cap);
    const StateGraph quot = enumerate(quotient_system(comp), cap);

    std::vector<uint32_t> proj(big.size);
    for (size_t x = 0; x < big.size; ++x) {
        auto coords = big.coords(x);
        for (auto& c : coords) c %= comp.prime;
        proj[x] = static_cast<uint32_t>(quot.index_of(coords));
    }

    const std::vector<uint32_t> big_fs = iterate_map(big.successor, brute_height(big));
    const std::vector<uint32_t> quot_fs = iterate_map(quot.successor, brute_height(quot));

    CheckReport cycles{"quotient-cycle-fibers"};
    CheckReport heights{"quotient-height-floor"};
    CheckReport leaves{"quotient-leaf-fibers"};
    CheckReport nilleaves{"quotient-nilpotent-leaves"};

    std::vector<uint8_t> fiber_has_cycle(quot.size, 0);
    std::vector<uint8_t> fiber_has_nil_leaf(quot.size, 0);
    for (size_t x = 0; x < big.size; ++x) {
        const uint32_t q = proj[x];
        if (big.period_of[x] >= 1) fiber_has_cycle[q] = 1;
        if (big.is_leaf[x] && big_fs[x] == 0) fiber_has_nil_leaf[q] = 1;
        if (big.height_of[x] < quot.height_of[q]) {
            heights.fail("state " + detail::state_label(big, x) + " has height " +
                         std::to_string(big.height_of[x]) + " below its coset height " +
                         std::to_string(quot.height_of[q]));
        }
        if (quot.is_leaf[q] && !big.is_leaf[x]) {
            leaves.fail("state " + detail::state_label(big, x) +
                        " is not a leaf although its coset " + detail::state_label(quot, q) + " is");
        }
    }
    for (size_t q = 0; q < quot.size; ++q) {
        const bool coset_cycles = quot.period_of[q] >= 1;
        if (coset_cycles != (fiber_has_cycle[q] != 0)) {
            cycles.fail("coset " + detail::state_label(quot, q) +
                        (coset_cycles ? " is a cycle vertex but its fiber has none"
                                      : " is not a cycle vertex but its fiber has one"));
        }
        if (quot.is_leaf[q] && quot_fs[q] == 0 && !fiber_has_nil_leaf[q]) {
            nilleaves.fail("coset " + detail::state_label(quot, q) +
                           " is a nilpotent leaf with no nilpotent leaf in its fiber");
        }
    }
    return {cycles, heights, leaves, nilleaves};
}

/// Primary decomposition on the graph: coordinate-wise reduction is a
/// bijection commuting with one iteration step, and the system height is the
/// maximum component height.
inline CheckReport verify_primary_decomposition(const SystemSpec& sys, const Factorization& f,
                                                uint64_t cap = kDefaultStateCap) {
    if (f.factors.size() < 2)
        throw std::invalid_argument("verify_primary_decomposition requires at least two primes");
    CheckReport report{"primary-decomposition"};
    const StateGraph g = enumerate(sys, cap);

    const auto comps = primary_components(sys, f);
    std::vector<StateGraph> graphs;
    graphs.reserve(comps.size());
    for (const auto& comp : comps) graphs.push_back(enumerate(comp.sys, cap));

    std::vector<uint8_t> seen(g.size, 0);
    std::vector<uint64_t> reduced;
    for (size_t x = 0; x < g.size; ++x) {
        const auto coords = g.coords(x);
        uint64_t combined = 0;
        for (size_t c = 0; c < comps.size(); ++c) {
            reduced = coords;
            for (auto& v : reduced) v %= comps[c].prime_power();
            const size_t xi = graphs[c].index_of(reduced);
            combined = combined * graphs[c].size + xi;

            // One step downstairs must match one step upstairs.
            auto stepped = g.coords(g.successor[x]);
            for (auto& v : stepped) v %= comps[c].prime_power();
            if (graphs[c].successor[xi] != graphs[c].index_of(stepped)) {
                report.fail("iteration does not commute with reduction mod " +
                            std::to_string(comps[c].prime_power()) + " at state " +
                            detail::state_label(g, x));
                return report;
            }
        }
        if (seen[combined]) {
            report.fail("reduction map collides at state " + detail::state_label(g, x));
            return report;
        }
        seen[combined] = 1;
    }

    uint64_t max_component = 0;
    for (const auto& cg : graphs) max_component = std::max(max_component, brute_height(cg));
    if (max_component != brute_height(g)) {
        report.fail("system height " + std::to_string(brute_height(g)) +
                    " != max component height " + std::to_string(max_component));
    }
    return report;
}

/// DOT rendering: one node per state labeled by its coordinate vector, one
/// edge per state, cycle vertices carrying their period as an attribute.
inline void write_dot(std::ostream& os, const StateGraph& g) {
    os << "digraph state_space {\n";
    for (size_t x = 0; x < g.size; ++x) {
        os << "  s" << x << " [label=\"" << detail::state_label(g, x) << "\"";
        if (g.period_of[x] >= 1) os << " period=" << g.period_of[x];
        os << "];\n";
    }
    for (size_t x = 0; x < g.size; ++x)
        os << "  s" << x << " -> s" << g.successor[x] << ";\n";
    os << "}\n";
}

} // namespace lfds
