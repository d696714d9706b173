#include "dtsp/etsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dtsp/errors.hpp"

namespace dtsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct DistMatrix {
    int n;
    std::vector<double> d;
    double operator()(int i, int j) const { return d[static_cast<size_t>(i * n + j)]; }
};

DistMatrix build_distances(const std::vector<Vec2>& points) {
    const int n = static_cast<int>(points.size());
    DistMatrix m{n, std::vector<double>(static_cast<size_t>(n * n), 0.0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.d[static_cast<size_t>(i * n + j)] =
                distance(points[static_cast<size_t>(i)], points[static_cast<size_t>(j)]);
    return m;
}

// Keeps the incumbent with deterministic tie-breaking on the canonical form.
struct Incumbent {
    double length = kInf;
    std::vector<int> sequence;  // canonical

    void offer(double len, const std::vector<int>& canon) {
        if (len < length || (len == length && (sequence.empty() || canon < sequence))) {
            length = len;
            sequence = canon;
        }
    }
};

// Scans every undirected tour (first point fixed, reflection halved) and
// offers those inside (lower, upper] to the incumbent.
void enumerate_tours(const std::vector<Vec2>& points, double lower, double upper,
                     Incumbent& best) {
    const int n = static_cast<int>(points.size());
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm[1] > perm[static_cast<size_t>(n - 1)]) continue;  // reflection representative
        const double len = euclidean_tour_length(points, perm);
        if (len > lower && len <= upper && len <= best.length) best.offer(len, perm);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

// Minimum spanning tree weight over the node subset in `nodes`.
double mst_weight(const DistMatrix& d, const std::vector<int>& nodes) {
    const size_t m = nodes.size();
    if (m <= 1) return 0.0;
    std::vector<double> key(m, kInf);
    std::vector<bool> used(m, false);
    key[0] = 0.0;
    double total = 0.0;
    for (size_t it = 0; it < m; ++it) {
        size_t u = m;
        double ubest = kInf;
        for (size_t v = 0; v < m; ++v)
            if (!used[v] && key[v] < ubest) {
                ubest = key[v];
                u = v;
            }
        used[u] = true;
        total += ubest;
        for (size_t v = 0; v < m; ++v)
            if (!used[v]) key[v] = std::min(key[v], d(nodes[u], nodes[v]));
    }
    return total;
}

// Nearest-neighbour tour from node 0, improved by 2-opt passes. Upper bound
// only; determinism does not matter here because the incumbent it seeds is
// re-offered through the same tie-breaking path as every search leaf.
std::vector<int> greedy_tour(const DistMatrix& d) {
    const int n = d.n;
    std::vector<int> tour;
    tour.reserve(static_cast<size_t>(n));
    std::vector<bool> used(static_cast<size_t>(n), false);
    int cur = 0;
    tour.push_back(0);
    used[0] = true;
    for (int step = 1; step < n; ++step) {
        int nxt = -1;
        double best = kInf;
        for (int v = 0; v < n; ++v)
            if (!used[static_cast<size_t>(v)] && d(cur, v) < best) {
                best = d(cur, v);
                nxt = v;
            }
        tour.push_back(nxt);
        used[static_cast<size_t>(nxt)] = true;
        cur = nxt;
    }
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < n - 1; ++i) {
            for (int j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;
                const int a = tour[static_cast<size_t>(i)], b = tour[static_cast<size_t>(i + 1)];
                const int c = tour[static_cast<size_t>(j)],
                          e = tour[static_cast<size_t>((j + 1) % n)];
                if (d(a, c) + d(b, e) < d(a, b) + d(c, e) - 1e-15) {
                    std::reverse(tour.begin() + i + 1, tour.begin() + j + 1);
                    improved = true;
                }
            }
        }
    }
    return tour;
}

struct BranchAndBound {
    const std::vector<Vec2>& points;
    const DistMatrix& d;
    double lower, upper;
    Incumbent best;
    std::vector<int> path;
    std::vector<bool> used;

    void search(double cost) {
        const int n = d.n;
        const int depth = static_cast<int>(path.size());
        if (depth == n) {
            if (path[1] > path[static_cast<size_t>(n - 1)]) return;
            const double len = euclidean_tour_length(points, path);
            if (len > lower && len <= upper && len <= best.length) best.offer(len, path);
            return;
        }
        // Completion needs a spanning connected subgraph over the free nodes
        // plus both open ends, so the MST over that set bounds it below.
        std::vector<int> rest;
        rest.reserve(static_cast<size_t>(n - depth + 2));
        rest.push_back(path.back());
        rest.push_back(0);
        for (int v = 1; v < n; ++v)
            if (!used[static_cast<size_t>(v)]) rest.push_back(v);
        const double bound = cost + mst_weight(d, rest);
        const double cap = std::min(upper, best.length);
        if (bound > cap + 1e-9 * std::max(1.0, cap)) return;

        for (int v = 1; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = true;
            path.push_back(v);
            search(cost + d(path[static_cast<size_t>(depth - 1)], v));
            path.pop_back();
            used[static_cast<size_t>(v)] = false;
        }
    }

    void run() {
        const int n = d.n;
        // Seed the incumbent with the greedy tour when it fits the window.
        const std::vector<int> seed = canonical_tour(greedy_tour(d));
        const double seed_len = euclidean_tour_length(points, seed);
        if (seed_len > lower && seed_len <= upper) best.offer(seed_len, seed);

        path.assign(1, 0);
        used.assign(static_cast<size_t>(n), false);
        used[0] = true;
        search(0.0);
    }
};

std::optional<EtspSolution> solve_window_impl(const std::vector<Vec2>& points, double lower,
                                              double upper) {
    const int n = static_cast<int>(points.size());
    if (n < 3)
        throw std::invalid_argument("euclidean tours need at least 3 points, got " +
                                    std::to_string(n));
    if (n > kEtspExactLimit)
        throw TooLarge("exactness is only guaranteed up to " + std::to_string(kEtspExactLimit) +
                       " points, got " + std::to_string(n));

    Incumbent best;
    if (n <= 9) {
        enumerate_tours(points, lower, upper, best);
    } else {
        const DistMatrix d = build_distances(points);
        BranchAndBound bb{points, d, lower, upper, {}, {}, {}};
        bb.run();
        best = bb.best;
    }
    if (best.sequence.empty()) return std::nullopt;
    return EtspSolution{best.sequence, best.length};
}

}  // namespace

std::vector<int> canonical_tour(const std::vector<int>& sequence) {
    const size_t n = sequence.size();
    std::vector<int> out(n);
    size_t start = 0;
    for (size_t i = 0; i < n; ++i)
        if (sequence[i] < sequence[start]) start = i;
    for (size_t i = 0; i < n; ++i) out[i] = sequence[(start + i) % n];
    if (n >= 3 && out[1] > out[n - 1]) {
        std::reverse(out.begin() + 1, out.end());
    }
    return out;
}

double euclidean_tour_length(const std::vector<Vec2>& points, const std::vector<int>& sequence) {
    const size_t n = sequence.size();
    double len = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = points[static_cast<size_t>(sequence[i])];
        const Vec2 b = points[static_cast<size_t>(sequence[(i + 1) % n])];
        const double dx = b.x - a.x, dy = b.y - a.y;
        len += std::sqrt(dx * dx + dy * dy);
    }
    return len;
}

EtspSolution solve_etsp(const std::vector<Vec2>& points) {
    auto sol = solve_window_impl(points, -kInf, kInf);
    if (!sol) throw NumericalDegeneracy("unwindowed search found no tour");
    return *sol;
}

std::optional<EtspSolution> solve_etsp_window(const EtspQuery& query) {
    if (!(query.lower < query.upper))
        throw std::invalid_argument("window lower bound must be below its upper bound");
    return solve_window_impl(query.points, query.lower, query.upper);
}

}  // namespace dtsp
