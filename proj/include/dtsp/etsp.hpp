#pragma once

#include <optional>
#include <vector>

#include "dtsp/geom.hpp"

namespace dtsp {

/// Largest point count the exact solver accepts.
inline constexpr int kEtspExactLimit = 14;

/// Length-window query over euclidean tours: strictly longer than `lower`,
/// no longer than `upper`.
struct EtspQuery {
    std::vector<Vec2> points;
    double lower = 0.0;
    double upper = 0.0;
};

/// An undirected cyclic tour in canonical form: starts at index 0 and the
/// second element is smaller than the last, which fixes rotation and
/// reflection. Length is the left-to-right sum of euclidean edge lengths
/// over the canonical sequence.
struct EtspSolution {
    std::vector<int> sequence;
    double length = 0.0;
};

/// Rotates and possibly reflects a cyclic sequence into canonical form.
std::vector<int> canonical_tour(const std::vector<int>& sequence);

/// Euclidean cycle length summed left to right over the given sequence.
double euclidean_tour_length(const std::vector<Vec2>& points, const std::vector<int>& sequence);

/// Globally shortest euclidean tour; ties break toward the lexicographically
/// smaller canonical sequence. Exhaustive below 10 points, branch and bound
/// with an MST lower bound up to the exact limit.
///
/// Throws TooLarge beyond kEtspExactLimit points.
EtspSolution solve_etsp(const std::vector<Vec2>& points);

/// Shortest tour whose length lies in (query.lower, query.upper], or absent
/// when no tour does. Same determinism rules as solve_etsp.
std::optional<EtspSolution> solve_etsp_window(const EtspQuery& query);

}  // namespace dtsp
