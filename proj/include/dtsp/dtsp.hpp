#pragma once

#include <optional>
#include <vector>

#include "dtsp/etsp.hpp"
#include "dtsp/instance.hpp"
#include "dtsp/tour.hpp"

namespace dtsp {

/// Three consecutive sequence points whose inter-segment angle is at most
/// pi/2 with one point within 4*rho of the segment spanned by the other two.
/// Flipping the middle heading can then shorten the tour.
struct SharpTurn {
    int i = 0, j = 0, k = 0;        // point indices of the consecutive triplet
    double angle = 0.0;             // phi between segments x_i x_j and x_j x_k
    double witness_distance = 0.0;  // the distance that triggered the 4*rho condition
    int witness = 0;                // which point (i, j or k) sits near the others' segment
};

struct DtspSettings {
    DescentSettings descent;
    int flip_cap = 12;              // at most 2^flip_cap descents per sequence
    double distinct_rel_eps = 1e-9; // window separation, relative to the optimal ETSP length
    bool flips_enabled = true;
};

struct SequenceRecord {
    EtspSolution etsp;
    double converged_length = 0.0;
    std::optional<double> gap_bound;
    int sharp_turns = 0;
    int flip_variants = 1;
    unsigned winning_flip_mask = 0;
    bool converged = true;
    int iterations = 0;              // of the winning variant
    double seed_length = 0.0;        // unflipped seed evaluation
    double first_iter_length = 0.0;  // after the first accepted step of the unflipped run
};

struct DtspResult {
    TourConfig best_config;
    TourEvaluation best_eval;
    int sequences_explored = 0;
    std::vector<SequenceRecord> per_sequence;
    std::optional<double> certificate;  // final gap bound of the winner
    double etsp_length = 0.0;           // optimal euclidean tour length
    /// The coarse a-priori search radius (1 + pi/scale) * etsp_length;
    /// the loop itself uses the running upper bound, which is tighter.
    double crude_window_bound = 0.0;
};

/// All sharp turns of the cyclic sequence, in sequence order.
std::vector<SharpTurn> find_sharp_turns(const Instance& instance,
                                        const std::vector<int>& sequence);

struct FlipDescentResult {
    DescentResult best;
    int sharp_turns = 0;
    int variants = 1;
    unsigned winning_mask = 0;
    double base_seed_length = 0.0;
    double base_first_iter_length = 0.0;
};

/// Runs gradient descent from the seed once per subset of the sequence's
/// sharp turns, flipping the middle heading by pi for each selected turn,
/// and keeps the shortest converged result.
///
/// Throws TooManyFlips when the subset count exceeds 2^flip_cap.
FlipDescentResult descend_with_flips(const Instance& instance, const std::vector<int>& sequence,
                                     const DtspSettings& settings = {});

/// The bounding procedure: walks euclidean tours in increasing length through
/// a shrinking window, descends each sequence, and returns the shortest
/// curvature-constrained tour with its gap certificate.
DtspResult solve_dtsp(const Instance& instance, const DtspSettings& settings = {});

/// Feasible tour built from a euclidean solution by keeping every second
/// edge straight; its length exceeds the euclidean length by at most
/// pi * n * rho.
std::pair<TourConfig, double> alternating_tour(const Instance& instance,
                                               const EtspSolution& etsp);

}  // namespace dtsp
