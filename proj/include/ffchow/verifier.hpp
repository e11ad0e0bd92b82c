#pragma once

#include "ffchow/chow.hpp"
#include "ffchow/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ffchow {

/// One sorted-tail comparison at a place: the order of the powered
/// divisor occupying rank `rank` (descending order list, largest first)
/// against d times the local exponent of the point, slack tail_bound.
struct TailRow {
    int rank = 0;     // 1-based rank in the sorted order list
    int divisor = 0;  // index of the divisor at that rank
    long long value = 0;  // order of the powered divisor at x, times deg p
    long long base = 0;   // d * e_p(x) * deg p
    bool holds = false;   // value <= base + tail_bound
};

/// Sorted-order tail check at one place: ranks m+1..q of the descending
/// order list must stay within tail_bound of the base line.
struct TailCheck {
    Place place = Place::infinity();
    std::vector<long long> sorted_orders;  // descending, powered divisors
    std::vector<TailRow> rows;
    bool holds = true;
};

/// Sorts the orders of the powered divisors at x and checks every tail
/// rank. The family must share one degree; x must avoid all divisors.
TailCheck tail_order_check(const std::vector<HomPoly>& powered, int position, const Place& p,
                           const ProjPoint& x, const Int& tail_bound);

/// Coordinate proximity sum: over each place, the best (m+1)-subset of
/// the listed coordinate slots by coordinate weight, summed. The slots'
/// coordinates of y must be nonzero and at least m+1 slots are required.
Rat coordinate_subset_sum(const ProjPoint& y, const std::vector<Place>& places,
                          const std::vector<int>& slots, int position);

/// Divisor proximity sum: sum over places and divisors of the Weil value
/// weighted by one over the divisor degree. x must avoid all divisors.
Rat proximity_sum(const ProjPoint& x, const std::vector<HomPoly>& divisors,
                  const std::vector<Place>& places);

/// Per-divisor comparison of the image coordinate weight against the
/// shifted order of the powered divisor at one place.
struct LiftRow {
    int divisor = 0;
    long long coordinate_weight = 0;  // weight of the image coordinate
    long long shift = 0;              // (order of powered divisor - d e_p(x)) deg p
    bool holds = false;               // coordinate_weight >= shift
};

/// Subset-sum comparison against the weight of the image form at one
/// place; skipped (finite = false) when a zero coordinate of the image
/// point makes the weight vector infinite.
struct WeightRow {
    long long subset_max = 0;
    Rat bound;
    bool finite = true;
    bool holds = true;
};

/// Everything checked at a single place for a single point.
struct PlaceDiagnostics {
    Place place = Place::infinity();
    TailCheck tail;
    std::vector<LiftRow> lifts;
    bool exponent_identity = false;  // e_p of the image point matches the order minimum
    long long local_sum = 0;         // sum of Weil values of the powered divisors
    long long subset_max = 0;        // best (m+1)-subset of divisor-slot coordinate weights
    std::vector<int> subset_argmax;
    Rat local_bound;                 // subset_max - q min_i e_p(powered_i) deg p + (q-m) tail
    bool local_holds = false;
    std::optional<WeightRow> weight;
};

enum class Branch { Inequality, SmallHeight, Excluded };

std::string branch_name(Branch b);

/// Full record for one sampled point: the dichotomy branch, the two sides
/// of the final comparison, and every intermediate row.
struct PointReport {
    ProjPoint x = ProjPoint({RatFunc(Rat(1))});
    Branch branch = Branch::Inequality;
    int excluded_divisor = -1;  // set on the Excluded branch
    long long h = 0;
    long long h_image = 0;
    Rat lhs;  // proximity sum of the divisor family
    Rat rhs;  // ((m-n+1)(n+1)+eps) h + defect bound
    bool bound_ok = true;
    bool sandwich_lower = true;  // d h(x) <= h(image)
    bool sandwich_upper = true;  // h(image) <= d h(x) + family height
    std::optional<Rat> image_cutoff;       // external a times (h(image form)+1)
    Rat lifted_cutoff;                     // b_tilde (h(base form)+1)
    bool image_cutoff_ok = true;           // h(image) against image_cutoff, when present
    bool lifted_cutoff_ok = true;          // h(image) against lifted_cutoff
    std::optional<Rat> subset_total;       // coordinate subset sum over the divisor slots
    std::optional<Rat> subset_total_bound; // ((m-n+1)(n+1)+eps) h(image) + b_tilde' (h(base form)+1)
    bool subset_total_ok = true;
    std::vector<PlaceDiagnostics> places;
    /// Rows that must hold unconditionally (tail, lift, exponent
    /// identity, local bound, sandwich, weight) and failed.
    int hard_failures = 0;
};

/// Scenario with everything derivable precomputed: the embedding, the
/// base and (when computable) image forms, heights, and the constant
/// pipeline outputs.
struct ScenarioContext {
    Scenario sc;
    VarietyMeta meta;
    EmbeddingData emb;
    std::vector<int> slots;  // divisor coordinate indices in the image space
    long long family_height = 0;  // height of the powered family
    bool content_trivial = true;  // no place where every powered coefficient has positive order
    ChowForm base_form;
    long long base_height = 0;
    std::optional<ChowForm> image_form;
    std::optional<ParamCurve> image;
    long long image_degree = 0;  // degree of the image variety when known
    std::optional<HeightBoundCheck> image_height_check;
    ScenarioParams params;
    DerivedConstants consts;
};

ScenarioContext prepare_scenario(const Scenario& sc);

/// Evaluates every comparison row at one point and decides the branch.
PointReport verify_point(const ScenarioContext& ctx, const ProjPoint& x);

struct ExperimentSummary {
    long long total = 0;
    long long inequality = 0;
    long long small_height = 0;
    long long excluded = 0;
    std::vector<long long> bound_violations;  // Inequality points over the bound
    long long hard_failures = 0;
};

struct ExperimentResult {
    std::vector<PointReport> reports;
    ExperimentSummary summary;
};

/// Draws the sample deterministically from the scenario seed and verifies
/// every point. Points are processed independently and aggregated in
/// sample order, so the result does not depend on scheduling.
ExperimentResult run_experiment(const ScenarioContext& ctx);

/// Single-threaded reference with identical output.
ExperimentResult run_experiment_serial(const ScenarioContext& ctx);

/// Deterministic sample used by both experiment runners.
std::vector<ProjPoint> sample_points(const ScenarioContext& ctx);

std::string report_json(const ScenarioContext& ctx, const ExperimentResult& r);

/// One line per point: h, lhs, rhs, branch. Excluded points leave the
/// comparison columns empty.
std::string report_csv(const ExperimentResult& r);

}  // namespace ffchow
