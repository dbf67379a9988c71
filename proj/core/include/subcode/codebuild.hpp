#ifndef SUBCODE_CODEBUILD_HPP
#define SUBCODE_CODEBUILD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subcode/rankmetric.hpp"
#include "subcode/schubert.hpp"
#include "subcode/subspace.hpp"

namespace subcode {

enum class Metric { subspace, injection };

// How a newly selected cell discards contenders. The strict rule is the one
// that reproduces the published rate table for both metrics:
//   subspace:  discard when Delta(alpha, beta) < d_min
//   injection: discard when floor(Delta/2) + floor(|len gap|/2) < delta_min
// dm replaces the injection test by Delta_m(alpha, beta) < 2 delta_min (and,
// for the subspace metric, Delta_m < d_min). paper_illustration applies the
// strict test but never discards cells whose choice value is <= 0, since
// those only ever contribute a single codeword.
enum class SelectionRule { strict, paper_illustration, dm };

const char* metric_name(Metric m);
const char* rule_name(SelectionRule r);

// Choice value of a cell: cell dimension minus max{d, n-d} * (delta_r - 1).
// May be negative.
long long choice_function(const CellTuple& t, unsigned delta_r);

// Profile-vector scoring with the eta(v) correction term; its sum term
// equals the cell dimension of supp(v).
long long kk_score(const ProfileVector& v, unsigned delta_r);

struct SelectionReport {
    struct Row {
        CellTuple tuple;
        long long choice_value;
        int selected_rank;   // pick order, or -1 when discarded
        std::string reason;  // which selected tuple discarded it, and why
    };
    std::size_t n = 0;
    Metric metric = Metric::subspace;
    unsigned target_distance = 0;
    unsigned delta_r = 0;
    SelectionRule rule = SelectionRule::strict;
    std::vector<Row> rows;              // enumeration order (ascending length, lex)
    std::vector<std::size_t> selected;  // indices into rows, in pick order
};

// Greedy cell selection: repeatedly take the not-yet-discarded tuple with
// the largest choice value (ties go to the earliest tuple in enumeration
// order) and discard the contenders that fail the rule against it.
SelectionReport greedy_select(std::size_t n, Metric metric, unsigned target_distance,
                              unsigned delta_r, SelectionRule rule = SelectionRule::strict);

// log_q of the exact integer sum of q^max(F, 0) over the selected cells.
long double rate_lower_bound(const SelectionReport& report, unsigned q);

// One subspace per codeword of g's span: the row space of
// cell_matrix(t) + G * cell_matrix(complement(t)). Every g must fit the
// asterisk pattern of t (FitError otherwise).
std::vector<Subspace> build_cell_code(const CellTuple& t, const LinearMatrixCode& g);

struct SubspaceCode {
    struct CellBlock {
        CellTuple tuple;
        long long choice_value;
        std::vector<Subspace> subspaces;
    };
    std::size_t n = 0;
    unsigned q = 0;
    Metric metric = Metric::subspace;
    unsigned target_distance = 0;
    std::string provenance;
    std::vector<CellBlock> cells;

    std::size_t size() const;
};

struct BuildOptions {
    SelectionRule rule = SelectionRule::strict;
    // Use floor(d_min / 2) instead of ceil(d_min / 2) as the within-cell
    // minimum rank for the subspace metric (only differs for odd d_min,
    // where the floor variant guarantees d_min - 1 instead of d_min).
    bool floor_rank = false;
    // Cap on the total number of codewords materialized.
    std::uint64_t max_codewords = 1ull << 20;
};

// Minimum rank of the within-cell groups: ceil(d_min/2) for the subspace
// metric (floor(d_min/2) behind the flag, clamped to 1) and delta_min for
// injection.
unsigned within_cell_rank(Metric metric, unsigned target_distance, bool floor_rank = false);

// Materializes the code for an existing selection: one Ferrers-fitted
// rank-metric code per cell with positive choice value, the cell base point
// alone for cells at F <= 0.
SubspaceCode build_from_selection(const GfPtr& field, const SelectionReport& report,
                                  const BuildOptions& opts = {});

// The two-step construction: greedy cell selection, then build_from_selection.
SubspaceCode build_code(const GfPtr& field, std::size_t n, Metric metric,
                        unsigned target_distance, const BuildOptions& opts = {});

struct VerifyResult {
    bool ok = true;
    std::size_t pair_count = 0;
    std::optional<std::size_t> min_distance;  // empty when fewer than 2 codewords
    // Offending pair when ok is false: indices into the flattened code.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Brute-force pairwise check of the declared metric against target_distance.
// BudgetExceeded when the code has more than budget subspaces.
VerifyResult verify_min_distance(const SubspaceCode& code, std::uint64_t budget = 10000);

}  // namespace subcode

#endif
