#pragma once

#include <optional>

#include "typrank/format.hpp"
#include "typrank/solvers.hpp"
#include "typrank/subspace.hpp"
#include "typrank/tensor.hpp"

namespace typrank {

enum class VerdictBasis { BoundaryCount, MidWitness, TallRule, FullRule };

std::string_view to_string(VerdictBasis basis);

struct RankVerdict {
    int rank = 0;
    VerdictBasis basis = VerdictBasis::FullRule;
    std::optional<IntersectionResult> intersection;
    std::optional<RankOneWitness> witness;
};

/// Boundary formats with m = 2 or (3,3), the Mid format 3x3x6, every Tall and
/// every Full format.
bool is_supported(const Format& format);

/// Throws Error(UnsupportedFormat) with a message naming the regime.
void require_supported(const Format& format);

/// Rank verdict from the slice span L of a tensor with the given format.
///  - Boundary: rank ell iff L meets the Segre variety in >= ell real points,
///    otherwise ell + 1.
///  - Mid: rank ell iff L contains a real rank-one matrix.
///  - Tall: ell. Full: mn.
/// Throws Error(TrialAmbiguous) when the solver could not certify a count.
RankVerdict classify_span(const Format& format, const MatrixSubspace& span, SeededRng& rng,
                          const SolverTolerances& tol = {});

RankVerdict classify_rank(const Tensor3& tensor, SeededRng& rng,
                          const SolverTolerances& tol = {});

} // namespace typrank
