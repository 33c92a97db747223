#include "typrank/classifier.hpp"

#include "typrank/error.hpp"

namespace typrank {

std::string_view to_string(VerdictBasis basis) {
    switch (basis) {
    case VerdictBasis::BoundaryCount: return "boundary_count";
    case VerdictBasis::MidWitness: return "mid_witness";
    case VerdictBasis::TallRule: return "tall_rule";
    case VerdictBasis::FullRule: return "full_rule";
    }
    return "unknown";
}

bool is_supported(const Format& format) {
    const bool three_by_three = format.m() == 3 && format.n() == 3;
    switch (format.regime()) {
    case Regime::Boundary: return format.m() == 2 || three_by_three;
    case Regime::Mid: return format.m() == 2 || three_by_three;
    case Regime::Tall:
    case Regime::Full: return true;
    case Regime::SubBoundary: return false;
    }
    return false;
}

void require_supported(const Format& format) {
    if (is_supported(format)) return;
    throw Error(ErrorKind::UnsupportedFormat,
                "unsupported " + std::string(to_string(format.regime())) + " format " +
                    format.to_string());
}

RankVerdict classify_span(const Format& format, const MatrixSubspace& span, SeededRng& rng,
                          const SolverTolerances& tol) {
    require_supported(format);
    RankVerdict verdict;
    const int l = format.l();
    switch (format.regime()) {
    case Regime::Full:
        verdict.rank = format.matrix_size();
        verdict.basis = VerdictBasis::FullRule;
        return verdict;
    case Regime::Tall:
        verdict.rank = l;
        verdict.basis = VerdictBasis::TallRule;
        verdict.witness = rank_one_witness_search(span, rng, tol);
        return verdict;
    case Regime::Mid: {
        verdict.basis = VerdictBasis::MidWitness;
        verdict.witness = rank_one_witness_search(span, rng, tol);
        if (!verdict.witness)
            throw Error(ErrorKind::TrialAmbiguous, "no certified rank-one witness in a mid format");
        verdict.rank = l;
        return verdict;
    }
    case Regime::Boundary: {
        verdict.basis = VerdictBasis::BoundaryCount;
        IntersectionResult result = format.m() == 2
                                        ? pencil_intersection_count(span, tol)
                                        : three_by_three_intersection_count(span, rng, tol);
        if (result.status != SolveStatus::Certified)
            throw Error(ErrorKind::TrialAmbiguous, result.note);
        verdict.rank = result.real_count >= l ? l : l + 1;
        verdict.intersection = std::move(result);
        return verdict;
    }
    case Regime::SubBoundary: break;
    }
    throw Error(ErrorKind::UnsupportedFormat, "unsupported format " + format.to_string());
}

RankVerdict classify_rank(const Tensor3& tensor, SeededRng& rng, const SolverTolerances& tol) {
    const Format& format = tensor.format();
    require_supported(format);
    if (format.regime() == Regime::Full) {
        RankVerdict verdict;
        verdict.rank = format.matrix_size();
        verdict.basis = VerdictBasis::FullRule;
        return verdict;
    }
    return classify_span(format, slice_span(tensor), rng, tol);
}

} // namespace typrank
