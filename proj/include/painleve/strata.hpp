#pragma once

#include "painleve/models.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace painleve {

/// One of the 24 vectors +-e_i +-e_j (i < j) of Z^4.
struct Root4 {
    std::array<int, 4> c{};
    friend bool operator==(const Root4&, const Root4&) = default;
};

const std::array<Root4, 24>& p6_roots();

/// <v, root>; nullopt when a generic coordinate enters with nonzero weight.
std::optional<ComplexRational> inner_product(const std::vector<Param>& v, const Root4& root);

// Morley degree as transcribed: an exact value, a stated range, two
// incompatible statements for the same stratum, or no statement at all.
struct ExactDegree {
    int value;
    friend bool operator==(const ExactDegree&, const ExactDegree&) = default;
};
struct DegreeRange {
    int lo, hi;
    friend bool operator==(const DegreeRange&, const DegreeRange&) = default;
};
struct DegreeConflict {
    std::vector<int> values;
    friend bool operator==(const DegreeConflict&, const DegreeConflict&) = default;
};
struct OutsidePaperScope {
    friend bool operator==(const OutsidePaperScope&, const OutsidePaperScope&) = default;
};
using DegreeValue = std::variant<ExactDegree, DegreeRange, DegreeConflict, OutsidePaperScope>;

enum class CKind { Rational, NonRationalConstant };

/// Lascar (U) and Morley ranks for the planar family X_c. Fiber ranks are
/// absent for c = -1, which the dichotomy does not cover.
struct XcReport {
    CKind c_kind = CKind::Rational;
    std::optional<int> fiber_lascar;
    std::optional<int> fiber_morley;
    int family_lascar = 2;
    int family_morley = 3;
    std::vector<std::string> notes;
};

struct Classification {
    Family family;
    std::vector<Param> params;
    std::string stratum;
    std::optional<int> morley_rank;  // nullopt: no statement available
    DegreeValue morley_degree;
    std::string citation;
    std::vector<std::string> notes;
    std::optional<XcReport> xc;
};

Classification classify(const FamilyInstance& inst);

enum class P6Stratum { Generic = 0, M = 1, P = 2, L = 3, D = 4 };
std::string_view stratum_name(P6Stratum s);

struct P6Result {
    P6Stratum stratum = P6Stratum::Generic;
    std::vector<Root4> witnesses;  // a maximal independent set of integral roots
    int rank = 0;
};

/// Rank of the Q-span of {root : <v, root> is a real integer}; the stratum is
/// Generic/M/P/L/D for rank 0..4. Requires 4 coordinates.
P6Result p6_stratum(const std::vector<Param>& v);
P6Result p6_stratum(const ParamVector& v);

XcReport classify_xc(const Param& c);

}  // namespace painleve
