#include "painleve/strata.hpp"

#include "painleve/errors.hpp"

namespace painleve {

namespace {

// Integer linear form in the coordinates; nullopt when a generic coordinate
// carries a nonzero coefficient.
std::optional<ComplexRational> linear_form(const std::vector<Param>& v, std::initializer_list<int> coeffs) {
    ComplexRational acc;
    std::size_t i = 0;
    for (int k : coeffs) {
        if (k != 0) {
            if (is_generic(v[i])) return std::nullopt;
            acc += ComplexRational(k) * std::get<ComplexRational>(v[i]);
        }
        ++i;
    }
    return acc;
}

bool form_in(const std::vector<Param>& v, std::initializer_list<int> coeffs, LatticeKind lattice) {
    auto z = linear_form(v, coeffs);
    return z && lattice_member(*z, lattice);
}

Classification base(const FamilyInstance& inst) {
    Classification c{inst.family(), inst.params(), "", std::nullopt, OutsidePaperScope{}, "", {}, std::nullopt};
    return c;
}

void set_degree(Classification& c, std::string stratum, DegreeValue degree, std::string citation) {
    c.stratum = std::move(stratum);
    c.morley_rank = 1;
    c.morley_degree = std::move(degree);
    c.citation = std::move(citation);
    if (std::holds_alternative<ExactDegree>(c.morley_degree) && std::get<ExactDegree>(c.morley_degree).value == 1)
        c.notes.emplace_back("strongly minimal");
}

Classification classify_p2(const FamilyInstance& inst) {
    Classification c = base(inst);
    const auto& v = inst.params();
    if (form_in(v, {1}, LatticeKind::HalfPlusIntegers)) {
        set_degree(c, "half_integer", ExactDegree{2},
                   "Umemura-Watanabe 1997, 2.7-2.9: over any extension, a solution of P_II(-1/2) of "
                   "transcendence degree one satisfies a Riccati equation; the fibers with alpha in 1/2+Z "
                   "are isomorphic via Backlund transformations");
        c.notes.emplace_back("the complement of the Riccati subvariety is strongly minimal and geometrically "
                             "disintegrated");
        c.notes.emplace_back("y' = -(y^2 + t/2) lies in P_II(-1/2) and y' = y^2 + t/2 lies in P_II(+1/2) "
                             "(see `verify riccati`)");
        if (std::get<ComplexRational>(v[0]) != ComplexRational(Rational(-1, 2)))
            c.notes.emplace_back("the degree of the exceptional subvariety varies along the Backlund orbit; "
                                 "no closed form is tabulated");
    } else {
        c.stratum = "outside_scope";
        c.notes.emplace_back("only the fibers with alpha in 1/2 + Z are classified");
    }
    return c;
}

Classification classify_p3(const FamilyInstance& inst) {
    Classification c = base(inst);
    const auto& v = inst.params();
    const bool integral = form_in(v, {1, 0}, LatticeKind::Integers) && form_in(v, {0, 1}, LatticeKind::Integers);
    const bool sum_even = form_in(v, {1, 1}, LatticeKind::TwoIntegers);
    const bool diff_even = form_in(v, {1, -1}, LatticeKind::TwoIntegers);
    if (integral && sum_even) {
        set_degree(c, "D1", ExactDegree{3},
                   "Umemura-Watanabe 1998, Lemma 3.2 with the affine transformations s1-s4");
    } else if (sum_even || diff_even) {
        set_degree(c, "W1-D1", ExactDegree{2},
                   "Umemura-Watanabe 1998, Lemma 3.1 with the affine transformations s1-s4");
    } else {
        set_degree(c, "generic", ExactDegree{1}, "Umemura-Watanabe 1998, Theorem 1.2 (iii): S(v) is strongly minimal");
    }
    return c;
}

Classification classify_p4(const FamilyInstance& inst) {
    Classification c = base(inst);
    const auto& v = inst.params();
    const bool d12 = form_in(v, {1, -1, 0}, LatticeKind::Integers);
    const bool d32 = form_in(v, {0, -1, 1}, LatticeKind::Integers);
    const bool d13 = form_in(v, {1, 0, -1}, LatticeKind::Integers);
    if (d12 && d32 && d13) {
        set_degree(c, "D", ExactDegree{3},
                   "Umemura-Watanabe 1997, Lemma 3.11: two irreducible order one differential subvarieties "
                   "(D is the H-orbit of the origin)");
    } else if (d12 || d32 || d13) {
        set_degree(c, "W-D", ExactDegree{2},
                   "Umemura-Watanabe 1997, Lemma 3.10: one irreducible order one differential subvariety");
    } else {
        set_degree(c, "generic", ExactDegree{1},
                   "Umemura-Watanabe 1997, Corollaries 3.5 and 3.9: Condition J (no differential "
                   "subvarieties except finite sets of points)");
    }
    return c;
}

Classification classify_p5(const FamilyInstance& inst) {
    Classification c = base(inst);
    const auto& v = inst.params();
    const bool in_w = form_in(v, {1, -1, 0, 0}, LatticeKind::Integers) ||
                      form_in(v, {1, 0, -1, 0}, LatticeKind::Integers) ||
                      form_in(v, {1, 0, 0, -1}, LatticeKind::Integers) ||
                      form_in(v, {0, 1, -1, 0}, LatticeKind::Integers) ||
                      form_in(v, {0, 1, 0, -1}, LatticeKind::Integers) ||
                      form_in(v, {0, 0, 1, -1}, LatticeKind::Integers);
    if (in_w) {
        set_degree(c, "W", DegreeRange{2, 4}, "Watanabe 1995, Lemmas 3.1-3.4");
        c.notes.emplace_back("the exact degree on each sub-locus of W is not tabulated; only the range 2..4 is "
                             "stated");
    } else {
        set_degree(c, "generic", ExactDegree{1}, "Watanabe 1995, Corollary 2.6");
    }
    return c;
}

Classification classify_p6(const FamilyInstance& inst) {
    Classification c = base(inst);
    const auto& v = inst.params();
    P6Result r = p6_stratum(v);
    switch (r.stratum) {
        case P6Stratum::Generic:
            set_degree(c, "generic", ExactDegree{1}, "Watanabe 1998, Theorem 2.1 (v)");
            break;
        case P6Stratum::M:
            if (form_in(v, {1, -1, 0, 0}, LatticeKind::HalfPlusIntegers) &&
                form_in(v, {0, 0, 1, -1}, LatticeKind::Integers)) {
                set_degree(c, "M-P", ExactDegree{4},
                           "Watanabe 1998, Propositions 4.1, 4.4, 4.9 (v1-v2 in 1/2+Z and v3-v4 in Z)");
            } else {
                set_degree(c, "M-P", ExactDegree{2}, "Watanabe 1998, Propositions 4.1, 4.4, 4.9");
            }
            break;
        case P6Stratum::P:
            set_degree(c, "P-L", ExactDegree{3}, "Watanabe 1998, Propositions 4.2 and 4.5");
            break;
        case P6Stratum::L:
            set_degree(c, "L-D", DegreeConflict{{3, 4}},
                       "Watanabe 1998, Propositions 4.3 and 4.6 (degree 3); Watanabe 1998, Proposition 4.4 "
                       "(degree 4)");
            c.notes.emplace_back("two incompatible degree statements are recorded for this stratum; both are "
                                 "reported");
            break;
        case P6Stratum::D:
            set_degree(c, "D", ExactDegree{5}, "Watanabe 1998, Proposition 4.7");
            break;
    }
    return c;
}

Classification classify_xc_instance(const FamilyInstance& inst) {
    Classification c = base(inst);
    XcReport report = classify_xc(inst.params()[0]);
    if (!report.fiber_morley) {
        c.stratum = "c_minus_one";
    } else if (report.c_kind == CKind::Rational) {
        c.stratum = "rational";
        c.citation = "rational first integral e^{c1} x = y^c (1-y): the generic solution forks over the "
                     "constants, Lascar rank 2";
    } else {
        c.stratum = "non_rational";
        c.citation = "no algebraic relation between x and y over any extension: Lascar rank 1; Morley rank "
                     "equals Lascar rank in order two";
    }
    c.morley_rank = report.fiber_morley;
    c.notes = report.notes;
    c.notes.emplace_back("Morley degree of X_c is not tabulated");
    c.xc = std::move(report);
    return c;
}

}  // namespace

const std::array<Root4, 24>& p6_roots() {
    static const std::array<Root4, 24> roots = [] {
        std::array<Root4, 24> out{};
        std::size_t k = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        Root4 r;
                        r.c[i] = si;
                        r.c[j] = sj;
                        out[k++] = r;
                    }
        return out;
    }();
    return roots;
}

std::optional<ComplexRational> inner_product(const std::vector<Param>& v, const Root4& root) {
    if (v.size() != 4) throw ConstraintError("p6 expects 4 coordinates, got " + std::to_string(v.size()));
    return linear_form(v, {root.c[0], root.c[1], root.c[2], root.c[3]});
}

std::string_view stratum_name(P6Stratum s) {
    switch (s) {
        case P6Stratum::Generic: return "generic";
        case P6Stratum::M: return "M";
        case P6Stratum::P: return "P";
        case P6Stratum::L: return "L";
        case P6Stratum::D: return "D";
    }
    return "?";
}

P6Result p6_stratum(const std::vector<Param>& v) {
    // Incremental row echelon form over Q of the integral roots.
    std::vector<std::array<Rational, 4>> basis;
    std::vector<int> pivots;
    P6Result result;
    for (const Root4& root : p6_roots()) {
        auto ip = inner_product(v, root);
        if (!ip || !lattice_member(*ip, LatticeKind::Integers)) continue;
        std::array<Rational, 4> row;
        for (int k = 0; k < 4; ++k) row[k] = root.c[k];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rational factor = row[pivots[b]];
            if (sgn(factor) == 0) continue;
            for (int k = 0; k < 4; ++k) row[k] -= factor * basis[b][k];
        }
        int pivot = -1;
        for (int k = 0; k < 4; ++k)
            if (sgn(row[k]) != 0) {
                pivot = k;
                break;
            }
        if (pivot < 0) continue;
        const Rational lead = row[pivot];
        for (auto& x : row) x /= lead;
        // keep earlier rows reduced against the new pivot
        for (auto& b : basis) {
            const Rational factor = b[pivot];
            if (sgn(factor) == 0) continue;
            for (int k = 0; k < 4; ++k) b[k] -= factor * row[k];
        }
        basis.push_back(row);
        pivots.push_back(pivot);
        result.witnesses.push_back(root);
    }
    result.rank = static_cast<int>(basis.size());
    result.stratum = static_cast<P6Stratum>(result.rank);
    return result;
}

P6Result p6_stratum(const ParamVector& v) { return p6_stratum(std::vector<Param>(v.begin(), v.end())); }

XcReport classify_xc(const Param& c) {
    XcReport r;
    const bool rational = !is_generic(c) && std::get<ComplexRational>(c).is_real();
    r.c_kind = rational ? CKind::Rational : CKind::NonRationalConstant;
    if (rational && std::get<ComplexRational>(c) == ComplexRational(-1)) {
        r.notes.emplace_back("c = -1: x' = -1 no longer determines y from x; the fiber is outside the scope of "
                             "the rank analysis");
        return r;
    }
    if (rational) {
        r.fiber_lascar = 2;
        r.fiber_morley = 2;
    } else {
        r.fiber_lascar = 1;
        r.fiber_morley = 1;
    }
    return r;
}

Classification classify(const FamilyInstance& inst) {
    switch (inst.family()) {
        case Family::PII: return classify_p2(inst);
        case Family::PIII: return classify_p3(inst);
        case Family::PIV: return classify_p4(inst);
        case Family::PV: return classify_p5(inst);
        case Family::PVI: return classify_p6(inst);
        case Family::XC: return classify_xc_instance(inst);
    }
    throw ConstraintError("unknown family");
}

}  // namespace painleve
