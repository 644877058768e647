#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fibcalc/exactring.hpp"
#include "fibcalc/operators.hpp"

namespace fibcalc {

struct PolySequence {
    std::vector<XPoly> terms;  // terms[n] has degree n
    std::string kind;          // "basic", "sheffer" or "closed-form"
    std::string operator_tag;
};

// The unique sequence with q_0 = 1, q_n(0) = 0 and Q q_n = F_n q_{n-1},
// solved exactly by back-substitution on an upper-triangular system whose
// diagonal entries are c_1 * F_j. Beyond requiring a delta operator, the
// solve needs c_1 to be a nonzero rational constant so division stays in
// Q[a]; every operator constructed in this project satisfies that.
PolySequence basic_sequence(const OpSeries& Q, std::size_t n_max);

// s_n = S^{-1} q_n for invertible S.
PolySequence sheffer_sequence(const OpSeries& Q, const OpSeries& S, std::size_t n_max);

// Closed-form families, evaluated exactly as the defining formulas read.
// Several disagree with the reference listings or with the recurrence the
// sequences are supposed to satisfy; verify_families surfaces all of that
// instead of anyone silently patching a table.
XPoly abel_closed(std::size_t n);
XPoly laguerre_basic_closed(std::size_t n);
XPoly hermite_closed(std::size_t n);
XPoly laguerre_alpha_closed(std::size_t n, long alpha);
XPoly bernoulli_closed(std::size_t n);

// Reference listings, stored verbatim (typos included) so the audit
// has the real tables to compare against.
const std::vector<XPoly>& abel_listing();             // n = 0..8
const std::vector<XPoly>& laguerre_listing();         // n = 0..8
const std::vector<XPoly>& laguerre_alpha1_listing();  // n = 0..6
const std::vector<XPoly>& bernoulli_listing();        // n = 0..9

// Operator ingredients for the construction column of the audit.
//
// bernoulli_inverse_op is S^{-1} = sum_j D^j / F_{j+1}! directly; the
// Bernoulli S is its truncated inverse.
OpSeries bernoulli_inverse_op(int trunc);
// hermite_inverse_op is the series sum_k (-a/2)^k D^{2k} / F_k!, i.e. the
// S^{-1} the Hermite closed form applies to x^n. Note this is NOT the
// series inverse of the corresponding +a/2 series (these E-type series do
// not multiply like exponentials), so the family is pinned down by its
// S^{-1}, matching how the closed form is written.
OpSeries hermite_inverse_op(int trunc);
// S = (I - D)^{-(alpha+1)} for the order-alpha Laguerre family.
OpSeries laguerre_alpha_s_op(long alpha, int trunc);

struct Discrepancy {
    std::string family;
    std::size_t n = 0;
    std::string lhs_source;  // "listing" | "closed-form" | "solver"
    std::string rhs_source;
    XPoly lhs, rhs, diff;  // diff = lhs - rhs, nonzero by construction
};

struct DiscrepancyReport {
    std::vector<Discrepancy> entries;
    bool clean() const { return entries.empty(); }
};

// Pairwise comparison of listing, closed form and solver/construction
// output for the named families ("all" or any of abel, laguerre,
// laguerre-alpha, bernoulli, hermite). Listing comparisons stop at the
// stored table depth; the other comparisons run to n_max. Output order is
// fixed, so the report is deterministic.
DiscrepancyReport verify_families(std::size_t n_max);
DiscrepancyReport verify_families(std::size_t n_max, const std::vector<std::string>& families);

}  // namespace fibcalc
