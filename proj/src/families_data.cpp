#include <initializer_list>
#include <vector>

#include "fibcalc/families.hpp"

// Reference listings for the four tabulated families, stored verbatim.
// A handful of entries disagree with the defining formulas (see the audit in
// families.cpp); they are kept as found so verify_families can report them.

namespace fibcalc {

namespace {

struct Term {
    const char* coef;
    unsigned apow;
    unsigned xpow;
};

XPoly poly(std::initializer_list<Term> terms) {
    XPoly p;
    for (const auto& t : terms)
        p += XPoly::monomial(ParamPoly::monomial(rational_from_string(t.coef), t.apow), t.xpow);
    return p;
}

}  // namespace

const std::vector<XPoly>& abel_listing() {
    static const std::vector<XPoly> table = {
        poly({{"1", 0, 0}}),
        poly({{"1", 0, 1}}),
        poly({{"1", 0, 2}, {"1", 1, 1}}),
        poly({{"1", 0, 3}, {"-4", 1, 2}, {"6", 2, 1}}),
        poly({{"1", 0, 4}, {"-9", 1, 3}, {"48", 2, 2}, {"48", 3, 1}}),
        poly({{"1", 0, 5}, {"-20", 1, 4}, {"225", 2, 3}, {"-750", 3, 2}, {"625", 4, 1}}),
        poly({{"1", 0, 6},
              {"-40", 1, 5},
              {"960", 2, 4},
              {"-6480", 3, 3},
              {"17280", 4, 2},
              {"-10368", 5, 1}}),
        poly({{"1", 0, 7},
              {"-78", 1, 6},
              {"3640", 2, 5},
              {"-50960", 3, 4},
              {"267540", 4, 3},
              {"-499408", 5, 2},
              {"218491", 6, 1}}),
        poly({{"1", 0, 8},
              {"-147", 1, 7},
              {"131004", 2, 6},
              {"-349440", 3, 5},
              {"3727360", 4, 4},
              {"-13418496", 5, 3},
              {"17891328", 6, 2},
              {"-5505024", 7, 1}}),
    };
    return table;
}

const std::vector<XPoly>& laguerre_listing() {
    static const std::vector<XPoly> table = {
        poly({{"1", 0, 0}}),
        poly({{"-1", 0, 1}}),
        poly({{"1", 0, 2}, {"-1/2", 0, 1}}),
        poly({{"-1", 0, 3}, {"8/3", 0, 2}, {"-4/3", 0, 1}}),
        poly({{"1", 0, 4}, {"-27/4", 0, 3}, {"18", 0, 2}, {"-9/2", 0, 1}}),
        poly({{"-1", 0, 5}, {"20", 0, 4}, {"-135", 0, 3}, {"180", 0, 2}, {"-30", 0, 1}}),
        poly({{"1", 0, 6},
              {"-160/3", 0, 5},
              {"3200/3", 0, 4},
              {"-3600", 0, 3},
              {"3200", 0, 2},
              {"-320", 0, 1}}),
        poly({{"-1", 0, 7},
              {"13182/7", 0, 6},
              {"-54080/7", 0, 5},
              {"540800/7", 0, 4},
              {"-1216800/7", 0, 3},
              {"648960/7", 0, 2},
              {"-40560/7", 0, 1}}),
        poly({{"1", 0, 8},
              {"-3087/8", 0, 7},
              {"223587/4", 0, 6},
              {"-1498580", 0, 5},
              {"9937200", 0, 4},
              {"-13415220", 0, 3},
              {"4471740", 0, 2},
              {"-171990", 0, 1}}),
    };
    return table;
}

const std::vector<XPoly>& laguerre_alpha1_listing() {
    static const std::vector<XPoly> table = {
        poly({{"1", 0, 0}}),
        poly({{"-1", 0, 1}, {"1", 0, 0}}),
        poly({{"1", 0, 2}, {"-2", 0, 1}, {"2", 0, 0}}),
        poly({{"-2", 0, 3}, {"6", 0, 2}, {"-12", 0, 1}, {"6", 0, 0}}),
        poly({{"6", 0, 4}, {"-30", 0, 3}, {"90", 0, 2}, {"-90", 0, 1}, {"30", 0, 0}}),
        poly({{"-30", 0, 5},
              {"240", 0, 4},
              {"-1200", 0, 3},
              {"1800", 0, 2},
              {"-1200", 0, 1},
              {"240", 0, 0}}),
        poly({{"240", 0, 6},
              {"-3120", 0, 5},
              {"24960", 0, 4},
              {"-62400", 0, 3},
              {"62400", 0, 2},
              {"-24960", 0, 1},
              {"3120", 0, 0}}),
    };
    return table;
}

const std::vector<XPoly>& bernoulli_listing() {
    static const std::vector<XPoly> table = {
        poly({{"1", 0, 0}}),
        poly({{"1", 0, 1}, {"1", 0, 0}}),
        poly({{"1", 0, 2}, {"1", 0, 1}, {"1/2", 0, 0}}),
        poly({{"1", 0, 3}, {"2", 0, 2}, {"1", 0, 1}, {"1/3", 0, 0}}),
        poly({{"1", 0, 4}, {"3", 0, 3}, {"3", 0, 2}, {"1", 0, 1}, {"1/5", 0, 0}}),
        poly({{"1", 0, 5}, {"5", 0, 4}, {"15/2", 0, 3}, {"5", 0, 2}, {"1", 0, 1}, {"1/8", 0, 0}}),
        poly({{"1", 0, 6},
              {"8", 0, 5},
              {"20", 0, 4},
              {"20", 0, 3},
              {"8", 0, 2},
              {"1", 0, 1},
              {"1/13", 0, 0}}),
        poly({{"1", 0, 7},
              {"13", 0, 6},
              {"52", 0, 5},
              {"260/3", 0, 4},
              {"52", 0, 3},
              {"13", 0, 2},
              {"1", 0, 1},
              {"1/21", 0, 0}}),
        poly({{"1", 0, 8},
              {"21", 0, 7},
              {"273/2", 0, 6},
              {"364", 0, 5},
              {"364", 0, 4},
              {"273/2", 0, 3},
              {"21", 0, 2},
              {"1", 0, 1},
              {"1/36", 0, 0}}),
        poly({{"1", 0, 9},
              {"34", 0, 8},
              {"357", 0, 7},
              {"1547", 0, 6},
              {"12376/5", 0, 5},
              {"1547", 0, 4},
              {"357", 0, 3},
              {"34", 0, 2},
              {"1", 0, 1},
              {"1/55", 0, 0}}),
    };
    return table;
}

}  // namespace fibcalc
