#pragma once

#include "contrastix/parser.hpp"
#include "contrastix/problem.hpp"

namespace contrastix::testing {

inline Formula parse(const char* text, Vocabulary& vocab) { return parse_formula(text, vocab); }

inline const char* exactly_two() { return "(p & q & !r) | (p & !q & r) | (!p & q & r)"; }
inline const char* exactly_one() { return "(p & !q & !r) | (!p & q & !r) | (!p & !q & r)"; }

inline FormulaSet parse_set(std::initializer_list<const char*> items, Vocabulary& vocab) {
    FormulaSet out;
    for (const char* s : items) out.push_back(parse_formula(s, vocab));
    return out;
}

/// Counting example: p, q, r with exactly two true vs exactly one true.
inline ProblemInstance counting_ce() {
    Vocabulary v;
    FormulaSet s = parse_set({"p", "q", "!r"}, v);
    FormulaSet sp = parse_set({"p", "!q", "!r"}, v);
    Formula phi = parse(exactly_two(), v);
    Formula psi = parse(exactly_one(), v);
    return ProblemInstance::ce(v, s, sp, phi, psi);
}

inline ProblemInstance counting_gce() {
    Vocabulary v;
    Formula phi = parse(exactly_two(), v);
    Formula psi = parse(exactly_one(), v);
    return ProblemInstance::gce(v, phi, psi);
}

inline ProblemInstance counting_sep() {
    Vocabulary v;
    Formula phi = parse(exactly_two(), v);
    Formula psi = parse(exactly_one(), v);
    return ProblemInstance::sep(v, phi, psi);
}

/// Pelican (phi) vs seagull (psi) for a large bird with a beak pouch.
inline ProblemInstance seabird(ProblemKind kind) {
    Vocabulary v;
    Formula phi = parse("beak_pouch", v);
    Formula psi = parse("!beak_pouch & small & ((white_body & webbed_feet) | grey_wing)", v);
    FormulaSet s = parse_set({"beak_pouch", "!small", "white_body", "webbed_feet", "!grey_wing"}, v);
    return kind == ProblemKind::CD ? ProblemInstance::cd(v, s, phi, psi) : ProblemInstance::cce(v, s, phi, psi);
}

}  // namespace contrastix::testing
