#include "contrastix/formula.hpp"

namespace contrastix {

Formula::Formula() : Formula(bottom()) {}

Formula Formula::bottom() {
    static const auto node = std::make_shared<const Node>(Node{Kind::Bottom, {}, {}});
    return Formula(node);
}

Formula Formula::top() { return negation(bottom()); }

Formula Formula::atom(Symbol s) { return Formula(std::make_shared<const Node>(Node{Kind::Atom, s, {}})); }

Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(f)}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, {std::move(lhs), std::move(rhs)}}));
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Formula::Kind::Bottom: return true;
        case Formula::Kind::Atom: return a.symbol() == b.symbol();
        case Formula::Kind::Not: return a.operand() == b.operand();
        case Formula::Kind::And:
        case Formula::Kind::Or: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
    return false;
}

std::size_t size(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Bottom: return 0;
        case Formula::Kind::Atom: return 1;
        case Formula::Kind::Not: return size(f.operand());
        case Formula::Kind::And:
        case Formula::Kind::Or: return size(f.lhs()) + size(f.rhs());
    }
    return 0;
}

bool evaluate(const Formula& f, const Valuation& v) {
    switch (f.kind()) {
        case Formula::Kind::Bottom: return false;
        case Formula::Kind::Atom: return f.symbol().id < v.size() && v[f.symbol().id];
        case Formula::Kind::Not: return !evaluate(f.operand(), v);
        case Formula::Kind::And: return evaluate(f.lhs(), v) && evaluate(f.rhs(), v);
        case Formula::Kind::Or: return evaluate(f.lhs(), v) || evaluate(f.rhs(), v);
    }
    return false;
}

void collect_symbols(const Formula& f, std::set<Symbol>& out) {
    switch (f.kind()) {
        case Formula::Kind::Bottom: return;
        case Formula::Kind::Atom: out.insert(f.symbol()); return;
        case Formula::Kind::Not: collect_symbols(f.operand(), out); return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            collect_symbols(f.lhs(), out);
            collect_symbols(f.rhs(), out);
            return;
    }
}

Formula conjoin(std::span<const Formula> fs) {
    if (fs.empty()) return Formula::top();
    Formula acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = acc && fs[i];
    return acc;
}

Formula disjoin(std::span<const Formula> fs) {
    if (fs.empty()) return Formula::bottom();
    Formula acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = acc || fs[i];
    return acc;
}

namespace {

// Precedence: Or = 1, And = 2, unary/atoms = 3.
int precedence(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Or: return 1;
        case Formula::Kind::And: return 2;
        default: return 3;
    }
}

void render(const Formula& f, const Vocabulary& vocab, std::string& out) {
    auto child = [&](const Formula& c, int parent) {
        if (precedence(c) < parent) {
            out += '(';
            render(c, vocab, out);
            out += ')';
        } else {
            render(c, vocab, out);
        }
    };
    switch (f.kind()) {
        case Formula::Kind::Bottom: out += "false"; return;
        case Formula::Kind::Atom: out += vocab.name(f.symbol()); return;
        case Formula::Kind::Not:
            if (f.operand().kind() == Formula::Kind::Bottom) {
                out += "true";
                return;
            }
            out += '!';
            child(f.operand(), 3);
            return;
        case Formula::Kind::And:
            child(f.lhs(), 2);
            out += " & ";
            child(f.rhs(), 3);  // the parser associates to the left
            return;
        case Formula::Kind::Or:
            child(f.lhs(), 1);
            out += " | ";
            child(f.rhs(), 2);
            return;
    }
}

}  // namespace

std::string to_string(const Formula& f, const Vocabulary& vocab) {
    std::string out;
    render(f, vocab, out);
    return out;
}

}  // namespace contrastix
