#include "contrastix/parser.hpp"

#include <cctype>

namespace contrastix {

namespace {

class Parser {
public:
    Parser(std::string_view text, Vocabulary& vocab) : text_(text), vocab_(vocab) {}

    Formula parse() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("empty formula", pos_);
        Formula f = disjunction();
        skip_space();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return f;
    }

private:
    Formula disjunction() {
        Formula f = conjunction();
        while (accept('|')) f = f || conjunction();
        return f;
    }

    Formula conjunction() {
        Formula f = unary();
        while (accept('&')) f = f && unary();
        return f;
    }

    Formula unary() {
        if (accept('!')) return !unary();
        return atom();
    }

    Formula atom() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
        if (accept('(')) {
            Formula f = disjunction();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return f;
        }
        char c = text_[pos_];
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
            throw ParseError(std::string("unexpected '") + c + "'", pos_);
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string_view ident = text_.substr(start, pos_ - start);
        if (ident == "true") return Formula::top();
        if (ident == "false") return Formula::bottom();
        return Formula::atom(vocab_.intern(ident));
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    Vocabulary& vocab_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, Vocabulary& vocab) { return Parser(text, vocab).parse(); }

}  // namespace contrastix
