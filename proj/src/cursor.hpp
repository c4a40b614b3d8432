#pragma once

// Character cursor shared by the formula, interval, KB and schema parsers.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "dpers/errors.hpp"

namespace dpers::detail {

class Cursor {
public:
    explicit Cursor(std::string_view text, std::size_t first_line = 1) : text_(text), line_(first_line) {}

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool lookahead(std::string_view token) {
        skip_space();
        return text_.substr(pos_).starts_with(token);
    }

    bool accept(std::string_view token) {
        if (!lookahead(token)) return false;
        advance(token.size());
        return true;
    }

    void expect(std::string_view token) {
        if (!accept(token)) fail("expected '" + std::string(token) + "'");
    }

    /// Identifier `[A-Za-z_][A-Za-z0-9_]*`, or empty if none starts here.
    std::string_view identifier() {
        skip_space();
        std::size_t end = pos_;
        if (end < text_.size() && (std::isalpha(uc(text_[end])) || text_[end] == '_')) {
            ++end;
            while (end < text_.size() && (std::isalnum(uc(text_[end])) || text_[end] == '_')) ++end;
        }
        auto id = text_.substr(pos_, end - pos_);
        advance(id.size());
        return id;
    }

    /// Longest run of characters that may form a signed rational literal.
    std::string_view number_token() {
        skip_space();
        std::size_t end = pos_;
        if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
        while (end < text_.size() && (std::isdigit(uc(text_[end])) || text_[end] == '.' || text_[end] == '/'))
            ++end;
        auto tok = text_.substr(pos_, end - pos_);
        advance(tok.size());
        return tok;
    }

    /// Position of the next significant character.
    std::pair<std::size_t, std::size_t> location() {
        skip_space();
        return {line_, column_};
    }

    [[noreturn]] void fail(const std::string& message) {
        skip_space();
        throw ParseError(message, line_, column_);
    }

    [[noreturn]] void fail_at(const std::string& message, std::pair<std::size_t, std::size_t> where) {
        throw ParseError(message, where.first, where.second);
    }

private:
    static unsigned char uc(char c) { return static_cast<unsigned char>(c); }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
            if (text_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
        }
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
            } else if (std::isspace(uc(c))) {
                advance(1);
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t column_ = 1;
};

}  // namespace dpers::detail
