#include "indet/text_format.hpp"

#include <algorithm>
#include <set>

namespace indet {

namespace {

std::size_t utf8_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead >> 5) == 0x6) return 2;
    if ((lead >> 4) == 0xe) return 3;
    if ((lead >> 3) == 0x1e) return 4;
    return 1;
}

class Parser {
public:
    Parser(std::string_view input, const Alphabet& alphabet) : in_(input), alphabet_(alphabet) {}

    IndetString run() {
        if (in_.empty())
            throw ParseError("empty input", 0);
        std::vector<Letter> letters;
        while (pos_ < in_.size()) {
            char c = in_[pos_];
            if (c == '*') {
                letters.push_back(Letter::dont_care(alphabet_.sigma()));
                ++pos_;
            } else if (c == '{') {
                letters.push_back(braced());
            } else if (c == '}' || c == ',') {
                throw ParseError(std::string("unexpected '") + c + "'", pos_);
            } else {
                letters.push_back(Letter::regular(bare_symbol()));
            }
        }
        return IndetString(alphabet_, std::move(letters));
    }

private:
    [[noreturn]] void unknown(std::size_t at) const {
        std::size_t len = std::min(utf8_length(static_cast<unsigned char>(in_[at])), in_.size() - at);
        throw ParseError("unknown character '" + std::string(in_.substr(at, len)) + "'", at);
    }

    // Greedy longest match; only integer alphabets and custom symbol lists have multi-byte symbols.
    Rank bare_symbol() {
        std::size_t limit = pos_;
        while (limit < in_.size() && limit - pos_ < alphabet_.max_symbol_length() &&
               !is_reserved_symbol_char(in_[limit]))
            ++limit;
        for (std::size_t end = limit; end > pos_; --end) {
            if (auto r = alphabet_.rank_of(in_.substr(pos_, end - pos_))) {
                pos_ = end;
                return *r;
            }
        }
        unknown(pos_);
    }

    Letter braced() {
        std::size_t open = pos_++;
        std::vector<Rank> ranks;
        for (;;) {
            if (pos_ >= in_.size())
                throw ParseError("unbalanced '{'", open);
            std::size_t start = pos_;
            while (pos_ < in_.size() && in_[pos_] != ',' && in_[pos_] != '}' && in_[pos_] != '{')
                ++pos_;
            if (pos_ >= in_.size())
                throw ParseError("unbalanced '{'", open);
            if (in_[pos_] == '{')
                throw ParseError("nested '{'", pos_);
            if (start == pos_) {
                if (in_[pos_] == '}' && ranks.empty())
                    throw ParseError("empty letter {}", open);
                throw ParseError("missing character", pos_);
            }
            auto r = alphabet_.rank_of(in_.substr(start, pos_ - start));
            if (!r)
                unknown(start);
            if (std::find(ranks.begin(), ranks.end(), *r) != ranks.end())
                throw ParseError("repeated character in letter", start);
            ranks.push_back(*r);
            if (in_[pos_++] == '}')
                break;
        }
        return Letter::of(std::move(ranks));
    }

    std::string_view in_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

IndetString parse_text(std::string_view input, const Alphabet& alphabet) {
    return Parser(input, alphabet).run();
}

std::string to_text(const Letter& letter, const Alphabet& alphabet) {
    switch (letter.kind()) {
    case Letter::Kind::dont_care:
        return "*";
    case Letter::Kind::regular:
        return alphabet.symbol(letter.ranks().front());
    case Letter::Kind::indeterminate:
        break;
    }
    std::string out = "{";
    bool first = true;
    for (Rank r : letter.ranks()) {
        if (!first)
            out += ',';
        out += alphabet.symbol(r);
        first = false;
    }
    out += '}';
    return out;
}

std::string to_text(const IndetString& x) {
    std::string out;
    for (const Letter& l : x.letters())
        out += to_text(l, x.alphabet());
    return out;
}

Alphabet infer_alphabet(std::string_view input, unsigned code_width_bits) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < input.size();) {
        std::size_t len = std::min(utf8_length(static_cast<unsigned char>(input[i])), input.size() - i);
        if (!is_reserved_symbol_char(input[i]))
            seen.emplace(input.substr(i, len));
        i += len;
    }
    if (seen.empty())
        seen.emplace("a");
    // std::set orders UTF-8 byte strings, which is code point order.
    return Alphabet::from_symbols({seen.begin(), seen.end()}, code_width_bits);
}

} // namespace indet
