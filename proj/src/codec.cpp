#include "indet/codec.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace indet {

Encoding encode(const IndetString& x) {
    const Alphabet& alphabet = x.alphabet();
    const auto sigma = static_cast<std::uint32_t>(alphabet.sigma());
    Encoding out;
    out.codes.reserve(x.size());
    std::unordered_map<Letter, std::uint32_t, LetterHash> slots;
    for (const Letter& l : x.letters()) {
        switch (l.kind()) {
        case Letter::Kind::dont_care:
            out.codes.push_back(0);
            break;
        case Letter::Kind::regular:
            out.codes.push_back(l.ranks().front());
            break;
        case Letter::Kind::indeterminate: {
            auto it = slots.find(l);
            if (it == slots.end()) {
                if (slots.size() >= alphabet.sigma_star())
                    throw CapacityError("more than " + std::to_string(alphabet.sigma_star()) +
                                        " distinct indeterminate letters");
                auto slot = static_cast<std::uint32_t>(slots.size() + 1);
                it = slots.emplace(l, slot).first;
                out.i_table.push_back({static_cast<std::uint32_t>(l.scope()),
                                       static_cast<std::uint32_t>(out.l_pool.size() + 1)});
                out.l_pool.insert(out.l_pool.end(), l.ranks().begin(), l.ranks().end());
            }
            out.codes.push_back(sigma + it->second);
            break;
        }
        }
    }
    return out;
}

IndetString decode(const Encoding& e, const Alphabet& alphabet) {
    const std::uint64_t sigma = alphabet.sigma();
    if (e.i_table.size() > alphabet.sigma_star())
        throw DecodeError("I table larger than sigma_star");

    std::vector<Letter> table;
    table.reserve(e.i_table.size());
    std::unordered_set<Letter, LetterHash> seen;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> spans;
    for (std::size_t s = 0; s < e.i_table.size(); ++s) {
        const IndetEntry& entry = e.i_table[s];
        const std::string where = "I[" + std::to_string(s + 1) + "]";
        if (entry.scope < 2)
            throw DecodeError(where + " has scope below 2");
        if (entry.loc == 0 || std::uint64_t{entry.loc} - 1 + entry.scope > e.l_pool.size())
            throw DecodeError(where + " points outside L");
        auto first = e.l_pool.begin() + (entry.loc - 1);
        std::vector<Rank> ranks(first, first + entry.scope);
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            if (ranks[i] == 0 || ranks[i] > sigma)
                throw DecodeError(where + " references a character outside 1..sigma");
            if (i > 0 && ranks[i] <= ranks[i - 1])
                throw DecodeError(where + " segment is not strictly ascending");
        }
        spans.emplace_back(entry.loc, std::uint64_t{entry.loc} + entry.scope);
        Letter l = Letter::of(std::move(ranks));
        if (!seen.insert(l).second)
            throw DecodeError(where + " duplicates an earlier letter");
        table.push_back(std::move(l));
    }
    std::sort(spans.begin(), spans.end());
    for (std::size_t i = 1; i < spans.size(); ++i)
        if (spans[i].first < spans[i - 1].second)
            throw DecodeError("overlapping L segments");

    std::vector<Letter> letters;
    letters.reserve(e.codes.size());
    for (std::size_t i = 0; i < e.codes.size(); ++i) {
        std::uint64_t c = e.codes[i];
        if (c == 0)
            letters.push_back(Letter::dont_care(alphabet.sigma()));
        else if (c <= sigma)
            letters.push_back(Letter::regular(static_cast<Rank>(c)));
        else if (c - sigma <= table.size())
            letters.push_back(table[c - sigma - 1]);
        else
            throw DecodeError("dangling code " + std::to_string(c) + " at position " + std::to_string(i + 1));
    }
    if (letters.empty())
        throw DecodeError("no codes");
    return IndetString(alphabet, std::move(letters));
}

namespace {

constexpr std::string_view magic = "IDS1";

class Writer {
public:
    void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i)
            u8(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i)
            u8(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void bytes(std::string_view s) { out_.append(s); }

    void packed(const std::vector<std::uint32_t>& values, unsigned width) {
        std::uint64_t acc = 0;
        unsigned bits = 0;
        for (std::uint32_t v : values) {
            acc = (acc << width) | v;
            bits += width;
            while (bits >= 8) {
                bits -= 8;
                u8(static_cast<std::uint8_t>(acc >> bits));
            }
            acc &= (std::uint64_t{1} << bits) - 1;
        }
        if (bits > 0)
            u8(static_cast<std::uint8_t>(acc << (8 - bits)));
    }

    std::string take() { return std::move(out_); }

private:
    std::string out_;
};

class Reader {
public:
    explicit Reader(std::string_view in) : in_(in) {}

    std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(in_[pos_++]);
    }
    std::uint32_t u32() {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= std::uint32_t{u8()} << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= std::uint64_t{u8()} << (8 * i);
        return v;
    }
    std::size_t remaining() const noexcept { return in_.size() - pos_; }

    std::string_view bytes(std::size_t n) {
        need(n);
        auto s = in_.substr(pos_, n);
        pos_ += n;
        return s;
    }

    std::vector<std::uint32_t> packed(std::uint64_t count, unsigned width) {
        if (count > (in_.size() - pos_) * 8 / width)
            throw DecodeError("truncated file");
        std::vector<std::uint32_t> out;
        out.reserve(count);
        std::uint64_t acc = 0;
        unsigned bits = 0;
        const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
        for (std::uint64_t i = 0; i < count; ++i) {
            while (bits < width) {
                acc = (acc << 8) | static_cast<std::uint8_t>(in_[pos_++]);
                bits += 8;
            }
            bits -= width;
            out.push_back(static_cast<std::uint32_t>((acc >> bits) & mask));
            acc &= (std::uint64_t{1} << bits) - 1;
        }
        if (bits > 0 && acc != 0)
            throw DecodeError("nonzero padding bits");
        return out;
    }

    bool done() const { return pos_ == in_.size(); }

private:
    void need(std::uint64_t n) const {
        if (n > in_.size() - pos_)
            throw DecodeError("truncated file");
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

} // namespace

std::string write_binary(const Encoding& e, const Alphabet& alphabet) {
    Writer w;
    w.bytes(magic);
    w.u8(static_cast<std::uint8_t>(alphabet.code_width_bits()));
    w.u8(alphabet.is_integer() ? 1 : 0);
    w.u8(0);
    w.u8(0);
    w.u32(static_cast<std::uint32_t>(alphabet.sigma()));
    w.u32(static_cast<std::uint32_t>(alphabet.sigma_star()));
    w.u32(static_cast<std::uint32_t>(e.i_table.size()));
    w.u32(static_cast<std::uint32_t>(e.l_pool.size()));
    w.u64(e.codes.size());
    for (const std::string& s : alphabet.symbols()) {
        if (s.size() > 255)
            throw std::invalid_argument("symbol longer than 255 bytes");
        w.u8(static_cast<std::uint8_t>(s.size()));
        w.bytes(s);
    }
    for (const IndetEntry& entry : e.i_table) {
        w.u32(entry.scope);
        w.u32(entry.loc);
    }
    w.packed(e.l_pool, alphabet.code_width_bits());
    w.packed(e.codes, alphabet.code_width_bits());
    return w.take();
}

BinaryContents read_binary(std::string_view bytes) {
    Reader r(bytes);
    if (r.bytes(magic.size()) != magic)
        throw DecodeError("bad magic");
    unsigned width = r.u8();
    std::uint8_t flags = r.u8();
    if (width == 0 || width > 32)
        throw DecodeError("code width outside 1..32");
    if ((flags & ~1u) != 0 || r.u8() != 0 || r.u8() != 0)
        throw DecodeError("unknown flags");
    std::uint32_t sigma = r.u32();
    std::uint32_t sigma_star = r.u32();
    std::uint32_t i_count = r.u32();
    std::uint32_t l_count = r.u32();
    std::uint64_t n = r.u64();

    auto make_alphabet = [&]() {
        try {
            if (flags & 1)
                return Alphabet::integers(sigma, width, sigma_star);
            // Each symbol takes at least two bytes.
            if (sigma > r.remaining() / 2)
                throw DecodeError("truncated symbol table");
            std::vector<std::string> symbols;
            symbols.reserve(sigma);
            for (std::uint32_t i = 0; i < sigma; ++i) {
                std::uint8_t len = r.u8();
                symbols.emplace_back(r.bytes(len));
            }
            return Alphabet::from_symbols(std::move(symbols), width, sigma_star);
        } catch (const std::invalid_argument& err) {
            throw DecodeError(std::string("bad alphabet: ") + err.what());
        }
    };
    Alphabet alphabet = make_alphabet();

    if (i_count > r.remaining() / 8)
        throw DecodeError("truncated I table");
    Encoding e;
    e.i_table.reserve(i_count);
    for (std::uint32_t i = 0; i < i_count; ++i) {
        std::uint32_t scope = r.u32();
        std::uint32_t loc = r.u32();
        e.i_table.push_back({scope, loc});
    }
    e.l_pool = r.packed(l_count, width);
    e.codes = r.packed(n, width);
    if (!r.done())
        throw DecodeError("trailing bytes");
    return {std::move(alphabet), std::move(e)};
}

} // namespace indet
