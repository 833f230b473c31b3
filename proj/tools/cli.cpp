#include "cli.hpp"

#include "fuzz.hpp"

#include "indet/codec.hpp"
#include "indet/oracles.hpp"
#include "indet/palindrome.hpp"
#include "indet/regularity.hpp"
#include "indet/text_format.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace indet::cli {

namespace {

enum class Format { plain, kv };

struct Config {
    std::string alphabet_spec;
    std::string preset;
    std::optional<unsigned> code_width;
    std::optional<std::uint64_t> sigma_star;
    std::string input_path;
    std::vector<std::string> positional;
    Format format = Format::plain;
    bool oracle = false;
    bool strict = false;
};

// Nonzero exit with a message already written.
struct Failure {
    int code;
};

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += sep;
        out += p;
    }
    return out;
}

template <class Seq>
std::string comma_list(const Seq& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty())
            out += ',';
        out += std::to_string(v);
    }
    return out;
}

std::string read_stream(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open " + path);
    return read_stream(file);
}

std::string trim(std::string s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string::npos)
        return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::string read_input(const Config& cfg, std::istream& in) {
    if (!cfg.positional.empty())
        return trim(join(cfg.positional, ' '));
    if (!cfg.input_path.empty())
        return trim(read_file(cfg.input_path));
    return trim(read_stream(in));
}

std::vector<std::string> code_points(std::string_view s) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.size();) {
        std::size_t len = 1;
        const auto lead = static_cast<unsigned char>(s[i]);
        if (lead >= 0xF0)
            len = 4;
        else if (lead >= 0xE0)
            len = 3;
        else if (lead >= 0xC0)
            len = 2;
        out.emplace_back(s.substr(i, len));
        i += len;
    }
    return out;
}

Alphabet resolve_alphabet(const Config& cfg, std::string_view input) {
    if (cfg.preset == "dna") {
        if (!cfg.alphabet_spec.empty())
            throw std::invalid_argument("--preset and --alphabet are mutually exclusive");
        return Alphabet::dna();
    }
    if (!cfg.preset.empty())
        throw std::invalid_argument("unknown preset '" + cfg.preset + "'");
    const std::string& spec = cfg.alphabet_spec;
    if (spec.rfind("int:", 0) == 0) {
        std::uint64_t sigma = 0;
        const auto [ptr, ec] = std::from_chars(spec.data() + 4, spec.data() + spec.size(), sigma);
        if (ec != std::errc() || ptr != spec.data() + spec.size() || sigma == 0)
            throw std::invalid_argument("bad integer alphabet '" + spec + "'");
        return Alphabet::integers(sigma, cfg.code_width.value_or(32), cfg.sigma_star);
    }
    const unsigned width = cfg.code_width.value_or(8);
    if (spec.empty())
        return Alphabet::from_symbols(infer_alphabet(input, width).symbols(), width, cfg.sigma_star);
    std::vector<std::string> symbols;
    if (spec.find(',') != std::string::npos) {
        std::stringstream ss(spec);
        for (std::string item; std::getline(ss, item, ',');)
            symbols.push_back(item);
    } else {
        symbols = code_points(spec);
    }
    return Alphabet::from_symbols(std::move(symbols), width, cfg.sigma_star);
}

IndetString parse_input_string(const std::string& text, const Alphabet& alphabet) {
    if (!text.empty() && text.front() == '#')
        return strip(parse_star_text(text, alphabet));
    return parse_text(text, alphabet);
}

void oracle_report(const Config& cfg, std::ostream& out, bool agree) {
    if (!cfg.oracle)
        return;
    out << "oracle=" << (agree ? "agree" : "disagree") << '\n';
    if (!agree)
        throw Failure{2};
}

int cmd_check(const Config& cfg, std::istream& in, std::ostream& out) {
    const std::string text = read_input(cfg, in);
    const Alphabet alphabet = resolve_alphabet(cfg, text);
    const IndetString x = parse_input_string(text, alphabet);
    const auto witness = regular_check(x);
    if (cfg.format == Format::kv) {
        out << "verdict=" << (witness ? "REGULAR" : "INDETERMINATE") << '\n';
        if (witness)
            out << "y=" << comma_list(witness->y) << "\nsigma=" << witness->sigma_prime << '\n';
    } else if (witness) {
        out << "REGULAR y=" << comma_list(witness->y) << " sigma=" << witness->sigma_prime << '\n';
    } else {
        out << "INDETERMINATE\n";
    }
    if (cfg.oracle) {
        bool agree = oracle_is_regular(x) == witness.has_value();
        if (agree && witness && reduce(x).letters.size() <= 6)
            agree = oracle_lex_least(x) == *witness;
        oracle_report(cfg, out, agree);
    }
    return witness ? 0 : 1;
}

int cmd_mp(const Config& cfg, std::istream& in, std::ostream& out) {
    const std::string text = read_input(cfg, in);
    const Alphabet alphabet = resolve_alphabet(cfg, text);
    const StarString xs = expand(parse_input_string(text, alphabet));
    const PalindromeArray mp = mp_array(xs);
    out << (cfg.format == Format::kv ? "mp=" : "") << to_line(mp) << '\n';
    if (cfg.oracle)
        oracle_report(cfg, out, oracle_mp(xs) == mp);
    return 0;
}

int report_infeasible(const Config& cfg, const FeasibilityViolation& v, std::ostream& out) {
    if (cfg.format == Format::kv)
        out << "verdict=INFEASIBLE\ncondition=" << v.condition << "\nj=" << v.index << '\n';
    else
        out << "INFEASIBLE condition (" << v.condition << ") at j=" << v.index << '\n';
    return 2;
}

PalindromeArray read_mp(const Config& cfg, std::istream& in) { return parse_mp_line(read_input(cfg, in)); }

int cmd_reverse(const Config& cfg, std::istream& in, std::ostream& out) {
    const PalindromeArray mp = read_mp(cfg, in);
    if (const auto v = first_violation(mp))
        return report_infeasible(cfg, *v, out);
    const ConstructResult result = construct(mp, ConstructOptions{cfg.strict});
    const char* verdict = result.regular ? "REGULAR" : "INDETERMINATE";
    if (cfg.format == Format::kv)
        out << "string=" << to_text(result.xs) << "\nverdict=" << verdict << "\nsigma=" << result.sigma << '\n';
    else
        out << to_text(result.xs) << ' ' << verdict << " sigma=" << result.sigma << '\n';
    if (cfg.oracle)
        oracle_report(cfg, out, oracle_mp(result.xs) == mp);
    return result.regular ? 0 : 1;
}

int cmd_feasible(const Config& cfg, bool show_pairs, std::istream& in, std::ostream& out) {
    const PalindromeArray mp = read_mp(cfg, in);
    if (const auto v = first_violation(mp)) {
        report_infeasible(cfg, *v, out);
        return 1;
    }
    const bool probes = manacher_consistent(mp);
    if (cfg.format == Format::kv)
        out << "verdict=FEASIBLE\nmanacher=" << (probes ? "pass" : "fail") << '\n';
    else
        out << "FEASIBLE manacher=" << (probes ? "pass" : "fail") << '\n';
    if (show_pairs) {
        std::string row;
        for (const ForbiddenPair& p : forbidden_pairs(mp)) {
            if (!row.empty())
                row += ',';
            row += '(' + std::to_string(p.left) + ',' + std::to_string(p.right) + ')';
        }
        out << "pairs=" << row << '\n';
    }
    return 0;
}

int cmd_anystring(const Config& cfg, std::istream& in, std::ostream& out) {
    const PalindromeArray mp = read_mp(cfg, in);
    if (const auto v = first_violation(mp))
        return report_infeasible(cfg, *v, out);
    const StarString xs = any_string_from_mp(mp);
    out << (cfg.format == Format::kv ? "string=" : "") << to_text(xs) << '\n';
    if (cfg.oracle)
        oracle_report(cfg, out, oracle_mp(xs) == mp);
    return 0;
}

std::string tables_line(const Encoding& e, Format format) {
    std::string i_table;
    for (const IndetEntry& entry : e.i_table) {
        if (!i_table.empty())
            i_table += ',';
        i_table += '(' + std::to_string(entry.scope) + ',' + std::to_string(entry.loc) + ')';
    }
    const char sep = format == Format::kv ? '\n' : ' ';
    return "codes=" + comma_list(e.codes) + sep + "I=[" + i_table + "]" + sep + "L=[" + comma_list(e.l_pool) + "]";
}

int cmd_encode(const Config& cfg, bool show_tables, const std::string& output, std::istream& in, std::ostream& out) {
    const std::string text = read_input(cfg, in);
    const Alphabet alphabet = resolve_alphabet(cfg, text);
    const IndetString x = parse_input_string(text, alphabet);
    const Encoding encoding = encode(x);
    if (!output.empty()) {
        std::ofstream file(output, std::ios::binary);
        const std::string bytes = write_binary(encoding, alphabet);
        file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!file)
            throw std::runtime_error("cannot write " + output);
    }
    if (output.empty() || show_tables)
        out << tables_line(encoding, cfg.format) << '\n';
    return 0;
}

int cmd_decode(const Config& cfg, std::istream& in, std::ostream& out) {
    std::string bytes;
    if (!cfg.positional.empty())
        bytes = read_file(cfg.positional.front());
    else if (!cfg.input_path.empty())
        bytes = read_file(cfg.input_path);
    else
        bytes = read_stream(in);
    const BinaryContents contents = read_binary(bytes);
    out << (cfg.format == Format::kv ? "string=" : "") << to_text(decode(contents.encoding, contents.alphabet))
        << '\n';
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regular and indeterminate strings: regularity, palindrome arrays, codec"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    std::string format = "plain";
    std::uint64_t seed = 1;
    app.add_option("--alphabet", cfg.alphabet_spec, "Symbols (\"acgt\", \"a,b,c\") or int:N");
    app.add_option("--preset", cfg.preset, "Named alphabet preset")->check(CLI::IsMember({"dna"}));
    app.add_option("--code-width", cfg.code_width, "Bits per letter code");
    app.add_option("--sigma-star", cfg.sigma_star, "Maximum number of distinct indeterminate letters");
    app.add_option("-i,--input", cfg.input_path, "Read input from a file instead of stdin");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "kv"}));
    app.add_flag("--oracle", cfg.oracle, "Cross-check against the brute-force oracles");
    app.add_flag("--strict", cfg.strict, "Re-verify every probe when reconstructing");
    app.add_option("--seed", seed, "Random seed for fuzz");

    auto add_command = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("input", cfg.positional, "Input (default: --input or stdin)");
        return sub;
    };
    CLI::App* check = add_command("check", "Regularity verdict and lex-least witness");
    CLI::App* mp = add_command("mp", "Maximal palindrome array of #x1#...#xn#");
    CLI::App* reverse = add_command("reverse", "Build a string from a palindrome array");
    CLI::App* feasible = add_command("feasible", "Check the bound and parity conditions");
    CLI::App* anystring = add_command("anystring", "Some string, possibly indeterminate, with the array");
    CLI::App* encode_cmd = add_command("encode", "Letter codes and the I/L tables");
    CLI::App* decode_cmd = add_command("decode", "Decode a binary file back to text");
    CLI::App* fuzz = app.add_subcommand("fuzz", "Seeded property checks");

    bool show_pairs = false;
    feasible->add_flag("--pairs", show_pairs, "Also print the forbidden pairs");
    bool show_tables = false;
    std::string output;
    encode_cmd->add_flag("--show-tables", show_tables, "Print codes, I and L");
    encode_cmd->add_option("-o,--output", output, "Write the binary encoding to a file");
    FuzzOptions fuzz_options;
    fuzz->add_option("--count", fuzz_options.count, "Trials per suite");
    fuzz->add_option("--max-m", fuzz_options.max_m, "Largest palindrome array length");
    fuzz->add_option("--max-n", fuzz_options.max_n, "Largest string length");
    fuzz->add_flag("--timing", fuzz_options.timing, "Print a construct timing curve");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    cfg.format = format == "kv" ? Format::kv : Format::plain;

    try {
        if (check->parsed())
            return cmd_check(cfg, in, out);
        if (mp->parsed())
            return cmd_mp(cfg, in, out);
        if (reverse->parsed())
            return cmd_reverse(cfg, in, out);
        if (feasible->parsed())
            return cmd_feasible(cfg, show_pairs, in, out);
        if (anystring->parsed())
            return cmd_anystring(cfg, in, out);
        if (encode_cmd->parsed())
            return cmd_encode(cfg, show_tables, output, in, out);
        if (decode_cmd->parsed())
            return cmd_decode(cfg, in, out);
        fuzz_options.seed = seed;
        return run_fuzz(fuzz_options, out);
    } catch (const Failure& f) {
        return f.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace indet::cli
