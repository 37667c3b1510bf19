#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graycycle/constructions.hpp"
#include "graycycle/errors.hpp"
#include "graycycle/reflected.hpp"
#include "graycycle/text_format.hpp"
#include "graycycle/verifier.hpp"

namespace graycycle::cli {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// examples
// ---------------------------------------------------------------------------

const std::map<std::string, std::function<GraySequence()>>& golden_generators()
{
    static const std::map<std::string, std::function<GraySequence()>> generators{
        {"binary-reflected-n2", [] { return binary_reflected(2); }},
        {"binary-reflected-n3", [] { return binary_reflected(3); }},
        {"ternary-reflected-n3", [] { return p_ary_reflected(3, 3); }},
        {"hnk-p3-n3-k2", [] { return build_hnk(3, 3, 2); }},
        {"gamma-base-n3", [] { return gamma_base(3); }},
        {"rho-base-n3", [] { return rho_base(3); }},
        {"odd-gamma-n5-k3", [] { return build_odd_pair(5, 3).gamma; }},
    };
    return generators;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

enum class Format { plain, json, delta };

/// Receives terms one at a time and renders them in the chosen format.
class TermWriter {
public:
    TermWriter(std::ostream& out, Format format, unsigned p, std::size_t n, std::size_t k, const CaseTag& tag,
               std::uint64_t length)
        : out_(out), format_(format)
    {
        if (format_ == Format::json) {
            // Keys in sorted order, matching nlohmann::json's object dump.
            out_ << R"({"case":)" << json(std::string(to_string(tag.theorem_case))) << R"(,"k":)" << k
                 << R"(,"length":)" << length << R"(,"n":)" << n << R"(,"p":)" << p;
            if (tag.parity_class) {
                out_ << R"(,"parity":)" << json(parity_name(*tag.parity_class));
            }
            out_ << R"(,"terms":[)";
        }
    }

    void write(std::span<const Character> term)
    {
        switch (format_) {
        case Format::plain:
            out_ << to_string(term) << '\n';
            break;
        case Format::json:
            out_ << (first_ ? "" : ",") << '"' << to_string(term) << '"';
            break;
        case Format::delta:
            write_delta(term);
            break;
        }
        first_ = false;
    }

    void finish()
    {
        if (format_ == Format::json) {
            out_ << "]}\n";
        }
    }

    static std::string parity_name(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

private:
    void write_delta(std::span<const Character> term)
    {
        if (first_) {
            out_ << to_string(term) << '\n';
        } else {
            bool sep = false;
            for (std::size_t j = 0; j < term.size(); ++j) {
                if (term[j] != previous_[j]) {
                    out_ << (sep ? " " : "") << (j + 1) << ':' << static_cast<unsigned>(term[j]);
                    sep = true;
                }
            }
            out_ << '\n';
        }
        previous_.assign(term.begin(), term.end());
    }

    std::ostream& out_;
    Format format_;
    bool first_ = true;
    std::vector<Character> previous_;
};

struct GenerateArgs {
    unsigned p = 2;
    std::size_t n = 1;
    std::size_t k = 1;
    std::string parity = "even";
    std::string variant = "gamma";
    std::string seed_word;
    std::string format = "plain";
    bool stream = false;
};

int cmd_generate(const GenerateArgs& args, std::ostream& out)
{
    if (args.p > kMaxTextAlphabetSize) {
        throw ParameterError("output formats render characters as digits and need p <= 10, got p = " +
                             std::to_string(args.p));
    }
    CycleOptions options;
    options.parity = args.parity == "odd" ? Parity::odd : Parity::even;
    options.variant = args.variant == "rho" ? BaseVariant::rho : BaseVariant::gamma;
    if (!args.seed_word.empty()) {
        options.seed_word = parse_word(args.seed_word, Alphabet(2));
    }
    const Format format = args.format == "json" ? Format::json : args.format == "delta" ? Format::delta : Format::plain;
    const CaseTag tag = classify(args.p, args.n, args.k, options.parity);
    const std::uint64_t length = lambda_max(args.p, args.n, args.k);

    if (args.stream) {
        TermWriter writer(out, format, args.p, args.n, args.k, tag, length);
        for_each_term(args.p, args.n, args.k, options, [&](std::span<const Character> t) { writer.write(t); });
        writer.finish();
        return kOk;
    }

    const GraySequence cycle = max_gray_cycle(args.p, args.n, args.k, options);
    if (format == Format::json) {
        json doc;
        doc["p"] = args.p;
        doc["n"] = args.n;
        doc["k"] = args.k;
        doc["case"] = std::string(to_string(tag.theorem_case));
        if (tag.parity_class) {
            doc["parity"] = TermWriter::parity_name(*tag.parity_class);
        }
        doc["length"] = cycle.size();
        json terms = json::array();
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            terms.push_back(to_string(cycle.chars(i)));
        }
        doc["terms"] = std::move(terms);
        out << doc.dump() << '\n';
        return kOk;
    }
    TermWriter writer(out, format, args.p, args.n, args.k, tag, length);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        writer.write(cycle.chars(i));
    }
    writer.finish();
    return kOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::size_t k = 1;
    unsigned p = 0;
    std::string ground_set = "self";
    std::string format = "text";
    std::string input;
};

class InputError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

std::vector<Word> read_words(std::istream& in, unsigned p)
{
    std::vector<std::string> lines;
    std::vector<std::size_t> line_numbers;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        lines.push_back(line);
        line_numbers.push_back(number);
    }
    if (lines.empty()) {
        throw InputError("no words on input");
    }
    if (p == 0) {
        char top = '1';
        for (const auto& l : lines) {
            for (char ch : l) {
                if (ch >= '0' && ch <= '9') {
                    top = std::max(top, ch);
                }
            }
        }
        p = static_cast<unsigned>(top - '0') + 1;
    }
    const Alphabet alphabet(p);
    std::vector<Word> words;
    words.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            words.push_back(parse_word(lines[i], alphabet));
        } catch (const DomainError& e) {
            throw InputError("line " + std::to_string(line_numbers[i]) + ": " + e.what());
        }
    }
    return words;
}

int cmd_verify(const VerifyArgs& args, std::istream& stdin_stream, std::ostream& out)
{
    std::ifstream file;
    std::istream* in = &stdin_stream;
    if (!args.input.empty() && args.input != "-") {
        file.open(args.input);
        if (!file) {
            throw InputError("cannot open " + args.input);
        }
        in = &file;
    }
    const std::vector<Word> words = read_words(*in, args.p);
    const std::size_t n = words.front().length();
    const unsigned p = words.front().alphabet().size();
    if (args.k < 1 || args.k > n) {
        throw ParameterError("k must lie in [1, " + std::to_string(n) + "], got " + std::to_string(args.k));
    }

    std::optional<std::vector<Word>> ground;
    if (args.ground_set == "full") {
        ground = all_words(p, n);
    } else if (args.ground_set == "parity") {
        if (p != 2) {
            throw ParameterError("--ground-set parity needs a binary alphabet, got p = " + std::to_string(p));
        }
        ground = parity_class_words(n, ones_count_parity(words.front()));
    }
    const VerificationReport report = verify_gray_cycle(words, args.k, ground);

    if (args.format == "json") {
        json doc;
        doc["g1"] = report.g1_pass;
        doc["g2"] = report.g2_pass;
        doc["g3"] = report.g3_pass;
        doc["passed"] = report.passed();
        doc["ground_set_size"] = report.ground_set_size;
        doc["length"] = words.size();
        if (report.first_violation) {
            json v;
            v["condition"] = std::string(to_string(report.first_violation->condition));
            v["index"] = report.first_violation->index;
            if (report.first_violation->other_index) {
                v["other_index"] = *report.first_violation->other_index;
            }
            doc["first_violation"] = v;
        } else {
            doc["first_violation"] = nullptr;
        }
        doc["notes"] = report.notes;
        out << doc.dump() << '\n';
    } else {
        auto verdict = [](bool ok) { return ok ? "pass" : "FAIL"; };
        out << "G1: " << verdict(report.g1_pass) << '\n'
            << "G2: " << verdict(report.g2_pass) << '\n'
            << "G3: " << verdict(report.g3_pass) << '\n'
            << "terms: " << words.size() << ", ground set: " << report.ground_set_size << " words\n";
        if (report.first_violation) {
            out << "first violation: " << to_string(report.first_violation->condition) << " at index "
                << report.first_violation->index;
            if (report.first_violation->other_index) {
                out << ", " << *report.first_violation->other_index;
            }
            out << '\n';
        }
        for (const auto& note : report.notes) {
            out << "  " << note << '\n';
        }
        out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
    return report.passed() ? kOk : kFailure;
}

// ---------------------------------------------------------------------------
// lambda
// ---------------------------------------------------------------------------

struct LambdaArgs {
    unsigned p = 2;
    std::size_t n = 1;
    std::size_t k = 1;
    bool oracle = false;
    OracleLimits limits;
};

int cmd_lambda(const LambdaArgs& args, std::ostream& out)
{
    const CaseTag tag = classify(args.p, args.n, args.k);
    const std::uint64_t lambda = lambda_max(args.p, args.n, args.k);
    out << "case " << to_string(tag.theorem_case) << ", lambda = " << lambda;
    if (!args.oracle) {
        out << '\n';
        return kOk;
    }
    const OracleResult result = oracle_lambda(args.p, args.n, args.k, args.limits);
    if (!result.exact()) {
        out << ", oracle = inconclusive after " << result.nodes << " nodes\n";
        return kInconclusive;
    }
    const bool match = result.length == lambda;
    out << ", oracle = " << result.length << ", " << (match ? "MATCH" : "MISMATCH") << '\n';
    return match ? kOk : kFailure;
}

int cmd_examples(const std::string& golden_path, bool dump, std::ostream& out)
{
    if (dump) {
        out << json(embedded_golden()).dump(2) << '\n';
        return kOk;
    }
    GoldenTable golden = embedded_golden();
    if (!golden_path.empty()) {
        std::ifstream file(golden_path);
        if (!file) {
            throw InputError("cannot open " + golden_path);
        }
        json doc;
        try {
            doc = json::parse(file);
            golden = doc.get<GoldenTable>();
        } catch (const json::exception& e) {
            throw InputError(golden_path + ": " + e.what());
        }
    }
    return check_golden(golden, out);
}

} // namespace

const GoldenTable& embedded_golden()
{
    static const GoldenTable table{
        {"binary-reflected-n2", {"00", "01", "11", "10"}},
        {"binary-reflected-n3", {"000", "001", "011", "010", "110", "111", "101", "100"}},
        {"ternary-reflected-n3",
         {"000", "001", "002", "012", "010", "011", "021", "022", "020",
          "120", "121", "122", "102", "100", "101", "111", "112", "110",
          "210", "211", "212", "222", "220", "221", "201", "202", "200"}},
        {"hnk-p3-n3-k2",
         {"000", "101", "202", "012", "110", "211", "021", "122", "220",
          "100", "201", "002", "112", "210", "011", "121", "222", "020",
          "200", "001", "102", "212", "010", "111", "221", "022", "120"}},
        {"gamma-base-n3", {"000", "100", "101", "111", "110", "010", "011", "001"}},
        {"rho-base-n3", {"100", "000", "001", "011", "010", "110", "111", "101"}},
        {"odd-gamma-n5-k3",
         {"00000", "11100", "00101", "11111", "00110", "11010", "00011", "11001",
          "01100", "10000", "01001", "10011", "01010", "10110", "01111", "10101",
          "11000", "00100", "11101", "00111", "11110", "00010", "11011", "00001",
          "10100", "01000", "10001", "01011", "10010", "01110", "10111", "01101"}},
    };
    return table;
}

int check_golden(const GoldenTable& golden, std::ostream& out)
{
    const auto& generators = golden_generators();
    int status = kOk;
    for (const auto& [name, expected] : golden) {
        const auto gen = generators.find(name);
        if (gen == generators.end()) {
            throw InputError("unknown golden sequence '" + name + "'");
        }
        const GraySequence actual = gen->second();
        std::optional<std::size_t> diff;
        const std::size_t common = std::min<std::size_t>(actual.size(), expected.size());
        for (std::size_t i = 0; i < common && !diff; ++i) {
            if (to_string(actual.chars(i)) != expected[i]) {
                diff = i;
            }
        }
        if (!diff && actual.size() != expected.size()) {
            diff = common;
        }
        if (diff) {
            const std::string got = *diff < actual.size() ? to_string(actual.chars(*diff)) : "<end>";
            const std::string want = *diff < expected.size() ? expected[*diff] : "<end>";
            out << name << ": MISMATCH at index " << *diff << " (generated " << got << ", expected " << want
                << ")\n";
            status = kFailure;
        } else {
            out << name << ": ok (" << actual.size() << " terms)\n";
        }
    }
    return status;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Maximum-length Gray cycles for k-character substitutions"};
    app.name("graycycle");
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "emit a maximum-length sigma_k-Gray cycle");
    generate->add_option("-p,--alphabet", gen.p, "alphabet size")->required()->check(CLI::Range(2U, kMaxAlphabetSize));
    generate->add_option("-n,--length", gen.n, "word length")->required();
    generate->add_option("-k,--substitution", gen.k, "number of substituted characters")->required();
    generate->add_option("--parity", gen.parity, "parity class for p = 2, even k")
        ->check(CLI::IsMember({"even", "odd"}));
    generate->add_option("--base-variant", gen.variant, "cycle of the odd pair for p = 2, odd k")
        ->check(CLI::IsMember({"gamma", "rho"}));
    generate->add_option("--seed-word", gen.seed_word, "first word for p = 2, n = k");
    generate->add_option("--format", gen.format)->check(CLI::IsMember({"plain", "json", "delta"}));
    generate->add_flag("--stream", gen.stream, "write terms as they are produced");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "check a word-per-line sequence against G1-G3");
    verify->add_option("-k,--substitution", ver.k, "number of substituted characters")->required();
    verify->add_option("-p,--alphabet", ver.p, "alphabet size (inferred from the largest digit if omitted)")
        ->check(CLI::Range(2U, kMaxTextAlphabetSize));
    verify->add_option("--ground-set", ver.ground_set, "self, full (all p^n words) or parity (binary)")
        ->check(CLI::IsMember({"self", "full", "parity"}));
    verify->add_option("--format", ver.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("-i,--input", ver.input, "input file (default stdin)");

    LambdaArgs lam;
    auto* lambda = app.add_subcommand("lambda", "closed-form maximum cycle length");
    lambda->add_option("-p,--alphabet", lam.p)->required()->check(CLI::Range(2U, kMaxAlphabetSize));
    lambda->add_option("-n,--length", lam.n)->required();
    lambda->add_option("-k,--substitution", lam.k)->required();
    lambda->add_flag("--oracle", lam.oracle, "cross-check by exhaustive longest-cycle search");
    lambda->add_option("--budget", lam.limits.node_budget, "oracle search node budget");
    lambda->add_option("--max-words", lam.limits.max_words, "largest p^n the oracle accepts");

    std::string golden_path;
    bool dump_golden = false;
    auto* examples = app.add_subcommand("examples", "reproduce the reference sequences");
    examples->add_option("--golden", golden_path, "JSON file overriding the embedded reference data");
    examples->add_flag("--dump-golden", dump_golden, "print the embedded reference data as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (generate->parsed()) {
            return cmd_generate(gen, out);
        }
        if (verify->parsed()) {
            return cmd_verify(ver, in, out);
        }
        if (lambda->parsed()) {
            return cmd_lambda(lam, out);
        }
        return cmd_examples(golden_path, dump_golden, out);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kCapacity;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace graycycle::cli
