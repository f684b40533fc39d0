#include "d0l/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "d0l/errors.hpp"

namespace d0l::cli {

namespace {

using nlohmann::json;

std::vector<std::string> tokens(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    for (std::string t; in >> t;) {
        out.push_back(t);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const auto space = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(space);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(space);
    return s.substr(b, e - b + 1);
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

struct RuleLine {
    std::size_t line;
    std::vector<std::string> image;
};

json word_json(const Alphabet& alphabet, const Word& w) {
    json out = json::array();
    for (Letter a : w) {
        out.push_back(alphabet.symbol(a));
    }
    return out;
}

json morphism_json(const Morphism& m) {
    json out = json::object();
    for (Letter a : m.source().letters()) {
        out[m.source().symbol(a)] = word_json(m.target(), m.image(a));
    }
    return out;
}

std::string_view source_name(ClassSource s) { return s == ClassSource::Bounded ? "bounded" : "unbounded"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_symbols(const std::vector<std::string>& symbols) {
    std::string out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        out += (i ? " " : "") + symbols[i];
    }
    return out;
}

std::string morphism_text(const Morphism& m) {
    std::string out;
    for (Letter a : m.source().letters()) {
        if (index(a) > 0) {
            out += ", ";
        }
        const Word& img = m.image(a);
        out += m.source().symbol(a) + " -> " + (img.empty() ? std::string("(empty)") : m.target().render(img));
    }
    return out;
}

struct Options {
    std::string file;
    bool json = false;
    bool verify = false;
    std::optional<std::size_t> depth;
    std::size_t max_len = 8;
    std::size_t power = 3;
};

constexpr std::size_t kVerifyMaxDepth = 40;

oracle::OracleParams verify_params(const D0LSystem& system, const Options& opts) {
    oracle::OracleParams params;
    params.max_len = opts.max_len;
    params.power_threshold = opts.power;
    params.depth = opts.depth ? *opts.depth
                              : std::max<std::size_t>(1, oracle::affordable_depth(system, params.length_cap,
                                                                                  kVerifyMaxDepth));
    return params;
}

int analyze_command(const Options& opts, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string text;
    if (opts.file == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(opts.file);
        if (!file) {
            err << "error: cannot open '" << opts.file << "'\n";
            return kParseError;
        }
        text.assign(std::istreambuf_iterator<char>(file), {});
    }

    D0LSystem system = [&] {
        try {
            return parse_system(text);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(0, e.what());
        }
    }();

    const AnalysisReport report = analyze(system);
    periodic_factor_graph(report);

    std::optional<oracle::CrossCheck> check;
    oracle::OracleParams params;
    if (opts.verify) {
        params = verify_params(system, opts);
        std::vector<Word> reps;
        for (const auto& c : report.classes) {
            reps.push_back(c.representative);
        }
        check = oracle::cross_check(reps, oracle::observed_classes(system, params), params.max_len);
    }

    if (opts.json) {
        json doc = report_to_json(report);
        if (check) {
            json unreported = json::array();
            json unconfirmed = json::array();
            for (const Word& w : check->unreported) {
                unreported.push_back(word_json(system.alphabet(), w));
            }
            for (const Word& w : check->unconfirmed) {
                unconfirmed.push_back(word_json(system.alphabet(), w));
            }
            doc["oracle"] = {{"agreement", check->agree()},
                             {"depth", params.depth},
                             {"max_len", params.max_len},
                             {"power", params.power_threshold},
                             {"unreported", unreported},
                             {"unconfirmed", unconfirmed}};
        }
        out << doc.dump(2) << '\n';
    } else {
        out << report_to_text(report);
        if (check) {
            out << "oracle: " << (check->agree() ? "agreement" : "disagreement") << " (depth " << params.depth
                << ", max-len " << params.max_len << ", power " << params.power_threshold << ")\n";
            for (const Word& w : check->unreported) {
                out << "  observed but not reported: " << system.alphabet().render(w) << '\n';
            }
            for (const Word& w : check->unconfirmed) {
                out << "  reported but not observed: " << system.alphabet().render(w) << '\n';
            }
        }
    }
    return check && !check->agree() ? kVerifyDisagreement : kSuccess;
}

}  // namespace

D0LSystem parse_system(std::string_view text) {
    std::optional<std::pair<std::size_t, std::vector<std::string>>> alphabet_line;
    std::optional<std::pair<std::size_t, std::vector<std::string>>> axiom_line;
    std::vector<std::pair<std::string, RuleLine>> rule_lines;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (starts_with(line, "alphabet:")) {
            if (alphabet_line) {
                throw ParseError(line_no, "second alphabet declaration");
            }
            alphabet_line.emplace(line_no, tokens(line.substr(9)));
        } else if (starts_with(line, "axiom:")) {
            if (axiom_line) {
                throw ParseError(line_no, "second axiom declaration");
            }
            axiom_line.emplace(line_no, tokens(line.substr(6)));
        } else {
            auto parts = tokens(line);
            if (parts.size() < 2 || parts[1] != "->") {
                throw ParseError(line_no, "expected a rule 'SYM -> SYM*'");
            }
            rule_lines.emplace_back(parts[0], RuleLine{line_no, {parts.begin() + 2, parts.end()}});
        }
    }
    const std::size_t last_line = line_no;

    if (!alphabet_line) {
        throw ParseError(last_line, "missing 'alphabet:' declaration");
    }
    if (alphabet_line->second.empty()) {
        throw ParseError(alphabet_line->first, "empty alphabet");
    }
    for (const std::string& s : alphabet_line->second) {
        if (s == "->") {
            throw ParseError(alphabet_line->first, "'->' cannot be a letter");
        }
    }
    std::optional<Alphabet> alphabet;
    try {
        alphabet.emplace(alphabet_line->second);
    } catch (const DomainError& e) {
        throw ParseError(alphabet_line->first, e.what());
    }

    auto spell = [&](std::size_t line, const std::vector<std::string>& symbols) {
        Word w;
        for (const std::string& s : symbols) {
            auto a = alphabet->find(s);
            if (!a) {
                throw ParseError(line, "undeclared letter '" + s + "'");
            }
            w.push_back(*a);
        }
        return w;
    };

    if (!axiom_line) {
        throw ParseError(last_line, "missing 'axiom:' declaration");
    }
    if (axiom_line->second.empty()) {
        throw ParseError(axiom_line->first, "empty axiom");
    }
    Word axiom = spell(axiom_line->first, axiom_line->second);

    std::vector<std::optional<Word>> images(alphabet->size());
    for (const auto& [lhs, rule] : rule_lines) {
        auto a = alphabet->find(lhs);
        if (!a) {
            throw ParseError(rule.line, "rule for undeclared letter '" + lhs + "'");
        }
        if (images[index(*a)]) {
            throw ParseError(rule.line, "second rule for letter '" + lhs + "'");
        }
        images[index(*a)] = spell(rule.line, rule.image);
    }
    std::vector<Word> resolved;
    for (Letter a : alphabet->letters()) {
        if (!images[index(a)]) {
            throw ParseError(alphabet_line->first, "no rule for letter '" + alphabet->symbol(a) + "'");
        }
        resolved.push_back(std::move(*images[index(a)]));
    }
    return D0LSystem(Morphism::endomorphism(*alphabet, std::move(resolved)), std::move(axiom));
}

std::string serialize_system(const D0LSystem& system) {
    const Alphabet& alphabet = system.alphabet();
    std::string out = "alphabet: " + join_symbols(alphabet.symbols()) + "\naxiom:";
    for (Letter a : system.axiom()) {
        out += " " + alphabet.symbol(a);
    }
    out += '\n';
    for (Letter a : alphabet.letters()) {
        out += alphabet.symbol(a) + " ->";
        for (Letter b : system.morphism().image(a)) {
            out += " " + alphabet.symbol(b);
        }
        out += '\n';
    }
    return out;
}

nlohmann::json system_to_json(const D0LSystem& system) {
    return {{"alphabet", system.alphabet().symbols()},
            {"axiom", word_json(system.alphabet(), system.axiom())},
            {"rules", morphism_json(system.morphism())}};
}

nlohmann::json report_to_json(const AnalysisReport& report) {
    const Alphabet& alphabet = report.original.alphabet();
    json bounded = json::array();
    for (Letter a : report.classification.bounded) {
        bounded.push_back(alphabet.symbol(a));
    }
    json steps = json::array();
    for (const SimplificationStep& s : report.chain.steps) {
        steps.push_back({{"kind", to_string(s.kind)},
                         {"from", s.h.source().symbols()},
                         {"to", s.h.target().symbols()},
                         {"h", morphism_json(s.h)},
                         {"k", morphism_json(s.k)}});
    }
    json classes = json::array();
    for (const PeriodicFactorClass& c : report.classes) {
        json conj = json::array();
        for (const Word& w : c.conjugates) {
            conj.push_back(word_json(alphabet, w));
        }
        classes.push_back({{"representative", word_json(alphabet, c.representative)},
                           {"conjugates", conj},
                           {"source", source_name(c.source)}});
    }
    return {{"system", system_to_json(report.original)},
            {"pushy", report.pushy},
            {"repetitive", report.repetitive},
            {"strongly_repetitive", report.strongly_repetitive},
            {"bounded_letters", bounded},
            {"simplification_steps", steps},
            {"classes", classes}};
}

std::string report_to_text(const AnalysisReport& report) {
    const Alphabet& alphabet = report.original.alphabet();
    std::ostringstream out;
    out << "alphabet: " << join_symbols(alphabet.symbols()) << '\n';
    out << "axiom: " << alphabet.render(report.original.axiom()) << '\n';
    out << "rules: " << morphism_text(report.original.morphism()) << '\n';
    out << "pushy: " << yes_no(report.pushy) << '\n';
    out << "repetitive: " << yes_no(report.repetitive) << '\n';
    out << "strongly repetitive: " << yes_no(report.strongly_repetitive) << '\n';

    std::vector<std::string> bounded;
    for (Letter a : report.classification.bounded) {
        bounded.push_back(alphabet.symbol(a));
    }
    out << "bounded letters: " << (bounded.empty() ? "(none)" : join_symbols(bounded)) << '\n';

    out << "simplification steps: " << report.chain.steps.size() << '\n';
    for (std::size_t i = 0; i < report.chain.steps.size(); ++i) {
        const SimplificationStep& s = report.chain.steps[i];
        out << "  " << i + 1 << ". " << to_string(s.kind) << ": {" << join_symbols(s.h.source().symbols())
            << "} -> {" << join_symbols(s.h.target().symbols()) << "}\n";
        out << "     h: " << morphism_text(s.h) << '\n';
        out << "     k: " << morphism_text(s.k) << '\n';
    }

    out << "classes: " << report.classes.size() << '\n';
    for (const PeriodicFactorClass& c : report.classes) {
        out << "  " << alphabet.render(c.representative) << "  source: " << source_name(c.source)
            << "  conjugates:";
        for (const Word& w : c.conjugates) {
            out << (alphabet.render(w).find(' ') != std::string::npos ? " [" + alphabet.render(w) + "]"
                                                                     : " " + alphabet.render(w));
        }
        out << '\n';
    }
    return out.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finds every infinite periodic factor of a D0L-system", "d0l"};
    app.require_subcommand(1);

    Options opts;
    std::size_t depth = 0;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a system file ('-' reads stdin)");
    analyze_cmd->add_option("FILE", opts.file, "System description")->required();
    analyze_cmd->add_flag("--json", opts.json, "Emit a JSON report");
    analyze_cmd->add_flag("--verify", opts.verify, "Cross-check the result against brute-force expansion");
    auto* depth_opt = analyze_cmd->add_option("--depth", depth, "Oracle depth N (default: deepest affordable)")
                          ->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--max-len", opts.max_len, "Oracle period length bound L")
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--power", opts.power, "Oracle power threshold K")->check(CLI::Range(2, 1 << 20));

    std::vector<std::string> argv_storage{"d0l"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kParseError;
    }
    if (depth_opt->count() > 0) {
        opts.depth = depth;
    }

    try {
        return analyze_command(opts, in, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace d0l::cli
