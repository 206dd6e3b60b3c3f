// Command-line front end: generate prefixes and singular words, classify
// palindromic factors, query occurrence positions, render decompositions,
// and run the invariant battery. Text or JSON output; all positions print
// as decimal strings.
//
// Exit codes: 0 ok, 2 bad input, 3 not a factor, 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "sturmian/occurrences.hpp"
#include "sturmian/oracle.hpp"
#include "sturmian/palindromes.hpp"
#include "sturmian/standard_words.hpp"
#include "sturmian/verify.hpp"

using json = nlohmann::json;
using namespace sturmian;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitNotAFactor = 3;
constexpr int kExitVerification = 4;

struct Options {
    std::string slope;
    std::string word;
    std::string family;
    std::string format = "text";
    std::string method = "closed";
    std::int64_t n = 0;
    std::int64_t k = 0;
    bool k_set = false;
    std::size_t length = 0;
    std::size_t count = 10;
    bool annotate = false;
    std::int64_t max_n = 5;
    std::size_t prefix_len = 100000;
};

std::string family_name(PalFamily f) {
    switch (f) {
        case PalFamily::FormU: return "U";
        case PalFamily::FormUBar: return "UBAR";
        case PalFamily::PowerA: return "POWER_A";
    }
    return "?";
}

json certificate_json(const Slope& s, const Word& u, const StructuralForm& f) {
    json out{{"subject", u.str()},
             {"family", family_name(f.family)},
             {"n", f.n},
             {"k", f.k},
             {"wing", f.wing.str()},
             {"core_len", f.core_len}};
    if (u.size() > 1) {
        const BandForm b = band_form(s, u);
        out["band"] = {{"n", b.band_n}, {"case", b.case_no}};
    }
    return out;
}

json query_json(const OccurrenceQuery& q) {
    json positions = json::array();
    for (const auto& p : q.positions) positions.push_back(p.str());
    json out{{"subject", q.subject.str()},
             {"method", q.method == Method::Closed ? "closed" : "oracle"},
             {"occ_first", q.occ_first.str()},
             {"gaps", {q.gap_a.str(), q.gap_b.str()}},
             {"positions", positions}};
    if (q.gap_slope) out["gap_slope"] = q.gap_slope->render();
    return out;
}

json decomposition_json(const Decomposition& d) {
    json items = json::array();
    for (const auto& item : d.items)
        items.push_back({{"position", item.position.str()},
                         {"gap", (item.gap.negative ? "-" : "+") + item.gap.body.str()}});
    return {{"subject", d.subject.str()}, {"head", d.head.str()}, {"items", items}};
}

int cmd_prefix(const Options& opt) {
    std::cout << c_prefix(Slope::parse(opt.slope), opt.length).str() << "\n";
    return kExitOk;
}

int cmd_singular(const Options& opt) {
    const Slope s = Slope::parse(opt.slope);
    SingularIndex idx;
    idx.n = opt.n;
    idx.k = opt.k;
    if (opt.family == "w") idx.family = SingularFamily::W;
    else if (opt.family == "v") idx.family = SingularFamily::V;
    else if (opt.family == "u") idx.family = SingularFamily::U;
    else if (opt.family == "ubar") idx.family = SingularFamily::UBar;
    else throw InvalidWord("unknown singular family '" + opt.family + "'");
    if ((idx.family == SingularFamily::U || idx.family == SingularFamily::UBar) && !opt.k_set)
        throw InvalidWord("--k is required for the u/ubar families");
    std::cout << singular(s, idx).str() << "\n";
    return kExitOk;
}

int cmd_classify(const Options& opt) {
    const Slope s = Slope::parse(opt.slope);
    const Word u = Word::parse(opt.word);
    const StructuralForm f = classify(s, u);
    if (opt.format == "json") {
        std::cout << certificate_json(s, u, f).dump(2) << "\n";
    } else {
        std::cout << "family=" << family_name(f.family) << " n=" << f.n << " k=" << f.k
                  << " wing=" << f.wing.str() << " core_len=" << f.core_len << "\n";
    }
    return kExitOk;
}

int cmd_occurrences(const Options& opt) {
    const Slope s = Slope::parse(opt.slope);
    const Word u = Word::parse(opt.word);
    OccurrenceQuery q;
    if (opt.method == "oracle") {
        const std::size_t len = recommended_prefix_len(s, u.size());
        Word prefix = c_prefix(s, len);
        auto scanned = oracle::scan_positions(prefix.view(), u.view());
        if (scanned.empty()) throw NotAFactor("'" + u.str() + "' is not a factor");
        while (scanned.size() < opt.count) {
            prefix = c_prefix(s, prefix.size() * 2);
            scanned = oracle::scan_positions(prefix.view(), u.view());
        }
        q.subject = u;
        q.method = Method::Oracle;
        q.occ_first = BigInt(scanned.front());
        for (std::size_t i = 0; i < opt.count && i < scanned.size(); ++i)
            q.positions.push_back(BigInt(scanned[i]));
    } else {
        q = query_occurrences(s, u, opt.count);
        if (opt.method == "both") {
            const auto reference = factor_occurrences(s, u, opt.count);
            std::size_t len = recommended_prefix_len(s, u.size());
            if (!q.positions.empty())
                len = std::max(len, to_index(q.positions.back()) + u.size());
            const auto scanned = oracle::scan_positions(c_prefix(s, len).view(), u.view());
            for (std::size_t i = 0; i < q.positions.size(); ++i) {
                if (i >= scanned.size() || BigInt(scanned[i]) != q.positions[i]) {
                    std::cerr << "mismatch at occurrence " << i + 1 << ": engine says "
                              << q.positions[i].str() << "\n";
                    return kExitVerification;
                }
            }
        }
    }
    if (opt.format == "json") {
        std::cout << query_json(q).dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < q.positions.size(); ++i)
            std::cout << (i ? " " : "") << q.positions[i].str();
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_decompose(const Options& opt) {
    const Slope s = Slope::parse(opt.slope);
    const Word u = Word::parse(opt.word);
    const Decomposition d = decompose(s, u, opt.length);
    if (opt.format == "json") {
        std::cout << decomposition_json(d).dump(2) << "\n";
    } else {
        std::cout << render_decomposition(d, DecompositionStyle::Inline) << "\n";
        if (opt.annotate)
            std::cout << render_decomposition(d, DecompositionStyle::Annotated) << "\n";
    }
    return kExitOk;
}

int cmd_returns(const Options& opt) {
    const auto rw = return_words(Slope::parse(opt.slope), Word::parse(opt.word));
    std::cout << rw.first.str() << " " << rw.second.str() << "\n";
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    const auto report = verify_slope(Slope::parse(opt.slope), opt.max_n, opt.prefix_len);
    for (const auto& check : report.checks) {
        std::cout << (check.pass ? "PASS" : "FAIL") << "  " << check.name;
        if (!check.detail.empty()) std::cout << "  (" << check.detail << ")";
        std::cout << "\n";
    }
    return report.all_pass() ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact factor and palindrome occurrence queries on characteristic "
                 "Sturmian words defined by continued-fraction slopes"};
    app.require_subcommand(1);
    Options opt;

    auto add_slope = [&](CLI::App* cmd) {
        cmd->add_option("--slope", opt.slope, "slope literal, e.g. \"2,(1)\" or \"(2,1,3,1)\"")
            ->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* prefix = app.add_subcommand("prefix", "print a prefix of the characteristic word");
    add_slope(prefix);
    prefix->add_option("--length", opt.length, "prefix length")->required();

    auto* singular_cmd = app.add_subcommand("singular", "print a singular word");
    add_slope(singular_cmd);
    singular_cmd->add_option("--family", opt.family, "w, v, u or ubar")->required();
    singular_cmd->add_option("--n", opt.n, "index n")->required();
    singular_cmd->add_option("--k", opt.k, "repetition count for u/ubar")
        ->each([&](const std::string&) { opt.k_set = true; });

    auto* classify_cmd = app.add_subcommand("classify", "structural certificate of a palindrome");
    add_slope(classify_cmd);
    classify_cmd->add_option("--word", opt.word, "palindromic factor")->required();
    add_format(classify_cmd);
    classify_cmd->preparse_callback([&](std::size_t) { opt.format = "json"; });

    auto* occ = app.add_subcommand("occurrences", "positions of a factor");
    add_slope(occ);
    occ->add_option("--word", opt.word, "factor to locate")->required();
    occ->add_option("--count", opt.count, "how many positions");
    occ->add_option("--method", opt.method, "closed, oracle or both")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
    add_format(occ);

    auto* dec = app.add_subcommand("decompose", "slice the word at the occurrences of a factor");
    add_slope(dec);
    dec->add_option("--word", opt.word, "factor")->required();
    dec->add_option("--length", opt.length, "cover occurrences starting below this")->required();
    dec->add_flag("--annotate", opt.annotate, "also print the prefix with ^ markers");
    add_format(dec);

    auto* ret = app.add_subcommand("returns", "the two return words of a factor");
    add_slope(ret);
    ret->add_option("--word", opt.word, "factor")->required();

    auto* ver = app.add_subcommand("verify", "run the invariant battery for a slope");
    add_slope(ver);
    ver->add_option("--max-n", opt.max_n, "singular/conjugate depth (default 5)");
    ver->add_option("--prefix-len", opt.prefix_len, "scan budget (default 100000)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (prefix->parsed()) return cmd_prefix(opt);
        if (singular_cmd->parsed()) return cmd_singular(opt);
        if (classify_cmd->parsed()) return cmd_classify(opt);
        if (occ->parsed()) return cmd_occurrences(opt);
        if (dec->parsed()) return cmd_decompose(opt);
        if (ret->parsed()) return cmd_returns(opt);
        if (ver->parsed()) return cmd_verify(opt);
    } catch (const NotAFactor& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotAFactor;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
