// Command-line front end: exact record statistics for multiset permutations
// and words, template counting, and verification sweeps. Every subcommand
// prints one machine-readable record (JSON by default, TSV on request).

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "outstanding/commands.hpp"

namespace {

void print_record(const outstanding::OutputRecord& record, const std::string& format) {
    if (format == "tsv") {
        std::cout << record.to_tsv();
    } else {
        std::cout << record.to_json() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact distributions of strong and weak records (left-to-right maxima)\n"
                 "in multiset permutations and words, with template counting and\n"
                 "brute-force verification sweeps."};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();

    std::string stat = "strong";
    std::string mult;
    std::string tau;
    std::string want = "gf";
    std::string kind;
    std::string suite = "all";
    long long length = 0;
    long long alphabet = 0;
    std::optional<long long> cap;

    auto* multiset = app.add_subcommand("multiset", "Record statistics over multiset permutations");
    multiset->add_option("--stat", stat, "Statistic: strong or weak")
        ->check(CLI::IsMember({"strong", "weak"}));
    multiset->add_option("--mult", mult, "Multiplicities, e.g. 2,1")->required();
    multiset->add_option("--want", want, "gf, mean, gap, or darroch")
        ->check(CLI::IsMember({"gf", "mean", "gap", "darroch"}));

    auto* words = app.add_subcommand("words", "Record statistics over words");
    words->add_option("--stat", stat, "Statistic: strong or weak")
        ->check(CLI::IsMember({"strong", "weak"}));
    words->add_option("--n", length, "Word length")->required();
    words->add_option("--k", alphabet, "Alphabet size")->required();
    words->add_option("--want", want, "gf or mean")->check(CLI::IsMember({"gf", "mean"}));

    auto* tmpl = app.add_subcommand("template", "Closed-form template counts");
    tmpl->add_option("--kind", kind, "perm or word")
        ->required()
        ->check(CLI::IsMember({"perm", "word"}));
    tmpl->add_option("--tau", tau, "Template: [YN*]+ for perm, [SW*so]+ for word")->required();
    auto* tmpl_n = tmpl->add_option("--n", length, "Permutation length (perm count)");
    auto* tmpl_k = tmpl->add_option("--k", alphabet, "Alphabet size (word count)");
    tmpl->add_option("--want", want, "prob, count, or gf")
        ->check(CLI::IsMember({"prob", "count", "gf"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force enumeration counterparts");
    auto* oracle_mult = oracle_cmd->add_option("--mult", mult, "Multiplicities, e.g. 2,1");
    auto* oracle_n = oracle_cmd->add_option("--n", length, "Word or permutation length");
    auto* oracle_k = oracle_cmd->add_option("--k", alphabet, "Alphabet size");
    auto* oracle_tau = oracle_cmd->add_option("--tau", tau, "Template to count matches of");
    oracle_cmd->add_option("--stat", stat, "Statistic: strong or weak")
        ->check(CLI::IsMember({"strong", "weak"}));
    oracle_cmd->add_option("--cap", cap, "Enumeration cap override");

    auto* verify = app.add_subcommand("verify", "Run verification sweeps; exit 0 iff all pass");
    verify->add_option("--suite", suite, "gauss, recurrence, oracle, or all")
        ->check(CLI::IsMember({"gauss", "recurrence", "oracle", "all"}));
    verify->add_option("--cap", cap, "Largest enumerated object size for oracle sweeps");

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace outstanding;
        if (multiset->parsed()) {
            print_record(cmd_multiset(stat, mult, want), format);
        } else if (words->parsed()) {
            print_record(cmd_words(stat, length, alphabet, want), format);
        } else if (tmpl->parsed()) {
            std::optional<long long> size;
            if (kind == "perm" && tmpl_n->count() > 0) {
                size = length;
            } else if (kind == "word" && tmpl_k->count() > 0) {
                size = alphabet;
            }
            print_record(cmd_template(kind, tau, size, want), format);
        } else if (oracle_cmd->parsed()) {
            if (oracle_tau->count() > 0 && oracle_n->count() > 0) {
                print_record(cmd_oracle_perm_template(tau, length, cap), format);
            } else if (oracle_tau->count() > 0 && oracle_k->count() > 0) {
                print_record(cmd_oracle_word_template(tau, alphabet, cap), format);
            } else if (oracle_mult->count() > 0) {
                print_record(cmd_oracle_multiset(stat, mult, cap), format);
            } else if (oracle_n->count() > 0 && oracle_k->count() > 0) {
                print_record(cmd_oracle_words(stat, length, alphabet, cap), format);
            } else {
                std::cerr << "oracle: give --mult, or --n and --k, or --tau with --n (perm) "
                             "or --k (word)\n";
                return 2;
            }
        } else if (verify->parsed()) {
            const OutputRecord record = cmd_verify(suite, cap);
            print_record(record, format);
            return record.payload.at("passed").get<bool>() ? 0 : 1;
        }
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 0;
}
