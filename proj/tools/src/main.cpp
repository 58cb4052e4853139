// Command-line surface for the glncomb library: Schubert polynomials,
// chamber families and diagrams, strong separation, Demazure and
// Bott-Samelson characters, and configuration membership checks.
//
// Exit codes: 0 success, 1 malformed input or guard violation,
// 2 mathematical disagreement or a failed membership/separation verdict.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "glncomb/characters.hpp"
#include "glncomb/configgeom.hpp"
#include "glncomb/families.hpp"
#include "glncomb/laurent.hpp"
#include "glncomb/schubert.hpp"
#include "glncomb/weyl.hpp"

namespace {

using namespace glncomb;
using nlohmann::json;

struct Options {
    bool json = false;
    bool ascii = false;
    std::uint64_t seed = 0;
};

json poly_json(const LaurentPoly& f) { return json::parse(poly_to_json(f)); }

int infer_n_from_word(const std::string& text, int n) {
    if (n > 0) return n;
    int m = 1;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok == "e" || tok.empty()) continue;
        m = std::max(m, std::stoi(tok) + 1);
    }
    return m;
}

int run_schubert(const Options& opt, const std::string& perm_text,
                 const std::string& method, bool stability) {
    Permutation w = parse_permutation(perm_text);
    const bool want_desc = method != "ascending";
    const bool want_asc = method != "descending";
    json out;
    out["perm"] = w.image();
    LaurentPoly desc(w.size()), asc(w.size());
    if (want_desc) {
        desc = schubert_descending(w);
        out["descending"] = poly_json(desc);
    }
    if (want_asc) {
        asc = schubert_ascending(w);
        out["ascending"] = poly_json(asc);
    }
    bool agree = true;
    if (method == "both") agree = desc == asc;

    if (stability) {
        std::vector<int> img = w.image();
        img.push_back(w.size() + 1);
        Permutation wext(w.size() + 1, img);
        bool stable = to_string(schubert_descending(wext)) ==
                      to_string(want_desc ? desc : schubert_descending(w));
        out["stable"] = stable;
        if (!opt.json) std::cout << "stable under S_n -> S_n+1: " << (stable ? "yes" : "no") << "\n";
    }

    if (opt.json) {
        if (method == "both") out["agree"] = agree;
        std::cout << out.dump() << "\n";
    } else if (method == "both") {
        std::cout << "descending: " << to_string(desc) << "\n";
        std::cout << "ascending:  " << to_string(asc) << "\n";
        std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    } else {
        std::cout << to_string(want_desc ? desc : asc) << "\n";
    }
    return agree ? 0 : 2;
}

int run_verify_kp(const Options& opt, int n) {
    KpReport rep = verify_kp(n);
    if (opt.json) {
        json out;
        out["n"] = rep.n;
        out["total"] = rep.total;
        out["mismatches"] = json::array();
        for (const Permutation& w : rep.mismatches) out["mismatches"].push_back(w.image());
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (rep.total - static_cast<int>(rep.mismatches.size())) << "/" << rep.total
                  << " agree\n";
        for (const Permutation& w : rep.mismatches) {
            std::cout << "mismatch: " << to_string(w) << "\n";
        }
    }
    return rep.ok() ? 0 : 2;
}

int run_verify_oracle(const Options& opt, int n, int max_boxes) {
    OracleSweepReport rep = verify_oracle_sweep(n, max_boxes);
    if (opt.json) {
        json out;
        out["n"] = rep.n;
        out["max_boxes"] = rep.max_boxes;
        out["checked"] = rep.checked;
        out["flagged_mismatches"] = rep.flagged_mismatches;
        out["unflagged_mismatches"] = rep.unflagged_mismatches;
        out["zero_extension_mismatches"] = rep.zero_extension_mismatches;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << rep.checked << " instances checked: " << rep.flagged_mismatches
                  << " flagged, " << rep.unflagged_mismatches << " unflagged, "
                  << rep.zero_extension_mismatches << " zero-extension mismatches\n";
        for (const MultFamily& d : rep.failures) {
            std::cout << "failure: " << to_string(d) << "\n";
        }
    }
    return rep.ok() ? 0 : 2;
}

LaurentPoly random_poly(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(1, 6);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<int> coef(-9, 9);
    LaurentPoly f(n);
    const int t = terms(rng);
    for (int k = 0; k < t; ++k) {
        std::vector<int> e(n);
        for (int& x : e) x = expo(rng);
        int c = coef(rng);
        if (c == 0) c = 1;
        f.add_term(e, c);
    }
    return f;
}

int run_verify_operators(const Options& opt, int count) {
    const int n = 4;
    std::mt19937_64 rng(opt.seed);
    int checked = 0;
    int failures = 0;
    for (int k = 0; k < count; ++k) {
        LaurentPoly f = random_poly(n, rng);
        LaurentPoly g = random_poly(n, rng);
        bool ok = true;
        for (int i = 1; i < n; ++i) {
            LaurentPoly xi = LaurentPoly::variable(n, i);
            ok = ok && divided_difference(i, divided_difference(i, f)).is_zero();
            LaurentPoly li = demazure(i, f);
            ok = ok && demazure(i, li) == li;
            ok = ok && li == divided_difference(i, xi * f);
        }
        // braid and commutation relations on a fresh polynomial
        ok = ok && divided_difference(1, divided_difference(3, g)) ==
                       divided_difference(3, divided_difference(1, g));
        ok = ok && divided_difference(1, divided_difference(2, divided_difference(1, g))) ==
                       divided_difference(2, divided_difference(1, divided_difference(2, g)));
        ok = ok && demazure(1, demazure(2, demazure(1, g))) ==
                       demazure(2, demazure(1, demazure(2, g)));
        ++checked;
        if (!ok) ++failures;
    }
    if (opt.json) {
        json out;
        out["checked"] = checked;
        out["failures"] = failures;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "operators: " << (checked - failures) << "/" << checked
                  << " polynomial pairs pass\n";
    }
    return failures == 0 ? 0 : 2;
}

int run_verify_config(const Options& opt, int n, int samples) {
    if (n < 2 || n > 4) throw std::invalid_argument("verify config guard: 2 <= n <= 4");
    std::mt19937_64 rng(opt.seed);
    int words = 0;
    int passed = 0;
    int failed = 0;
    for (const Word& word : reduced_words(longest(n))) {
        ++words;
        WordConfiguration z = generating_word_point(word);
        for (int s = 0; s < samples; ++s) {
            IntMatrix b = random_upper_triangular(n, rng);
            WordConfiguration bz = apply(b, z);
            bool theta = theta_image_conditions(word, bz);
            auto member = member_configuration(bz);
            bool incl = member.has_value() && is_inclusion_point(word, *member);
            if (theta && incl) ++passed;
            else ++failed;
        }
    }
    if (opt.json) {
        json out;
        out["n"] = n;
        out["words"] = words;
        out["samples"] = samples;
        out["passed"] = passed;
        out["failed"] = failed;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << words << " words x " << samples << " samples: " << passed << " pass, "
                  << failed << " fail\n";
    }
    return failed == 0 ? 0 : 2;
}

int run_chamber(const Options& opt, const std::string& word_text, int n, bool full,
                const std::string& render) {
    n = infer_n_from_word(word_text, n);
    Word word = parse_word(word_text, n);
    int dropped = 0;
    SubsetFamily fam = full ? full_chamber_family(word, &dropped) : chamber_family(word, &dropped);
    if (opt.json) {
        json out;
        out["n"] = n;
        out["word"] = word.letters;
        out["full"] = full;
        out["members"] = json::array();
        for (const Subset& c : fam.members) out["members"].push_back(c.elements());
        out["dropped_duplicates"] = dropped;
        std::cout << out.dump() << "\n";
        return 0;
    }
    RenderOptions ropt{opt.ascii};
    if (render == "wiring") {
        std::cout << render_wiring(word, ropt);
    } else if (render == "young") {
        MultFamily md{fam.n, fam.members, std::vector<int>(fam.members.size(), 1)};
        std::cout << render_young(md, ropt);
    } else {
        std::cout << to_string(fam) << "\n";
    }
    return 0;
}

int run_strongsep(const Options& opt, const std::string& family_text, int n) {
    SubsetFamily d = parse_family(family_text, n);
    auto violation = strong_separation_violation(d);
    json out;
    out["n"] = d.n;
    out["separated"] = !violation.has_value();
    if (violation) {
        if (opt.json) {
            out["violation"] = {violation->first.elements(), violation->second.elements()};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "NO: (" << to_string(violation->first) << ", "
                      << to_string(violation->second) << ")\n";
        }
        return 2;
    }
    bool have_word = false;
    Word word{d.n, {}};
    if (d.n <= 7) {
        word = find_embedding_word(d);
        have_word = true;
    }
    if (opt.json) {
        if (have_word) out["word"] = word.letters;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "YES\n";
        if (have_word) std::cout << "word: " << to_string(word) << "\n";
    }
    return 0;
}

int run_inversion(const Options& opt, const std::string& perm_text, const std::string& render) {
    Permutation w = parse_permutation(perm_text);
    MultFamily d = inversion_family(w);
    if (opt.json) {
        std::cout << family_to_json(d) << "\n";
    } else if (render == "young") {
        std::cout << render_young(d, RenderOptions{opt.ascii});
    } else {
        std::cout << to_string(d) << "\n";
    }
    return 0;
}

int run_char(const Options& opt, const std::string& family_text, const std::vector<int>& mult,
             const std::string& word_text, int n, bool unflagged) {
    MultFamily d;
    if (mult.empty()) {
        d = parse_mult_family(family_text, n);
    } else {
        SubsetFamily fam = parse_family(family_text, n);
        if (mult.size() != fam.members.size()) {
            throw std::invalid_argument("--mult length differs from the family size");
        }
        d = MultFamily{fam.n, fam.members, mult};
    }
    if (auto v = strong_separation_violation(SubsetFamily{d.n, d.members})) {
        if (opt.json) {
            json out;
            out["n"] = d.n;
            out["separated"] = false;
            out["violation"] = {v->first.elements(), v->second.elements()};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "NO: (" << to_string(v->first) << ", " << to_string(v->second) << ")\n";
        }
        return 2;
    }
    Word word{d.n, {}};
    if (word_text.empty()) {
        word = find_embedding_word(SubsetFamily{d.n, d.members});
    } else {
        word = parse_word(word_text, d.n);
    }
    LaurentPoly chr = demazure_char(d, word);
    if (unflagged) chr = demazure_w(longest(d.n), chr);
    if (opt.json) {
        std::cout << char_to_json(d, word, chr) << "\n";
    } else {
        std::cout << to_string(chr) << "\n";
    }
    return 0;
}

int run_bschar(const Options& opt, const std::string& word_text, std::vector<int> mult, int n) {
    n = infer_n_from_word(word_text, n);
    Word word = parse_word(word_text, n);
    if (mult.empty()) mult.assign(word.letters.size(), 1);
    LaurentPoly chr = bott_samelson_char(word, mult);
    if (opt.json) {
        json out;
        out["n"] = n;
        out["word"] = word.letters;
        out["mult"] = mult;
        out["char"] = poly_json(chr)["terms"];
        std::cout << out.dump() << "\n";
    } else {
        std::cout << to_string(chr) << "\n";
    }
    return 0;
}

int run_config_check(const Options& opt, const std::string& word_text, int n,
                     const std::string& path) {
    Word word = parse_word(word_text, n);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::vector<Subspace> blocks = parse_subspace_blocks(buffer.str(), n);
    if (blocks.size() != word.letters.size()) {
        throw std::invalid_argument("expected " + std::to_string(word.letters.size()) +
                                    " subspace blocks, found " + std::to_string(blocks.size()));
    }
    WordConfiguration config{word, std::move(blocks)};
    bool theta = theta_image_conditions(word, config);
    auto member = member_configuration(config);
    bool consistent = member.has_value();
    bool incl = consistent && is_inclusion_point(word, *member);
    bool ok = theta && incl;
    if (opt.json) {
        json out;
        out["n"] = n;
        out["word"] = word.letters;
        out["theta"] = theta;
        out["consistent"] = consistent;
        out["inclusion"] = incl;
        out["member"] = ok;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "theta conditions: " << (theta ? "pass" : "fail") << "\n";
        if (!consistent) {
            std::cout << "inclusion: duplicate chamber positions disagree\n";
        } else {
            std::cout << "inclusion conditions: " << (incl ? "pass" : "fail") << "\n";
        }
        std::cout << (ok ? "MEMBER" : "NOT A MEMBER") << "\n";
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GL(n) combinatorics: Schubert polynomials, chamber families, "
                 "Demazure characters, and configuration membership"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "emit JSON");
    app.add_flag("--ascii", opt.ascii, "ASCII-only diagram rendering");
    app.add_option("--seed", opt.seed, "seed for sampling commands (default 0)");

    std::string perm_text, word_text, family_text, method = "descending", render, file_path;
    std::vector<int> mult;
    int n = 0, samples = 50, max_boxes = 8, count = 500;
    bool full = false, unflagged = false, stability = false;

    auto* schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
    schubert->add_option("--perm", perm_text, "one-line notation, e.g. 2,4,1,5,3")->required();
    schubert->add_option("--method", method, "descending | ascending | both")
        ->check(CLI::IsMember({"descending", "ascending", "both"}));
    schubert->add_flag("--stability", stability, "compare with the same permutation in S_{n+1}");

    auto* verify = app.add_subcommand("verify", "batch verification suites");
    verify->require_subcommand(1);
    auto* vkp = verify->add_subcommand("kp", "descending vs ascending over all of S_n");
    vkp->add_option("--n", n, "symmetric group size")->required();
    auto* voracle = verify->add_subcommand("oracle", "rank oracle vs character formulas");
    voracle->add_option("--n", n, "ground set size (2..4)")->required();
    voracle->add_option("--max-boxes", max_boxes, "box budget (default 8)");
    auto* vops = verify->add_subcommand("operators", "divided-difference identities");
    vops->add_option("--count", count, "number of random polynomials (default 500)");
    auto* vconfig = verify->add_subcommand("config", "orbit samples vs membership tests");
    vconfig->add_option("--n", n, "symmetric group size (2..4)")->required();
    vconfig->add_option("--samples", samples, "samples per reduced word (default 50)");

    auto* chamber = app.add_subcommand("chamber", "chamber family of a reduced word");
    chamber->add_option("--word", word_text, "letters, e.g. 1,2,1")->required();
    chamber->add_option("--n", n, "ground set size (default: inferred)");
    chamber->add_flag("--full", full, "prepend the standard sets [1],...,[n]");
    chamber->add_option("--render", render, "wiring | young")
        ->check(CLI::IsMember({"wiring", "young"}));

    auto* strongsep = app.add_subcommand("strongsep", "strong separation test");
    strongsep->add_option("--family", family_text, "members, e.g. 13,2")->required();
    strongsep->add_option("--n", n, "ground set size (default: inferred)");

    auto* inversion = app.add_subcommand("inversion", "inversion family of a permutation");
    inversion->add_option("--perm", perm_text, "one-line notation")->required();
    inversion->add_option("--render", render, "young")->check(CLI::IsMember({"young"}));

    auto* chr = app.add_subcommand("char", "Demazure character of a flagged Weyl module");
    chr->add_option("--family", family_text, "members, e.g. 12,24 (or 12:1,24:1)")->required();
    chr->add_option("--mult", mult, "multiplicities, e.g. 1,1")->delimiter(',');
    chr->add_option("--word", word_text, "embedding word (default: discovered)");
    chr->add_option("--n", n, "ground set size (default: inferred)");
    chr->add_flag("--unflagged", unflagged, "symmetrize by the longest element");

    auto* bschar = app.add_subcommand("bschar", "character along a possibly non-reduced word");
    bschar->add_option("--word", word_text, "letters, repetitions allowed")->required();
    bschar->add_option("--mult", mult, "per-letter multiplicities (default all 1)")
        ->delimiter(',');
    bschar->add_option("--n", n, "ground set size (default: inferred)");

    auto* config = app.add_subcommand("config", "subspace configurations");
    config->require_subcommand(1);
    auto* ccheck = config->add_subcommand("check", "membership test for a word configuration");
    ccheck->add_option("--word", word_text, "the word")->required();
    ccheck->add_option("--n", n, "ambient dimension")->required();
    ccheck->add_option("--file", file_path, "subspace blocks, one basis vector per line")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (schubert->parsed()) return run_schubert(opt, perm_text, method, stability);
        if (vkp->parsed()) return run_verify_kp(opt, n);
        if (voracle->parsed()) return run_verify_oracle(opt, n, max_boxes);
        if (vops->parsed()) return run_verify_operators(opt, count);
        if (vconfig->parsed()) return run_verify_config(opt, n, samples);
        if (chamber->parsed()) return run_chamber(opt, word_text, n, full, render);
        if (strongsep->parsed()) return run_strongsep(opt, family_text, n);
        if (inversion->parsed()) return run_inversion(opt, perm_text, render);
        if (chr->parsed()) return run_char(opt, family_text, mult, word_text, n, unflagged);
        if (bschar->parsed()) return run_bschar(opt, word_text, mult, n);
        if (ccheck->parsed()) return run_config_check(opt, word_text, n, file_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
