#include "tmtools/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>

#include "tmtools/analysis.hpp"
#include "tmtools/bfile.hpp"
#include "tmtools/morphism.hpp"
#include "tmtools/repetitions.hpp"
#include "tmtools/sequences.hpp"
#include "tmtools/series.hpp"
#include "tmtools/shevelev.hpp"

namespace tmtools {

namespace {

RepetitionKind parse_kind(const std::string& name) {
    if (name == "square")
        return RepetitionKind::square;
    if (name == "cube")
        return RepetitionKind::cube;
    return RepetitionKind::overlap;
}

void print_signs(std::ostream& out, const std::vector<Sign>& window, const std::string& format) {
    if (format == "pm") {
        for (Sign s : window)
            out << s.symbol();
    } else { // values
        for (std::size_t i = 0; i < window.size(); ++i)
            out << (i ? " " : "") << window[i].value();
    }
    out << '\n';
}

struct SeqOptions {
    std::uint64_t count = 32;
    std::uint64_t start = 0;
    std::string format;
};

struct DirichletOptions {
    double re = 0.0;
    double im = 0.0;
    double threshold = 2.0;
    std::uint64_t terms = 1'000'000;
    int j_trunc = 80;
    double accuracy = 1e-11;

    ContinuationParams params() const {
        ContinuationParams p;
        p.direct_threshold = threshold;
        p.direct_terms = terms;
        p.j_truncation = j_trunc;
        p.target_accuracy = accuracy;
        return p;
    }
};

std::string bfile_name(const std::string& id) {
    return "b" + id.substr(1) + ".txt";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    out << std::setprecision(15);

    CLI::App app{"Thue-Morse sequence toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    // ------------------------------------------------------------- seq ---
    auto* seq = app.add_subcommand("seq", "print sequence windows");
    seq->require_subcommand(1);

    auto seq_tm = std::make_shared<SeqOptions>();
    seq_tm->format = "bits";
    auto* tm = seq->add_subcommand("tm", "Thue-Morse");
    tm->add_option("--count", seq_tm->count, "terms to print");
    tm->add_option("--start", seq_tm->start, "first index");
    tm->add_option("--format", seq_tm->format, "bits, pm, or values")
        ->check(CLI::IsMember({"bits", "pm", "values"}));
    tm->callback([&out, seq_tm] {
        if (seq_tm->format == "bits") {
            for (std::uint64_t n = 0; n < seq_tm->count; ++n)
                out << tm_bit(seq_tm->start + n);
            out << '\n';
        } else {
            print_signs(out, thue_morse_provider().window(seq_tm->start, seq_tm->count),
                        seq_tm->format);
        }
    });

    auto seq_pd = std::make_shared<SeqOptions>();
    seq_pd->format = "pm";
    auto* pd = seq->add_subcommand("pd", "period-doubling");
    pd->add_option("--count", seq_pd->count, "terms to print");
    pd->add_option("--start", seq_pd->start, "first index");
    pd->add_option("--format", seq_pd->format, "pm or values")
        ->check(CLI::IsMember({"pm", "values"}));
    pd->callback([&out, seq_pd] {
        print_signs(out, period_doubling_provider().window(seq_pd->start, seq_pd->count),
                    seq_pd->format);
    });

    auto ternary_count = std::make_shared<std::uint64_t>(32);
    auto ternary_format = std::make_shared<std::string>("bits");
    auto* ternary = seq->add_subcommand("ternary", "squarefree ternary word");
    ternary->add_option("--count", *ternary_count, "letters to print");
    ternary->add_option("--format", *ternary_format, "bits (digit string)")
        ->check(CLI::IsMember({"bits"}));
    ternary->callback([&out, ternary_count] {
        out << ternary_squarefree(static_cast<std::size_t>(*ternary_count)) << '\n';
    });

    auto morph_rules = std::make_shared<std::string>();
    auto morph_seed = std::make_shared<std::string>();
    auto morph_count = std::make_shared<std::uint64_t>(32);
    auto* morph = seq->add_subcommand("morph", "fixed point of a morphism");
    morph->add_option("--rules", *morph_rules, "e.g. \"0->01,1->10\"")->required();
    morph->add_option("--seed", *morph_seed, "starting symbol")->required();
    morph->add_option("--count", *morph_count, "letters to print");
    morph->callback([&out, morph_rules, morph_seed, morph_count] {
        if (morph_seed->size() != 1)
            throw CLI::ValidationError("--seed", "must be a single symbol");
        const Morphism m = Morphism::parse(*morph_rules);
        out << m.fixed_point_prefix((*morph_seed)[0], static_cast<std::size_t>(*morph_count))
            << '\n';
    });

    // -------------------------------------------------------- shevelev ---
    auto* shev = app.add_subcommand("shevelev", "class sets and the period theorem");
    shev->require_subcommand(1);

    auto shev_amax = std::make_shared<std::uint64_t>(512);
    auto shev_periods = std::make_shared<std::uint64_t>(16);
    auto* shev_verify = shev->add_subcommand("verify", "check the theorem for a range of shifts");
    shev_verify->add_option("--a-max", *shev_amax, "check a = 1..a-max");
    shev_verify->add_option("--periods", *shev_periods, "window length in expected periods");
    shev_verify->callback([&out, &rc, shev_amax, shev_periods] {
        for (std::uint64_t a = 1; a <= *shev_amax; ++a) {
            const std::uint64_t period = std::uint64_t{1} << (nu2(a) + 1);
            const auto rep = verify_theorem(a, *shev_periods * period);
            if (!rep.all_ok()) {
                out << "counterexample: a=" << a;
                if (!rep.observed_smallest_period)
                    out << " (window shortfall: " << rep.window_lengths.first << " beta, "
                        << rep.window_lengths.second << " gamma terms)";
                else if (*rep.observed_smallest_period != rep.expected_period)
                    out << " smallest period " << *rep.observed_smallest_period << ", expected "
                        << rep.expected_period;
                else if (!rep.prefix_matches_tm)
                    out << " gamma prefix law fails";
                else
                    out << " beta != -gamma";
                out << '\n';
                rc = 1;
                return;
            }
        }
        out << "ok: a=1.." << *shev_amax << ", " << *shev_periods
            << " periods per window (smallest period, prefix law, beta = -gamma)\n";
    });

    auto shev_a = std::make_shared<std::uint64_t>();
    auto shev_bound = std::make_shared<std::uint64_t>();
    auto* shev_sets = shev->add_subcommand("sets", "list B and C members below a bound");
    shev_sets->add_option("--a", *shev_a, "shift")->required();
    shev_sets->add_option("--bound", *shev_bound, "scan bound")->required();
    shev_sets->callback([&out, shev_a, shev_bound] {
        const auto cs = class_sets(*shev_a, *shev_bound, thue_morse_provider());
        out << "B:";
        for (auto n : cs.b_members)
            out << ' ' << n;
        out << "\nC:";
        for (auto n : cs.c_members)
            out << ' ' << n;
        out << '\n';
    });

    // ---------------------------------------------------------- series ---
    auto* ser = app.add_subcommand("series", "exact power-series identities");
    ser->require_subcommand(1);
    auto ser_a = std::make_shared<std::uint64_t>(7);
    auto ser_degree = std::make_shared<std::uint64_t>(4096);
    auto* ser_check = ser->add_subcommand("check", "verify every identity at a truncation");
    ser_check->add_option("--a", *ser_a, "odd shift");
    ser_check->add_option("--degree", *ser_degree, "truncation degree");
    ser_check->callback([&out, &rc, ser_a, ser_degree] {
        const auto checks =
            check_proof_identities(*ser_a, static_cast<std::size_t>(*ser_degree));
        for (const auto& c : checks) {
            if (c.pass) {
                out << "pass " << c.name << '\n';
            } else {
                out << "FAIL " << c.name << " at coefficient " << *c.first_fail << '\n';
                rc = 1;
            }
        }
    });

    // -------------------------------------------------------- products ---
    auto* prod = app.add_subcommand("products", "signed infinite products");
    prod->require_subcommand(1);
    auto prod_which = std::make_shared<std::string>();
    auto prod_tol = std::make_shared<double>(1e-9);
    auto* prod_eval = prod->add_subcommand("eval", "evaluate P, Q, R, or phi");
    prod_eval->add_option("--which", *prod_which, "P, Q, R, or phi")
        ->required()
        ->check(CLI::IsMember({"P", "Q", "R", "phi"}));
    prod_eval->add_option("--tol", *prod_tol, "tail tolerance");
    prod_eval->callback([&out, prod_which, prod_tol] {
        ProductResult r;
        if (*prod_which == "phi") {
            r = flajolet_martin_phi(*prod_tol);
        } else {
            const ProductId id = *prod_which == "P"   ? ProductId::P
                                 : *prod_which == "Q" ? ProductId::Q
                                                      : ProductId::R;
            r = product_eval(id, *prod_tol);
        }
        out << *prod_which << " = " << r.value << '\n'
            << "terms_used = " << r.terms_used << '\n'
            << "error_estimate <= " << r.error_estimate << '\n';
    });

    // ------------------------------------------------------- dirichlet ---
    auto* dir = app.add_subcommand("dirichlet", "the +-1 Dirichlet series");
    dir->require_subcommand(1);

    auto dir_opt = std::make_shared<DirichletOptions>();
    auto* dir_eval = dir->add_subcommand("eval", "evaluate at one point");
    dir_eval->add_option("--re", dir_opt->re, "real part")->required();
    dir_eval->add_option("--im", dir_opt->im, "imaginary part");
    dir_eval->add_option("--threshold", dir_opt->threshold, "direct-sum threshold");
    dir_eval->add_option("--terms", dir_opt->terms, "direct-sum term cap");
    dir_eval->add_option("--j-trunc", dir_opt->j_trunc, "shift expansion cut-off");
    dir_eval->add_option("--accuracy", dir_opt->accuracy, "asserted tail accuracy");
    dir_eval->callback([&out, dir_opt] {
        const auto a = dirichlet_eval({dir_opt->re, dir_opt->im}, dir_opt->params());
        out << "A(s) = " << a.real() << (a.imag() < 0 ? " - " : " + ")
            << std::abs(a.imag()) << "i\n"
            << "|A(s)| = " << std::abs(a) << '\n';
    });

    struct ZeroOptions {
        double re_min = 0, re_max = 0, im_min = 0, im_max = 0;
        double step = 0.05;
        double refine_tol = 1e-6;
        std::string out_path;
    };
    auto zero_opt = std::make_shared<ZeroOptions>();
    auto* dir_zeros = dir->add_subcommand("zeros", "grid scan for zero candidates");
    dir_zeros->add_option("--re-min", zero_opt->re_min)->required();
    dir_zeros->add_option("--re-max", zero_opt->re_max)->required();
    dir_zeros->add_option("--im-min", zero_opt->im_min)->required();
    dir_zeros->add_option("--im-max", zero_opt->im_max)->required();
    dir_zeros->add_option("--step", zero_opt->step, "grid step");
    dir_zeros->add_option("--refine-tol", zero_opt->refine_tol, "|A| acceptance bound");
    dir_zeros->add_option("--out", zero_opt->out_path, "CSV file for all grid samples");
    dir_zeros->callback([&out, zero_opt] {
        const auto res =
            dirichlet_zero_scan(zero_opt->re_min, zero_opt->re_max, zero_opt->im_min,
                                zero_opt->im_max, zero_opt->step, zero_opt->refine_tol);
        if (!zero_opt->out_path.empty()) {
            std::ofstream csv(zero_opt->out_path);
            if (!csv)
                throw CLI::ValidationError("--out", zero_opt->out_path + ": cannot open");
            csv << std::setprecision(15) << "re,im,abs\n";
            for (const auto& g : res.grid)
                csv << g.re << ',' << g.im << ',' << g.abs_value << '\n';
        }
        for (const auto& c : res.candidates)
            out << "candidate: re=" << c.real() << " im=" << c.imag() << '\n';
        out << "candidates: " << res.candidates.size() << " (grid points: " << res.grid.size()
            << ")\n";
    });

    // ------------------------------------------------------ repetition ---
    auto* rep = app.add_subcommand("repetition", "squares, cubes, overlaps");
    rep->require_subcommand(1);

    auto check_word = std::make_shared<std::string>();
    auto check_kind = std::make_shared<std::string>("square");
    auto* rep_check = rep->add_subcommand("check", "report the first repetition in a word");
    rep_check->add_option("--word", *check_word, "word to scan")->required();
    rep_check->add_option("--kind", *check_kind, "square, cube, or overlap")
        ->check(CLI::IsMember({"square", "cube", "overlap"}));
    rep_check->callback([&out, check_word, check_kind] {
        const auto kind = parse_kind(*check_kind);
        out << witness_to_string(*check_word, kind, find_repetition(*check_word, kind)) << '\n';
    });

    const auto add_freeness = [&](const std::string& name, const std::string& help,
                                  std::uint64_t default_len, const std::string& default_kind,
                                  std::string (*make)(std::size_t)) {
        auto length = std::make_shared<std::uint64_t>(default_len);
        auto kind = std::make_shared<std::string>(default_kind);
        auto* sub = rep->add_subcommand(name, help);
        sub->add_option("--length", *length, "prefix length");
        sub->add_option("--kind", *kind, "square, cube, or overlap")
            ->check(CLI::IsMember({"square", "cube", "overlap"}));
        sub->callback([&out, &rc, length, kind, make] {
            const std::string w = make(static_cast<std::size_t>(*length));
            const auto k = parse_kind(*kind);
            const auto wit = find_repetition(w, k);
            out << witness_to_string(w, k, wit) << '\n';
            if (wit)
                rc = 1;
        });
    };
    add_freeness("tm", "check a Thue-Morse prefix for repetitions", 1 << 14, "overlap",
                 [](std::size_t n) { return tm_word(n); });
    add_freeness("ternary", "check the ternary word for repetitions", 5000, "square",
                 [](std::size_t n) { return ternary_squarefree(n); });

    // ---------------------------------------------------------- primes ---
    auto* primes = app.add_subcommand("primes", "digit-sum statistics over primes");
    primes->require_subcommand(1);
    struct PrimesOptions {
        std::uint64_t bound = 0;
        std::uint64_t base = 2;
        std::uint64_t mod = 2;
    };
    auto primes_opt = std::make_shared<PrimesOptions>();
    auto* parity = primes->add_subcommand("parity", "digit sums of primes modulo m");
    parity->add_option("--bound", primes_opt->bound, "sieve bound")->required();
    parity->add_option("--base", primes_opt->base, "digit base");
    parity->add_option("--mod", primes_opt->mod, "residue modulus");
    parity->callback([&out, primes_opt] {
        const auto stats = prime_digit_stats(primes_opt->bound, primes_opt->base, primes_opt->mod);
        for (std::size_t r = 0; r < stats.counts.size(); ++r) {
            out << "residue " << r << ": " << stats.counts[r];
            if (stats.total > 0)
                out << " (" << static_cast<double>(stats.counts[r]) /
                                   static_cast<double>(stats.total)
                    << ")";
            out << '\n';
        }
        out << "primes: " << stats.total << '\n';
        if (stats.total > 0)
            out << "max relative deviation from uniform: " << stats.max_rel_deviation << '\n';
    });

    // ------------------------------------------------------------ oeis ---
    auto* oeis = app.add_subcommand("oeis", "b-file export and comparison");
    oeis->require_subcommand(1);

    struct OeisOptions {
        std::string id;
        std::string file;
        std::uint64_t a = 0;
        std::uint64_t count = 1000;
        long long offset = 1;
        std::string out_path;
    };

    auto exp_opt = std::make_shared<OeisOptions>();
    auto* oeis_export = oeis->add_subcommand("export", "write C_a members as a b-file");
    oeis_export->add_option("--a", exp_opt->a, "shift")->required();
    oeis_export->add_option("--count", exp_opt->count, "members to export");
    oeis_export->add_option("--offset", exp_opt->offset, "first index");
    oeis_export->add_option("--out", exp_opt->out_path, "output file (stdout if omitted)");
    oeis_export->callback([&out, exp_opt] {
        const auto members =
            c_members(exp_opt->a, static_cast<std::size_t>(exp_opt->count), thue_morse_provider());
        std::vector<long long> values(members.begin(), members.end());
        if (exp_opt->out_path.empty())
            export_bfile(values, exp_opt->offset, out);
        else
            save_bfile(values, exp_opt->offset, exp_opt->out_path);
    });

    auto cmp_opt = std::make_shared<OeisOptions>();
    auto* oeis_compare = oeis->add_subcommand("compare", "compare C_a against a stored b-file");
    oeis_compare->add_option("--id", cmp_opt->id, "OEIS id, e.g. A079523");
    oeis_compare->add_option("--file", cmp_opt->file, "b-file path (default: $TMTOOLS_BFILE_DIR)");
    oeis_compare->add_option("--a", cmp_opt->a, "shift (default: catalogued value for --id)");
    oeis_compare->add_option("--count", cmp_opt->count, "maximum terms to compare");
    oeis_compare->add_option("--offset", cmp_opt->offset, "expected first index");
    oeis_compare->callback([&out, &rc, cmp_opt] {
        std::uint64_t a = cmp_opt->a;
        if (a == 0) {
            const auto known = shift_for_oeis_id(cmp_opt->id);
            if (!known)
                throw CLI::ValidationError(
                    "--a", cmp_opt->id.empty() ? "required without --id"
                                               : cmp_opt->id + " is not catalogued; pass --a");
            a = *known;
        }
        std::filesystem::path path = cmp_opt->file;
        if (path.empty()) {
            if (cmp_opt->id.empty())
                throw CLI::ValidationError("--file", "required without --id");
            const char* dir = std::getenv("TMTOOLS_BFILE_DIR");
            if (!dir || !*dir)
                throw CLI::ValidationError("--file",
                                           "TMTOOLS_BFILE_DIR is unset; pass --file");
            path = std::filesystem::path(dir) / bfile_name(cmp_opt->id);
        }
        const BFile local = load_bfile(path);
        const std::size_t n =
            std::min<std::size_t>(local.values.size(), static_cast<std::size_t>(cmp_opt->count));
        const auto members = c_members(a, n, thue_morse_provider());
        const std::vector<long long> values(members.begin(), members.end());
        const auto report = compare_bfile(local, values, cmp_opt->offset);
        out << report.message << '\n';
        if (!report.match)
            rc = 1;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}

} // namespace tmtools
