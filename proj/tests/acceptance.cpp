// End-to-end acceptance gate. Each numbered check prints one [PASS]/[FAIL]
// line with its wall time; the process exits nonzero if any check fails.
// Tolerances and time budgets are pinned here on purpose: a run that drifts
// past them is a failure, not a warning.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tmtools/analysis.hpp"
#include "tmtools/bfile.hpp"
#include "tmtools/repetitions.hpp"
#include "tmtools/sequences.hpp"
#include "tmtools/series.hpp"
#include "tmtools/shevelev.hpp"

using namespace tmtools;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail; // shown indented under the status line when nonempty
};

Outcome ok() {
    return {true, {}};
}

Outcome fail(std::string detail) {
    return {false, std::move(detail)};
}

int failures = 0;

template <class Body>
void criterion(int index, const std::string& label, double time_limit_s, Body body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome = fail(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (outcome.pass && elapsed > time_limit_s) {
        outcome = fail("took " + std::to_string(elapsed) + "s, limit is " +
                       std::to_string(time_limit_s) + "s");
    }
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << index << ". " << label << " ("
              << std::fixed << std::setprecision(2) << elapsed << "s)\n"
              << std::defaultfloat << std::setprecision(17);
    if (!outcome.detail.empty())
        std::cout << "       " << outcome.detail << '\n';
    if (!outcome.pass)
        ++failures;
}

std::filesystem::path bfile_dir() {
    if (const char* dir = std::getenv("TMTOOLS_BFILE_DIR"); dir && *dir)
        return dir;
    return "data/oeis";
}

} // namespace

int main() {
    std::cout << "acceptance checks\n=================\n";
    const auto& tm = thue_morse_provider();

    // 1. Smallest period of gamma_a, the u(a)-scaled prefix law, and
    //    beta = -gamma, for every shift up to 512, over 16-period windows.
    criterion(1, "period theorem, a = 1..512, 16 periods per window", 30.0, [&] {
        for (std::uint64_t a = 1; a <= 512; ++a) {
            const std::uint64_t period = std::uint64_t{1} << (nu2(a) + 1);
            const auto rep = verify_theorem(a, 16 * period, tm);
            if (!rep.all_ok())
                return fail("first failing shift: a = " + std::to_string(a));
        }
        return ok();
    });

    // 2. C_{2a} = 2 C_a union (2 C_a + 1), compared below 1e5 for a up to 256.
    criterion(2, "halving identity, a = 1..256, bound 1e5", 10.0, [&] {
        for (std::uint64_t a = 1; a <= 256; ++a)
            if (!verify_halving(a, 100'000, tm))
                return fail("first failing shift: a = " + std::to_string(a));
        return ok();
    });

    // 3. For odd a the members of C_a alternate evil/odious (first 1000 members).
    criterion(3, "evil/odious alternation along C_a, odd a <= 99", 10.0, [&] {
        for (std::uint64_t a = 1; a <= 99; a += 2) {
            const auto members = c_members(a, 1000, tm);
            for (std::size_t i = 0; i + 1 < members.size(); ++i)
                if (is_evil(members[i]) == is_evil(members[i + 1]))
                    return fail("a = " + std::to_string(a) + ", members " +
                                std::to_string(members[i]) + " and " +
                                std::to_string(members[i + 1]) + " have equal parity");
        }
        return ok();
    });

    // 4. C_1..C_9 match the stored OEIS b-files term for term.
    criterion(4, "OEIS b-file match for C_1..C_9", 10.0, [&] {
        const auto dir = bfile_dir();
        for (std::uint64_t a = 1; a <= 9; ++a) {
            const auto id = oeis_id_for_shift(a);
            if (!id)
                return fail("no catalogued id for a = " + std::to_string(a));
            const auto path = dir / ("b" + id->substr(1) + ".txt");
            const BFile local = load_bfile(path);
            const std::size_t n = std::min<std::size_t>(local.values.size(), 1000);
            const auto members = c_members(a, n, tm);
            const std::vector<long long> values(members.begin(), members.end());
            const auto report = compare_bfile(local, values, 1);
            if (!report.match)
                return fail(*id + ": " + report.message);
        }
        return ok();
    });

    // 5. Exact series identities: lacunary product and decimation at degree
    //    2^13, and the shifted summatory identity with its two-value
    //    coefficient range for every odd a <= 99 at degree 2^12.
    criterion(5, "series identities (degrees 2^13 and 2^12)", 20.0, [&] {
        const std::size_t big = std::size_t{1} << 13;
        if (lacunary_product(big) != tm_series(big))
            return fail("lacunary product != Thue-Morse series at degree 2^13");
        TruncSeries one_minus_x(big);
        one_minus_x.set_coeff(0, 1);
        one_minus_x.set_coeff(1, -1);
        if (tm_series(big) != ts_mul(one_minus_x, tm_even_series(big)))
            return fail("decimation identity fails at degree 2^13");
        const std::size_t deg = std::size_t{1} << 12;
        for (std::uint64_t a = 1; a <= 99; a += 2) {
            if (!verify_star(a, deg))
                return fail("shifted summatory identity fails for a = " + std::to_string(a));
            const BigInt expected = -2 * tm_sign((a - 1) / 2).value();
            for (const BigInt& c : xa_sa_coeffs(a, deg).coeffs()) // closed forms re-checked inside
                if (c != 0 && c != expected)
                    return fail("coefficient outside {0, " + expected.str() + "} for a = " +
                                std::to_string(a));
        }
        return ok();
    });

    // 6. The three signed products and the Flajolet-Martin constant against
    //    pinned references. The phi pin is a five-digit value; the measured
    //    distance is reported either way.
    criterion(6, "signed products P, Q, R and phi", 5.0, [&] {
        const auto p = product_eval(ProductId::P, 1e-10);
        const auto q = product_eval(ProductId::Q, 1e-10);
        const auto r = product_eval(ProductId::R, 1e-10);
        const auto phi = flajolet_martin_phi(1e-10);
        std::ostringstream why;
        why << std::setprecision(17);
        bool pass = true;
        if (std::abs(p.value - 0.7071067811865476) > 1e-9) {
            pass = false;
            why << "|P - 0.7071067811865476| = " << std::abs(p.value - 0.7071067811865476)
                << " > 1e-9; ";
        }
        if (std::abs(p.value * p.value - 0.5) > 2e-9) {
            pass = false;
            why << "|P^2 - 1/2| = " << std::abs(p.value * p.value - 0.5) << " > 2e-9; ";
        }
        if (std::abs(r.value * q.value - 1.5) > 1e-8) {
            pass = false;
            why << "|R*Q - 3/2| = " << std::abs(r.value * q.value - 1.5) << " > 1e-8; ";
        }
        if (std::abs(phi.value - 0.77351) > 5e-6) {
            pass = false;
            why << "|phi - 0.77351| = " << std::abs(phi.value - 0.77351)
                << " > 5e-6 (phi = " << phi.value
                << ", estimated evaluation error <= " << phi.error_estimate
                << "; the five-digit pin truncates rather than rounds the next digit, "
                   "so phi sits 6.3e-6 above it and no evaluation accuracy can close that gap)";
        }
        return pass ? ok() : fail(why.str());
    });

    // 7. Dirichlet series: expansion agrees with the direct sum, trivial zeros
    //    are exact, the three catalogued zeros on the imaginary axis check out,
    //    and a rectangle scan finds those zeros and nothing else.
    criterion(7, "Dirichlet series values, zeros, and zero scan", 60.0, [&] {
        ContinuationParams direct; // threshold 2: s = 2, 3 go through the paired sum
        ContinuationParams expansion;
        expansion.direct_threshold = 5.0;
        for (const double s : {2.0, 3.0}) {
            const auto d = dirichlet_eval({s, 0.0}, direct);
            const auto e = dirichlet_eval({s, 0.0}, expansion);
            if (std::abs(d - e) > 1e-9)
                return fail("expansion vs direct at s = " + std::to_string(s) + ": |diff| = " +
                            std::to_string(std::abs(d - e)));
        }
        for (const double s : {0.0, -1.0, -2.0})
            if (std::abs(dirichlet_eval({s, 0.0}, direct)) > 1e-10)
                return fail("A(" + std::to_string(s) + ") is not zero");
        ContinuationParams wide;
        wide.j_truncation = 160; // the default cut-off is too short above Im s ~ 20
        const double spacing = 2.0 * std::numbers::pi / std::numbers::ln2;
        for (int k = 1; k <= 3; ++k) {
            const double mod = std::abs(dirichlet_eval({0.0, k * spacing}, wide));
            if (mod > 1e-5)
                return fail("|A| = " + std::to_string(mod) + " at the k = " +
                            std::to_string(k) + " zero");
        }
        const auto scan = dirichlet_zero_scan(-0.5, 0.5, 0.0, 30.0, 0.05, 1e-6);
        // Genuine off-axis zeros of A inside the rectangle, located with an
        // independent high-precision evaluation (|A| < 1e-27 at each):
        const std::vector<std::complex<double>> off_axis = {
            {-0.204616627243308, 16.9833830557399},
            {0.478033401010188, 20.2705202718356},
            {0.288420487115202, 23.1888813804294},
        };
        std::vector<bool> seen(3, false);
        std::vector<std::complex<double>> strays;
        for (const auto& c : scan.candidates) {
            bool near_axis_zero = false;
            for (int k = 1; k <= 3; ++k) {
                if (std::abs(c - std::complex<double>{0.0, k * spacing}) <= 0.1) {
                    seen[k - 1] = true;
                    near_axis_zero = true;
                }
            }
            if (!near_axis_zero)
                strays.push_back(c);
        }
        for (int k = 1; k <= 3; ++k)
            if (!seen[k - 1])
                return fail("scan missed the k = " + std::to_string(k) + " axis zero");
        if (!strays.empty()) {
            std::ostringstream s;
            s << strays.size() << " candidate(s) beyond 0.1 of the three axis zeros:";
            for (const auto& c : strays) {
                double nearest = 1e300;
                for (const auto& z : off_axis)
                    nearest = std::min(nearest, std::abs(c - z));
                s << ' ' << c.real() << (c.imag() < 0 ? '-' : '+') << std::abs(c.imag())
                  << "i (" << nearest << " from a confirmed zero)";
            }
            s << "; the expectation that the rectangle holds only the three axis zeros "
                 "is wrong - A also vanishes at the three off-axis points above "
                 "(re-derived with an independent 30-digit evaluation), and a correct "
                 "scan must report them";
            return fail(s.str());
        }
        return ok();
    });

    // 8. Repetition scans: the Thue-Morse prefix of length 2^14 is cube- and
    //    overlap-free, the ternary word is squarefree to 5000 letters, and
    //    every binary word of length 4 contains a square.
    criterion(8, "repetition freeness and the length-4 exhaustion", 60.0, [&] {
        const std::string w = tm_word(std::size_t{1} << 14);
        if (const auto c = find_cube(w))
            return fail("cube at position " + std::to_string(c->position));
        if (const auto o = find_overlap(w))
            return fail("overlap at position " + std::to_string(o->position));
        const std::string t = ternary_squarefree(5000);
        if (const auto s = find_square(t))
            return fail("ternary square at position " + std::to_string(s->position));
        for (int bits = 0; bits < 16; ++bits) {
            std::string word(4, '0');
            for (int i = 0; i < 4; ++i)
                if (bits & (1 << i))
                    word[i] = '1';
            if (!find_square(word))
                return fail("binary word " + word + " of length 4 has no square");
        }
        return ok();
    });

    // 9. Prouhet split of {0..2^k-1}: equal power sums, checked with unbounded
    //    integers for every exponent below k, k up to 10.
    criterion(9, "Prouhet power-sum split, k = 1..10", 1.0, [&] {
        for (int k = 1; k <= 10; ++k) {
            const auto part = prouhet_partition(k);
            if (part.evil.size() != part.odious.size())
                return fail("unequal halves at k = " + std::to_string(k));
            for (int j = 0; j < k; ++j) {
                BigInt evil_sum = 0, odious_sum = 0;
                for (const auto n : part.evil)
                    evil_sum += boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(j));
                for (const auto n : part.odious)
                    odious_sum += boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(j));
                if (evil_sum != odious_sum)
                    return fail("power sums differ at k = " + std::to_string(k) +
                                ", exponent " + std::to_string(j));
            }
        }
        return ok();
    });

    // 10. Binary digit sums of the primes up to 1e6 split close to evenly
    //     between the parities.
    criterion(10, "prime digit-sum parity balance below 1e6", 10.0, [&] {
        const auto stats = prime_digit_stats(1'000'000, 2, 2);
        for (std::size_t r = 0; r < stats.counts.size(); ++r) {
            const double freq =
                static_cast<double>(stats.counts[r]) / static_cast<double>(stats.total);
            if (freq < 0.49 || freq > 0.51)
                return fail("residue " + std::to_string(r) + " frequency " +
                            std::to_string(freq) +
                            " outside the pinned [0.49, 0.51] band; the tally itself is "
                            "correct (36867 evil / 41631 odious of the 78498 primes, matching "
                            "an independent sieve) - the parity of prime digit sums is still "
                            "about 3% biased at this scale, so the band cannot be met");
        }
        return ok();
    });

    std::cout << "=================\n"
              << (10 - failures) << "/10 passed\n";
    return failures == 0 ? 0 : 1;
}
