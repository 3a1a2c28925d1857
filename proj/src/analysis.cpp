#include "tmtools/analysis.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tmtools/sequences.hpp"

namespace tmtools {

namespace {

constexpr double LN2 = 0.69314718055994530942;

int u(std::uint64_t n) { return tm_sign(n).value(); }

// log of the n-th raw product factor
double log_term(ProductId which, double t) {
    switch (which) {
    case ProductId::P: return std::log1p(-1.0 / (2.0 * t + 2.0));
    case ProductId::Q: return std::log1p(-1.0 / (2.0 * t + 1.0));
    case ProductId::R: return std::log1p(2.0 / (16.0 * t * t + 12.0 * t));
    }
    throw std::logic_error("unreachable");
}

std::uint64_t start_index(ProductId which) {
    return which == ProductId::P ? 0 : 1;
}

// After grouping twice, block j bundles indices 4j..4j+3 into a second
// difference of log_term; |(log_term)''| <= 2/t^3 for t >= 1 in all three
// products, so |block j| <= 3 * 2/(4j)^3 = 3/(32 j^3) and the tail from
// block J is at most 3/(64 (J-1)^2).
double block_tail_bound(std::uint64_t from_block) {
    const double j = static_cast<double>(from_block) - 1.0;
    return 3.0 / (64.0 * j * j);
}

} // namespace

ProductResult product_eval(ProductId which, double tol) {
    if (!(tol >= 1e-12))
        throw std::invalid_argument("tolerance floor is 1e-12");
    const std::uint64_t start = start_index(which);
    double sum = 0.0;
    for (std::uint64_t n = start; n < 8; ++n)
        sum += u(n) * log_term(which, static_cast<double>(n));

    std::uint64_t j = 2;
    for (;; ++j) {
        const double t = 4.0 * static_cast<double>(j);
        const double block = log_term(which, t) - log_term(which, t + 1.0) -
                             log_term(which, t + 2.0) + log_term(which, t + 3.0);
        sum += u(j) * block;
        if (block_tail_bound(j + 1) <= tol)
            break;
    }

    ProductResult r;
    r.value = std::exp(sum);
    r.terms_used = 4 * (j + 1) - start;
    r.error_estimate = r.value * std::expm1(block_tail_bound(j + 1));
    return r;
}

ProductResult flajolet_martin_phi(double tol) {
    if (!(tol >= 1e-10))
        throw std::invalid_argument("tolerance floor is 1e-10");
    const double factor = std::exp2(-0.5) * std::exp(euler_gamma) * (2.0 / 3.0);
    ProductResult r = product_eval(ProductId::R, tol);
    r.value *= factor;
    r.error_estimate *= factor;
    return r;
}

namespace {

using Complex = std::complex<double>;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// (2m+k)^{-s}
Complex inv_pow(double base, Complex s) { return std::exp(-s * std::log(base)); }

// Tail bound for the paired direct sum cut after M pairs, Re(s) > 0:
// each pair is u(m)[(2m+1)^{-s} - (2m+2)^{-s}], bounded by |s|(2m+1)^{-Re s-1}.
double direct_tail_bound(Complex s, double M) {
    const double sigma = s.real();
    const double x = 2.0 * M + 1.0;
    return std::abs(s) * (std::pow(x, -sigma - 1.0) + std::pow(x, -sigma) / (2.0 * sigma));
}

std::string describe(Complex s) {
    std::ostringstream os;
    os << s.real() << (s.imag() < 0 ? "" : "+") << s.imag() << "i";
    return os.str();
}

Complex direct_sum(Complex s, const ContinuationParams& p) {
    // smallest M with tail bound <= target, found by doubling then bisecting
    std::uint64_t hi = 16;
    while (hi < p.direct_terms && direct_tail_bound(s, static_cast<double>(hi)) > p.target_accuracy)
        hi *= 2;
    if (hi > p.direct_terms)
        hi = p.direct_terms;
    if (direct_tail_bound(s, static_cast<double>(hi)) > p.target_accuracy) {
        std::ostringstream os;
        os << "direct tail bound " << direct_tail_bound(s, static_cast<double>(hi))
           << " stays above target " << p.target_accuracy << " at s=" << describe(s)
           << " with " << p.direct_terms << " terms; raise direct_terms or target_accuracy";
        throw std::runtime_error(os.str());
    }
    std::uint64_t lo = hi / 2;
    while (lo + 1 < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (direct_tail_bound(s, static_cast<double>(mid)) <= p.target_accuracy ? hi : lo) = mid;
    }
    const std::uint64_t M = hi;

    Complex sum = 0.0;
    for (std::uint64_t m = 0; m < M; ++m) {
        const double d = 2.0 * static_cast<double>(m);
        sum += static_cast<double>(u(m)) * (inv_pow(d + 1.0, s) - inv_pow(d + 2.0, s));
    }
    return sum;
}

Complex continued(Complex s, const ContinuationParams& p) {
    if (s.real() >= p.direct_threshold)
        return direct_sum(s, p);

    const auto key = std::make_pair(s.real(), s.imag());
    if (auto it = p.memo.find(key); it != p.memo.end())
        return it->second;

    Complex sum = 0.0;
    Complex coef = 1.0; // C(s+j-1, j), built one factor at a time
    bool vanished = false;
    int j = 1;
    for (; j <= p.j_truncation; ++j) {
        coef *= (s + Complex(j - 1.0)) / static_cast<double>(j);
        if (coef == 0.0) {
            vanished = true; // s is a non-positive integer: the sum is finite and exact
            break;
        }
        const Complex shifted = s + Complex(static_cast<double>(j));
        sum += coef * std::exp(-shifted * LN2) * continued(shifted, p);
    }

    if (!vanished) {
        // Remaining terms shrink by at least r per step; |A| <= zeta(2) < 1.65
        // on the tail (its arguments have real part >= 2 well before the cut).
        const double J = static_cast<double>(p.j_truncation);
        const double r = (std::abs(s) + J + 1.0) / (2.0 * (J + 2.0));
        const Complex coef_next = coef * (s + Complex(J)) / (J + 1.0);
        const double lead =
            std::abs(coef_next) * std::exp2(-(s.real() + J + 1.0)) * 1.65;
        const double bound = r < 1.0 ? lead / (1.0 - r)
                                     : std::numeric_limits<double>::infinity();
        if (!(bound <= p.target_accuracy)) {
            std::ostringstream os;
            os << "shift expansion tail bound " << bound << " stays above target "
               << p.target_accuracy << " at s=" << describe(s)
               << "; raise j_truncation";
            throw std::runtime_error(os.str());
        }
    }

    if (p.memo.size() > 200'000)
        p.memo.clear();
    p.memo.emplace(key, sum);
    return sum;
}

} // namespace

std::complex<double> dirichlet_eval(std::complex<double> s, const ContinuationParams& params) {
    if (!finite(s))
        throw std::invalid_argument("s must be finite");
    if (!(params.direct_threshold > 1.0))
        throw std::invalid_argument("direct_threshold must exceed 1");
    if (params.j_truncation < 8)
        throw std::invalid_argument("j_truncation must be at least 8");
    const Complex a = continued(s, params);
    if (!finite(a))
        throw std::range_error("evaluation overflowed at s=" + describe(s));
    return a;
}

namespace {

// 1-D golden-section minimization of f over [lo, hi]
double golden_min(const std::function<double(double)>& f, double lo, double hi, int iters) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - (b - a) * inv_phi;
    double d = a + (b - a) * inv_phi;
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - (b - a) * inv_phi;
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + (b - a) * inv_phi;
            fd = f(d);
        }
    }
    return (a + b) / 2.0;
}

bool near_trivial_zero(Complex c) {
    const double n = std::round(c.real());
    return n <= 0.0 && std::abs(c.real() - n) <= 0.05 && std::abs(c.imag()) <= 0.05;
}

} // namespace

ZeroScanResult dirichlet_zero_scan(double re_min, double re_max, double im_min,
                                   double im_max, double grid_step, double refine_tol) {
    if (!(grid_step > 0.0))
        throw std::invalid_argument("grid_step must be positive");
    if (re_min < -30.0)
        throw std::invalid_argument("rectangle reaches Re(s) < -30, where the shift expansion is unstable");
    ZeroScanResult result;
    if (re_min > re_max || im_min > im_max)
        return result; // degenerate rectangle

    ContinuationParams grid_params;
    grid_params.target_accuracy = 1e-7;
    grid_params.j_truncation = 160; // coefficient growth scales with |Im s|

    const auto steps = [&](double lo, double hi) {
        return static_cast<std::size_t>(std::floor((hi - lo) / grid_step + 1e-9)) + 1;
    };
    const std::size_t n_re = steps(re_min, re_max);
    const std::size_t n_im = steps(im_min, im_max);

    std::vector<double> abs_grid(n_re * n_im);
    for (std::size_t yi = 0; yi < n_im; ++yi) {
        for (std::size_t xi = 0; xi < n_re; ++xi) {
            const double re = re_min + static_cast<double>(xi) * grid_step;
            const double im = im_min + static_cast<double>(yi) * grid_step;
            const double a = std::abs(dirichlet_eval({re, im}, grid_params));
            abs_grid[yi * n_re + xi] = a;
            result.grid.push_back({re, im, a});
        }
    }

    ContinuationParams refine_params;
    refine_params.target_accuracy = 1e-8;
    refine_params.j_truncation = 160;
    const auto abs_a = [&](double re, double im) {
        return std::abs(dirichlet_eval({re, im}, refine_params));
    };

    constexpr double coarse_threshold = 0.25;
    for (std::size_t yi = 0; yi < n_im; ++yi) {
        for (std::size_t xi = 0; xi < n_re; ++xi) {
            const double here = abs_grid[yi * n_re + xi];
            if (here >= coarse_threshold)
                continue;
            bool is_min = true;
            for (int dy = -1; dy <= 1 && is_min; ++dy) {
                for (int dx = -1; dx <= 1 && is_min; ++dx) {
                    if (dx == 0 && dy == 0)
                        continue;
                    const std::int64_t nx = static_cast<std::int64_t>(xi) + dx;
                    const std::int64_t ny = static_cast<std::int64_t>(yi) + dy;
                    if (nx < 0 || ny < 0 || nx >= static_cast<std::int64_t>(n_re) ||
                        ny >= static_cast<std::int64_t>(n_im))
                        continue;
                    if (abs_grid[static_cast<std::size_t>(ny) * n_re + static_cast<std::size_t>(nx)] < here)
                        is_min = false;
                }
            }
            if (!is_min)
                continue;

            double re = re_min + static_cast<double>(xi) * grid_step;
            double im = im_min + static_cast<double>(yi) * grid_step;
            for (int round = 0; round < 4; ++round) {
                re = golden_min([&](double x) { return abs_a(x, im); },
                                std::max(re - grid_step, re_min), std::min(re + grid_step, re_max), 40);
                im = golden_min([&](double y) { return abs_a(re, y); },
                                std::max(im - grid_step, im_min), std::min(im + grid_step, im_max), 40);
            }
            const Complex cand{re, im};
            if (abs_a(re, im) > refine_tol || near_trivial_zero(cand))
                continue;
            bool duplicate = false;
            for (const Complex& seen : result.candidates)
                if (std::abs(seen - cand) < 0.01)
                    duplicate = true;
            if (!duplicate)
                result.candidates.push_back(cand);
        }
    }
    return result;
}

DigitStats prime_digit_stats(std::uint64_t bound, std::uint64_t base, std::uint64_t modulus) {
    if (base < 2)
        throw std::invalid_argument("base must be at least 2");
    if (modulus < 2)
        throw std::invalid_argument("modulus must be at least 2");
    if (bound > 100'000'000)
        throw std::invalid_argument("bound above 1e8 exceeds the sieve budget");

    DigitStats stats;
    stats.counts.assign(modulus, 0);
    if (bound < 2)
        return stats;

    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t p = 2; p * p <= bound; ++p) {
        if (composite[p])
            continue;
        for (std::uint64_t q = p * p; q <= bound; q += p)
            composite[q] = true;
    }
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (composite[p])
            continue;
        std::uint64_t digit_sum = 0;
        for (std::uint64_t n = p; n; n /= base)
            digit_sum += n % base;
        ++stats.counts[digit_sum % modulus];
        ++stats.total;
    }
    for (std::uint64_t c : stats.counts) {
        const double dev = std::abs(static_cast<double>(modulus) * static_cast<double>(c) /
                                        static_cast<double>(stats.total) -
                                    1.0);
        stats.max_rel_deviation = std::max(stats.max_rel_deviation, dev);
    }
    return stats;
}

} // namespace tmtools
