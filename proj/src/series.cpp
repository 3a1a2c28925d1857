#include "tmtools/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace tmtools {

namespace {

std::size_t min_bound(const TruncSeries& x, const TruncSeries& y) {
    return std::min(x.degree_bound(), y.degree_bound());
}

int u(std::uint64_t n) { return tm_sign(n).value(); }

} // namespace

TruncSeries TruncSeries::from_coeffs(std::vector<BigInt> cs) {
    if (cs.empty())
        throw std::invalid_argument("series needs at least the constant coefficient");
    TruncSeries s(cs.size() - 1);
    s.coeffs_ = std::move(cs);
    return s;
}

TruncSeries ts_add(const TruncSeries& x, const TruncSeries& y) {
    TruncSeries r(min_bound(x, y));
    for (std::size_t k = 0; k <= r.degree_bound(); ++k)
        r.set_coeff(k, x.coeff(k) + y.coeff(k));
    return r;
}

TruncSeries ts_sub(const TruncSeries& x, const TruncSeries& y) {
    TruncSeries r(min_bound(x, y));
    for (std::size_t k = 0; k <= r.degree_bound(); ++k)
        r.set_coeff(k, x.coeff(k) - y.coeff(k));
    return r;
}

TruncSeries ts_mul(const TruncSeries& x, const TruncSeries& y) {
    const std::size_t n = min_bound(x, y);
    // Convolve with the sparser operand outermost; the identities here
    // multiply by two-term factors, which makes this linear in practice.
    auto nonzeros = [n](const TruncSeries& s) {
        std::size_t c = 0;
        for (std::size_t k = 0; k <= n; ++k)
            if (s.coeff(k) != 0)
                ++c;
        return c;
    };
    const TruncSeries& outer = nonzeros(x) <= nonzeros(y) ? x : y;
    const TruncSeries& inner = (&outer == &x) ? y : x;
    TruncSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (outer.coeff(i) == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            if (inner.coeff(j) != 0)
                r.set_coeff(i + j, r.coeff(i + j) + outer.coeff(i) * inner.coeff(j));
    }
    return r;
}

TruncSeries ts_shift(const TruncSeries& x, std::int64_t k) {
    if (k < 0)
        throw std::invalid_argument("negative shift");
    const std::size_t n = x.degree_bound();
    TruncSeries r(n);
    for (std::size_t i = static_cast<std::size_t>(k); i <= n; ++i)
        r.set_coeff(i, x.coeff(i - static_cast<std::size_t>(k)));
    return r;
}

TruncSeries ts_scale(const TruncSeries& x, const BigInt& c) {
    TruncSeries r(x.degree_bound());
    for (std::size_t k = 0; k <= r.degree_bound(); ++k)
        r.set_coeff(k, x.coeff(k) * c);
    return r;
}

TruncSeries partial_sums(const TruncSeries& x) {
    TruncSeries r(x.degree_bound());
    BigInt acc = 0;
    for (std::size_t k = 0; k <= r.degree_bound(); ++k) {
        acc += x.coeff(k);
        r.set_coeff(k, acc);
    }
    return r;
}

std::optional<std::size_t> first_difference(const TruncSeries& x, const TruncSeries& y) {
    for (std::size_t k = 0; k <= min_bound(x, y); ++k)
        if (x.coeff(k) != y.coeff(k))
            return k;
    return std::nullopt;
}

TruncSeries tm_series(std::size_t degree_bound) {
    TruncSeries r(degree_bound);
    for (std::size_t n = 0; n <= degree_bound; ++n)
        r.set_coeff(n, u(n));
    return r;
}

TruncSeries tm_even_series(std::size_t degree_bound) {
    TruncSeries r(degree_bound);
    for (std::size_t n = 0; 2 * n <= degree_bound; ++n)
        r.set_coeff(2 * n, u(n));
    return r;
}

TruncSeries lacunary_product(std::size_t degree_bound) {
    TruncSeries r(degree_bound);
    r.set_coeff(0, 1);
    // multiply in place by (1 - X^p) for each power of two p <= N
    for (std::size_t p = 1; p <= degree_bound; p *= 2) {
        for (std::size_t i = degree_bound; i >= p; --i)
            r.set_coeff(i, r.coeff(i) - r.coeff(i - p));
        if (p > degree_bound / 2)
            break; // next doubling would overflow
    }
    return r;
}

TruncSeries w_series(std::uint64_t a, std::size_t degree_bound) {
    if (a == 0)
        throw std::domain_error("shift a must be positive");
    TruncSeries r(degree_bound);
    for (std::size_t n = 0; n <= degree_bound; ++n)
        r.set_coeff(n, u(n + a) + u(n));
    return r;
}

namespace {

void require_odd(std::uint64_t a) {
    if (a % 2 == 0)
        throw std::invalid_argument("a must be odd");
}

// First coefficient of X^a S_a violating its closed form, if any.
std::optional<std::size_t> closed_form_violation(const TruncSeries& s, std::uint64_t a) {
    const std::uint64_t b = (a - 1) / 2;
    for (std::size_t k = 0; k <= s.degree_bound(); ++k) {
        BigInt want;
        if (k < a)
            want = 0;
        else if (k % 2 == 0)
            want = -u(b) + u(k / 2);
        else
            want = -u(b) + u(k / 2 - b);
        if (s.coeff(k) != want)
            return k;
    }
    return std::nullopt;
}

} // namespace

TruncSeries xa_sa_coeffs(std::uint64_t a, std::size_t degree_bound) {
    require_odd(a);
    if (degree_bound < a)
        throw std::invalid_argument("degree bound must reach a");
    TruncSeries s = ts_shift(partial_sums(w_series(a, degree_bound)), static_cast<std::int64_t>(a));
    if (auto bad = closed_form_violation(s, a))
        throw std::logic_error("closed form broken at coefficient " + std::to_string(*bad));
    return s;
}

namespace {

// -partial_sums(u(0) + ... + u(a-1) X^{a-1}) + (1 + X^a) * tm_even_series
TruncSeries summatory_rhs(std::uint64_t a, std::size_t degree_bound) {
    TruncSeries prefix(degree_bound);
    for (std::size_t m = 0; m < a && m <= degree_bound; ++m)
        prefix.set_coeff(m, u(m));
    TruncSeries one_plus_xa(degree_bound);
    one_plus_xa.set_coeff(0, 1);
    if (a <= degree_bound)
        one_plus_xa.set_coeff(a, 1);
    return ts_sub(ts_mul(one_plus_xa, tm_even_series(degree_bound)),
                  partial_sums(prefix));
}

TruncSeries decimation_lhs(std::size_t degree_bound) {
    TruncSeries one_minus_x(degree_bound);
    one_minus_x.set_coeff(0, 1);
    if (degree_bound >= 1)
        one_minus_x.set_coeff(1, -1);
    return ts_mul(one_minus_x, tm_even_series(degree_bound));
}

} // namespace

bool verify_star(std::uint64_t a, std::size_t degree_bound) {
    require_odd(a);
    if (degree_bound < 2 * a)
        throw std::invalid_argument("degree bound must reach 2a");
    const TruncSeries lhs =
        ts_shift(partial_sums(w_series(a, degree_bound)), static_cast<std::int64_t>(a));
    if (first_difference(lhs, summatory_rhs(a, degree_bound)))
        return false;
    return !first_difference(decimation_lhs(degree_bound), tm_series(degree_bound));
}

std::vector<IdentityCheck> check_proof_identities(std::uint64_t a, std::size_t degree_bound) {
    require_odd(a);
    if (degree_bound < 2 * a)
        throw std::invalid_argument("degree bound must reach 2a");
    const std::uint64_t b = (a - 1) / 2;
    const TruncSeries tm = tm_series(degree_bound);
    const TruncSeries shifted =
        ts_shift(partial_sums(w_series(a, degree_bound)), static_cast<std::int64_t>(a));
    const TruncSeries sums = partial_sums(w_series(a, degree_bound));

    std::vector<IdentityCheck> out;
    auto add = [&out](std::string name, std::optional<std::size_t> bad) {
        out.push_back({std::move(name), !bad.has_value(), bad});
    };

    add("lacunary-product", first_difference(lacunary_product(degree_bound), tm));
    add("decimation", first_difference(decimation_lhs(degree_bound), tm));
    add("summatory-shift", first_difference(shifted, summatory_rhs(a, degree_bound)));

    auto scan = [&](auto&& ok) -> std::optional<std::size_t> {
        for (std::size_t k = 0; k <= degree_bound; ++k)
            if (!ok(k))
                return k;
        return std::nullopt;
    };
    add("low-coefficients-vanish", scan([&](std::size_t k) {
        return k >= a || shifted.coeff(k) == 0;
    }));
    add("even-coefficient-rule", scan([&](std::size_t k) {
        if (k < a || k % 2 != 0)
            return true;
        return shifted.coeff(k) == -u(b) + u(k / 2);
    }));
    add("odd-coefficient-rule", scan([&](std::size_t k) {
        if (k < a || k % 2 != 1)
            return true;
        return shifted.coeff(k) == -u(b) + u(k / 2 - b);
    }));
    add("two-value-range", scan([&](std::size_t k) {
        return shifted.coeff(k) == 0 || shifted.coeff(k) == -2 * u(b);
    }));
    add("summatory-dichotomy", scan([&](std::size_t k) {
        return sums.coeff(k) == 0 || sums.coeff(k) == -2 * u(b);
    }));
    return out;
}

} // namespace tmtools
