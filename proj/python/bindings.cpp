#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

#include "tmtools/analysis.hpp"
#include "tmtools/morphism.hpp"
#include "tmtools/repetitions.hpp"
#include "tmtools/sequences.hpp"
#include "tmtools/series.hpp"
#include "tmtools/shevelev.hpp"
#include "tmtools/sign.hpp"

namespace py = pybind11;
using namespace tmtools;

namespace {

std::vector<int> to_ints(const std::vector<Sign>& xs) {
    std::vector<int> out;
    out.reserve(xs.size());
    for (Sign s : xs)
        out.push_back(s.value());
    return out;
}

std::vector<long long> to_longs(const TruncSeries& ts) {
    std::vector<long long> out;
    out.reserve(ts.coeffs().size());
    for (const BigInt& c : ts.coeffs())
        out.push_back(c.convert_to<long long>());
    return out;
}

RepetitionKind kind_from(const std::string& kind) {
    if (kind == "square")
        return RepetitionKind::square;
    if (kind == "cube")
        return RepetitionKind::cube;
    if (kind == "overlap")
        return RepetitionKind::overlap;
    throw py::value_error("kind must be 'square', 'cube', or 'overlap', got '" + kind + "'");
}

ProductId product_from(const std::string& which) {
    if (which == "P")
        return ProductId::P;
    if (which == "Q")
        return ProductId::Q;
    if (which == "R")
        return ProductId::R;
    throw py::value_error("which must be 'P', 'Q', or 'R', got '" + which + "'");
}

// None -> the +/-1 Thue-Morse sequence; otherwise a callable n -> +1/-1.
SequenceProvider provider_from(const py::object& seq) {
    if (seq.is_none())
        return thue_morse_provider();
    auto fn = seq.cast<py::function>();
    return SequenceProvider("python", [fn](std::uint64_t n) {
        return Sign::from_value(fn(n).cast<int>());
    });
}

ContinuationParams params_from(double direct_threshold, std::uint64_t direct_terms,
                               int j_truncation, double target_accuracy) {
    ContinuationParams p;
    p.direct_threshold = direct_threshold;
    p.direct_terms = direct_terms;
    p.j_truncation = j_truncation;
    p.target_accuracy = target_accuracy;
    return p;
}

} // namespace

PYBIND11_MODULE(_tmtools, m) {
    m.doc() = "Thue-Morse sequence toolkit: sequences, morphisms, repetition scans, "
              "shift class sets, exact series identities, signed products, and the "
              "+/-1 Dirichlet series";

    py::register_exception<MemberShortfall>(m, "MemberShortfall", PyExc_RuntimeError);

    // ------------------------------------------------------- sequences ---
    m.def("tm_bit", &tm_bit, py::arg("n"), "Parity of the binary digit sum of n.");
    m.def("tm_sign", [](std::uint64_t n) { return tm_sign(n).value(); }, py::arg("n"),
          "The +/-1 Thue-Morse sequence u(n).");
    m.def("period_doubling", [](std::uint64_t n) { return period_doubling(n).value(); },
          py::arg("n"), "z(n) = u(n) * u(n+1).");
    m.def("nu2", &nu2, py::arg("a"), "2-adic valuation of a >= 1.");
    m.def("is_evil", &is_evil, py::arg("n"));
    m.def("tm_word", &tm_word, py::arg("length"),
          "First `length` Thue-Morse bits as a 0/1 string.");
    m.def("tm_signs", [](std::size_t len) { return to_ints(tm_sign_prefix(len)); },
          py::arg("length"), "First `length` values of u as a list of +/-1.");
    m.def("prouhet_partition",
          [](int k) {
              const auto p = prouhet_partition(k);
              return py::make_tuple(p.evil, p.odious);
          },
          py::arg("k"),
          "Split of range(2**k) by digit-sum parity as (evil, odious); the two "
          "halves share all power sums of exponent below k.");

    // -------------------------------------------------------- morphisms ---
    py::class_<Morphism>(m, "Morphism",
                         "Map from symbols to nonempty words, extended by concatenation.")
        .def(py::init([](const std::string& rules) { return Morphism::parse(rules); }),
             py::arg("rules"), "Parse from 'symbol->image' rules, e.g. '0->01,1->10'.")
        .def_property_readonly("alphabet",
                               [](const Morphism& mo) { return mo.alphabet(); })
        .def("rule", [](const Morphism& mo, char symbol) { return mo.rule(symbol); },
             py::arg("symbol"))
        .def("apply", [](const Morphism& mo, const std::string& w) { return mo.apply(w); },
             py::arg("word"))
        .def("is_prolongable", &Morphism::is_prolongable, py::arg("seed"))
        .def("fixed_point_prefix", &Morphism::fixed_point_prefix, py::arg("seed"),
             py::arg("length"));
    m.def("thue_morse_morphism", &thue_morse_morphism);
    m.def("period_doubling_morphism", &period_doubling_morphism);

    // ------------------------------------------------------ repetitions ---
    py::class_<RepetitionWitness>(m, "RepetitionWitness")
        .def_readonly("position", &RepetitionWitness::position)
        .def_readonly("period", &RepetitionWitness::period)
        .def("__eq__",
             [](const RepetitionWitness& a, const RepetitionWitness& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const RepetitionWitness& w) {
            return "RepetitionWitness(position=" + std::to_string(w.position) +
                   ", period=" + std::to_string(w.period) + ")";
        });
    m.def("find_repetition",
          [](const std::string& w, const std::string& kind) {
              return find_repetition(w, kind_from(kind));
          },
          py::arg("word"), py::arg("kind") = "square",
          "Leftmost square/cube/overlap in the word, or None.");
    m.def("ternary_word", &ternary_squarefree, py::arg("length"),
          "Squarefree word over {0,1,2} derived from the Thue-Morse word.");
    m.def("smallest_period",
          [](const std::string& w) { return smallest_period(std::string_view(w)); },
          py::arg("word"), "Smallest p >= 1 with word[i] == word[i+p] wherever defined.");

    // --------------------------------------------------------- shevelev ---
    py::class_<ClassSets>(m, "ClassSets")
        .def_readonly("a", &ClassSets::a)
        .def_readonly("scan_bound", &ClassSets::scan_bound)
        .def_readonly("b_members", &ClassSets::b_members)
        .def_readonly("c_members", &ClassSets::c_members);
    m.def("class_sets",
          [](std::uint64_t a, std::uint64_t bound, const py::object& seq) {
              return class_sets(a, bound, provider_from(seq));
          },
          py::arg("a"), py::arg("scan_bound"), py::arg("seq") = py::none(),
          "B (anticorrelated) and C (correlated) members below scan_bound.");
    m.def("c_members",
          [](std::uint64_t a, std::size_t count, const py::object& seq, std::uint64_t cap) {
              return c_members(a, count, provider_from(seq), cap);
          },
          py::arg("a"), py::arg("count"), py::arg("seq") = py::none(),
          py::arg("scan_cap") = default_scan_cap);
    m.def("b_members",
          [](std::uint64_t a, std::size_t count, const py::object& seq, std::uint64_t cap) {
              return b_members(a, count, provider_from(seq), cap);
          },
          py::arg("a"), py::arg("count"), py::arg("seq") = py::none(),
          py::arg("scan_cap") = default_scan_cap);
    m.def("gamma_seq",
          [](std::uint64_t a, std::size_t count, const py::object& seq, std::uint64_t cap) {
              return to_ints(gamma_seq(a, count, provider_from(seq), cap));
          },
          py::arg("a"), py::arg("count"), py::arg("seq") = py::none(),
          py::arg("scan_cap") = default_scan_cap, "u sampled along C_a, as +/-1 ints.");
    m.def("beta_seq",
          [](std::uint64_t a, std::size_t count, const py::object& seq, std::uint64_t cap) {
              return to_ints(beta_seq(a, count, provider_from(seq), cap));
          },
          py::arg("a"), py::arg("count"), py::arg("seq") = py::none(),
          py::arg("scan_cap") = default_scan_cap, "u sampled along B_a, as +/-1 ints.");

    py::class_<TheoremReport>(m, "TheoremReport")
        .def_readonly("a", &TheoremReport::a)
        .def_readonly("valuation", &TheoremReport::valuation)
        .def_readonly("expected_period", &TheoremReport::expected_period)
        .def_readonly("observed_smallest_period", &TheoremReport::observed_smallest_period)
        .def_property_readonly("gamma_prefix",
                               [](const TheoremReport& r) { return to_ints(r.gamma_prefix); })
        .def_property_readonly("prefix_sign",
                               [](const TheoremReport& r) { return r.prefix_sign.value(); })
        .def_readonly("beta_equals_minus_gamma", &TheoremReport::beta_equals_minus_gamma)
        .def_readonly("prefix_matches_tm", &TheoremReport::prefix_matches_tm)
        .def_readonly("window_lengths", &TheoremReport::window_lengths)
        .def("all_ok", &TheoremReport::all_ok);
    m.def("verify_theorem",
          [](std::uint64_t a, std::size_t min_members, const py::object& seq,
             std::uint64_t cap) {
              return verify_theorem(a, min_members, provider_from(seq), cap);
          },
          py::arg("a"), py::arg("min_members"), py::arg("seq") = py::none(),
          py::arg("scan_cap") = default_scan_cap,
          "Period, prefix-law, and beta = -gamma checks over a finite window.");
    m.def("verify_halving",
          [](std::uint64_t a, std::uint64_t bound, const py::object& seq) {
              return verify_halving(a, bound, provider_from(seq));
          },
          py::arg("a"), py::arg("bound"), py::arg("seq") = py::none(),
          "C_{2a} below bound equals {2m, 2m+1 : m in C_a} below bound.");

    // ----------------------------------------------------------- series ---
    m.def("tm_coeffs", [](std::size_t n) { return to_longs(tm_series(n)); },
          py::arg("degree_bound"), "Coefficients 0..N of sum u(n) X^n.");
    m.def("lacunary_coeffs", [](std::size_t n) { return to_longs(lacunary_product(n)); },
          py::arg("degree_bound"), "Coefficients 0..N of prod (1 - X^(2^k)).");
    m.def("w_coeffs",
          [](std::uint64_t a, std::size_t n) { return to_longs(w_series(a, n)); },
          py::arg("a"), py::arg("degree_bound"), "Coefficients of sum (u(n+a)+u(n)) X^n.");
    m.def("xa_sa_coeffs",
          [](std::uint64_t a, std::size_t n) { return to_longs(xa_sa_coeffs(a, n)); },
          py::arg("a"), py::arg("degree_bound"),
          "Coefficients of X^a/(1-X) * w series; closed forms re-checked on every call.");
    m.def("verify_star", &verify_star, py::arg("a"), py::arg("degree_bound"),
          "Exact check of the shifted summatory identity at one truncation.");

    py::class_<IdentityCheck>(m, "IdentityCheck")
        .def_readonly("name", &IdentityCheck::name)
        .def_readonly("passed", &IdentityCheck::pass)
        .def_readonly("first_fail", &IdentityCheck::first_fail)
        .def("__repr__", [](const IdentityCheck& c) {
            return "IdentityCheck(name='" + c.name + "', passed=" +
                   (c.pass ? "True" : "False") + ")";
        });
    m.def("check_proof_identities", &check_proof_identities, py::arg("a"),
          py::arg("degree_bound"), "Every series identity at one truncation, reported by name.");

    // --------------------------------------------------------- analysis ---
    py::class_<ProductResult>(m, "ProductResult")
        .def_readonly("value", &ProductResult::value)
        .def_readonly("terms_used", &ProductResult::terms_used)
        .def_readonly("error_estimate", &ProductResult::error_estimate)
        .def("__repr__", [](const ProductResult& r) {
            return "ProductResult(value=" + std::to_string(r.value) +
                   ", terms_used=" + std::to_string(r.terms_used) + ")";
        });
    m.def("product_eval",
          [](const std::string& which, double tol) {
              return product_eval(product_from(which), tol);
          },
          py::arg("which"), py::arg("tol") = 1e-9,
          "Signed infinite product P, Q, or R with a proven tail bound.");
    m.def("flajolet_martin_phi", &flajolet_martin_phi, py::arg("tol") = 1e-9,
          "2^(-1/2) e^gamma (2/3) R.");

    m.def("dirichlet_eval",
          [](std::complex<double> s, double direct_threshold, std::uint64_t direct_terms,
             int j_truncation, double target_accuracy) {
              return dirichlet_eval(
                  s, params_from(direct_threshold, direct_terms, j_truncation, target_accuracy));
          },
          py::arg("s"), py::arg("direct_threshold") = 2.0,
          py::arg("direct_terms") = 1'000'000, py::arg("j_truncation") = 80,
          py::arg("target_accuracy") = 1e-11,
          "A(s) = sum u(n)/(n+1)^s, continued to the whole plane.");

    py::class_<GridSample>(m, "GridSample")
        .def_readonly("re", &GridSample::re)
        .def_readonly("im", &GridSample::im)
        .def_readonly("abs_value", &GridSample::abs_value);
    py::class_<ZeroScanResult>(m, "ZeroScanResult")
        .def_readonly("grid", &ZeroScanResult::grid)
        .def_readonly("candidates", &ZeroScanResult::candidates);
    m.def("dirichlet_zero_scan", &dirichlet_zero_scan, py::arg("re_min"), py::arg("re_max"),
          py::arg("im_min"), py::arg("im_max"), py::arg("grid_step") = 0.05,
          py::arg("refine_tol") = 1e-6,
          "Grid scan for zeros of A with golden-section refinement.");

    py::class_<DigitStats>(m, "DigitStats")
        .def_readonly("counts", &DigitStats::counts)
        .def_readonly("total", &DigitStats::total)
        .def_readonly("max_rel_deviation", &DigitStats::max_rel_deviation);
    m.def("prime_digit_stats", &prime_digit_stats, py::arg("bound"), py::arg("base") = 2,
          py::arg("modulus") = 2, "Digit-sum residues of all primes up to bound.");
}
