#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "paraline/errors.hpp"
#include "paraline/labeling.hpp"
#include "paraline/paradox.hpp"
#include "paraline/render.hpp"
#include "paraline/report_json.hpp"
#include "paraline/rigid.hpp"
#include "paraline/word_text.hpp"

namespace py = pybind11;
using namespace paraline;

namespace {

using Frac = std::pair<std::int64_t, std::int64_t>;

Rational to_rational(const Frac& f) { return Rational(f.first, f.second); }
Frac from_rational(const Rational& r) { return {r.numerator(), r.denominator()}; }

std::pair<int, std::string> class_tuple(const WordClass& c) { return {c.pair, c.side == Side::Plus ? "+" : "-"}; }

std::vector<std::pair<int, int>> letter_tuples(const ReducedWord& w) {
    std::vector<std::pair<int, int>> out;
    for (const auto& l : w.letters()) out.emplace_back(l.index, l.sign());
    return out;
}

std::vector<Letter> to_letters(const std::vector<std::pair<int, int>>& ls) {
    std::vector<Letter> out;
    for (const auto& [index, sign] : ls) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
        out.push_back({index, sign < 0});
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Paradoxical decomposition of the real line (C++ core).";

    py::register_exception<InvalidLetter>(m, "InvalidLetter", PyExc_ValueError);
    py::register_exception<ContextError>(m, "ContextError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_ValueError);
    py::register_exception<UnsupportedRank>(m, "UnsupportedRank", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Rank>(m, "Rank")
        .def_static("finite", &Rank::finite, py::arg("k"))
        .def_static("omega", &Rank::omega)
        .def_property_readonly("is_omega", &Rank::is_omega)
        .def("__eq__", [](const Rank& a, const Rank& b) { return a == b; })
        .def("__str__", &Rank::to_string)
        .def("__repr__", [](const Rank& r) { return "Rank(" + r.to_string() + ")"; });

    py::class_<ReducedWord>(m, "Word")
        .def(py::init<>())
        .def_static("parse", &parse_word, py::arg("text"), py::arg("rank"))
        .def_static("from_letters",
                    [](const std::vector<std::pair<int, int>>& ls) { return ReducedWord::from_reduced(to_letters(ls)); },
                    "Letters as (index, sign); must already be reduced.")
        .def_property_readonly("letters", &letter_tuples)
        .def("__len__", &ReducedWord::length)
        .def("__str__", &format_word)
        .def("__repr__", [](const ReducedWord& w) { return "Word('" + format_word(w) + "')"; })
        .def("__eq__", [](const ReducedWord& a, const ReducedWord& b) { return a == b; })
        .def("__hash__", [](const ReducedWord& w) { return py::hash(py::str(format_word(w))); })
        .def("__mul__", [](const ReducedWord& a, const ReducedWord& b) { return multiply(a, b); })
        .def("inverse", &invert);

    m.def("reduce", [](const std::vector<std::pair<int, int>>& ls, const Rank& r) { return reduce(to_letters(ls), r); },
          py::arg("letters"), py::arg("rank"));
    m.def("multiply", py::overload_cast<const ReducedWord&, const ReducedWord&, const Rank&>(&multiply));
    m.def("invert", &invert);
    m.def("classify_word", [](const ReducedWord& w, const Rank& r) { return class_tuple(classify_word(w, r)); });
    m.def("class_name", [](int pair, const std::string& side, const Rank& r) {
        return class_name({pair, side == "+" ? Side::Plus : Side::Minus}, r);
    });

    py::class_<VertexLabeling, std::shared_ptr<VertexLabeling>>(m, "VertexLabeling")
        .def(py::init<Rank>(), py::arg("rank"))
        .def_property_readonly("rank", &VertexLabeling::rank)
        .def("word_of_label", &VertexLabeling::word_of_label)
        .def("label_of_word", &VertexLabeling::label_of_word)
        .def("enumerate", [](const VertexLabeling& lab, std::int64_t count) { return enumerate_words(lab, count); })
        .def("connecting_word", [](const VertexLabeling& lab, std::int64_t a, std::int64_t b) {
            return connecting_word(lab, a, b);
        })
        .def("apply", [](std::shared_ptr<VertexLabeling> lab, const ReducedWord& w, std::int64_t n) {
            return TreePermutation(w, lab).apply(n);
        }, "Action of a word on a label (left multiplication).")
        .def("ball_dot", [](const VertexLabeling& lab, int radius) { return render_cayley_dot(ball(lab, radius)); });

    py::class_<PiecewiseRigidMap>(m, "RigidMap")
        .def_static("from_cycles", [](const std::string& text) { return PiecewiseRigidMap(IntegerPermutation(parse_cycles(text))); })
        .def_static("from_word", [](const ReducedWord& w, std::shared_ptr<VertexLabeling> lab) {
            return PiecewiseRigidMap(IntegerPermutation(TreePermutation(w, lab)));
        })
        .def("eval", [](const PiecewiseRigidMap& f, const Frac& x) { return from_rational(f.eval(to_rational(x))); })
        .def("eval_inverse", [](const PiecewiseRigidMap& f, const Frac& y) { return from_rational(f.eval_inverse(to_rational(y))); })
        .def("compose", &compose_maps)
        .def("inverse", &PiecewiseRigidMap::inverse)
        .def("pieces", [](const PiecewiseRigidMap& f, std::int64_t lo, std::int64_t hi) {
            std::vector<std::pair<std::int64_t, std::int64_t>> out;
            for (const auto& p : pieces_in_window(f, lo, hi)) out.emplace_back(p.start, p.offset);
            return out;
        })
        .def("svg", [](const PiecewiseRigidMap& f, std::int64_t lo, std::int64_t hi) {
            return render_function_svg(pieces_in_window(f, lo, hi), lo, hi);
        })
        .def("audit_json", [](const PiecewiseRigidMap& f, std::int64_t lo, std::int64_t hi, std::size_t samples,
                              std::uint64_t seed) { return to_json(rigidity_audit(f, lo, hi, samples, seed)).dump(); },
             py::arg("lo"), py::arg("hi"), py::arg("samples") = 1000, py::arg("seed") = 1);

    py::class_<ParadoxInstance>(m, "ParadoxInstance")
        .def(py::init<Rank>(), py::arg("rank"))
        .def_property_readonly("special", &ParadoxInstance::special)
        .def_property_readonly("labeling", [](const ParadoxInstance& p) {
            return std::const_pointer_cast<VertexLabeling>(p.labeling());
        })
        .def("classify_interval", [](const ParadoxInstance& p, std::int64_t n) { return p.class_name(p.classify_interval(n)); })
        .def("classify_point", [](const ParadoxInstance& p, const Frac& x) {
            return p.class_name(p.classify_point(to_rational(x)));
        })
        .def("verify_json", [](const ParadoxInstance& p, std::int64_t lo, std::int64_t hi, std::optional<int> pair_limit,
                               unsigned workers) {
            py::gil_scoped_release release;
            const VerifyOptions opts{pair_limit, workers};
            const auto part = verify_partition(p, lo, hi, opts);
            const auto re = verify_reassembly(p, lo, hi, default_pairs(p, pair_limit), opts);
            return verification_json(p, part, re, nullptr).dump();
        }, py::arg("lo"), py::arg("hi"), py::arg("pair_limit") = py::none(), py::arg("workers") = 1)
        .def("measure_json", [](const ParadoxInstance& p, std::int64_t lo, std::int64_t hi, std::optional<int> pair_limit) {
            return to_json(p, measure_audit(p, lo, hi, {pair_limit, 1})).dump();
        }, py::arg("lo"), py::arg("hi"), py::arg("pair_limit") = py::none())
        .def("certify_json", [](const ParadoxInstance& p, int max_length, std::int64_t lo, std::int64_t hi,
                                std::optional<int> pair_limit, std::int64_t budget) {
            py::gil_scoped_release release;
            return to_json(certify_free_action(p, max_length, lo, hi, {pair_limit, 1}, budget)).dump();
        }, py::arg("max_length"), py::arg("lo"), py::arg("hi"), py::arg("pair_limit") = py::none(),
           py::arg("budget") = 2'000'000)
        .def("line_strip_svg", [](const ParadoxInstance& p, std::int64_t lo, std::int64_t hi) {
            return render_line_strip_svg(p, lo, hi);
        });
}
